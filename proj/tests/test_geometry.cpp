#include <doctest.h>

#include <cmath>
#include <functional>

#include "errors.hpp"
#include "lp.hpp"
#include "functionals.hpp"
#include "geometry.hpp"

using namespace weyl;

namespace {

ConeGenerators explicit_cone(int d, const std::vector<std::vector<double>>& cols) {
    ConeGenerators g;
    g.d = d;
    g.m = static_cast<int>(cols.size());
    g.variant = ConeVariant::A;
    g.provenance = GeneratorProvenance::Explicit;
    g.columns = Matrix(d, g.m);
    for (int j = 0; j < g.m; ++j) {
        for (int i = 0; i < d; ++i) g.columns.at(i, j) = cols[j][i];
    }
    return g;
}

}  // namespace

TEST_CASE("sample_points: determinism and distribution basics") {
    SamplerConfig cfg{SampleDistribution::StandardGaussian, 12345, 3, 50};
    auto a = sample_points(cfg);
    auto b = sample_points(cfg);
    CHECK(a == b);

    SamplerConfig sphere{SampleDistribution::UniformSphere, 7, 4, 100};
    for (const auto& p : sample_points(sphere)) {
        CHECK(std::fabs(norm2(p) - 1.0) <= 1e-12);
    }

    SamplerConfig wide{SampleDistribution::StandardGaussian, 99, 1, 10000};
    double mean = 0.0;
    for (const auto& p : sample_points(wide)) mean += p[0];
    mean /= 10000.0;
    CHECK(std::fabs(mean) <= 4.0 / std::sqrt(10000.0));
}

TEST_CASE("build_generators") {
    std::vector<std::vector<double>> pts{{1.0, 0.0}, {0.0, 1.0}};
    auto ga = build_generators(pts, ConeVariant::A);
    CHECK(ga.m == 1);
    CHECK(ga.columns.at(0, 0) == 1.0);
    CHECK(ga.columns.at(1, 0) == -1.0);

    auto gb = build_generators(pts, ConeVariant::B);
    CHECK(gb.m == 2);
    CHECK(gb.columns.at(0, 1) == 0.0);
    CHECK(gb.columns.at(1, 1) == 1.0);

    std::vector<std::vector<double>> five(5, std::vector<double>{0.0, 0.0});
    for (int i = 0; i < 5; ++i) five[i] = {static_cast<double>(i), 1.0};
    CHECK(build_generators(five, ConeVariant::A).m == 4);

    std::vector<std::vector<double>> dup{{1.0, 1.0}, {1.0, 1.0}};
    CHECK_THROWS_AS(build_generators(dup, ConeVariant::A), DegenerateSampleError);
}

TEST_CASE("is_full_space") {
    CHECK(is_full_space(explicit_cone(
        2, {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}, {0.0, -1.0}})));
    CHECK_FALSE(is_full_space(explicit_cone(2, {{1.0, 0.0}, {0.0, 1.0}})));
    CHECK_FALSE(is_full_space(explicit_cone(2, {{1.0, 1.0}})));
    CHECK(is_full_space(explicit_cone(2, {{1.0, 0.0}, {-1.0, 1.0}, {-1.0, -1.0}})));
}

TEST_CASE("sample_dual_weyl_cone: acceptance behaviour") {
    // (n=3, d=2, A): two generic difference vectors never span the plane.
    SamplerConfig cfg{SampleDistribution::StandardGaussian, 2024, 2, 3};
    auto cone = sample_dual_weyl_cone(cfg, ConeVariant::A);
    CHECK(cone.attempts == 1);
    CHECK_FALSE(is_full_space(cone.generators));

    // (n=4, d=2, A): acceptance fraction near D(4,2)/4! = 1/2.
    SamplerConfig cfg4{SampleDistribution::StandardGaussian, 555, 2, 4};
    long long total_attempts = 0;
    const int trials = 4000;
    for (int i = 0; i < trials; ++i) {
        auto c = sample_dual_weyl_cone(cfg4, ConeVariant::A, static_cast<uint64_t>(i));
        total_attempts += c.attempts;
    }
    double acceptance = static_cast<double>(trials) / static_cast<double>(total_attempts);
    CHECK(std::fabs(acceptance - 0.5) < 0.03);

    // Attempt cap 1 with a configuration that is essentially never accepted.
    SamplerConfig hard{SampleDistribution::StandardGaussian, 1, 1, 12};
    CHECK_THROWS_AS(sample_dual_weyl_cone(hard, ConeVariant::B, 0, 1), GuardError);
}

TEST_CASE("count_faces") {
    auto orthant = explicit_cone(2, {{1.0, 0.0}, {0.0, 1.0}});
    CHECK(count_faces(orthant, 1) == 2);

    auto fan = explicit_cone(2, {{1.0, 0.0}, {1.0, 1.0}, {1.0, -1.0}});
    CHECK(count_faces(fan, 1) == 2);  // middle generator is interior

    CHECK_THROWS_AS(count_faces(orthant, 2), std::invalid_argument);
    CHECK_THROWS_AS(count_faces(orthant, 0), std::invalid_argument);

    auto halfplane = explicit_cone(2, {{1.0, 0.0}, {-1.0, 0.0}, {0.0, 1.0}});
    CHECK_THROWS_AS(count_faces(halfplane, 1), DegenerateSampleError);  // not pointed

    auto cone3 = explicit_cone(3, {{1.0, 0.0, 0.1}, {0.0, 1.0, 0.1}, {-0.3, -0.2, 1.0}});
    CHECK(count_faces(cone3, 1) == 3);
    CHECK(count_faces(cone3, 2) == 3);
}

TEST_CASE("metric_projection examples") {
    auto orthant = explicit_cone(2, {{1.0, 0.0}, {0.0, 1.0}});
    auto r = metric_projection(orthant, {1.0, -1.0});
    CHECK(r.projection[0] == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(r.projection[1] == doctest::Approx(0.0).epsilon(1e-10));
    CHECK(r.face_dimension == 1);
    CHECK(metric_projection(orthant, {1.0, 2.0}).face_dimension == 2);
    CHECK(metric_projection(orthant, {-1.0, -2.0}).face_dimension == 0);
    CHECK_THROWS_AS(metric_projection(orthant, {std::nan(""), 0.0}), std::invalid_argument);
}

TEST_CASE("mc intrinsic volumes: (3,2,A) against the exact vector") {
    SamplerConfig cfg{SampleDistribution::StandardGaussian, 90210, 2, 3};
    auto est = mc_intrinsic_volumes(cfg, ConeVariant::A, 400, 100, 2);
    REQUIRE(est.size() == 3);
    auto table = shared_stirling_table(ConeVariant::A, 3);
    auto exact = expected_intrinsic_volumes(3, 2, ConeVariant::A, ConeSide::DualWeyl, *table);
    double sum = 0.0;
    for (int k = 0; k <= 2; ++k) {
        CHECK(std::fabs(est[k].mean - exact.at_k(k).to_double()) <=
              4.0 * est[k].stderr_ + 1e-12);
        sum += est[k].mean;
    }
    CHECK(std::fabs(sum - 1.0) <= 1e-12);

    auto rerun = mc_intrinsic_volumes(cfg, ConeVariant::A, 400, 100, 1);
    for (int k = 0; k <= 2; ++k) {
        CHECK(est[k].mean == rerun[k].mean);
        CHECK(est[k].stderr_ == rerun[k].stderr_);
    }
}

TEST_CASE("mc face numbers: degenerate-free wedge case") {
    SamplerConfig cfg{SampleDistribution::StandardGaussian, 5150, 2, 3};
    auto est = mc_face_numbers(cfg, ConeVariant::A, 1, 300, 2);
    CHECK(est.mean == 2.0);
    CHECK(est.stderr_ == 0.0);
}

TEST_CASE("mc quermass: k = d edge gives zero") {
    SamplerConfig cfg{SampleDistribution::StandardGaussian, 31, 2, 3};
    auto est = mc_quermassintegral(cfg, ConeVariant::A, 2, QuermassSource::DualWeyl, 100, 1);
    CHECK(est.mean == 0.0);
}

TEST_CASE("mc statistical dimension: (3,2,A)") {
    SamplerConfig cfg{SampleDistribution::StandardGaussian, 808, 2, 3};
    auto est = mc_statistical_dimension(cfg, ConeVariant::A, 20000, 2);
    CHECK(std::fabs(est.face_dimension.mean - 5.0 / 6.0) <=
          4.0 * est.face_dimension.stderr_ + 1e-12);
    CHECK(est.face_dimension.mean >= 0.0);
    CHECK(est.face_dimension.mean <= 2.0);
    // The squared-norm cross-check estimates the same quantity.
    CHECK(std::fabs(est.norm_squared.mean - 5.0 / 6.0) <=
          5.0 * est.norm_squared.stderr_ + 1e-12);
}

TEST_CASE("rejection sampler never returns a full-space set") {
    SamplerConfig cfg{SampleDistribution::StandardGaussian, 1717, 2, 5};
    for (int i = 0; i < 50; ++i) {
        auto cone = sample_dual_weyl_cone(cfg, ConeVariant::A, static_cast<uint64_t>(i));
        CHECK_FALSE(is_full_space(cone.generators));
    }
}

namespace {

// Extreme rays of the polar cone via facet witnesses: a supporting normal u
// with <u, v> = 0 on a rank-(d-1) generator subset and <u, v> <= -1 off it is
// an extreme ray of the polar. Test-side helper for d in {2, 3}.
ConeGenerators polar_generators(const ConeGenerators& gens) {
    int d = gens.d, m = gens.m;
    std::vector<std::vector<double>> rays;
    int subset = d - 1;
    std::vector<int> idx(subset);
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == subset) {
            Matrix sub(d, subset);
            for (int c = 0; c < subset; ++c) {
                for (int i = 0; i < d; ++i) sub.at(i, c) = gens.columns.at(i, idx[c]);
            }
            if (subset > 0 && column_rank(sub) != subset) return;
            LpProblem p(d);
            for (int i = 0; i < d; ++i) {
                p.lower[i] = -1e6;
                p.upper[i] = 1e6;
            }
            for (int j = 0; j < m; ++j) {
                std::vector<double> row(d);
                for (int i = 0; i < d; ++i) row[i] = gens.columns.at(i, j);
                bool in_subset = false;
                for (int c = 0; c < subset; ++c) {
                    if (idx[c] == j) in_subset = true;
                }
                p.add_row(std::move(row), in_subset ? LpRel::Eq : LpRel::Le,
                          in_subset ? 0.0 : -1.0);
            }
            auto r = solve_lp(p);
            if (r.status != LpStatus::Optimal) return;
            double nn = norm2(r.x);
            if (nn < 1e-9) return;
            for (auto& v : r.x) v /= nn;
            for (const auto& existing : rays) {
                if (std::fabs(dot(existing, r.x) - 1.0) < 1e-7) return;  // duplicate ray
            }
            rays.push_back(r.x);
            return;
        }
        for (int j = start; j < m; ++j) {
            idx[depth] = j;
            rec(j + 1, depth + 1);
        }
    };
    rec(0, 0);
    ConeGenerators dual;
    dual.d = d;
    dual.m = static_cast<int>(rays.size());
    dual.variant = gens.variant;
    dual.provenance = GeneratorProvenance::Explicit;
    dual.columns = Matrix(d, dual.m);
    for (int j = 0; j < dual.m; ++j) {
        for (int i = 0; i < d; ++i) dual.columns.at(i, j) = rays[j][i];
    }
    return dual;
}

}  // namespace

TEST_CASE("projection histograms of a cone and its polar are reverses") {
    // v_k(C) = v_{d-k}(C polar): empirical check through the metric
    // projection histogram on both sides.
    for (uint64_t seed : {11ull, 22ull, 33ull}) {
        SamplerConfig cfg{SampleDistribution::StandardGaussian, seed, 2, 4};
        auto cone = sample_dual_weyl_cone(cfg, ConeVariant::A);
        auto dual = polar_generators(cone.generators);
        REQUIRE(dual.m >= 1);
        int d = 2;
        const int samples = 20000;
        std::vector<double> hist_g(d + 1, 0.0), hist_d(d + 1, 0.0);
        Rng rng(seed, 991);
        for (int i = 0; i < samples; ++i) {
            auto g = gaussian_vector(rng, d);
            ++hist_g[metric_projection(cone.generators, g).face_dimension];
            ++hist_d[metric_projection(dual, g).face_dimension];
        }
        for (int k = 0; k <= d; ++k) {
            double pg = hist_g[k] / samples;
            double pd = hist_d[d - k] / samples;
            double stderr_bound =
                3.0 * std::sqrt(std::max(pg * (1 - pg), pd * (1 - pd)) / samples) + 1e-9;
            CHECK(std::fabs(pg - pd) <= 2.0 * stderr_bound);
        }
    }
}
