#include "geometry.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "arrangement.hpp"
#include "errors.hpp"
#include "lp.hpp"
#include "nnls.hpp"
#include "parallel.hpp"

namespace weyl {

namespace {

// Stream purposes; combined with the sample index they key all randomness.
constexpr uint64_t kStreamPoints = 0x01;
constexpr uint64_t kStreamGaussians = 0x02;
constexpr uint64_t kStreamSubspace = 0x03;
constexpr uint64_t kStreamChamber = 0x04;

struct Welford {
    long long n = 0;
    double mean = 0.0;
    double m2 = 0.0;
    void add(double v) {
        ++n;
        double delta = v - mean;
        mean += delta / n;
        m2 += delta * (v - mean);
    }
};

MCEstimate finalize(const std::vector<double>& values, uint64_t seed,
                    std::optional<double> accepted = std::nullopt) {
    if (values.size() < 2) throw std::invalid_argument("MC estimate needs >= 2 samples");
    Welford w;
    for (double v : values) w.add(v);
    MCEstimate e;
    e.mean = w.mean;
    e.stderr_ = std::sqrt(w.m2 / (w.n - 1)) / std::sqrt(static_cast<double>(w.n));
    e.samples = w.n;
    e.accepted_fraction = accepted;
    e.seed = seed;
    return e;
}

}  // namespace

ConeGenerators build_generators(const std::vector<std::vector<double>>& points,
                                ConeVariant variant) {
    int n = static_cast<int>(points.size());
    int min_n = variant == ConeVariant::A ? 2 : 1;
    if (n < min_n) throw std::invalid_argument("build_generators: too few points");
    int d = static_cast<int>(points[0].size());
    int m = variant == ConeVariant::A ? n - 1 : n;

    ConeGenerators g;
    g.d = d;
    g.m = m;
    g.variant = variant;
    g.provenance = variant == ConeVariant::A ? GeneratorProvenance::TypeA_differences
                                             : GeneratorProvenance::TypeB_differences_plus_last;
    g.columns = Matrix(d, m);
    for (int j = 0; j + 1 < n; ++j) {
        for (int i = 0; i < d; ++i) g.columns.at(i, j) = points[j][i] - points[j + 1][i];
    }
    if (variant == ConeVariant::B) {
        for (int i = 0; i < d; ++i) g.columns.at(i, m - 1) = points[n - 1][i];
    }
    for (int j = 0; j < m; ++j) {
        double nn = 0.0;
        for (int i = 0; i < d; ++i) nn += g.columns.at(i, j) * g.columns.at(i, j);
        if (std::sqrt(nn) < 1e-12) throw DegenerateSampleError("build_generators: zero column");
    }
    return g;
}

bool is_full_space(const ConeGenerators& gens) {
    int d = gens.d;
    for (int c = 0; c < d; ++c) {
        for (int sgn = -1; sgn <= 1; sgn += 2) {
            LpProblem p(d);
            for (int i = 0; i < d; ++i) {
                p.lower[i] = -1.0;
                p.upper[i] = 1.0;
            }
            p.objective[c] = sgn;
            for (int j = 0; j < gens.m; ++j) {
                std::vector<double> row(d);
                for (int i = 0; i < d; ++i) row[i] = gens.columns.at(i, j);
                p.add_row(std::move(row), LpRel::Le, 0.0);
            }
            LpResult r = solve_lp(p);
            if (r.status != LpStatus::Optimal) {
                throw NumericError("is_full_space: LP did not solve");
            }
            if (r.objective > kLpTol) return false;  // dual cone nontrivial
        }
    }
    return true;
}

SampledCone sample_dual_weyl_cone(const SamplerConfig& cfg, ConeVariant variant,
                                  uint64_t sample_index, long long attempt_cap) {
    for (long long attempt = 0; attempt < attempt_cap; ++attempt) {
        auto pts = sample_points_stream(
            cfg, stream_id(kStreamPoints, sample_index, static_cast<uint64_t>(attempt)));
        try {
            ConeGenerators g = build_generators(pts, variant);
            if (!is_full_space(g)) return {std::move(g), attempt + 1};
        } catch (const DegenerateSampleError&) {
            // zero column: redraw, the attempt still counts
        }
    }
    throw GuardError("sample_dual_weyl_cone: attempt cap " + std::to_string(attempt_cap) +
                     " exhausted");
}

namespace {

// C = pos(V) meets the span of the first w columns of the orthogonal frame q
// beyond the origin. Certificate LP: lambda >= 0, 1'lambda = 1, and V lambda
// orthogonal to the complement columns; a near-zero V lambda triggers the
// re-solve maximizing a random linear functional on the subspace.
bool dual_cone_meets_subspace(const ConeGenerators& gens, const Matrix& q, int w, Rng& rng) {
    int d = gens.d, m = gens.m;
    auto base_problem = [&]() {
        LpProblem p(m);  // lambda >= 0 by default bounds
        p.add_row(std::vector<double>(m, 1.0), LpRel::Eq, 1.0);
        for (int c = w; c < d; ++c) {
            std::vector<double> row(m);
            for (int j = 0; j < m; ++j) {
                double s = 0.0;
                for (int i = 0; i < d; ++i) s += q.at(i, c) * gens.columns.at(i, j);
                row[j] = s;
            }
            p.add_row(std::move(row), LpRel::Eq, 0.0);
        }
        return p;
    };
    LpResult r = solve_lp(base_problem());
    if (r.status != LpStatus::Optimal) return false;
    std::vector<double> x(d, 0.0);
    for (int j = 0; j < m; ++j) {
        for (int i = 0; i < d; ++i) x[i] += r.x[j] * gens.columns.at(i, j);
    }
    if (norm2(x) > 1e-9) return true;
    // Degenerate witness: maximize +- a random functional on the subspace.
    std::vector<double> y(w);
    for (int c = 0; c < w; ++c) y[c] = rng.next_gaussian();
    std::vector<double> wvec(d, 0.0);
    for (int c = 0; c < w; ++c) {
        for (int i = 0; i < d; ++i) wvec[i] += y[c] * q.at(i, c);
    }
    for (int sgn = -1; sgn <= 1; sgn += 2) {
        LpProblem p = base_problem();
        for (int j = 0; j < m; ++j) {
            double s = 0.0;
            for (int i = 0; i < d; ++i) s += wvec[i] * gens.columns.at(i, j);
            p.objective[j] = sgn * s;
        }
        LpResult rr = solve_lp(p);
        if (rr.status == LpStatus::Optimal && rr.objective > 1e-9) return true;
    }
    return false;
}

bool cone_is_pointed(const ConeGenerators& gens) {
    // Non-pointed iff 0 is a convex combination of the generators.
    LpProblem p(gens.m);
    std::vector<double> ones(gens.m, 1.0);
    p.add_row(std::move(ones), LpRel::Eq, 1.0);
    for (int i = 0; i < gens.d; ++i) {
        std::vector<double> row(gens.m);
        for (int j = 0; j < gens.m; ++j) row[j] = gens.columns.at(i, j);
        p.add_row(std::move(row), LpRel::Eq, 0.0);
    }
    return !lp_feasible(p);
}

}  // namespace

long long count_faces(const ConeGenerators& gens, int k) {
    if (gens.m > kFaceCountMaxGenerators) throw GuardError("count_faces: generator guard");
    if (k < 1 || k > gens.d - 1) throw std::invalid_argument("count_faces: requires 1 <= k <= d-1");
    if (!cone_is_pointed(gens)) throw DegenerateSampleError("count_faces: cone is not pointed");

    int d = gens.d, m = gens.m;
    long long count = 0;
    for (uint32_t mask = 0; mask < (uint32_t{1} << m); ++mask) {
        if (std::popcount(mask) != k) continue;
        Matrix sub(d, k);
        int col = 0;
        for (int j = 0; j < m; ++j) {
            if (mask & (uint32_t{1} << j)) {
                for (int i = 0; i < d; ++i) sub.at(i, col) = gens.columns.at(i, j);
                ++col;
            }
        }
        if (column_rank(sub) != k) continue;
        // Supporting hyperplane: <u, v> = 0 on the subset, <= -1 off it.
        LpProblem p(d);
        for (int i = 0; i < d; ++i) {
            p.lower[i] = -1e6;
            p.upper[i] = 1e6;
        }
        for (int j = 0; j < m; ++j) {
            std::vector<double> row(d);
            for (int i = 0; i < d; ++i) row[i] = gens.columns.at(i, j);
            if (mask & (uint32_t{1} << j)) {
                p.add_row(std::move(row), LpRel::Eq, 0.0);
            } else {
                p.add_row(std::move(row), LpRel::Le, -1.0);
            }
        }
        if (lp_feasible(p)) ++count;
    }
    return count;
}

ProjectionResult metric_projection(const ConeGenerators& gens, const std::vector<double>& point) {
    for (double v : point) {
        if (!std::isfinite(v)) throw std::invalid_argument("metric_projection: non-finite point");
    }
    NnlsResult r = nnls_project(gens.columns, point);
    return {std::move(r.projection), std::move(r.coefficients), r.face_dimension};
}

std::vector<MCEstimate> mc_intrinsic_volumes(const SamplerConfig& cfg, ConeVariant variant,
                                             long long cone_samples, int gaussians_per_cone,
                                             int threads) {
    if (cone_samples < 2) throw std::invalid_argument("mc_intrinsic_volumes: cone_samples >= 2");
    if (gaussians_per_cone < 1) {
        throw std::invalid_argument("mc_intrinsic_volumes: gaussians_per_cone >= 1");
    }
    int d = cfg.d;
    std::vector<std::vector<double>> per_cone(cone_samples);
    std::vector<long long> attempts(cone_samples, 0);
    parallel_for(cone_samples, threads, [&](long long i) {
        SampledCone cone = sample_dual_weyl_cone(cfg, variant, static_cast<uint64_t>(i));
        attempts[i] = cone.attempts;
        Rng rng(cfg.seed, stream_id(kStreamGaussians, static_cast<uint64_t>(i)));
        std::vector<long long> hist(static_cast<std::size_t>(d) + 1, 0);
        for (int g = 0; g < gaussians_per_cone; ++g) {
            auto gauss = gaussian_vector(rng, d);
            ProjectionResult pr = metric_projection(cone.generators, gauss);
            ++hist[pr.face_dimension];
        }
        std::vector<double> frac(static_cast<std::size_t>(d) + 1);
        for (int j = 0; j <= d; ++j) {
            frac[j] = static_cast<double>(hist[j]) / gaussians_per_cone;
        }
        per_cone[i] = std::move(frac);
    });

    long long total_attempts = 0;
    for (long long a : attempts) total_attempts += a;
    double accepted = static_cast<double>(cone_samples) / static_cast<double>(total_attempts);

    std::vector<MCEstimate> out;
    out.reserve(static_cast<std::size_t>(d) + 1);
    for (int j = 0; j <= d; ++j) {
        std::vector<double> vals(cone_samples);
        for (long long i = 0; i < cone_samples; ++i) vals[i] = per_cone[i][j];
        out.push_back(finalize(vals, cfg.seed, accepted));
    }
    return out;
}

MCEstimate mc_quermassintegral(const SamplerConfig& cfg, ConeVariant variant, int k,
                               QuermassSource source, long long samples, int threads) {
    if (samples < 2) throw std::invalid_argument("mc_quermassintegral: samples >= 2");
    int d = cfg.d;
    if (source == QuermassSource::DualWeyl) {
        if (k < 1 || k > d) throw std::invalid_argument("mc_quermassintegral: dual needs 1<=k<=d");
    } else {
        if (k < 0 || k > d - 1) {
            throw std::invalid_argument("mc_quermassintegral: chamber needs 0<=k<=d-1");
        }
    }
    int w = d - k;  // subspace dimension

    MCEstimate e;
    if (source == QuermassSource::DualWeyl) {
        std::vector<double> hits(samples, 0.0);
        std::vector<long long> attempts(samples, 1);
        parallel_for(samples, threads, [&](long long i) {
            bool hit = false;
            Rng rng(cfg.seed, stream_id(kStreamSubspace, static_cast<uint64_t>(i)));
            SampledCone cone = sample_dual_weyl_cone(cfg, variant, static_cast<uint64_t>(i));
            attempts[i] = cone.attempts;
            if (w > 0) {
                Matrix frame(d, w);
                for (int c = 0; c < w; ++c) {
                    auto g = gaussian_vector(rng, d);
                    for (int r = 0; r < d; ++r) frame.at(r, c) = g[r];
                }
                Matrix q = orthonormal_frame(frame, w);
                hit = dual_cone_meets_subspace(cone.generators, q, w, rng);
            }
            hits[i] = hit ? 1.0 : 0.0;
        });
        long long total_attempts = 0;
        for (long long a : attempts) total_attempts += a;
        e = finalize(hits, cfg.seed,
                     static_cast<double>(samples) / static_cast<double>(total_attempts));
    } else {
        // One tessellation per cluster; chamber/subspace pairs amortize the
        // enumeration, standard errors taken across clusters.
        int per_cluster =
            static_cast<int>(std::min<long long>(100, std::max<long long>(1, samples / 32)));
        long long clusters = (samples + per_cluster - 1) / per_cluster;
        if (clusters < 2) {
            clusters = 2;
            per_cluster = static_cast<int>((samples + 1) / 2);
        }
        std::vector<double> cluster_means(clusters, 0.0);
        parallel_for(clusters, threads, [&](long long i) {
            for (uint64_t attempt = 0;; ++attempt) {
                if (attempt >= 64) throw GuardError("mc_quermassintegral: degenerate streak");
                try {
                    auto pts = sample_points_stream(
                        cfg, stream_id(kStreamPoints, static_cast<uint64_t>(i), attempt));
                    auto arr = build_weyl_arrangement(pts, variant);
                    if (arr.degenerate) throw DegenerateSampleError("parallel normals");
                    auto chambers = enumerate_chambers(arr, cfg.seed);
                    Rng rng(cfg.seed, stream_id(kStreamSubspace, static_cast<uint64_t>(i)));
                    long long hits = 0;
                    Matrix frame(d, std::max(w, 1));
                    for (int pair = 0; pair < per_cluster; ++pair) {
                        const Chamber& chamber = chambers[rng.next_index(chambers.size())];
                        bool hit = false;
                        if (w >= d) {
                            hit = true;
                        } else if (w > 0) {
                            for (int c = 0; c < w; ++c) {
                                auto g = gaussian_vector(rng, d);
                                for (int r = 0; r < d; ++r) frame.at(r, c) = g[r];
                            }
                            Matrix q = orthonormal_frame(frame, w);
                            hit = chamber_meets_subspace(arr, chamber, q, w);
                        }
                        hits += hit;
                    }
                    cluster_means[i] = static_cast<double>(hits) / per_cluster;
                    return;
                } catch (const DegenerateSampleError&) {
                }
            }
        });
        e = finalize(cluster_means, cfg.seed);
    }
    e.mean *= 0.5;  // U_k is half the hit probability
    e.stderr_ *= 0.5;
    return e;
}

MCEstimate mc_face_numbers(const SamplerConfig& cfg, ConeVariant variant, int k,
                           long long samples, int threads) {
    if (samples < 2) throw std::invalid_argument("mc_face_numbers: samples >= 2");
    std::vector<double> values(samples, 0.0);
    std::vector<long long> attempts(samples, 0);
    parallel_for(samples, threads, [&](long long i) {
        for (uint64_t redraw = 0;; ++redraw) {
            if (redraw >= 64) throw GuardError("mc_face_numbers: degenerate streak");
            SampledCone cone =
                sample_dual_weyl_cone(cfg, variant, stream_id(0x0F, static_cast<uint64_t>(i), redraw));
            attempts[i] += cone.attempts;
            try {
                values[i] = static_cast<double>(count_faces(cone.generators, k));
                break;
            } catch (const DegenerateSampleError&) {
            }
        }
    });
    long long total_attempts = 0;
    for (long long a : attempts) total_attempts += a;
    return finalize(values, cfg.seed,
                    static_cast<double>(samples) / static_cast<double>(total_attempts));
}

StatDimEstimate mc_statistical_dimension(const SamplerConfig& cfg, ConeVariant variant,
                                         long long samples, int threads) {
    if (samples < 2) throw std::invalid_argument("mc_statistical_dimension: samples >= 2");
    // Cluster the projections: ~100 gaussians per sampled arrangement.
    int per_cluster = static_cast<int>(std::min<long long>(100, std::max<long long>(1, samples / 32)));
    long long clusters = (samples + per_cluster - 1) / per_cluster;
    if (clusters < 2) {
        clusters = 2;
        per_cluster = static_cast<int>((samples + 1) / 2);
    }
    std::vector<double> dim_means(clusters, 0.0), norm_means(clusters, 0.0);
    parallel_for(clusters, threads, [&](long long i) {
        for (uint64_t attempt = 0;; ++attempt) {
            if (attempt >= 64) throw GuardError("mc_statistical_dimension: degenerate streak");
            try {
                auto pts = sample_points_stream(
                    cfg, stream_id(kStreamPoints, static_cast<uint64_t>(i), attempt));
                auto arr = build_weyl_arrangement(pts, variant);
                if (arr.degenerate) throw DegenerateSampleError("parallel normals");
                Chamber chamber = uniform_chamber_from_stream(
                    arr, cfg.seed, stream_id(kStreamChamber, static_cast<uint64_t>(i)));
                Rng rng(cfg.seed, stream_id(kStreamGaussians, static_cast<uint64_t>(i)));
                double dsum = 0.0, nsum = 0.0;
                for (int g = 0; g < per_cluster; ++g) {
                    auto gauss = gaussian_vector(rng, cfg.d);
                    ChamberProjection pr = project_onto_chamber(arr, chamber, gauss);
                    dsum += pr.face_dimension;
                    nsum += dot(pr.projection, pr.projection);
                }
                dim_means[i] = dsum / per_cluster;
                norm_means[i] = nsum / per_cluster;
                return;
            } catch (const DegenerateSampleError&) {
            }
        }
    });
    StatDimEstimate out;
    out.face_dimension = finalize(dim_means, cfg.seed);
    out.norm_squared = finalize(norm_means, cfg.seed);
    return out;
}

}  // namespace weyl
