#include <doctest.h>

#include <cmath>

#include "functionals.hpp"
#include "limit_theorems.hpp"
#include "rng.hpp"
#include "special_functions.hpp"

using namespace weyl;

namespace {

RegimeSpec make_spec(ConeVariant v, RegimeKind kind) {
    RegimeSpec s;
    s.variant = v;
    s.kind = kind;
    return s;
}

}  // namespace

TEST_CASE("realize_regime arithmetic") {
    RegimeSpec spec = make_spec(ConeVariant::A, RegimeKind::FaceRatio);
    spec.x = 2.0;
    spec.k_mode = FaceKMode::Linear;
    spec.alpha = 0.5;
    auto rr = realize_regime(spec, 1000);
    CHECK(rr.d == 1000 - std::llround(2.0 * std::log(1000.0)));
    CHECK(rr.d == 986);
    CHECK(rr.k == 500);

    RegimeSpec ivldp = make_spec(ConeVariant::A, RegimeKind::IvLdp);
    ivldp.x = 1.0;
    ivldp.y = 2.0;
    auto rr2 = realize_regime(ivldp, 10000);
    CHECK(rr2.d == 10000 - std::llround(std::log(10000.0)));
    CHECK(rr2.k == 10000 - std::llround(2.0 * std::log(10000.0)));

    RegimeSpec crit = make_spec(ConeVariant::A, RegimeKind::StatDim);
    crit.critical = true;
    crit.crit_c = 0.0;
    auto rr3 = realize_regime(crit, 22026);  // ~ e^10
    CHECK(rr3.d == 22026 - std::llround(std::log(22026.0)));

    RegimeSpec steep = make_spec(ConeVariant::A, RegimeKind::StatDim);
    steep.x = 5.0;  // d = n - round(5 log n) < 1 at n = 3
    CHECK_THROWS_AS(realize_regime(steep, 3), std::invalid_argument);
}

TEST_CASE("face ratio: small-n identities") {
    PmfCache cache;
    // (n,d,k) = (3,2,1): E f_1 = 2 = binom(2,1), so the normalized ratio is 1.
    RealizedRegime rr;
    rr.n = 3;
    rr.d = 2;
    rr.k = 1;
    rr.has_k = true;
    CHECK(face_ratio_finite(rr, ConeVariant::A, cache) == doctest::Approx(1.0).epsilon(1e-12));
    rr.k = 0;  // both tails identical
    CHECK(face_ratio_finite(rr, ConeVariant::A, cache) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("face ratio equals the exact formula for moderate n") {
    PmfCache cache;
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        auto table = shared_stirling_table(v, 60);
        for (int n : {20, 41, 60}) {
            for (int d : {n / 2, n - 3}) {
                for (int k : {1, d / 2, d - 1}) {
                    if (k < 0 || k > d - 1 || d < 1) continue;
                    auto ft = expected_face_numbers(n, d, v, ConeSide::DualWeyl, *table);
                    unsigned top = v == ConeVariant::A ? n - 1 : n;
                    BigRational normalized =
                        ft.at_k(k) / BigRational::from_int(BigNat::binomial(top, k));
                    RealizedRegime rr;
                    rr.n = n;
                    rr.d = d;
                    rr.k = k;
                    rr.has_k = true;
                    double via_pmf = face_ratio_finite(rr, v, cache);
                    CHECK(via_pmf == doctest::Approx(normalized.to_double()).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("quermass and iv finite evaluators equal the exact formulas") {
    PmfCache cache;
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        auto table = shared_stirling_table(v, 50);
        for (int n : {12, 30, 50}) {
            int d = n - 4;
            if (d < 2) continue;
            for (int k = 1; k <= std::min(3, d - 1); ++k) {
                RealizedRegime rr;
                rr.n = n;
                rr.d = d;
                rr.k = k;
                rr.has_k = true;
                auto qm = expected_quermassintegrals(n, d, v, ConeSide::Weyl, *table);
                double exact2u = (BigRational(2) * qm.at_k(k)).to_double();
                CHECK(quermass_finite(rr, v, cache) == doctest::Approx(exact2u).epsilon(1e-9));

                auto iv = expected_intrinsic_volumes(n, d, v, ConeSide::DualWeyl, *table);
                auto law = iv_law(n, d, v, cache);
                for (int j = 0; j <= d; ++j) {
                    CHECK(law[j] == doctest::Approx(iv.at_k(j).to_double()).epsilon(1e-9));
                }
            }
        }
    }
}

TEST_CASE("stat dim finite evaluator equals the exact rational") {
    PmfCache cache;
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        auto table = shared_stirling_table(v, 60);
        for (int n : {10, 35, 60}) {
            for (int d : {1, n / 2, n - 1}) {
                if (d < 1 || d > n - 1) continue;
                RealizedRegime rr;
                rr.n = n;
                rr.d = d;
                double exact = expected_statistical_dimension(n, d, v, *table).to_double();
                CHECK(stat_dim_finite(rr, v, cache) == doctest::Approx(exact).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("predictors: pinned values") {
    RegimeSpec spec = make_spec(ConeVariant::A, RegimeKind::FaceRatio);
    spec.x = 2.0;
    spec.k_mode = FaceKMode::Linear;
    spec.alpha = 0.5;
    CHECK(predict_face_ratio_limit(spec) == doctest::Approx(0.5).epsilon(1e-15));
    spec.x = 3.0;
    spec.k_mode = FaceKMode::Sublinear;
    CHECK(predict_face_ratio_limit(spec) == 1.0);
    spec.x = 0.5;
    spec.k_mode = FaceKMode::Critical;
    spec.alpha = 0.0;
    CHECK(predict_face_ratio_limit(spec) == doctest::Approx(0.5).epsilon(1e-12));
    spec.k_mode = FaceKMode::NearN;
    spec.c = 0.8;
    CHECK(predict_face_ratio_limit(spec) == 1.0);
    spec.c = 0.25;
    CHECK(predict_face_ratio_limit(spec) == 0.0);

    RegimeSpec ldp = make_spec(ConeVariant::A, RegimeKind::FaceLdp);
    ldp.x = 2.0;
    ldp.c = 0.5;
    CHECK(predict_face_ldp_rate(ldp) ==
          doctest::Approx(2.0 * std::log(0.5) + 0.5).epsilon(1e-15));
    ldp.x = 0.5;
    ldp.c = 0.8;
    CHECK(predict_face_ldp_rate(ldp) == 0.0);
    // continuity: rate -> 0 as c -> x from below within x in (0,1)
    ldp.c = 0.5 - 1e-9;
    CHECK(std::fabs(predict_face_ldp_rate(ldp)) < 1e-7);
    // and as c -> 1 from below for x > 1
    ldp.x = 2.0;
    ldp.c = 1.0 - 1e-9;
    CHECK(std::fabs(predict_face_ldp_rate(ldp)) < 1e-7);

    RegimeSpec iv = make_spec(ConeVariant::A, RegimeKind::IvLdp);
    iv.x = 0.5;
    iv.y = 1.0;
    CHECK(predict_iv_ldp_rate(iv) == doctest::Approx(0.0).epsilon(1e-15));
    iv.x = 2.0;
    iv.y = 4.0;
    CHECK(predict_iv_ldp_rate(iv) ==
          doctest::Approx(2.0 * std::log(2.0) - 4.0 * std::log(4.0) + 2.0).epsilon(1e-12));

    RegimeSpec qm = make_spec(ConeVariant::A, RegimeKind::QuermassFixedK);
    qm.x = 4.0;
    qm.k = 2;
    CHECK(predict_quermass_limit(qm) == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    qm.variant = ConeVariant::B;  // step ratio is 1/x regardless of variant
    CHECK(predict_quermass_limit(qm) == doctest::Approx(1.0 / 16.0).epsilon(1e-15));
    RegimeSpec qg = make_spec(ConeVariant::A, RegimeKind::QuermassGrowingK);
    qg.x = 0.5;
    qg.y = 0.2;
    CHECK(predict_quermass_limit(qg) == 1.0);
    qg.y = 0.7;
    CHECK(predict_quermass_limit(qg) == 0.0);

    RegimeSpec sd = make_spec(ConeVariant::A, RegimeKind::StatDim);
    sd.x = 2.0;
    CHECK(predict_stat_dim(sd, 1000) == doctest::Approx(1.5).epsilon(1e-15));
    sd.variant = ConeVariant::B;
    CHECK(predict_stat_dim(sd, 1000) == doctest::Approx(1.5).epsilon(1e-12));
    RegimeSpec sdc = make_spec(ConeVariant::A, RegimeKind::StatDim);
    sdc.critical = true;
    sdc.crit_c = 0.0;
    double L = std::log(1000.0);
    CHECK(predict_stat_dim(sdc, 1000) ==
          doctest::Approx(std::sqrt(L) * 2.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-12));
}

TEST_CASE("predictors: excluded boundaries rejected") {
    RegimeSpec spec = make_spec(ConeVariant::A, RegimeKind::FaceRatio);
    spec.x = 1.0;
    spec.k_mode = FaceKMode::Linear;
    spec.alpha = 0.5;
    CHECK_THROWS_AS(predict_face_ratio_limit(spec), std::invalid_argument);
    spec.x = 0.5;
    spec.k_mode = FaceKMode::NearN;
    spec.c = 0.5;
    CHECK_THROWS_AS(predict_face_ratio_limit(spec), std::invalid_argument);

    RegimeSpec ldp = make_spec(ConeVariant::A, RegimeKind::FaceLdp);
    ldp.x = 0.5;
    ldp.c = 0.5;
    CHECK_THROWS_AS(predict_face_ldp_rate(ldp), std::invalid_argument);

    RegimeSpec iv = make_spec(ConeVariant::A, RegimeKind::IvLdp);
    iv.x = 2.0;
    iv.y = 1.5;
    CHECK_THROWS_AS(predict_iv_ldp_rate(iv), std::invalid_argument);

    RegimeSpec qg = make_spec(ConeVariant::A, RegimeKind::QuermassGrowingK);
    qg.x = 0.5;
    qg.y = 0.5;
    CHECK_THROWS_AS(predict_quermass_limit(qg), std::invalid_argument);

    RegimeSpec sd = make_spec(ConeVariant::A, RegimeKind::StatDim);
    sd.x = 1.0;
    CHECK_THROWS_AS(predict_stat_dim(sd, 1000), std::invalid_argument);
}

TEST_CASE("Z law: mass, pinned value, generating function") {
    CHECK(z_law_pmf(4.0, ConeVariant::A, 0) == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        for (double x : {1.5, 4.0, 9.0}) {
            double total = z_law_pmf(x, v, 0);
            for (long long j = 1; j < 4000; ++j) total += z_law_pmf(x, v, j);
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));

            // E[s^Z] check at random s inside the radius.
            Rng rng(99, static_cast<uint64_t>(x * 8));
            for (int trial = 0; trial < 10; ++trial) {
                double s = -1.0 + rng.next_double() * (2.0 - 1e-3);
                double series = z_law_pmf(x, v, 0);
                double spow = 1.0;
                for (long long j = 1; j < 5000; ++j) {
                    spow *= s;
                    series += spow * z_law_pmf(x, v, j);
                    if (std::fabs(spow) < 1e-18) break;
                }
                CHECK(series == doctest::Approx(z_law_pgf(x, v, s)).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("iv law distance shrinks along n for x = 4") {
    PmfCache cache;
    RegimeSpec spec = make_spec(ConeVariant::A, RegimeKind::IvLaw);
    spec.x = 4.0;
    auto r1 = realize_regime(spec, 1000);
    auto r2 = realize_regime(spec, 10000);
    double tv1 = iv_law_distance_finite(spec, r1, cache);
    double tv2 = iv_law_distance_finite(spec, r2, cache);
    CHECK(tv2 < tv1);
    CHECK(tv1 < 0.5);
}

TEST_CASE("convergence sweep: report structure") {
    PmfCache cache;
    RegimeSpec spec = make_spec(ConeVariant::A, RegimeKind::QuermassFixedK);
    spec.x = 2.0;
    spec.k = 2;
    auto report = convergence_sweep(spec, {1000, 10000, 20000}, cache);
    REQUIRE(report.rows.size() == 3);
    for (const auto& row : report.rows) {
        CHECK(row.ok);
        CHECK(row.gap == std::fabs(row.finite_value - row.predicted_limit));
    }
    CHECK(report.rows[0].gap >= report.rows[2].gap);

    auto empty = convergence_sweep(spec, {}, cache);
    CHECK(empty.rows.empty());
    CHECK_THROWS_AS(convergence_sweep(spec, {10, 10}, cache), std::invalid_argument);
}
