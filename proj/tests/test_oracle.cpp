#include <doctest.h>

#include <cmath>

#include "limit_theorems.hpp"
#include "oracle_pmf.hpp"
#include "sdist.hpp"

using namespace weyl;

TEST_CASE("library pmf matches the long-double oracle") {
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        for (int n : {50, 500, 2000}) {
            auto lib = pmf(n, v);
            auto orc = oracle::pmf(n, sigma_of(v));
            for (int k = 0; k <= n; ++k) {
                double o = static_cast<double>(orc[k]);
                if (o > 1e-280) {
                    CHECK(std::fabs(lib.probs[k] - o) <= 1e-12 * std::max(1e-30, o) + 1e-300);
                }
            }
        }
    }
}

TEST_CASE("finite regime values match the oracle at n = 2000") {
    PmfCache cache;
    const long long n = 2000;
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        double sigma = sigma_of(v);

        RegimeSpec fr;
        fr.variant = v;
        fr.kind = RegimeKind::FaceRatio;
        fr.x = 2.0;
        fr.k_mode = FaceKMode::Linear;
        fr.alpha = 0.5;
        auto rr = realize_regime(fr, n);
        auto orc = oracle::finite_value("face_ratio", sigma, n, 2.0, 0.5, 0.0, 0.0, 0);
        REQUIRE(orc.d == rr.d);
        REQUIRE(orc.k == rr.k);
        CHECK(face_ratio_finite(rr, v, cache) ==
              doctest::Approx(static_cast<double>(orc.value)).epsilon(1e-10));

        RegimeSpec qm;
        qm.variant = v;
        qm.kind = RegimeKind::QuermassFixedK;
        qm.x = 2.0;
        qm.k = 2;
        auto rq = realize_regime(qm, n);
        auto oq = oracle::finite_value("quermass_fixed", sigma, n, 2.0, 0.0, 0.0, 0.0, 2);
        CHECK(quermass_finite(rq, v, cache) ==
              doctest::Approx(static_cast<double>(oq.value)).epsilon(1e-10));

        RegimeSpec sd;
        sd.variant = v;
        sd.kind = RegimeKind::StatDim;
        sd.x = 0.5;
        auto rs = realize_regime(sd, n);
        auto os = oracle::finite_value("stat_dim", sigma, n, 0.5, 0.0, 0.0, 0.0, 0);
        CHECK(stat_dim_finite(rs, v, cache) ==
              doctest::Approx(static_cast<double>(os.value)).epsilon(1e-10));

        RegimeSpec ivl;
        ivl.variant = v;
        ivl.kind = RegimeKind::IvLdp;
        ivl.x = 2.0;
        ivl.y = 4.0;
        auto ri = realize_regime(ivl, n);
        auto oi = oracle::finite_value("iv_ldp", sigma, n, 2.0, 0.0, 0.0, 4.0, 0);
        REQUIRE(oi.k == ri.k);
        CHECK(iv_ldp_rate_finite(ri, v, cache) ==
              doctest::Approx(static_cast<double>(oi.value)).epsilon(1e-10));
    }
}

TEST_CASE("sweep grid fixtures reproduce against the library at n = 20000") {
    // The frozen fixture values in the acceptance grid were produced by this
    // oracle; recompute two of them here so drift in either path shows up.
    PmfCache cache;
    auto o1 = oracle::finite_value("face_ratio", 1.0, 20000, 2.0, 0.5, 0.0, 0.0, 0);
    RegimeSpec fr;
    fr.variant = ConeVariant::A;
    fr.kind = RegimeKind::FaceRatio;
    fr.x = 2.0;
    fr.k_mode = FaceKMode::Linear;
    fr.alpha = 0.5;
    auto rr = realize_regime(fr, 20000);
    CHECK(face_ratio_finite(rr, ConeVariant::A, cache) ==
          doctest::Approx(static_cast<double>(o1.value)).epsilon(1e-10));

    auto o2 = oracle::finite_value("stat_dim", 0.5, 20000, 2.0, 0.0, 0.0, 0.0, 0);
    RegimeSpec sd;
    sd.variant = ConeVariant::B;
    sd.kind = RegimeKind::StatDim;
    sd.x = 2.0;
    auto rs = realize_regime(sd, 20000);
    CHECK(stat_dim_finite(rs, ConeVariant::B, cache) ==
          doctest::Approx(static_cast<double>(o2.value)).epsilon(1e-10));
}
