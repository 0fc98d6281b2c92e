#include <doctest.h>

#include <cmath>

#include "sdist.hpp"
#include "special_functions.hpp"

using namespace weyl;

TEST_CASE("pmf pinned exact values") {
    auto pa = pmf(3, ConeVariant::A);
    REQUIRE(pa.probs.size() == 4);
    CHECK(pa.probs[0] == 0.0);
    CHECK(pa.probs[1] == doctest::Approx(1.0 / 3.0).epsilon(1e-15));
    CHECK(pa.probs[2] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pa.probs[3] == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

    auto pb = pmf(2, ConeVariant::B);
    CHECK(pb.probs[0] == doctest::Approx(3.0 / 8.0).epsilon(1e-15));
    CHECK(pb.probs[1] == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(pb.probs[2] == doctest::Approx(1.0 / 8.0).epsilon(1e-15));

    auto p0 = pmf(0, ConeVariant::A);
    REQUIRE(p0.probs.size() == 1);
    CHECK(p0.probs[0] == 1.0);
}

TEST_CASE("pmf preconditions") {
    CHECK_THROWS_AS(pmf(-1, ConeVariant::A), std::invalid_argument);
    CHECK_THROWS_AS(pmf(kPmfHardCap + 1, ConeVariant::A), std::invalid_argument);
}

TEST_CASE("exact-mode pmf matches convolution to 1e-10") {
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        for (int n : {1, 2, 5, 10, 17, 25}) {
            auto exact = pmf_exact(n, v);
            // Convolution route, forced by building from scratch.
            PmfVector conv{n, v, std::vector<double>(static_cast<std::size_t>(n) + 1, 0.0)};
            conv.probs[0] = 1.0;
            double sigma = sigma_of(v);
            for (int k = 1; k <= n; ++k) {
                double p = sigma / k;
                for (int j = k; j >= 1; --j) {
                    conv.probs[j] = conv.probs[j] * (1.0 - p) + conv.probs[j - 1] * p;
                }
                conv.probs[0] *= 1.0 - p;
            }
            for (int k = 0; k <= n; ++k) {
                CHECK(std::fabs(exact[k].to_double() - conv.probs[k]) <= 1e-10);
            }
        }
    }
}

TEST_CASE("pmf normalization and nonnegativity") {
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        for (int n : {10, 100, 1000}) {
            auto p = pmf(n, v);
            double sum = 0.0;
            for (double x : p.probs) {
                CHECK(x >= 0.0);
                sum += x;
            }
            CHECK(std::fabs(sum - 1.0) <= 1e-12);
            if (v == ConeVariant::A && n >= 1) CHECK(p.probs[0] == 0.0);
        }
    }
}

TEST_CASE("odd tail sums") {
    auto pa = pmf(3, ConeVariant::A);
    CHECK(odd_tail_sum(pa, 1) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(odd_tail_sum(pa, 3) == 0.0);
    auto pb = pmf(2, ConeVariant::B);
    CHECK(odd_tail_sum(pb, 0) == doctest::Approx(0.5).epsilon(1e-15));
    CHECK_THROWS_AS(odd_tail_sum(pa, -1), std::invalid_argument);
}

TEST_CASE("odd-parity probability equals 1/2 for n >= 2") {
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        for (int n : {2, 3, 10, 24}) {
            auto exact = pmf_exact(n, v);
            BigRational odd;
            for (int k = 1; k <= n; k += 2) odd += exact[k];
            CHECK(odd == BigRational(1) / BigRational(2));
        }
    }
}

TEST_CASE("moments match harmonic sums and pmf") {
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        for (int n : {2, 10, 200}) {
            auto m = moment_summary(n, v);
            double sigma = sigma_of(v);
            double harmonic = 0.0, h2 = 0.0;
            for (int k = 1; k <= n; ++k) {
                harmonic += 1.0 / k;
                h2 += 1.0 / (static_cast<double>(k) * k);
            }
            CHECK(m.mean == doctest::Approx(sigma * harmonic).epsilon(1e-12));
            CHECK(m.variance == doctest::Approx(sigma * harmonic - sigma * sigma * h2).epsilon(1e-12));
            CHECK(m.variance < m.mean);

            auto p = pmf(n, v);
            CHECK(pmf_mean(p) == doctest::Approx(m.mean).epsilon(1e-9));
            CHECK(pmf_variance(p) == doctest::Approx(m.variance).epsilon(1e-9));
        }
    }
}

TEST_CASE("mgf ratio: closed forms") {
    // a = 1 makes the product telescope to (n+1)/n.
    CHECK(mgf_ratio(100, std::log(2.0), ConeVariant::A) == doctest::Approx(1.01).epsilon(1e-12));
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        CHECK(mgf_ratio(37, 0.0, v) == doctest::Approx(1.0).epsilon(1e-14));
    }
    CHECK_THROWS_AS(mgf_ratio(0, 0.5, ConeVariant::A), std::invalid_argument);
    CHECK_THROWS_AS(mgf_ratio(10, std::nan("") , ConeVariant::A), std::invalid_argument);
}

TEST_CASE("mgf ratio against the gamma-function closed form") {
    // Independent oracle: prod_{k<=n} (1 + a/k) = Gamma(n+1+a) / (Gamma(n+1) Gamma(1+a)).
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        for (double z : {-0.75, 0.3, 0.5, 1.2}) {
            for (int n : {100, 10000, 100000}) {
                double a = sigma_of(v) * std::expm1(z);
                double oracle = std::exp(lgamma_pos(n + 1.0 + a) - lgamma_pos(n + 1.0) -
                                         a * std::log(static_cast<double>(n)) - lgamma_pos(1.0 + a));
                // 1e5 accumulated log1p roundings put the product a hair past 1e-10.
                CHECK(mgf_ratio(n, z, v) == doctest::Approx(oracle).epsilon(5e-9));
            }
        }
    }
    CHECK(mgf_ratio(100000, 0.5, ConeVariant::B) ==
          doctest::Approx(psi_limit(0.5, ConeVariant::B)).epsilon(1e-4));
}

TEST_CASE("mgf ratio converges monotonically toward the limit") {
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        for (double z : {-0.5, 0.5, std::log(2.0)}) {
            double lim = psi_limit(z, v);
            double g3 = std::fabs(mgf_ratio(1000, z, v) - lim);
            double g4 = std::fabs(mgf_ratio(10000, z, v) - lim);
            double g5 = std::fabs(mgf_ratio(100000, z, v) - lim);
            CHECK(g3 > g4);
            CHECK(g4 > g5);
            // |ratio - psi| <= C/n with C calibrated from the gamma form.
            CHECK(g5 <= 10.0 / 100000.0);
        }
    }
}

TEST_CASE("psi limit pinned values") {
    CHECK(psi_limit(0.0, ConeVariant::A) == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(psi_limit(std::log(2.0), ConeVariant::A) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(psi_limit(std::log(3.0), ConeVariant::B) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK(psi_limit(0.0, ConeVariant::B) == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("clt kolmogorov distance decreases") {
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        double d2 = clt_kolmogorov_distance(100, v);
        double d3 = clt_kolmogorov_distance(1000, v);
        double d4 = clt_kolmogorov_distance(10000, v);
        CHECK(d2 > 0.0);
        CHECK(d2 < 1.0);
        CHECK(d2 > d3);
        CHECK(d3 > d4);
    }
    CHECK_THROWS_AS(clt_kolmogorov_distance(1, ConeVariant::A), std::invalid_argument);
}

TEST_CASE("point asymptotics against the exact pmf") {
    // Relative error 0.25 at (n=1e4, z=2, type A); the remaining corners are
    // asymptotic with larger finite-n corrections, held to a factor-2 band.
    int n = 10000;
    {
        auto p = pmf(n, ConeVariant::A);
        long long m = std::llround(2.0 * std::log(static_cast<double>(n)));
        double approx = asymptotic_point(n, 2.0, 0, ConeVariant::A);
        double exact = p.probs[static_cast<std::size_t>(m)];
        CHECK(std::fabs(approx / exact - 1.0) <= 0.25);
    }
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        auto p = pmf(n, v);
        double slogn = sigma_of(v) * std::log(static_cast<double>(n));
        for (double z : {0.5, 2.0}) {
            long long m = std::llround(z * slogn);
            double approx = asymptotic_point(n, z, 0, v);
            double exact = p.probs[static_cast<std::size_t>(m)];
            CHECK(approx / exact > 0.5);
            CHECK(approx / exact < 2.0);
        }
    }
    CHECK_THROWS_AS(asymptotic_point(n, -1.0, 0, ConeVariant::A), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_point(n, 2.0, n, ConeVariant::A), std::invalid_argument);
}

TEST_CASE("point asymptotics track the pmf at lattice-realized z") {
    // Evaluated at z values that sit exactly on the integer lattice the
    // formula's relative error stays below 15% on both sides of z = 1 for
    // both variants (rounding-phase drift excluded by construction).
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        for (double z_target : {0.5, 2.0}) {
            for (int n : {1000, 10000, 40000}) {
                auto p = pmf(n, v);
                double slogn = sigma_of(v) * std::log(static_cast<double>(n));
                long long m = std::llround(z_target * slogn);
                double z_exact = static_cast<double>(m) / slogn;
                double err = std::fabs(asymptotic_point(n, z_exact, 0, v) /
                                           p.probs[static_cast<std::size_t>(m)] -
                                       1.0);
                CHECK(err <= 0.15);
            }
        }
    }
}

TEST_CASE("point asymptotics: exact ratio in ell") {
    int n = 10000;
    double r0 = asymptotic_point(n, 2.0, 0, ConeVariant::A);
    double r2 = asymptotic_point(n, 2.0, 2, ConeVariant::A);
    CHECK(r2 / r0 == doctest::Approx(0.25).epsilon(1e-12));
    double prefactor_at_one = asymptotic_point(n, 1.0, 0, ConeVariant::A);
    // z log z - z + 1 vanishes at z = 1 so no n^{-...} suppression remains.
    double expected = 1.0 / std::sqrt(2.0 * M_PI * std::log(static_cast<double>(n))) *
                      psi_limit(0.0, ConeVariant::A);
    CHECK(prefactor_at_one == doctest::Approx(expected).epsilon(0.02));
}

TEST_CASE("odd-tail asymptotics against the exact pmf") {
    int n = 10000;
    {
        auto p = pmf(n, ConeVariant::A);
        long long m = std::llround(2.0 * std::log(static_cast<double>(n)));
        double approx = asymptotic_odd_tail(n, 2.0, ConeVariant::A);
        double exact = odd_tail_sum(p, static_cast<int>(m));
        CHECK(std::fabs(approx / exact - 1.0) <= 0.25);
    }
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        auto p = pmf(n, v);
        double slogn = sigma_of(v) * std::log(static_cast<double>(n));
        long long m = std::llround(2.0 * slogn);
        double ratio = asymptotic_odd_tail(n, 2.0, v) / odd_tail_sum(p, static_cast<int>(m));
        CHECK(ratio > 0.5);
        CHECK(ratio < 2.0);
    }
    CHECK_THROWS_AS(asymptotic_odd_tail(n, 1.0, ConeVariant::A), std::invalid_argument);
    CHECK_THROWS_AS(asymptotic_odd_tail(n, 0.0, ConeVariant::A), std::invalid_argument);
}

TEST_CASE("odd-tail asymptotics approach their limits") {
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        // z in (0,1): approaches 1/2 from below; z > 1: approaches 0.
        double lo = asymptotic_odd_tail(1000, 0.5, v);
        double hi = asymptotic_odd_tail(100000, 0.5, v);
        CHECK(std::fabs(hi - 0.5) < std::fabs(lo - 0.5));
        double t1 = asymptotic_odd_tail(1000, 2.0, v);
        double t2 = asymptotic_odd_tail(100000, 2.0, v);
        CHECK(t2 < t1);
        CHECK(t2 > 0.0);
    }
}
