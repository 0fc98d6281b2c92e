#include <doctest.h>

#include "functionals.hpp"
#include "sdist.hpp"

using namespace weyl;

namespace {
BigRational frac(int64_t num, int64_t den) { return BigRational(num) / BigRational(den); }
}

TEST_CASE("intrinsic volumes: pinned values at (3,2,A)") {
    auto table = shared_stirling_table(ConeVariant::A, 3);
    auto w = expected_intrinsic_volumes(3, 2, ConeVariant::A, ConeSide::Weyl, *table);
    CHECK(w.at_k(0) == frac(1, 3));
    CHECK(w.at_k(1) == frac(1, 2));
    CHECK(w.at_k(2) == frac(1, 6));
    auto g = expected_intrinsic_volumes(3, 2, ConeVariant::A, ConeSide::DualWeyl, *table);
    CHECK(g.at_k(0) == frac(1, 6));
    CHECK(g.at_k(1) == frac(1, 2));
    CHECK(g.at_k(2) == frac(1, 3));
}

TEST_CASE("intrinsic volumes: normalization and duality") {
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        auto table = shared_stirling_table(v, 40);
        for (int n = 2; n <= 40; n += 3) {
            for (int d = 1; d <= n - 1; d += 2) {
                auto w = expected_intrinsic_volumes(n, d, v, ConeSide::Weyl, *table);
                auto g = expected_intrinsic_volumes(n, d, v, ConeSide::DualWeyl, *table);
                BigRational sw, sg;
                for (const auto& x : w.values) {
                    CHECK(x >= BigRational(0));
                    sw += x;
                }
                for (const auto& x : g.values) sg += x;
                CHECK(sw == BigRational(1));
                CHECK(sg == BigRational(1));
                // E v_k(G) = E v_{d-k}(W) for interior k; reflects duality.
                for (int k = 1; k <= d - 1; ++k) CHECK(g.at_k(k) == w.at_k(d - k));
            }
        }
    }
}

TEST_CASE("intrinsic volumes: domain errors") {
    auto table = shared_stirling_table(ConeVariant::A, 10);
    CHECK_THROWS_AS(expected_intrinsic_volumes(5, 0, ConeVariant::A, ConeSide::Weyl, *table),
                    std::invalid_argument);
    CHECK_THROWS_AS(expected_intrinsic_volumes(5, 5, ConeVariant::A, ConeSide::Weyl, *table),
                    std::invalid_argument);
}

TEST_CASE("quermassintegrals: pinned values and monotonicity") {
    auto table = shared_stirling_table(ConeVariant::A, 40);
    auto w32 = expected_quermassintegrals(3, 2, ConeVariant::A, ConeSide::Weyl, *table);
    CHECK(w32.at_k(1) == frac(1, 6));
    auto w42 = expected_quermassintegrals(4, 2, ConeVariant::A, ConeSide::Weyl, *table);
    CHECK(w42.at_k(0) == frac(1, 2));
    auto g32 = expected_quermassintegrals(3, 2, ConeVariant::A, ConeSide::DualWeyl, *table);
    CHECK(g32.at_k(2) == BigRational(0));

    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        auto tb = shared_stirling_table(v, 30);
        for (int n = 3; n <= 30; n += 4) {
            for (int d = 2; d <= n - 1; d += 3) {
                auto w = expected_quermassintegrals(n, d, v, ConeSide::Weyl, *tb);
                for (int k = w.k_first; k < w.k_last(); ++k) {
                    CHECK(w.at_k(k) >= w.at_k(k + 1));  // D(n, d-k) nonincreasing in k
                }
                for (const auto& x : w.values) {
                    CHECK(BigRational(2) * x >= BigRational(0));
                    CHECK(BigRational(2) * x <= BigRational(1));
                }
            }
        }
    }
}

TEST_CASE("face numbers: pinned values at (3,2,A)") {
    auto table = shared_stirling_table(ConeVariant::A, 3);
    auto g = expected_face_numbers(3, 2, ConeVariant::A, ConeSide::DualWeyl, *table);
    CHECK(g.at_k(0) == BigRational(1));
    CHECK(g.at_k(1) == BigRational(2));
    auto w = expected_face_numbers(3, 2, ConeVariant::A, ConeSide::Weyl, *table);
    CHECK(w.at_k(1) == BigRational(2));
    CHECK(w.at_k(2) == BigRational(1));
}

TEST_CASE("face numbers: dual bounded by the subset count") {
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        auto table = shared_stirling_table(v, 30);
        unsigned top = 0;
        for (int n = 3; n <= 30; n += 4) {
            top = v == ConeVariant::A ? static_cast<unsigned>(n - 1) : static_cast<unsigned>(n);
            for (int d = 2; d <= n - 1; d += 3) {
                auto g = expected_face_numbers(n, d, v, ConeSide::DualWeyl, *table);
                for (int k = 0; k <= d - 1; ++k) {
                    BigRational bound = BigRational::from_int(
                        BigNat::binomial(top, static_cast<unsigned>(k)));
                    CHECK(g.at_k(k) <= bound);
                    CHECK(g.at_k(k) >= BigRational(0));
                }
            }
        }
    }
}

TEST_CASE("statistical dimension: pinned value and identities") {
    auto table = shared_stirling_table(ConeVariant::A, 5);
    CHECK(expected_statistical_dimension(3, 2, ConeVariant::A, *table) == frac(5, 6));
    CHECK(expected_statistical_dimension(4, 2, ConeVariant::A, *table) == frac(2, 3));
    CHECK(expected_statistical_dimension(5, 3, ConeVariant::A, *table) == frac(29, 36));

    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        auto tb = shared_stirling_table(v, 25);
        for (int n = 2; n <= 25; n += 3) {
            for (int d = 1; d <= n - 1; d += 2) {
                auto sd = expected_statistical_dimension(n, d, v, *tb);
                CHECK(sd == statistical_dimension_via_iv(n, d, v, *tb));
                CHECK(sd >= BigRational(0));
                CHECK(sd <= BigRational(d));
            }
        }
    }
}

TEST_CASE("statistical dimension matches the pmf identity") {
    // E Delta = (E[S 1{m<=S<=n}] - m P[m<=S<=n]) / (2 * odd tail at m), m = n-d.
    for (ConeVariant v : {ConeVariant::A, ConeVariant::B}) {
        auto tb = shared_stirling_table(v, 20);
        for (int n : {5, 12, 20}) {
            for (int d = 1; d <= n - 1; d += 3) {
                auto exact = expected_statistical_dimension(n, d, v, *tb).to_double();
                auto p = pmf(n, v);
                int m = n - d;
                double s1 = 0.0, mass = 0.0;
                for (int j = m; j <= n; ++j) {
                    s1 += j * p.probs[j];
                    mass += p.probs[j];
                }
                double viapmf = (s1 - m * mass) / (2.0 * odd_tail_sum(p, m));
                CHECK(viapmf == doctest::Approx(exact).epsilon(1e-9));
            }
        }
    }
}
