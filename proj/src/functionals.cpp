#include "functionals.hpp"

#include <stdexcept>

namespace weyl {

namespace {

void check_nd(int n, int d, const StirlingTable& table) {
    if (d < 1 || d >= n) throw std::invalid_argument("expected functionals require 1 <= d <= n-1");
    if (n > table.max_n()) throw std::out_of_range("Stirling table too small for n");
}

BigNat chambers_or_zero(const StirlingTable& table, int n, int d) {
    if (d == 0) return BigNat{};  // D(n,0) := 0
    return table.chamber_count(n, d);
}

}  // namespace

FunctionalTable expected_intrinsic_volumes(int n, int d, ConeVariant variant, ConeSide cone,
                                           const StirlingTable& table) {
    check_nd(n, d, table);
    BigNat dd = table.chamber_count(n, d);
    BigNat dd_prev = chambers_or_zero(table, n, d - 1);
    BigRational boundary =
        BigRational::from_nat(dd - dd_prev, dd * BigNat(2));  // (D(n,d)-D(n,d-1))/(2 D(n,d))

    FunctionalTable out{n, d, variant, cone, FunctionalKind::IntrinsicVolumes, 0, {}};
    out.values.reserve(static_cast<std::size_t>(d) + 1);
    if (cone == ConeSide::Weyl) {
        out.values.push_back(boundary);
        for (int k = 1; k <= d; ++k) {
            out.values.push_back(BigRational::from_nat(table.entry(n, n - d + k), dd));
        }
    } else {
        for (int k = 0; k <= d - 1; ++k) {
            out.values.push_back(BigRational::from_nat(table.entry(n, n - k), dd));
        }
        out.values.push_back(boundary);
    }
    return out;
}

FunctionalTable expected_quermassintegrals(int n, int d, ConeVariant variant, ConeSide cone,
                                           const StirlingTable& table) {
    check_nd(n, d, table);
    BigNat dd = table.chamber_count(n, d);
    BigNat two_dd = dd * BigNat(2);

    FunctionalTable out{n, d, variant, cone, FunctionalKind::Quermassintegrals, 0, {}};
    if (cone == ConeSide::Weyl) {
        out.k_first = 0;
        for (int k = 0; k <= d - 1; ++k) {
            out.values.push_back(BigRational::from_nat(chambers_or_zero(table, n, d - k), two_dd));
        }
    } else {
        out.k_first = 1;
        for (int k = 1; k <= d; ++k) {
            BigNat dk = chambers_or_zero(table, n, k);
            out.values.push_back(BigRational::from_nat(dd - dk, two_dd));
        }
    }
    return out;
}

FunctionalTable expected_face_numbers(int n, int d, ConeVariant variant, ConeSide cone,
                                      const StirlingTable& table) {
    check_nd(n, d, table);
    BigNat dd = table.chamber_count(n, d);
    // n + 1 - 2 sigma: n-1 for type A, n for type B.
    unsigned binom_top = variant == ConeVariant::A ? static_cast<unsigned>(n - 1)
                                                   : static_cast<unsigned>(n);

    FunctionalTable out{n, d, variant, cone, FunctionalKind::FaceNumbers, 0, {}};
    auto falling_factorial = [&](int j) {  // n!/(n-j)!
        BigNat r(1);
        for (int i = 0; i < j; ++i) r.mul_u32(static_cast<uint32_t>(n - i));
        return r;
    };
    if (cone == ConeSide::Weyl) {
        out.k_first = 1;
        for (int k = 1; k <= d; ++k) {
            int j = d - k;
            BigNat num = BigNat::binomial(binom_top, static_cast<unsigned>(j));
            num *= (k == d) ? dd : table.chamber_count(n - d + k, k);
            num *= falling_factorial(j);
            if (variant == ConeVariant::B) num.shift_left_bits(static_cast<std::size_t>(j));
            out.values.push_back(BigRational::from_nat(std::move(num), dd));
        }
    } else {
        out.k_first = 0;
        for (int k = 0; k <= d - 1; ++k) {
            BigNat num = BigNat::binomial(binom_top, static_cast<unsigned>(k));
            num *= table.chamber_count(n - k, d - k);
            num *= falling_factorial(k);
            if (variant == ConeVariant::B) num.shift_left_bits(static_cast<std::size_t>(k));
            out.values.push_back(BigRational::from_nat(std::move(num), dd));
        }
    }
    return out;
}

BigRational expected_statistical_dimension(int n, int d, ConeVariant variant,
                                           const StirlingTable& table) {
    check_nd(n, d, table);
    (void)variant;
    BigNat num;
    for (int l = 0; l <= d; ++l) {
        BigNat term = table.entry(n, n - l);
        term.mul_u32(static_cast<uint32_t>(d - l));
        num += term;
    }
    return BigRational::from_nat(std::move(num), table.chamber_count(n, d));
}

BigRational statistical_dimension_via_iv(int n, int d, ConeVariant variant,
                                         const StirlingTable& table) {
    auto iv = expected_intrinsic_volumes(n, d, variant, ConeSide::Weyl, table);
    BigRational sum;
    for (int k = 1; k <= d; ++k) sum += BigRational(k) * iv.at_k(k);
    return sum;
}

}  // namespace weyl
