#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weyl {

// Arbitrary-precision unsigned integer. Little-endian base-2^32 limbs,
// no trailing zero limbs (zero is the empty limb vector).
class BigNat {
public:
    BigNat() = default;
    BigNat(uint64_t v);

    static BigNat from_decimal(std::string_view s);

    bool is_zero() const { return limbs_.empty(); }
    bool is_even() const { return limbs_.empty() || (limbs_[0] & 1u) == 0; }
    bool is_one() const { return limbs_.size() == 1 && limbs_[0] == 1; }
    std::size_t bit_length() const;

    // -1 / 0 / +1 as *this <=> o
    int compare(const BigNat& o) const;
    bool operator==(const BigNat& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigNat& o) const { return limbs_ != o.limbs_; }
    bool operator<(const BigNat& o) const { return compare(o) < 0; }
    bool operator<=(const BigNat& o) const { return compare(o) <= 0; }
    bool operator>(const BigNat& o) const { return compare(o) > 0; }
    bool operator>=(const BigNat& o) const { return compare(o) >= 0; }

    BigNat& operator+=(const BigNat& o);
    // Requires *this >= o.
    BigNat& operator-=(const BigNat& o);
    friend BigNat operator+(BigNat a, const BigNat& b) { a += b; return a; }
    friend BigNat operator-(BigNat a, const BigNat& b) { a -= b; return a; }

    BigNat operator*(const BigNat& o) const;
    BigNat& operator*=(const BigNat& o) { *this = *this * o; return *this; }
    BigNat& mul_u32(uint32_t m);

    // In-place quotient; returns remainder. m must be nonzero.
    uint32_t divmod_u32(uint32_t m);
    // Shift-and-subtract long division; returns {quotient, remainder}.
    static std::pair<BigNat, BigNat> divmod(const BigNat& a, const BigNat& b);
    // Exact division helper: a / b where the division is known to be exact.
    static BigNat div_exact(const BigNat& a, const BigNat& b);

    BigNat& shift_left_bits(std::size_t k);
    BigNat& shift_right_bits(std::size_t k);
    std::size_t trailing_zero_bits() const;  // undefined for zero

    static BigNat gcd(BigNat a, BigNat b);  // binary gcd
    static BigNat pow_u32(uint32_t base, unsigned exp);
    static BigNat factorial(unsigned n);
    static BigNat binomial(unsigned n, unsigned k);

    bool fits_u64() const { return limbs_.size() <= 2; }
    uint64_t to_u64() const;  // throws std::overflow_error if too large

    std::string to_decimal() const;
    // Nearest double; +inf when the value exceeds the double range.
    double to_double() const;
    // Mantissa in [0.5, 1) and exponent so that value == mantissa * 2^exp.
    double frexp_approx(int64_t& exp2) const;
    double log2_value() const;  // -inf for zero

private:
    std::vector<uint32_t> limbs_;
    void trim();
};

}  // namespace weyl
