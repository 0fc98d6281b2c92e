#pragma once

#include <cstdint>
#include <string>

#include "bigint.hpp"

namespace weyl {

// Exact rational with big-integer numerator and denominator.
// Always stored normalized: den > 0, gcd(num, den) == 1, sign in {-1,0,+1}.
class BigRational {
public:
    BigRational() : sign_(0), den_(1) {}
    BigRational(int64_t v);
    BigRational(int sign, BigNat num, BigNat den);
    static BigRational from_nat(BigNat num, BigNat den) {
        return BigRational(1, std::move(num), std::move(den));
    }
    static BigRational from_int(const BigNat& v) { return BigRational(1, v, BigNat(1)); }

    int sign() const { return sign_; }
    const BigNat& num() const { return num_; }
    const BigNat& den() const { return den_; }
    bool is_zero() const { return sign_ == 0; }
    bool is_integer() const { return den_.is_one(); }

    BigRational operator+(const BigRational& o) const;
    BigRational operator-(const BigRational& o) const;
    BigRational operator*(const BigRational& o) const;
    BigRational operator/(const BigRational& o) const;
    BigRational operator-() const;
    BigRational& operator+=(const BigRational& o) { *this = *this + o; return *this; }
    BigRational& operator-=(const BigRational& o) { *this = *this - o; return *this; }
    BigRational& operator*=(const BigRational& o) { *this = *this * o; return *this; }
    BigRational& operator/=(const BigRational& o) { *this = *this / o; return *this; }

    bool operator==(const BigRational& o) const;
    bool operator!=(const BigRational& o) const { return !(*this == o); }
    bool operator<(const BigRational& o) const { return compare(o) < 0; }
    bool operator<=(const BigRational& o) const { return compare(o) <= 0; }
    bool operator>(const BigRational& o) const { return compare(o) > 0; }
    bool operator>=(const BigRational& o) const { return compare(o) >= 0; }
    int compare(const BigRational& o) const;

    // "p/q" (or plain "p" when q == 1), with a leading '-' for negatives.
    std::string to_string() const;
    double to_double() const;

private:
    int sign_;
    BigNat num_;
    BigNat den_;
    void normalize();
};

}  // namespace weyl
