#include "rational.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace weyl {

BigRational::BigRational(int64_t v) : sign_(v == 0 ? 0 : (v > 0 ? 1 : -1)), den_(1) {
    uint64_t mag = v >= 0 ? static_cast<uint64_t>(v) : ~static_cast<uint64_t>(v) + 1;
    num_ = BigNat(mag);
}

BigRational::BigRational(int sign, BigNat num, BigNat den)
    : sign_(sign), num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::domain_error("BigRational: zero denominator");
    normalize();
}

void BigRational::normalize() {
    if (num_.is_zero()) {
        sign_ = 0;
        den_ = BigNat(1);
        return;
    }
    if (sign_ == 0) sign_ = 1;
    BigNat g = BigNat::gcd(num_, den_);
    if (!g.is_one()) {
        num_ = BigNat::div_exact(num_, g);
        den_ = BigNat::div_exact(den_, g);
    }
}

BigRational BigRational::operator-() const {
    BigRational r = *this;
    r.sign_ = -r.sign_;
    return r;
}

BigRational BigRational::operator+(const BigRational& o) const {
    if (sign_ == 0) return o;
    if (o.sign_ == 0) return *this;
    BigNat a = num_ * o.den_;
    BigNat b = o.num_ * den_;
    BigNat den = den_ * o.den_;
    if (sign_ == o.sign_) return BigRational(sign_, a + b, std::move(den));
    int c = a.compare(b);
    if (c == 0) return BigRational();
    if (c > 0) return BigRational(sign_, a - b, std::move(den));
    return BigRational(o.sign_, b - a, std::move(den));
}

BigRational BigRational::operator-(const BigRational& o) const { return *this + (-o); }

BigRational BigRational::operator*(const BigRational& o) const {
    if (sign_ == 0 || o.sign_ == 0) return BigRational();
    return BigRational(sign_ * o.sign_, num_ * o.num_, den_ * o.den_);
}

BigRational BigRational::operator/(const BigRational& o) const {
    if (o.sign_ == 0) throw std::domain_error("BigRational: division by zero");
    if (sign_ == 0) return BigRational();
    return BigRational(sign_ * o.sign_, num_ * o.den_, den_ * o.num_);
}

bool BigRational::operator==(const BigRational& o) const {
    return sign_ == o.sign_ && num_ == o.num_ && den_ == o.den_;
}

int BigRational::compare(const BigRational& o) const {
    if (sign_ != o.sign_) return sign_ < o.sign_ ? -1 : 1;
    if (sign_ == 0) return 0;
    int c = (num_ * o.den_).compare(o.num_ * den_);
    return sign_ > 0 ? c : -c;
}

std::string BigRational::to_string() const {
    std::string s;
    if (sign_ < 0) s = "-";
    s += num_.to_decimal();
    if (!den_.is_one()) {
        s += "/";
        s += den_.to_decimal();
    }
    return s;
}

double BigRational::to_double() const {
    if (sign_ == 0) return 0.0;
    int64_t en, ed;
    double mn = num_.frexp_approx(en);
    double md = den_.frexp_approx(ed);
    double v = (mn / md) * std::pow(2.0, static_cast<double>(en - ed));
    return sign_ > 0 ? v : -v;
}

}  // namespace weyl
