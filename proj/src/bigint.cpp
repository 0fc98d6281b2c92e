#include "bigint.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace weyl {

namespace {
constexpr uint64_t kBase = uint64_t{1} << 32;
}

BigNat::BigNat(uint64_t v) {
    if (v != 0) {
        limbs_.push_back(static_cast<uint32_t>(v & 0xffffffffu));
        if (v >> 32) limbs_.push_back(static_cast<uint32_t>(v >> 32));
    }
}

void BigNat::trim() {
    while (!limbs_.empty() && limbs_.back() == 0) limbs_.pop_back();
}

BigNat BigNat::from_decimal(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("BigNat::from_decimal: empty string");
    BigNat r;
    for (char c : s) {
        if (c < '0' || c > '9') throw std::invalid_argument("BigNat::from_decimal: not a digit");
        r.mul_u32(10);
        r += BigNat(static_cast<uint64_t>(c - '0'));
    }
    return r;
}

std::size_t BigNat::bit_length() const {
    if (limbs_.empty()) return 0;
    return 32 * (limbs_.size() - 1) + (32 - std::countl_zero(limbs_.back()));
}

int BigNat::compare(const BigNat& o) const {
    if (limbs_.size() != o.limbs_.size()) return limbs_.size() < o.limbs_.size() ? -1 : 1;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        if (limbs_[i] != o.limbs_[i]) return limbs_[i] < o.limbs_[i] ? -1 : 1;
    }
    return 0;
}

BigNat& BigNat::operator+=(const BigNat& o) {
    if (limbs_.size() < o.limbs_.size()) limbs_.resize(o.limbs_.size(), 0);
    uint64_t carry = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t s = carry + limbs_[i] + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        limbs_[i] = static_cast<uint32_t>(s & 0xffffffffu);
        carry = s >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

BigNat& BigNat::operator-=(const BigNat& o) {
    if (compare(o) < 0) throw std::underflow_error("BigNat subtraction underflow");
    uint64_t borrow = 0;
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t sub = borrow + (i < o.limbs_.size() ? o.limbs_[i] : 0);
        uint64_t cur = limbs_[i];
        if (cur >= sub) {
            limbs_[i] = static_cast<uint32_t>(cur - sub);
            borrow = 0;
        } else {
            limbs_[i] = static_cast<uint32_t>(cur + kBase - sub);
            borrow = 1;
        }
    }
    trim();
    return *this;
}

BigNat BigNat::operator*(const BigNat& o) const {
    BigNat r;
    if (is_zero() || o.is_zero()) return r;
    r.limbs_.assign(limbs_.size() + o.limbs_.size(), 0);
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        uint64_t carry = 0;
        uint64_t ai = limbs_[i];
        for (std::size_t j = 0; j < o.limbs_.size(); ++j) {
            uint64_t cur = r.limbs_[i + j] + ai * o.limbs_[j] + carry;
            r.limbs_[i + j] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
        }
        std::size_t pos = i + o.limbs_.size();
        while (carry) {
            uint64_t cur = r.limbs_[pos] + carry;
            r.limbs_[pos] = static_cast<uint32_t>(cur & 0xffffffffu);
            carry = cur >> 32;
            ++pos;
        }
    }
    r.trim();
    return r;
}

BigNat& BigNat::mul_u32(uint32_t m) {
    if (m == 0 || is_zero()) {
        limbs_.clear();
        return *this;
    }
    uint64_t carry = 0;
    for (auto& limb : limbs_) {
        uint64_t cur = uint64_t{limb} * m + carry;
        limb = static_cast<uint32_t>(cur & 0xffffffffu);
        carry = cur >> 32;
    }
    if (carry) limbs_.push_back(static_cast<uint32_t>(carry));
    return *this;
}

uint32_t BigNat::divmod_u32(uint32_t m) {
    if (m == 0) throw std::domain_error("BigNat division by zero");
    uint64_t rem = 0;
    for (std::size_t i = limbs_.size(); i-- > 0;) {
        uint64_t cur = (rem << 32) | limbs_[i];
        limbs_[i] = static_cast<uint32_t>(cur / m);
        rem = cur % m;
    }
    trim();
    return static_cast<uint32_t>(rem);
}

std::pair<BigNat, BigNat> BigNat::divmod(const BigNat& a, const BigNat& b) {
    if (b.is_zero()) throw std::domain_error("BigNat division by zero");
    if (a.compare(b) < 0) return {BigNat{}, a};
    if (b.limbs_.size() == 1) {
        BigNat q = a;
        uint32_t r = q.divmod_u32(b.limbs_[0]);
        return {std::move(q), BigNat(r)};
    }
    std::size_t n = a.bit_length();
    BigNat q, r;
    q.limbs_.assign((n + 31) / 32, 0);
    for (std::size_t i = n; i-- > 0;) {
        r.shift_left_bits(1);
        if ((a.limbs_[i / 32] >> (i % 32)) & 1u) {
            if (r.limbs_.empty()) r.limbs_.push_back(0);
            r.limbs_[0] |= 1u;
        }
        if (r.compare(b) >= 0) {
            r -= b;
            q.limbs_[i / 32] |= (uint32_t{1} << (i % 32));
        }
    }
    q.trim();
    return {std::move(q), std::move(r)};
}

BigNat BigNat::div_exact(const BigNat& a, const BigNat& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw std::logic_error("BigNat::div_exact: inexact division");
    return q;
}

BigNat& BigNat::shift_left_bits(std::size_t k) {
    if (is_zero() || k == 0) return *this;
    std::size_t limb_shift = k / 32, bit_shift = k % 32;
    std::size_t old = limbs_.size();
    limbs_.resize(old + limb_shift + 1, 0);
    for (std::size_t i = old; i-- > 0;) {
        uint64_t v = uint64_t{limbs_[i]} << bit_shift;
        limbs_[i + limb_shift + 1] |= static_cast<uint32_t>(v >> 32);
        limbs_[i + limb_shift] = static_cast<uint32_t>(v & 0xffffffffu);
        if (i < limb_shift) limbs_[i] = 0;
    }
    for (std::size_t i = 0; i < limb_shift; ++i) limbs_[i] = 0;
    trim();
    return *this;
}

BigNat& BigNat::shift_right_bits(std::size_t k) {
    if (is_zero() || k == 0) return *this;
    std::size_t limb_shift = k / 32, bit_shift = k % 32;
    if (limb_shift >= limbs_.size()) {
        limbs_.clear();
        return *this;
    }
    for (std::size_t i = 0; i + limb_shift < limbs_.size(); ++i) {
        uint64_t v = limbs_[i + limb_shift] >> bit_shift;
        if (bit_shift && i + limb_shift + 1 < limbs_.size()) {
            v |= uint64_t{limbs_[i + limb_shift + 1]} << (32 - bit_shift);
        }
        limbs_[i] = static_cast<uint32_t>(v & 0xffffffffu);
    }
    limbs_.resize(limbs_.size() - limb_shift);
    trim();
    return *this;
}

std::size_t BigNat::trailing_zero_bits() const {
    for (std::size_t i = 0; i < limbs_.size(); ++i) {
        if (limbs_[i] != 0) return 32 * i + std::countr_zero(limbs_[i]);
    }
    return 0;
}

BigNat BigNat::gcd(BigNat a, BigNat b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    std::size_t sa = a.trailing_zero_bits(), sb = b.trailing_zero_bits();
    std::size_t common = std::min(sa, sb);
    a.shift_right_bits(sa);
    for (;;) {
        b.shift_right_bits(b.trailing_zero_bits());
        int c = a.compare(b);
        if (c == 0) break;
        if (c > 0) std::swap(a, b);
        b -= a;
        if (b.is_zero()) break;
    }
    a.shift_left_bits(common);
    return a;
}

BigNat BigNat::pow_u32(uint32_t base, unsigned exp) {
    BigNat r(1);
    for (unsigned i = 0; i < exp; ++i) r.mul_u32(base);
    return r;
}

BigNat BigNat::factorial(unsigned n) {
    BigNat r(1);
    for (unsigned i = 2; i <= n; ++i) r.mul_u32(i);
    return r;
}

BigNat BigNat::binomial(unsigned n, unsigned k) {
    if (k > n) return BigNat{};
    if (k > n - k) k = n - k;
    BigNat r(1);
    for (unsigned i = 0; i < k; ++i) {
        r.mul_u32(n - i);
        uint32_t rem = r.divmod_u32(i + 1);
        (void)rem;  // binomial products divide exactly at every step
    }
    return r;
}

uint64_t BigNat::to_u64() const {
    if (limbs_.size() > 2) throw std::overflow_error("BigNat does not fit in uint64_t");
    uint64_t v = 0;
    if (limbs_.size() > 1) v = uint64_t{limbs_[1]} << 32;
    if (!limbs_.empty()) v |= limbs_[0];
    return v;
}

std::string BigNat::to_decimal() const {
    if (is_zero()) return "0";
    BigNat tmp = *this;
    std::string out;
    while (!tmp.is_zero()) {
        uint32_t chunk = tmp.divmod_u32(1000000000u);
        if (tmp.is_zero()) {
            out.insert(0, std::to_string(chunk));
        } else {
            std::string part = std::to_string(chunk);
            out.insert(0, std::string(9 - part.size(), '0') + part);
        }
    }
    return out;
}

double BigNat::frexp_approx(int64_t& exp2) const {
    if (is_zero()) {
        exp2 = 0;
        return 0.0;
    }
    std::size_t bits = bit_length();
    // Assemble the top (up to) 96 bits so the double mantissa is exact.
    long double m = 0.0L;
    std::size_t top = limbs_.size();
    std::size_t take = std::min<std::size_t>(3, top);
    for (std::size_t i = 0; i < take; ++i) {
        m = m * 4294967296.0L + limbs_[top - 1 - i];
    }
    int64_t m_bits = static_cast<int64_t>(32 * take - std::countl_zero(limbs_.back()));
    exp2 = static_cast<int64_t>(bits);
    return static_cast<double>(m / std::pow(2.0L, static_cast<long double>(m_bits)));
}

double BigNat::to_double() const {
    int64_t e;
    double m = frexp_approx(e);
    if (e > 1024) return std::numeric_limits<double>::infinity();
    return std::ldexp(m, static_cast<int>(e));
}

double BigNat::log2_value() const {
    if (is_zero()) return -std::numeric_limits<double>::infinity();
    int64_t e;
    double m = frexp_approx(e);
    return static_cast<double>(e) + std::log2(m);
}

}  // namespace weyl
