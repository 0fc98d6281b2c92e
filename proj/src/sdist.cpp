#include "sdist.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "special_functions.hpp"
#include "stirling.hpp"

namespace weyl {

namespace {

constexpr double kPi = 3.14159265358979323846;
// Values this small are flushed to zero during convolution; the discarded
// mass is < n * 1e-305, far below every tolerance in use.
constexpr double kFlushThreshold = 1e-305;

PmfVector pmf_from_table(int n, ConeVariant variant) {
    PmfVector out{n, variant, {}};
    out.probs.resize(static_cast<std::size_t>(n) + 1);
    auto exact = pmf_exact(n, variant);
    for (int k = 0; k <= n; ++k) out.probs[k] = exact[k].to_double();
    return out;
}

PmfVector pmf_by_convolution(int n, ConeVariant variant) {
    PmfVector out{n, variant, {}};
    out.probs.assign(static_cast<std::size_t>(n) + 1, 0.0);
    out.probs[0] = 1.0;
    double sigma = sigma_of(variant);
    int hi = 0;
    for (int k = 1; k <= n; ++k) {
        double p = sigma / k;
        double q = 1.0 - p;
        int new_hi = std::min(hi + 1, n);
        for (int j = new_hi; j >= 1; --j) {
            double v = out.probs[j] * q + out.probs[j - 1] * p;
            out.probs[j] = v < kFlushThreshold ? 0.0 : v;
        }
        out.probs[0] *= q;
        if (out.probs[0] < kFlushThreshold) out.probs[0] = 0.0;
        hi = new_hi;
        while (hi > 0 && out.probs[hi] == 0.0) --hi;
    }
    return out;
}

}  // namespace

PmfVector pmf(int n, ConeVariant variant) {
    if (n < 0) throw std::invalid_argument("pmf: n must be nonnegative");
    if (n > kPmfHardCap) {
        throw std::invalid_argument("pmf: n exceeds hard cap " + std::to_string(kPmfHardCap));
    }
    if (n <= kPmfExactThreshold) return pmf_from_table(n, variant);
    return pmf_by_convolution(n, variant);
}

std::vector<BigRational> pmf_exact(int n, ConeVariant variant) {
    if (n < 0) throw std::invalid_argument("pmf_exact: n must be nonnegative");
    auto table = shared_stirling_table(variant, n);
    // Denominator n!/sigma^n: for type B that is 2^n n!.
    BigNat den = BigNat::factorial(static_cast<unsigned>(n));
    if (variant == ConeVariant::B) den.shift_left_bits(static_cast<std::size_t>(n));
    std::vector<BigRational> out;
    out.reserve(static_cast<std::size_t>(n) + 1);
    for (int k = 0; k <= n; ++k) {
        out.push_back(BigRational::from_nat(table->entry(n, k), den));
    }
    return out;
}

double odd_tail_sum(const PmfVector& p, int m) {
    if (m < 0) throw std::invalid_argument("odd_tail_sum: m must be nonnegative");
    double s = 0.0;
    for (int k = m + 1; k <= p.n; k += 2) s += p.probs[k];
    return s;
}

double pmf_mean(const PmfVector& p) {
    double s = 0.0;
    for (int k = 1; k <= p.n; ++k) s += static_cast<double>(k) * p.probs[k];
    return s;
}

double pmf_variance(const PmfVector& p) {
    double mean = pmf_mean(p);
    double s = 0.0;
    for (int k = 0; k <= p.n; ++k) {
        double dev = k - mean;
        s += dev * dev * p.probs[k];
    }
    return s;
}

double mgf_ratio(int n, double z, ConeVariant variant) {
    if (n < 1) throw std::invalid_argument("mgf_ratio: n must be >= 1");
    if (!std::isfinite(z)) throw std::invalid_argument("mgf_ratio: z must be finite");
    double a = sigma_of(variant) * std::expm1(z);
    double log_sum = 0.0;
    for (int k = 1; k <= n; ++k) log_sum += std::log1p(a / k);
    return std::exp(log_sum - a * std::log(static_cast<double>(n)));
}

double psi_limit(double z, ConeVariant variant) {
    // 1/Gamma(sigma(e^z + 2(1-sigma))) == 1/Gamma(1 + sigma(e^z - 1)) for
    // sigma in {1, 1/2}; the second form is used as it is well conditioned
    // near z = 0.
    double arg = 1.0 + sigma_of(variant) * std::expm1(z);
    return std::exp(-lgamma_pos(arg));
}

double clt_kolmogorov_distance(int n, ConeVariant variant) {
    if (n < 2) throw std::invalid_argument("clt_kolmogorov_distance: n must be >= 2");
    PmfVector p = pmf(n, variant);
    double mu = sigma_of(variant) * std::log(static_cast<double>(n));
    double sd = std::sqrt(mu);
    double dist = 0.0;
    double cdf = 0.0, comp = 0.0;  // Kahan-compensated CDF accumulation
    for (int k = 0; k <= n; ++k) {
        double prev_cdf = cdf;
        double y = p.probs[k] - comp;
        double t = cdf + y;
        comp = (t - cdf) - y;
        cdf = t;
        double phi = normal_cdf((k - mu) / sd);
        dist = std::max(dist, std::fabs(cdf - phi));
        dist = std::max(dist, std::fabs(prev_cdf - phi));
    }
    return dist;
}

namespace {

// Realized lattice value z_n = round(z sigma log n) / (sigma log n).
double realized_z(int n, double z, ConeVariant variant, long long* m_out) {
    double slogn = sigma_of(variant) * std::log(static_cast<double>(n));
    long long m = std::llround(z * slogn);
    if (m_out) *m_out = m;
    return static_cast<double>(m) / slogn;
}

double rate_exponent(double z) { return z * std::log(z) - z + 1.0; }

}  // namespace

// The point law behind both asymptotics, with the Poisson clock sigma log n:
// P[S_n = z_n sigma log n] ~ n^{-sigma(z_n log z_n - z_n + 1)}
//                            / sqrt(2 pi z sigma log n) * Psi(log z),
// and one lattice step scales the probability by 1/z (both variants; checked
// against the exact pmf, which also pins the sigma placement above).
double asymptotic_point(int n, double z, int ell, ConeVariant variant) {
    if (n < 2) throw std::invalid_argument("asymptotic_point: n must be >= 2");
    if (!(z > 0.0)) throw std::invalid_argument("asymptotic_point: z must be positive");
    long long m = 0;
    double zn = realized_z(n, z, variant, &m);
    long long target = m + ell;
    if (target < 0 || target > n) {
        throw std::invalid_argument("asymptotic_point: index outside {0..n}");
    }
    if (zn <= 0.0) throw std::invalid_argument("asymptotic_point: realized z is nonpositive");
    double logn = std::log(static_cast<double>(n));
    double sigma = sigma_of(variant);
    return std::exp(-sigma * rate_exponent(zn) * logn) /
           std::sqrt(2.0 * kPi * z * sigma * logn) * psi_limit(std::log(z), variant) *
           std::pow(z, -ell);
}

double asymptotic_odd_tail(int n, double z, ConeVariant variant) {
    if (n < 2) throw std::invalid_argument("asymptotic_odd_tail: n must be >= 2");
    if (!(z > 0.0)) throw std::invalid_argument("asymptotic_odd_tail: z must be positive");
    if (z == 1.0) throw std::invalid_argument("asymptotic_odd_tail: no formula at z = 1");
    double zn = realized_z(n, z, variant, nullptr);
    if (zn <= 0.0) throw std::invalid_argument("asymptotic_odd_tail: realized z is nonpositive");
    double logn = std::log(static_cast<double>(n));
    double sigma = sigma_of(variant);
    double front = std::exp(-sigma * rate_exponent(zn) * logn) /
                   std::sqrt(2.0 * kPi * z * sigma * logn) * psi_limit(std::log(z), variant);
    if (z > 1.0) return front * z / (z * z - 1.0);
    return 0.5 - front * z / (1.0 - z * z);
}

MomentSummary moment_summary(int n, ConeVariant variant) {
    if (n < 0) throw std::invalid_argument("moment_summary: n must be nonnegative");
    double sigma = sigma_of(variant);
    double mean = 0.0, var = 0.0;
    for (int k = 1; k <= n; ++k) {
        double p = sigma / k;
        mean += p;
        var += p * (1.0 - p);
    }
    return {n, variant, mean, var};
}

std::shared_ptr<const PmfVector> PmfCache::get(int n, ConeVariant variant) {
    uint64_t key = (static_cast<uint64_t>(n) << 1) | static_cast<uint64_t>(variant);
    {
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = map_.find(key);
        if (it != map_.end()) return it->second;
    }
    auto fresh = std::make_shared<const PmfVector>(pmf(n, variant));
    std::lock_guard<std::mutex> lock(mutex_);
    auto [it, inserted] = map_.emplace(key, std::move(fresh));
    return it->second;
}

PmfCache& global_pmf_cache() {
    static PmfCache cache;
    return cache;
}

}  // namespace weyl
