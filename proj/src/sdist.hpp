#pragma once

#include <cstdint>
#include <memory>
#include <mutex>
#include <unordered_map>
#include <vector>

#include "cone_type.hpp"
#include "rational.hpp"

namespace weyl {

// Law of S_n = sum_{k=1..n} Bern(sigma/k): the normalized Stirling row.
struct PmfVector {
    int n = 0;
    ConeVariant variant = ConeVariant::A;
    std::vector<double> probs;  // probs[k] = P[S_n = k], k = 0..n
};

struct MomentSummary {
    int n;
    ConeVariant variant;
    double mean;      // sigma * H_n
    double variance;  // sum_k sigma/k (1 - sigma/k)
};

// Largest n accepted by pmf(); bounds the O(n^2) convolution.
inline constexpr int kPmfHardCap = 50000;
// Below this the pmf comes from the exact table, above from convolution.
inline constexpr int kPmfExactThreshold = 25;

// Float pmf. Exact-table normalization for n <= kPmfExactThreshold, iterative
// Bernoulli convolution (factors in increasing k) beyond. Rejects n < 0 and
// n > kPmfHardCap.
PmfVector pmf(int n, ConeVariant variant);

// Exact rational pmf from the Stirling table: entry(n,k) sigma^n / n!.
std::vector<BigRational> pmf_exact(int n, ConeVariant variant);

// sum_{l=1,3,5,...} probs[m+l]; terms beyond n contribute zero. m >= 0.
double odd_tail_sum(const PmfVector& p, int m);

double pmf_mean(const PmfVector& p);
double pmf_variance(const PmfVector& p);

// E[e^{z S_n}] / e^{sigma log n (e^z - 1)}, evaluated in log space.
double mgf_ratio(int n, double z, ConeVariant variant);

// Limit of mgf_ratio: 1 / Gamma(sigma(e^z + 2(1 - sigma))).
double psi_limit(double z, ConeVariant variant);

// Kolmogorov distance between (S_n - sigma log n)/sqrt(sigma log n) and the
// standard normal, sup taken over the lattice jump points. n >= 2.
double clt_kolmogorov_distance(int n, ConeVariant variant);

// Point asymptotics for P[S_n = round(z sigma log n) + ell]:
// n^{-(z_n log z_n - z_n + 1)} / sqrt(2 pi z log n) * Psi(log z) * z^{-sigma ell},
// with z_n the lattice-realized value of z. Requires z > 0 and the target
// index within {0..n}.
double asymptotic_point(int n, double z, int ell, ConeVariant variant);

// Odd-tail asymptotics at m = round(z sigma log n); z > 1 decays to 0,
// z in (0,1) approaches 1/2. Rejects z <= 0 and z == 1.
double asymptotic_odd_tail(int n, double z, ConeVariant variant);

MomentSummary moment_summary(int n, ConeVariant variant);

// Shared cache of pmf vectors keyed by (variant, n).
class PmfCache {
public:
    std::shared_ptr<const PmfVector> get(int n, ConeVariant variant);

private:
    std::mutex mutex_;
    std::unordered_map<uint64_t, std::shared_ptr<const PmfVector>> map_;
};

PmfCache& global_pmf_cache();

}  // namespace weyl
