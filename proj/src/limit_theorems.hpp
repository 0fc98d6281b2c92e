#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cone_type.hpp"
#include "sdist.hpp"

namespace weyl {

enum class RegimeKind : int {
    FaceRatio = 0,        // E f_k(G) / binom(n+1-2s, k)
    FaceLdp = 1,          // log of the above over log n
    IvLdp = 2,            // log E v_k(G) over log n
    IvLaw = 3,            // law of the intrinsic-volume random variable
    QuermassFixedK = 4,   // 2 E U_k(W), fixed k
    QuermassGrowingK = 5, // 2 E U_k(W), k growing with n
    StatDim = 6,          // E Delta(W)
};

enum class FaceKMode : int { Sublinear = 0, Linear = 1, NearN = 2, Critical = 3 };

// A parametrized asymptotic regime: d = n - round(x sigma log n) plus the
// kind-specific k sequence. `critical` switches IvLaw/StatDim to their
// critical windows around x = 1.
struct RegimeSpec {
    ConeVariant variant = ConeVariant::A;
    RegimeKind kind = RegimeKind::FaceRatio;
    double x = 0.0;
    bool critical = false;
    double crit_c = 0.0;
    FaceKMode k_mode = FaceKMode::Linear;
    double alpha = 0.0;
    double c = 0.0;
    double y = 0.0;
    int k = 1;
};

struct RealizedRegime {
    long long n = 0;
    long long d = 0;
    long long k = -1;
    bool has_k = false;
    double realized_x = 0.0;
    double realized_y = 0.0;
    double realized_c = 0.0;
    double realized_alpha = 0.0;
    bool clamped = false;
};

// Lattice embedding of the regime at a concrete n. Throws when n is too
// small to realize 1 <= d <= n-1 (or an admissible k).
RealizedRegime realize_regime(const RegimeSpec& spec, long long n);

// Finite-n evaluations through the pmf of S_n (float path).
double face_ratio_finite(const RealizedRegime& rr, ConeVariant variant, PmfCache& cache);
double face_ldp_rate_finite(const RealizedRegime& rr, ConeVariant variant, PmfCache& cache);
double iv_ldp_rate_finite(const RealizedRegime& rr, ConeVariant variant, PmfCache& cache);
double quermass_finite(const RealizedRegime& rr, ConeVariant variant, PmfCache& cache);
double stat_dim_finite(const RealizedRegime& rr, ConeVariant variant, PmfCache& cache);

// Law of the intrinsic-volume random variable X on {0..d}:
// P[X=k] = E v_k(G_{n,d}).
std::vector<double> iv_law(long long n, long long d, ConeVariant variant, PmfCache& cache);

// Limit law of d - X for x > 1 (both variants): P[Z=0] = (x-1)/(2x),
// P[Z=k] = (x^2-1)/(2x) x^{-k}.
double z_law_pmf(double x, ConeVariant variant, long long j);
// Generating function E[s^Z] = (s+1)(x-1) / (2(x-s)), |s| < x.
double z_law_pgf(double x, ConeVariant variant, double s);

// Distance of the finite law to the predicted limit law: total variation for
// the x > 1 geometric limit, Kolmogorov distance for the normal-type limits.
double iv_law_distance_finite(const RegimeSpec& spec, const RealizedRegime& rr, PmfCache& cache);

// Predicted limits. Throw on the excluded boundary parameters.
double predict_face_ratio_limit(const RegimeSpec& spec);
double predict_face_ldp_rate(const RegimeSpec& spec);
double predict_iv_ldp_rate(const RegimeSpec& spec);
double predict_quermass_limit(const RegimeSpec& spec);
// StatDim prediction is n-dependent for x in [0,1) and the critical window.
double predict_stat_dim(const RegimeSpec& spec, long long n);

struct SweepRow {
    long long n = 0;
    RealizedRegime realized;
    double finite_value = 0.0;
    double predicted_limit = 0.0;
    double gap = 0.0;
    bool gap_is_relative = false;
    bool ok = false;
    std::string message;
};

struct ConvergenceReport {
    RegimeSpec spec;
    std::vector<SweepRow> rows;
};

// One row per n: finite value, prediction evaluated at that n, and the gap
// (relative where the prediction itself grows with n). Per-row errors are
// recorded in the row, not thrown.
ConvergenceReport convergence_sweep(const RegimeSpec& spec, const std::vector<long long>& n_list,
                                    PmfCache& cache);

}  // namespace weyl
