#include "limit_theorems.hpp"

#include <cmath>
#include <stdexcept>

#include "errors.hpp"
#include "special_functions.hpp"

namespace weyl {

namespace {

double sigma_log_n(const RegimeSpec& spec, long long n) {
    return sigma_of(spec.variant) * std::log(static_cast<double>(n));
}

void require(bool cond, const char* msg) {
    if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

RealizedRegime realize_regime(const RegimeSpec& spec, long long n) {
    require(n >= 3, "realize_regime: n too small");
    double L = sigma_log_n(spec, n);
    double s = std::sqrt(L);
    long long m;
    if (spec.critical) {
        // StatDim: d = n - sigma log n - c sqrt(sigma log n);
        // IvLaw:   d = n - sigma log n + c sqrt(sigma log n).
        // Each matches the sign convention of its own predicted limit.
        double shift = spec.kind == RegimeKind::StatDim ? spec.crit_c * s : -spec.crit_c * s;
        m = std::llround(L + shift);
    } else {
        m = std::llround(spec.x * L);
    }
    RealizedRegime rr;
    rr.n = n;
    rr.d = n - m;
    require(rr.d >= 1 && rr.d <= n - 1, "realize_regime: regime needs larger n (d out of range)");
    rr.realized_x = static_cast<double>(m) / L;
    if (spec.critical) {
        double cr = (static_cast<double>(m) - L) / s;
        rr.realized_c = spec.kind == RegimeKind::StatDim ? cr : -cr;
    }

    auto clamp_k = [&](long long k, long long lo, long long hi) {
        if (k < lo) {
            rr.clamped = true;
            return lo;
        }
        if (k > hi) {
            rr.clamped = true;
            return hi;
        }
        return k;
    };

    switch (spec.kind) {
        case RegimeKind::FaceRatio: {
            long long k = 0;
            switch (spec.k_mode) {
                case FaceKMode::Sublinear:
                    k = std::llround(std::sqrt(static_cast<double>(n)));
                    break;
                case FaceKMode::Linear:
                    k = std::llround(spec.alpha * static_cast<double>(n));
                    break;
                case FaceKMode::NearN:
                    k = n - std::llround(std::pow(static_cast<double>(n), spec.c));
                    break;
                case FaceKMode::Critical: {
                    double expo = (static_cast<double>(m) -
                                   spec.alpha * std::sqrt(spec.x * L)) /
                                  sigma_of(spec.variant);
                    k = n - std::llround(std::exp(expo));
                    break;
                }
            }
            rr.k = clamp_k(k, 0, rr.d - 1);
            rr.has_k = true;
            rr.realized_alpha = spec.alpha;
            if (rr.k < n) rr.realized_c = std::log(static_cast<double>(n - rr.k)) /
                                          std::log(static_cast<double>(n));
            break;
        }
        case RegimeKind::FaceLdp: {
            long long k = n - std::llround(std::pow(static_cast<double>(n), spec.c));
            rr.k = clamp_k(k, 0, rr.d - 1);
            rr.has_k = true;
            rr.realized_c =
                std::log(static_cast<double>(n - rr.k)) / std::log(static_cast<double>(n));
            break;
        }
        case RegimeKind::IvLdp: {
            long long k = n - std::llround(spec.y * L);
            rr.k = clamp_k(k, 0, rr.d - 1);
            rr.has_k = true;
            rr.realized_y = static_cast<double>(n - rr.k) / L;
            break;
        }
        case RegimeKind::QuermassFixedK: {
            require(spec.k >= 1, "quermass fixed-k regime needs k >= 1");
            rr.k = clamp_k(spec.k, 0, rr.d - 1);
            rr.has_k = true;
            break;
        }
        case RegimeKind::QuermassGrowingK: {
            long long k = std::llround(spec.y * L);
            rr.k = clamp_k(k, 0, rr.d - 1);
            rr.has_k = true;
            rr.realized_y = static_cast<double>(rr.k) / L;
            break;
        }
        case RegimeKind::IvLaw:
        case RegimeKind::StatDim:
            break;
    }
    return rr;
}

double face_ratio_finite(const RealizedRegime& rr, ConeVariant variant, PmfCache& cache) {
    int m = static_cast<int>(rr.n - rr.d);
    auto p_small = cache.get(static_cast<int>(rr.n - rr.k), variant);
    auto p_full = cache.get(static_cast<int>(rr.n), variant);
    double denom = odd_tail_sum(*p_full, m);
    if (denom <= 0.0) throw NumericError("face_ratio_finite: vanishing denominator tail");
    return odd_tail_sum(*p_small, m) / denom;
}

double face_ldp_rate_finite(const RealizedRegime& rr, ConeVariant variant, PmfCache& cache) {
    double ratio = face_ratio_finite(rr, variant, cache);
    if (ratio <= 0.0) throw NumericError("face_ldp_rate_finite: nonpositive ratio");
    return std::log(ratio) / std::log(static_cast<double>(rr.n));
}

double iv_ldp_rate_finite(const RealizedRegime& rr, ConeVariant variant, PmfCache& cache) {
    int m = static_cast<int>(rr.n - rr.d);
    auto p = cache.get(static_cast<int>(rr.n), variant);
    double denom = 2.0 * odd_tail_sum(*p, m);
    double point = p->probs.at(static_cast<std::size_t>(rr.n - rr.k));
    if (point <= 0.0 || denom <= 0.0) {
        throw NumericError("iv_ldp_rate_finite: vanishing probability");
    }
    return std::log(point / denom) / std::log(static_cast<double>(rr.n));
}

double quermass_finite(const RealizedRegime& rr, ConeVariant variant, PmfCache& cache) {
    int m = static_cast<int>(rr.n - rr.d);
    auto p = cache.get(static_cast<int>(rr.n), variant);
    double denom = odd_tail_sum(*p, m);
    if (denom <= 0.0) throw NumericError("quermass_finite: vanishing denominator tail");
    return odd_tail_sum(*p, m + static_cast<int>(rr.k)) / denom;
}

double stat_dim_finite(const RealizedRegime& rr, ConeVariant variant, PmfCache& cache) {
    int m = static_cast<int>(rr.n - rr.d);
    auto p = cache.get(static_cast<int>(rr.n), variant);
    double denom = 2.0 * odd_tail_sum(*p, m);
    if (denom <= 0.0) throw NumericError("stat_dim_finite: vanishing denominator tail");
    double s_trunc = 0.0, mass = 0.0;
    for (int j = m; j <= p->n; ++j) {
        s_trunc += static_cast<double>(j) * p->probs[j];
        mass += p->probs[j];
    }
    return (s_trunc - static_cast<double>(m) * mass) / denom;
}

std::vector<double> iv_law(long long n, long long d, ConeVariant variant, PmfCache& cache) {
    if (d < 1 || d >= n) throw std::invalid_argument("iv_law: requires 1 <= d <= n-1");
    int m = static_cast<int>(n - d);
    auto p = cache.get(static_cast<int>(n), variant);
    double tail = odd_tail_sum(*p, m);
    if (tail <= 0.0) throw NumericError("iv_law: vanishing tail");
    std::vector<double> law(static_cast<std::size_t>(d) + 1, 0.0);
    for (long long k = 0; k <= d - 1; ++k) {
        law[k] = p->probs.at(static_cast<std::size_t>(n - k)) / (2.0 * tail);
    }
    law[d] = 0.5 - odd_tail_sum(*p, m + 1) / (2.0 * tail);
    return law;
}

// The limit of d - X is geometric with step ratio 1/x for both variants;
// each lattice step of S_n scales the point probability by 1/x, which the
// exact pmf confirms (the sigma-powered variant is a type-A-only shortcut).
double z_law_pmf(double x, ConeVariant variant, long long j) {
    require(x > 1.0, "z_law_pmf: requires x > 1");
    (void)variant;
    if (j == 0) return (x - 1.0) / (2.0 * x);
    return (x * x - 1.0) / (2.0 * x) * std::pow(x, static_cast<double>(-j));
}

double z_law_pgf(double x, ConeVariant variant, double s) {
    require(x > 1.0, "z_law_pgf: requires x > 1");
    (void)variant;
    require(std::fabs(s) < x, "z_law_pgf: |s| must be < x");
    return (s + 1.0) * (x - 1.0) / (2.0 * (x - s));
}

namespace {

// Kolmogorov distance between the standardized law of X and a limit CDF.
template <typename Cdf>
double ks_distance(const std::vector<double>& law, double center, double scale, Cdf cdf) {
    double acc = 0.0, dist = 0.0;
    for (std::size_t k = 0; k < law.size(); ++k) {
        double prev = acc;
        acc += law[k];
        double t = (static_cast<double>(k) - center) / scale;
        double f = cdf(t);
        dist = std::max(dist, std::fabs(acc - f));
        dist = std::max(dist, std::fabs(prev - f));
    }
    return dist;
}

}  // namespace

double iv_law_distance_finite(const RegimeSpec& spec, const RealizedRegime& rr, PmfCache& cache) {
    auto law = iv_law(rr.n, rr.d, spec.variant, cache);
    double L = sigma_log_n(spec, rr.n);
    if (spec.critical) {
        double c = spec.crit_c;
        double phic = normal_cdf(c);
        return ks_distance(law, static_cast<double>(rr.n) - L, std::sqrt(L), [&](double t) {
            return t < c ? normal_cdf(t) / phic : 1.0;
        });
    }
    require(spec.x != 1.0, "iv_law distance: x = 1 needs the critical regime");
    if (spec.x > 1.0) {
        // Total variation between d - X and the geometric-type limit Z.
        long long dmax = rr.d;
        double tv = 0.0;
        for (long long j = 0; j <= dmax; ++j) {
            double pn = law[static_cast<std::size_t>(rr.d - j)];
            tv += std::fabs(pn - z_law_pmf(spec.x, spec.variant, j));
        }
        // Z mass beyond the finite support: P[Z > dmax] = (x+1)/2 * x^{-dmax-1}.
        double beyond =
            (spec.x + 1.0) / 2.0 * std::pow(spec.x, static_cast<double>(-dmax - 1));
        return 0.5 * (tv + beyond);
    }
    return ks_distance(law, static_cast<double>(rr.n) - L, std::sqrt(L),
                       [](double t) { return normal_cdf(t); });
}

double predict_face_ratio_limit(const RegimeSpec& spec) {
    require(spec.x > 0.0, "face ratio: x > 0");
    require(spec.x != 1.0, "face ratio: x = 1 excluded");
    if (spec.x > 1.0) {
        switch (spec.k_mode) {
            case FaceKMode::Sublinear:
                return 1.0;
            case FaceKMode::Linear:
                require(spec.alpha >= 0.0 && spec.alpha <= 1.0, "face ratio: alpha in [0,1]");
                // sigma carries into the exponent; for type A this is the
                // plain (1-alpha)^{x-1}.
                return std::pow(1.0 - spec.alpha, sigma_of(spec.variant) * (spec.x - 1.0));
            case FaceKMode::NearN:
                return 0.0;  // k = n + o(n)
            case FaceKMode::Critical:
                throw std::invalid_argument("face ratio: critical k-window needs x in (0,1)");
        }
    }
    switch (spec.k_mode) {
        case FaceKMode::NearN:
            require(spec.c > 0.0 && spec.c < 1.0 && spec.c != spec.x,
                    "face ratio: c in (0,1), c != x");
            return spec.c > spec.x ? 1.0 : 0.0;
        case FaceKMode::Critical:
            return 1.0 - normal_cdf(spec.alpha);
        default:
            throw std::invalid_argument("face ratio: x in (0,1) needs the near-n or critical mode");
    }
    return 0.0;
}

double predict_face_ldp_rate(const RegimeSpec& spec) {
    require(spec.x > 0.0 && spec.x != 1.0, "face ldp: x > 0, x != 1");
    require(spec.c > 0.0 && spec.c < 1.0, "face ldp: c in (0,1)");
    // sigma scales the whole rate (the n-powers of the point law carry it);
    // for type A the factor is 1.
    double sigma = sigma_of(spec.variant);
    if (spec.x > 1.0) return sigma * (spec.x * std::log(spec.c) - spec.c + 1.0);
    require(spec.c != spec.x, "face ldp: c = x excluded");
    if (spec.c < spec.x) {
        return sigma *
               (spec.x - spec.x * std::log(spec.x) + spec.x * std::log(spec.c) - spec.c);
    }
    return 0.0;
}

double predict_iv_ldp_rate(const RegimeSpec& spec) {
    require(spec.x > 0.0 && spec.x != 1.0, "iv ldp: x > 0, x != 1");
    require(spec.y > spec.x, "iv ldp: y > x");
    double sigma = sigma_of(spec.variant);
    if (spec.x < 1.0) return sigma * (spec.y - spec.y * std::log(spec.y) - 1.0);
    return sigma *
           (spec.x * std::log(spec.x) - spec.y * std::log(spec.y) + spec.y - spec.x);
}

double predict_quermass_limit(const RegimeSpec& spec) {
    require(spec.x > 0.0, "quermass: x > 0");
    if (spec.kind == RegimeKind::QuermassFixedK) {
        require(spec.x != 1.0, "quermass fixed-k: x = 1 excluded");
        require(spec.k >= 1, "quermass fixed-k: k >= 1");
        if (spec.x < 1.0) return 1.0;
        // One lattice step of the tail ratio costs 1/x for both variants.
        return std::pow(spec.x, -static_cast<double>(spec.k));
    }
    require(spec.y > 0.0, "quermass growing-k: y > 0");
    double boundary = std::max(0.0, 1.0 - spec.x);
    require(spec.y != boundary, "quermass growing-k: y = max{0,1-x} excluded");
    return spec.y < boundary ? 1.0 : 0.0;
}

double predict_stat_dim(const RegimeSpec& spec, long long n) {
    double L = sigma_log_n(spec, n);
    if (spec.critical) {
        double c = spec.crit_c;
        return std::sqrt(L) * (normal_pdf(c) / normal_cdf(-c) - c);
    }
    require(spec.x >= 0.0 && spec.x != 1.0, "stat dim: x >= 0, x != 1 outside the window");
    if (spec.x > 1.0) {
        // Geometric tail with step 1/x for both variants.
        return (spec.x + 1.0) / (2.0 * (spec.x - 1.0));
    }
    // (1-x) sigma log n. The x in [0,1) constant carries the 1-x factor; it
    // reproduces the exact small-n values and glues continuously onto the
    // critical window, and reduces to sigma log n at x = 0.
    return (1.0 - spec.x) * L;
}

RegimeSpec spec_at_realized(const RegimeSpec& spec, const RealizedRegime& rr) {
    RegimeSpec eff = spec;
    if (!spec.critical) eff.x = rr.realized_x;
    switch (spec.kind) {
        case RegimeKind::FaceLdp:
            eff.c = rr.realized_c;
            break;
        case RegimeKind::FaceRatio:
            if (spec.k_mode == FaceKMode::NearN) eff.c = rr.realized_c;
            break;
        case RegimeKind::IvLdp:
        case RegimeKind::QuermassGrowingK:
            eff.y = rr.realized_y;
            break;
        case RegimeKind::IvLaw:
        case RegimeKind::StatDim:
            if (spec.critical) eff.crit_c = rr.realized_c;
            break;
        default:
            break;
    }
    return eff;
}

ConvergenceReport convergence_sweep(const RegimeSpec& spec, const std::vector<long long>& n_list,
                                    PmfCache& cache) {
    for (std::size_t i = 1; i < n_list.size(); ++i) {
        if (n_list[i] <= n_list[i - 1]) {
            throw std::invalid_argument("convergence_sweep: n_list must be strictly increasing");
        }
    }
    ConvergenceReport report;
    report.spec = spec;
    for (long long n : n_list) {
        SweepRow row;
        row.n = n;
        try {
            row.realized = realize_regime(spec, n);
            // The prediction column is the theorem limit evaluated along the
            // realized (reported) sequence, so the gap isolates genuine
            // finite-n convergence instead of lattice-rounding phase.
            RegimeSpec eff = spec_at_realized(spec, row.realized);
            switch (spec.kind) {
                case RegimeKind::FaceRatio:
                    row.finite_value = face_ratio_finite(row.realized, spec.variant, cache);
                    row.predicted_limit = predict_face_ratio_limit(eff);
                    break;
                case RegimeKind::FaceLdp:
                    row.finite_value = face_ldp_rate_finite(row.realized, spec.variant, cache);
                    row.predicted_limit = predict_face_ldp_rate(eff);
                    break;
                case RegimeKind::IvLdp:
                    row.finite_value = iv_ldp_rate_finite(row.realized, spec.variant, cache);
                    row.predicted_limit = predict_iv_ldp_rate(eff);
                    break;
                case RegimeKind::IvLaw:
                    row.finite_value = iv_law_distance_finite(spec, row.realized, cache);
                    row.predicted_limit = 0.0;
                    break;
                case RegimeKind::QuermassFixedK:
                case RegimeKind::QuermassGrowingK:
                    row.finite_value = quermass_finite(row.realized, spec.variant, cache);
                    row.predicted_limit = predict_quermass_limit(eff);
                    break;
                case RegimeKind::StatDim:
                    row.finite_value = stat_dim_finite(row.realized, spec.variant, cache);
                    row.predicted_limit = predict_stat_dim(eff, n);
                    row.gap_is_relative = spec.critical || spec.x < 1.0;
                    break;
            }
            row.gap = row.gap_is_relative
                          ? std::fabs(row.finite_value / row.predicted_limit - 1.0)
                          : std::fabs(row.finite_value - row.predicted_limit);
            row.ok = true;
        } catch (const std::exception& e) {
            row.ok = false;
            row.message = e.what();
        }
        report.rows.push_back(std::move(row));
    }
    return report;
}

}  // namespace weyl
