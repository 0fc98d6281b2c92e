#include "special_functions.hpp"

#include <cmath>
#include <stdexcept>

namespace weyl {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2 = 1.41421356237309504880;
constexpr double kLogSqrt2Pi = 0.91893853320467274178;  // log(sqrt(2*pi))

// Lanczos, g = 7, n = 9 (Godfrey's coefficients).
constexpr double kLanczos[9] = {
    0.99999999999980993,
    676.5203681218851,
    -1259.1392167224028,
    771.32342877765313,
    -176.61502916214059,
    12.507343278686905,
    -0.13857109526572012,
    9.9843695780195716e-6,
    1.5056327351493116e-7,
};

}  // namespace

double lgamma_pos(double x) {
    if (!(x > 0.0)) throw std::domain_error("lgamma_pos: requires x > 0");
    if (x < 0.5) {
        // Reflection: Gamma(x) Gamma(1-x) = pi / sin(pi x)
        return std::log(kPi / std::sin(kPi * x)) - lgamma_pos(1.0 - x);
    }
    double z = x - 1.0;
    double a = kLanczos[0];
    for (int i = 1; i < 9; ++i) a += kLanczos[i] / (z + i);
    double t = z + 7.5;
    return kLogSqrt2Pi + (z + 0.5) * std::log(t) - t + std::log(a);
}

double gamma_pos(double x) { return std::exp(lgamma_pos(x)); }

namespace {

// erf(x) for 0 <= x <= 2: all-positive-term series
// erf(x) = 2/sqrt(pi) * e^{-x^2} * sum_k x^{2k+1} 2^k / (1*3*...*(2k+1)).
double erf_series(double x) {
    double x2 = x * x;
    double term = x;
    double sum = x;
    for (int k = 1; k < 200; ++k) {
        term *= 2.0 * x2 / (2.0 * k + 1.0);
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return 2.0 / std::sqrt(kPi) * std::exp(-x2) * sum;
}

// erfc(x) for x >= 2: continued fraction
// erfc(x) = e^{-x^2}/sqrt(pi) * 1/(x + (1/2)/(x + (2/2)/(x + (3/2)/(x + ...))))
// evaluated by the modified Lentz algorithm.
double erfc_cf(double x) {
    const double tiny = 1e-300;
    double f = x, c = x, d = 0.0;
    for (int k = 1; k < 300; ++k) {
        double a = 0.5 * k;
        d = x + a * d;
        if (std::fabs(d) < tiny) d = tiny;
        c = x + a / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        double delta = c * d;
        f *= delta;
        if (std::fabs(delta - 1.0) < 1e-17) break;
    }
    return std::exp(-x * x) / std::sqrt(kPi) / f;
}

}  // namespace

double erfc_approx(double x) {
    double t = std::fabs(x);
    double r = (t < 2.0) ? 1.0 - erf_series(t) : erfc_cf(t);
    return x >= 0.0 ? r : 2.0 - r;
}

double normal_cdf(double x) {
    if (std::isnan(x)) throw std::domain_error("normal_cdf: requires finite x");
    return 0.5 * erfc_approx(-x / kSqrt2);
}

double normal_pdf(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * kPi); }

}  // namespace weyl
