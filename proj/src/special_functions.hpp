#pragma once

namespace weyl {

// log Gamma(x) for x > 0, Lanczos approximation (g = 7, 9 coefficients),
// relative accuracy of exp(lgamma_pos) better than 1e-12 on (0, 50).
double lgamma_pos(double x);

// Gamma(x) for x > 0.
double gamma_pos(double x);

// Complementary error function, series for small |x| and a Lentz-evaluated
// continued fraction for large |x|; absolute accuracy ~1e-15.
double erfc_approx(double x);

// Standard normal distribution function, absolute accuracy 1e-12.
double normal_cdf(double x);

// Standard normal density.
double normal_pdf(double x);

}  // namespace weyl
