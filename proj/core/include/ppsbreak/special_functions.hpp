#ifndef PPSBREAK_SPECIAL_FUNCTIONS_HPP
#define PPSBREAK_SPECIAL_FUNCTIONS_HPP

namespace ppsbreak {

/// Regularized upper incomplete gamma function Q(a, x) = Gamma(a, x)/Gamma(a),
/// a > 0, x >= 0. Series expansion for x < a+1, modified-Lentz continued
/// fraction otherwise.
double regularized_gamma_q(double a, double x);

/// Regularized lower incomplete gamma function P(a, x) = 1 - Q(a, x).
double regularized_gamma_p(double a, double x);

/// Complementary error function, computed through Q(1/2, x^2).
double erfc(double x);

/// Standard normal CDF Phi(z) = erfc(-z/sqrt(2)) / 2.
double normal_cdf(double z);

} // namespace ppsbreak

#endif
