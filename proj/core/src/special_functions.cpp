#include "ppsbreak/special_functions.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "ppsbreak/error.hpp"

namespace ppsbreak {

namespace {

constexpr int kMaxIterations = 1000000;
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

// Lower regularized gamma by power series, for x < a + 1.
double gamma_p_series(double a, double x) {
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n <= kMaxIterations; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEpsilon) {
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw Error("incomplete gamma series failed to converge");
}

// Upper regularized gamma by modified-Lentz continued fraction, for x >= a + 1.
double gamma_q_contfrac(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double f = d;
    for (int n = 1; n <= kMaxIterations; ++n) {
        const double an = -n * (n - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        f *= delta;
        if (std::fabs(delta - 1.0) < kEpsilon) {
            return f * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw Error("incomplete gamma continued fraction failed to converge");
}

} // namespace

double regularized_gamma_q(double a, double x) {
    if (!std::isfinite(a) || !std::isfinite(x) || a <= 0.0 || x < 0.0) {
        throw Error("regularized_gamma_q requires a > 0 and x >= 0");
    }
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_contfrac(a, x);
}

double regularized_gamma_p(double a, double x) {
    return 1.0 - regularized_gamma_q(a, x);
}

double erfc(double x) {
    if (!std::isfinite(x)) {
        throw Error("erfc requires a finite argument");
    }
    if (x == 0.0) return 1.0;
    const double q = regularized_gamma_q(0.5, x * x);
    return x > 0.0 ? q : 2.0 - q;
}

double normal_cdf(double z) {
    return 0.5 * erfc(-z / std::numbers::sqrt2);
}

} // namespace ppsbreak
