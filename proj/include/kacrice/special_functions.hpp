#pragma once

#include <cmath>
#include <cstddef>
#include <limits>

#include "kacrice/errors.hpp"

namespace kacrice {

inline constexpr double kInf = std::numeric_limits<double>::infinity();
inline constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
inline constexpr double kSqrt2 = 1.41421356237309504880;
inline constexpr double kLogSqrt2Pi = 0.91893853320467274178;
inline constexpr double kInvSqrt2Pi = 0.39894228040143267794;
inline constexpr double kInvSqrtPi = 0.56418958354775628695;

/// Scaled complementary error function exp(x^2) erfc(x).
/// Direct product below x = 12 (no overflow there), Laplace continued
/// fraction above, where erfc itself underflows around x = 26.5.
inline double erfcx(double x) {
  if (std::isnan(x)) return x;
  if (x < 0.0) {
    if (x < -26.5) return kInf;  // true value ~ 2 exp(x^2)
    return 2.0 * std::exp(x * x) - erfcx(-x);
  }
  if (x < 12.0) return std::exp(x * x) * std::erfc(x);
  // erfcx(x) = (1/sqrt(pi)) / (x + (1/2)/(x + 1/(x + (3/2)/(x + ...))))
  const double eps = 1e-17;
  const double tiny = 1e-300;
  double f = x, c = x, d = 0.0;
  for (int k = 1; k < 200; ++k) {
    const double ak = 0.5 * k;
    d = x + ak * d;
    if (std::fabs(d) < tiny) d = tiny;
    c = x + ak / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::fabs(delta - 1.0) < eps) break;
  }
  return kInvSqrtPi / f;
}

inline double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

inline double norm_cdf(double x) { return 0.5 * std::erfc(-x / kSqrt2); }

inline double norm_sf(double x) { return 0.5 * std::erfc(x / kSqrt2); }

/// log(1 - Phi(x)), accurate for x up to ~1e7 (no underflow).
inline double log_norm_sf(double x) {
  if (x == kInf) return -kInf;
  if (x == -kInf) return 0.0;
  if (x <= 0.0) return std::log(0.5 * std::erfc(x / kSqrt2));
  return std::log(0.5 * erfcx(x / kSqrt2)) - 0.5 * x * x;
}

inline double log_norm_cdf(double x) { return log_norm_sf(-x); }

/// log(Phi(b) - Phi(a)) for a <= b, stable in either tail.
inline double log_norm_cdf_diff(double a, double b) {
  if (!(a <= b)) throw DomainError("log_norm_cdf_diff: requires a <= b");
  if (a == b) return -kInf;
  if (a == -kInf && b == kInf) return 0.0;
  if (a == -kInf) return log_norm_cdf(b);
  if (b == kInf) return log_norm_sf(a);
  if (a >= 0.0) {
    const double la = log_norm_sf(a), lb = log_norm_sf(b);
    return la + std::log1p(-std::exp(lb - la));
  }
  if (b <= 0.0) {
    const double la = log_norm_sf(-b), lb = log_norm_sf(-a);
    return la + std::log1p(-std::exp(lb - la));
  }
  // a < 0 < b: erf terms have opposite signs, the subtraction is an addition
  return std::log(0.5 * (std::erf(b / kSqrt2) - std::erf(a / kSqrt2)));
}

/// Regularized lower incomplete gamma P(a, x); series / continued fraction split.
inline double gamma_p(double a, double x) {
  if (a <= 0.0 || x < 0.0) throw DomainError("gamma_p: requires a > 0, x >= 0");
  if (x == 0.0) return 0.0;
  const double lpre = -x + a * std::log(x) - std::lgamma(a);
  if (x < a + 1.0) {
    double ap = a, sum = 1.0 / a, term = sum;
    for (int n = 0; n < 1000; ++n) {
      ap += 1.0;
      term *= x / ap;
      sum += term;
      if (std::fabs(term) < std::fabs(sum) * 1e-16) break;
    }
    return sum * std::exp(lpre);
  }
  // Lentz continued fraction for Q(a, x)
  const double tiny = 1e-300;
  double b = x + 1.0 - a, c = 1.0 / tiny, d = 1.0 / b, h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -static_cast<double>(i) * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) break;
  }
  return 1.0 - std::exp(lpre) * h;
}

inline double gamma_q(double a, double x) { return 1.0 - gamma_p(a, x); }

/// CDF of the chi distribution with k degrees of freedom.
inline double chi_cdf(double x, double k) {
  if (x <= 0.0) return 0.0;
  return gamma_p(0.5 * k, 0.5 * x * x);
}

inline double chi_sf(double x, double k) { return 1.0 - chi_cdf(x, k); }

/// Standard normal quantile: Acklam's rational approximation + one Halley step.
inline double norm_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) throw DomainError("norm_quantile: requires p in (0,1)");
  static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                             -2.759285104469687e+02, 1.383577518672690e+02,
                             -3.066479806614716e+01, 2.506628277459239e+00};
  static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                             -1.556989798598866e+02, 6.680131188771972e+01,
                             -1.328068155288572e+01};
  static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                             -2.400758277161838e+00, -2.549732539343734e+00,
                             4.374664141464968e+00,  2.938163982698783e+00};
  static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                             2.445134137142996e+00, 3.754408661907416e+00};
  const double plow = 0.02425;
  double x;
  if (p < plow) {
    const double q = std::sqrt(-2.0 * std::log(p));
    x = (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  } else if (p <= 1.0 - plow) {
    const double q = p - 0.5, r = q * q;
    x = (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
        (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
  } else {
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    x = -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
        ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
  }
  const double e = norm_cdf(x) - p;
  const double u = e / norm_pdf(x);
  return x - u / (1.0 + 0.5 * x * u);
}

/// Survival function of the Kolmogorov distribution.
inline double kolmogorov_sf(double lambda) {
  if (lambda <= 0.0) return 1.0;
  if (lambda < 1.18) {
    // dual theta series for the CDF, accurate at small lambda
    const double pi2 = 9.86960440108935861883;
    const double t = std::exp(-pi2 / (8.0 * lambda * lambda));
    const double cdf = std::sqrt(2.0 * M_PI) / lambda *
                       (t + std::pow(t, 9.0) + std::pow(t, 25.0) + std::pow(t, 49.0));
    return 1.0 - cdf;
  }
  double sum = 0.0, sign = 1.0;
  for (int k = 1; k <= 100; ++k) {
    const double term = std::exp(-2.0 * k * k * lambda * lambda);
    sum += sign * term;
    if (term < 1e-18) break;
    sign = -sign;
  }
  return std::fmax(0.0, std::fmin(1.0, 2.0 * sum));
}

/// Asymptotic one-sample Kolmogorov-Smirnov p-value (Stephens' scaling).
inline double ks_asymptotic_pvalue(double d, std::size_t n) {
  if (n == 0) throw EmptySample("ks_asymptotic_pvalue: empty sample");
  const double sn = std::sqrt(static_cast<double>(n));
  return kolmogorov_sf(d * (sn + 0.12 + 0.11 / sn));
}

}  // namespace kacrice
