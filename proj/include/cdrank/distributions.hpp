#pragma once

// Normal, chi-square and studentized-range (infinite degrees of freedom)
// distribution functions. Everything here is a pure function.

#include <cmath>
#include <numbers>
#include <string>

#include "cdrank/error.hpp"
#include "cdrank/probability.hpp"

namespace cdrank::dist {

namespace detail {

inline double phi_upper(double x) noexcept { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

inline double phi_lower(double x) noexcept { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

// Regularized lower incomplete gamma P(a, x) by its power series; valid for x < a + 1.
inline double gamma_p_series(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < 1000; ++n) {
    term *= x / (a + n);
    sum += term;
    if (std::fabs(term) < std::fabs(sum) * 1e-16) {
      return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
    }
  }
  throw NumericError("incomplete gamma series did not converge");
}

// Regularized upper incomplete gamma Q(a, x) by modified Lentz continued fraction; x >= a + 1.
inline double gamma_q_continued_fraction(double a, double x) {
  constexpr double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i < 1000; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::fabs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::fabs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double delta = d * c;
    h *= delta;
    if (std::fabs(delta - 1.0) < 1e-16) {
      return std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
    }
  }
  throw NumericError("incomplete gamma continued fraction did not converge");
}

inline double studentized_range_integrand(double z, double q, int k) noexcept {
  // Phi(z) - Phi(z - q), taken from whichever tail avoids cancellation.
  const double mass = z > 0.5 * q ? phi_upper(z - q) - phi_upper(z) : phi_lower(z) - phi_lower(z - q);
  const double density = std::exp(-0.5 * z * z) / std::sqrt(2.0 * std::numbers::pi);
  return density * std::pow(mass, k - 1);
}

template <class F>
double adaptive_simpson(const F& f, double a, double b, double fa, double fm, double fb, double whole,
                        double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (std::fabs(delta) <= 15.0 * tol) return left + right + delta / 15.0;
  if (depth <= 0) throw NumericError("studentized range integral: adaptive quadrature depth exhausted");
  return adaptive_simpson(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

inline constexpr double kIntegralTolerance = 1e-9;
inline constexpr double kNormalCutoff = 8.0;
inline constexpr double kPanelWidth = 0.5;

inline constexpr double kQuantileUpper = 100.0;
inline constexpr double kQuantileTolerance = 1e-7;
inline constexpr int kQuantileMaxIterations = 200;

}  // namespace detail

/// Standard normal CDF.
inline Probability normal_cdf(double x) {
  if (!std::isfinite(x)) throw DomainError("normal_cdf: non-finite argument");
  return Probability::clamped(detail::phi_lower(x));
}

/// Upper tail P(X >= x) of the chi-square distribution with `df` degrees of freedom.
inline Probability chi_square_sf(double x, int df) {
  if (!(x >= 0.0)) throw DomainError("chi_square_sf: x must be >= 0, got " + std::to_string(x));
  if (df < 1) throw DomainError("chi_square_sf: df must be >= 1, got " + std::to_string(df));
  if (x == 0.0) return Probability(1.0);
  if (std::isinf(x)) return Probability(0.0);
  const double a = 0.5 * df;
  const double h = 0.5 * x;
  const double q = h < a + 1.0 ? 1.0 - detail::gamma_p_series(a, h) : detail::gamma_q_continued_fraction(a, h);
  return Probability::clamped(q);
}

/// CDF of the range of k iid standard normals (studentized range, df = infinity):
///   F(q; k) = k * integral phi(z) [Phi(z) - Phi(z - q)]^(k-1) dz.
///
/// The integral is truncated to [-8, 8 + q] and evaluated with adaptive Simpson
/// panels to an absolute tolerance of 1e-9.
inline Probability studentized_range_cdf(double q, int k) {
  if (!(q >= 0.0)) throw DomainError("studentized_range_cdf: q must be >= 0");
  if (k < 2) throw DomainError("studentized_range_cdf: k must be >= 2");
  if (q == 0.0) return Probability(0.0);
  if (std::isinf(q)) return Probability(1.0);

  const auto f = [q, k](double z) { return detail::studentized_range_integrand(z, q, k); };
  const double lo = -detail::kNormalCutoff;
  const double hi = detail::kNormalCutoff + q;
  const int panels = static_cast<int>(std::ceil((hi - lo) / detail::kPanelWidth));
  const double width = (hi - lo) / panels;
  const double panel_tol = detail::kIntegralTolerance / (k * panels);

  double total = 0.0;
  double fa = f(lo);
  for (int i = 0; i < panels; ++i) {
    const double a = lo + i * width;
    const double b = i + 1 == panels ? hi : a + width;
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    total += detail::adaptive_simpson(f, a, b, fa, fm, fb, whole, panel_tol, 40);
    fa = fb;
  }
  return Probability::clamped(k * total);
}

/// Inverse of studentized_range_cdf in q, by bisection on [0, 100].
inline double studentized_range_quantile(Probability p, int k) {
  if (!(p.value() > 0.0 && p.value() < 1.0)) throw DomainError("studentized_range_quantile: p must be in (0, 1)");
  if (k < 2) throw DomainError("studentized_range_quantile: k must be >= 2");

  double lo = 0.0;
  double hi = detail::kQuantileUpper;
  if (studentized_range_cdf(hi, k) < p) {
    throw NumericError("studentized_range_quantile: p = " + std::to_string(p.value()) +
                       " not bracketed by [0, 100] for k = " + std::to_string(k));
  }
  for (int it = 0; it < detail::kQuantileMaxIterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (studentized_range_cdf(mid, k) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < detail::kQuantileTolerance) return 0.5 * (lo + hi);
  }
  throw NumericError("studentized_range_quantile: bisection did not converge");
}

}  // namespace cdrank::dist
