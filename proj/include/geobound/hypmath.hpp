#pragma once

// Scalar hyperbolic trigonometry: collar widths, the three right-angled
// polygon relations used for one-holed tori, and the root of
// sinh(l/2n) sinh(l/2) = 1.

#include <cmath>
#include <numbers>
#include <string>

#include "geobound/errors.hpp"

namespace geobound {

/// Hyperbolic length. 0 encodes a cusp.
using Length = double;
/// cosh(length / 2) of a closed geodesic; 1 for a cusp.
using HalfTrace = double;

inline constexpr double kDefaultTol = 1e-12;

namespace detail {

// Above this argument cosh/sinh products are formed in log space.
inline constexpr double kLogSpaceThreshold = 30.0;

inline double log_sinh(double x) {
  // x > 0
  return x + std::log1p(-std::exp(-2.0 * x)) - std::numbers::ln2;
}

inline double log_cosh(double x) {
  x = std::fabs(x);
  return x + std::log1p(std::exp(-2.0 * x)) - std::numbers::ln2;
}

// acosh(exp(log_p)) for log_p >= 0.
inline double acosh_of_log(double log_p) {
  return log_p + std::log1p(std::sqrt(-std::expm1(-2.0 * log_p)));
}

// asinh(exp(log_p)).
inline double asinh_of_log(double log_p) {
  if (log_p < kLogSpaceThreshold) return std::asinh(std::exp(log_p));
  return log_p + std::log1p(std::sqrt(1.0 + std::exp(-2.0 * log_p)));
}

// asinh(1 / sinh(x)) for x > 0.
inline double asinh_inv_sinh(double x) {
  if (x < kLogSpaceThreshold) return std::asinh(1.0 / std::sinh(x));
  // 1/sinh x = 2 e^{-x} / (1 - e^{-2x}); asinh(y) ~ y for tiny y
  return 2.0 * std::exp(-x) / -std::expm1(-2.0 * x);
}

// acosh(1 + d), accurate for small d.
inline double acosh1p(double d) { return std::log1p(d + std::sqrt(d * (2.0 + d))); }

inline void require_positive(double x, const char* what) {
  if (!(x > 0.0)) throw DomainError(std::string(what) + " must be positive");
}

}  // namespace detail

inline HalfTrace halftrace_from_length(Length len) {
  if (!(len >= 0.0)) throw DomainError("length must be nonnegative");
  return std::cosh(0.5 * len);
}

inline Length length_from_halftrace(HalfTrace h) {
  if (!(h >= 1.0)) {
    // rounding just below the cusp value
    if (h > 1.0 - 1e-12) return 0.0;
    throw DomainError("half-trace below 1 does not belong to a closed geodesic");
  }
  return 2.0 * std::acosh(h);
}

/// Half-width of the standard collar around a simple closed geodesic:
/// arcsinh(1 / sinh(len / 2)). Strictly decreasing; undefined at a cusp.
inline Length collar_width(Length len) {
  detail::require_positive(len, "collar_width: geodesic length");
  return detail::asinh_inv_sinh(0.5 * len);
}

/// Lower bound 2n w(len_beta) on any geodesic crossing beta n times.
inline Length crossing_lower_bound(Length len_beta, unsigned n) {
  if (n == 0) return 0.0;
  return 2.0 * n * collar_width(len_beta);
}

/// The positive root l of sinh(l / 2n) sinh(l / 2) = 1, i.e. the length at
/// which a geodesic is exactly as long as 2n collar widths of itself.
///
/// Bisection down to a bracket of width 1e-14, then two Newton steps.
inline Length solve_ln(unsigned n, double tol = kDefaultTol) {
  if (n == 0) throw DomainError("solve_ln: n must be at least 1");
  if (!(tol > 0.0)) throw DomainError("solve_ln: tolerance must be positive");

  const double two_n = 2.0 * n;
  auto g = [two_n](double l) { return std::sinh(l / two_n) * std::sinh(0.5 * l) - 1.0; };
  auto dg = [two_n](double l) {
    return std::cosh(l / two_n) * std::sinh(0.5 * l) / two_n +
           0.5 * std::sinh(l / two_n) * std::cosh(0.5 * l);
  };

  double lo = 0.0;
  double hi = 1.0;
  int guard = 0;
  while (g(hi) <= 0.0) {
    lo = hi;
    hi *= 2.0;
    if (++guard > 64) throw NumericalError("solve_ln: no sign change", lo, hi);
  }

  for (int it = 0; it < 200 && hi - lo > 1e-14; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) > 0.0) hi = mid;
    else lo = mid;
  }

  double l = 0.5 * (lo + hi);
  for (int k = 0; k < 2; ++k) {
    const double step = g(l) / dg(l);
    const double next = l - step;
    if (std::isfinite(next) && next > 0.0) l = next;
  }

  if (!(std::fabs(g(l)) < tol)) throw NumericalError("solve_ln: residual above tolerance", lo, hi);
  return l;
}

/// Right-angled pentagon: cosh c = sinh a sinh b, where a and b are the
/// sides adjacent to each other and c is the side opposite their corner.
inline Length pentagon_side(Length a, Length b) {
  detail::require_positive(a, "pentagon_side: a");
  detail::require_positive(b, "pentagon_side: b");
  if (a > detail::kLogSpaceThreshold || b > detail::kLogSpaceThreshold) {
    const double log_p = detail::log_sinh(a) + detail::log_sinh(b);
    if (!(log_p > 0.0)) throw DomainError("pentagon_side: degenerate pentagon");
    return detail::acosh_of_log(log_p);
  }
  const double p = std::sinh(a) * std::sinh(b);
  if (!(p > 1.0)) throw DomainError("pentagon_side: degenerate pentagon (sinh a sinh b <= 1)");
  return std::acosh(p);
}

/// Same pentagon relation solved for an adjacent side: given the other
/// adjacent side b and the opposite side c (c = 0 allowed, an ideal vertex),
/// returns a with sinh a = cosh c / sinh b.
inline Length pentagon_adjacent_side(Length b, Length opposite) {
  detail::require_positive(b, "pentagon_adjacent_side: b");
  if (!(opposite >= 0.0)) throw DomainError("pentagon_adjacent_side: opposite side must be nonnegative");
  if (b > detail::kLogSpaceThreshold || opposite > detail::kLogSpaceThreshold)
    return detail::asinh_of_log(detail::log_cosh(opposite) - detail::log_sinh(b));
  return std::asinh(std::cosh(opposite) / std::sinh(b));
}

/// Quadrilateral with three right angles: with finite half-sides a and b
/// meeting at a right angle, the side opposite b satisfies
/// sinh(result) = sinh a cosh b.
inline Length trirect_quad_opposite(Length a, Length b) {
  detail::require_positive(a, "trirect_quad_opposite: a");
  if (!(b >= 0.0)) throw DomainError("trirect_quad_opposite: b must be nonnegative");
  if (a > detail::kLogSpaceThreshold || b > detail::kLogSpaceThreshold)
    return detail::asinh_of_log(detail::log_sinh(a) + detail::log_cosh(b));
  return std::asinh(std::sinh(a) * std::cosh(b));
}

/// Quadrilateral with three right angles and one ideal vertex:
/// sinh l sinh h = 1, where h is the finite side opposite l.
inline Length zero_angle_quad_side(Length h_half) {
  detail::require_positive(h_half, "zero_angle_quad_side: height");
  if (h_half < detail::kLogSpaceThreshold) return std::asinh(1.0 / std::sinh(h_half));
  return detail::asinh_of_log(-detail::log_sinh(h_half));
}

}  // namespace geobound
