#pragma once

// L_n: the smallest possible length of the longer of two simple closed
// geodesics crossing n times, over all complete hyperbolic surfaces.

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "geobound/errors.hpp"
#include "geobound/hypmath.hpp"
#include "geobound/torus.hpp"

namespace geobound {

namespace detail {
inline double sqrt_eleven_thirds() { return std::sqrt(11.0 / 3.0); }
}  // namespace detail

/// r* = (3 + sqrt(11/3)) / 4, the systole half-trace of the three-crossing extremal torus.
inline double s3_r_star() { return 0.25 * (3.0 + detail::sqrt_eleven_thirds()); }

/// Half-trace of the two geodesics realizing L_3: sqrt((7 + (11/3) sqrt(11/3)) / 2).
inline HalfTrace l3_halftrace() {
  const double q = detail::sqrt_eleven_thirds();
  return std::sqrt(0.5 * (7.0 + 11.0 / 3.0 * q));
}

/// Closed forms of L_1, L_2, L_3.
inline Length known_L(unsigned n) {
  switch (n) {
    case 1: return 2.0 * std::asinh(1.0);
    case 2: return 2.0 * std::acosh(2.0);
    case 3: return 2.0 * std::acosh(l3_halftrace());
    default: throw UnknownConstant("known_L: no closed form for n = " + std::to_string(n));
  }
}

inline std::optional<Length> maybe_known_L(unsigned n) {
  if (n >= 1 && n <= 3) return known_L(n);
  return std::nullopt;
}

inline std::string known_L_symbolic(unsigned n) {
  switch (n) {
    case 1: return "2*arcsinh(1)";
    case 2: return "2*arccosh(2)";
    case 3: return "2*arccosh(sqrt((7+(11/3)*sqrt(11/3))/2))";
    default: throw UnknownConstant("known_L_symbolic: no closed form for n = " + std::to_string(n));
  }
}

/// 4 arcsinh 1 (= 2 arccosh 3): two geodesics crossing twice on a
/// four-holed sphere are never both shorter than this.
inline Length four_holed_sphere_bound() { return 4.0 * std::asinh(1.0); }

/// Exact coordinates of the three-crossing extremal torus, (r*, s, s) with
/// s^2 = (13 + 7 sqrt(11/3)) / 8.
inline TraceTriple s3_triple() {
  const double s = std::sqrt((13.0 + 7.0 * detail::sqrt_eleven_thirds()) / 8.0);
  return {s3_r_star(), s, s, 0.0};
}

/// b^2 along the symmetric line s = t of the cusp variety: r^2 (2r-1)^2 / (2(r-1)).
inline double b_squared_curve(double r) {
  if (!(r > 1.0)) throw DomainError("b_squared_curve: r must exceed 1");
  const double u = 2.0 * r - 1.0;
  return r * r * u * u / (2.0 * (r - 1.0));
}

struct ConstructionBound {
  Length u_n = 0.0;
  /// (cosh(l_n / 2n), cosh(l_n / 2), cosh(l_n / 2n) cosh(l_n / 2))
  TraceTriple triple;
  /// c_0 .. c_n: half-traces of alpha, delta alpha, ..., delta^n alpha
  std::vector<HalfTrace> recursion;
};

/// Zero-twist torus built from alpha of length l_n and its orthogonal
/// delta of length l_n / n; returns the length of the geodesic in the class
/// delta^n alpha, which crosses alpha n times.
inline ConstructionBound construction_upper_bound(unsigned n, double tol = kDefaultTol) {
  if (n == 0) throw DomainError("construction_upper_bound: n must be at least 1");
  const Length ln = solve_ln(n, tol);
  const double r = std::cosh(ln / (2.0 * n));
  const double c0 = std::cosh(0.5 * ln);

  ConstructionBound out;
  out.recursion = {c0, r * c0};
  for (unsigned k = 1; k < n; ++k) {
    const auto& c = out.recursion;
    out.recursion.push_back(2.0 * r * c[k] - c[k - 1]);
  }
  out.triple = {r, c0, r * c0, 0.0};
  out.u_n = length_from_halftrace(out.recursion[n]);
  return out;
}

struct BoundsReport {
  unsigned n = 1;
  Length l_n = 0.0;
  Length upper_u_n = 0.0;
  std::optional<Length> known_L_n;
  bool sandwich_ok = false;
};

inline BoundsReport sandwich_report(unsigned n, double tol = kDefaultTol) {
  BoundsReport rep;
  rep.n = n;
  rep.l_n = solve_ln(n, tol);
  rep.upper_u_n = construction_upper_bound(n, tol).u_n;
  rep.known_L_n = maybe_known_L(n);
  const double tie = 1e-12;  // l_1 = L_1 exactly
  double upper = rep.upper_u_n;
  bool known_inside = true;
  if (rep.known_L_n) {
    upper = std::min(upper, *rep.known_L_n);
    known_inside = *rep.known_L_n <= rep.upper_u_n + tie;
  }
  rep.sandwich_ok = rep.l_n <= upper + tie && rep.upper_u_n < 2.0 * rep.l_n && known_inside;
  return rep;
}

}  // namespace geobound
