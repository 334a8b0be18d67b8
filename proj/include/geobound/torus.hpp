#pragma once

// Marked once-punctured tori in half-trace coordinates.
//
// A marking assigns the half-traces (r, s, t) to the slopes (1,0), (0,1)
// and (1,1). Every other simple closed geodesic is reached through the
// Farey tessellation: crossing the edge {X, Y} away from Z produces the
// vertex with half-trace 2 h(X) h(Y) - h(Z). On the cusp variety
// 2rst = r^2 + s^2 + t^2 this is the same surface remarked.

#include <algorithm>
#include <array>
#include <cmath>
#include <compare>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "geobound/errors.hpp"
#include "geobound/hypmath.hpp"

namespace geobound {

/// Primitive unoriented slope p/q. Normalized so that q > 0, or (p, q) = (1, 0).
class Slope {
public:
  Slope(std::int64_t p, std::int64_t q) {
    if (p == 0 && q == 0) throw InvalidSlope("slope (0,0)");
    if (std::gcd(p, q) != 1) throw InvalidSlope("slope (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
    if (q < 0 || (q == 0 && p < 0)) {
      p = -p;
      q = -q;
    }
    p_ = p;
    q_ = q;
  }

  std::int64_t p() const noexcept { return p_; }
  std::int64_t q() const noexcept { return q_; }

  auto operator<=>(const Slope&) const = default;

private:
  std::int64_t p_;
  std::int64_t q_;
};

/// Geometric intersection number |p q' - q p'| of two slopes on a torus.
inline std::int64_t intersection_number(const Slope& a, const Slope& b) {
  return std::llabs(a.p() * b.q() - a.q() * b.p());
}

struct TraceTriple {
  HalfTrace r = 1.0;
  HalfTrace s = 1.0;
  HalfTrace t = 1.0;
  Length boundary = 0.0;

  bool operator==(const TraceTriple&) const = default;
};

struct GeodesicInfo {
  Slope slope{1, 0};
  HalfTrace halftrace = 1.0;
  Length length = 0.0;
};

struct CrossingPair {
  GeodesicInfo first;
  GeodesicInfo second;
  std::int64_t crossings = 0;

  Length max_length() const { return std::max(first.length, second.length); }
};

/// 2rst - r^2 - s^2 - t^2; zero exactly on once-punctured tori.
inline double cusp_relation_residual(HalfTrace r, HalfTrace s, HalfTrace t) {
  return 2.0 * r * s * t - r * r - s * s - t * t;
}

inline double cusp_relation_residual(const TraceTriple& x) { return cusp_relation_residual(x.r, x.s, x.t); }

/// Residual scaled by the size of the coordinates, for tolerance checks.
inline double relative_cusp_residual(const TraceTriple& x) {
  return std::fabs(cusp_relation_residual(x)) / std::max(1.0, x.r * x.r + x.s * x.s + x.t * x.t);
}

struct TripleRoots {
  HalfTrace low;
  HalfTrace high;
};

/// Both roots t of 2rst = r^2 + s^2 + t^2 for fixed (r, s).
inline TripleRoots complete_triple(HalfTrace r, HalfTrace s) {
  if (!(r > 1.0) || !(s > 1.0)) throw DegenerateSurface("complete_triple: half-traces must exceed 1");
  // r^2 s^2 - r^2 - s^2 = (r^2 - 1)(s^2 - 1) - 1
  const double prod = (r * r - 1.0) * (s * s - 1.0);
  double disc = prod - 1.0;
  // a discriminant at rounding level is a double root, e.g. r = s = sqrt 2
  if (std::fabs(disc) <= 8.0 * std::numeric_limits<double>::epsilon() * std::max(1.0, prod)) disc = 0.0;
  if (disc < 0.0) throw NoCuspedTorus("complete_triple: (r, s) admits no cusped torus");
  const double high = r * s + std::sqrt(disc);
  return {(r * r + s * s) / high, high};
}

enum class Position { first = 1, second = 2, third = 3 };

namespace detail {

// The root of x^2 - 2ab x + (a^2 + b^2) = 0 other than x. A move that
// shrinks the coordinate uses the product of roots: 2ab - x cancels.
inline double other_root(double a, double b, double x) {
  const double sum_form = 2.0 * a * b - x;
  if (sum_form >= x) return sum_form;
  return (a * a + b * b) / x;
}

}  // namespace detail

/// Exchanges the chosen coordinate with the other root of the cusp
/// relation viewed as a quadratic in that coordinate: x -> 2ab - x, with a
/// and b the other two coordinates. An involution.
inline TraceTriple markov_move(const TraceTriple& x, Position position) {
  TraceTriple y = x;
  switch (position) {
    case Position::first: y.r = detail::other_root(x.s, x.t, x.r); break;
    case Position::second: y.s = detail::other_root(x.r, x.t, x.s); break;
    case Position::third: y.t = detail::other_root(x.r, x.s, x.t); break;
  }
  return y;
}

/// Reduces to the fundamental domain 1 < r <= s <= t <= rs.
inline TraceTriple normalize(TraceTriple x) {
  auto coords = [&x] { return std::array<double*, 3>{&x.r, &x.s, &x.t}; };
  for (double* c : coords())
    if (!(*c > 1.0)) throw DegenerateSurface("normalize: coordinate <= 1");

  for (int it = 0; it < 100000; ++it) {
    auto c = coords();
    std::sort(c.begin(), c.end(), [](double* a, double* b) { return *a < *b; });
    const double product = *c[0] * *c[1];
    if (!(*c[2] > product)) {
      std::array<double, 3> v{x.r, x.s, x.t};
      std::sort(v.begin(), v.end());
      if (!(v[0] > 1.0)) throw DegenerateSurface("normalize: reduced to a coordinate <= 1");
      return {v[0], v[1], v[2], x.boundary};
    }
    *c[2] = detail::other_root(*c[0], *c[1], *c[2]);
  }
  throw DegenerateSurface("normalize: reduction did not terminate", cusp_relation_residual(x));
}

inline bool is_normalized(const TraceTriple& x) {
  return x.r > 1.0 && x.r <= x.s && x.s <= x.t && x.t <= x.r * x.s;
}

/// Minimal half-trace among simple closed geodesics crossing alpha twice,
/// over one-holed tori with boundary length eps containing alpha. The
/// minimum is attained by the half-twist pasting along alpha.
inline Length min_two_crossing_partner(Length alpha_len, Length eps_len) {
  detail::require_positive(alpha_len, "min_two_crossing_partner: alpha length");
  if (!(eps_len >= 0.0)) throw DomainError("min_two_crossing_partner: boundary length must be nonnegative");
  // cosh(beta/2) = 1 + (cosh(eps/2) + 1) / (2 (cosh(alpha/2) - 1))
  //             = 1 + cosh^2(eps/4) / (2 sinh^2(alpha/4))
  const double ratio = std::cosh(0.25 * eps_len) / std::sinh(0.25 * alpha_len);
  return 2.0 * detail::acosh1p(0.5 * ratio * ratio);
}

namespace detail {

struct Vec2 {
  std::int64_t p;
  std::int64_t q;
};

inline std::int64_t det(Vec2 a, Vec2 b) { return a.p * b.q - a.q * b.p; }

inline bool same_class(Vec2 a, Vec2 b) { return (a.p == b.p && a.q == b.q) || (a.p == -b.p && a.q == -b.q); }

struct Vertex {
  Vec2 v;
  double h;
};

// Vertex of the Farey triangle across edge {x, y} opposite z.
inline Vertex across(const Vertex& x, const Vertex& y, const Vertex& z) {
  Vec2 sum{x.v.p + y.v.p, x.v.q + y.v.q};
  Vec2 diff{x.v.p - y.v.p, x.v.q - y.v.q};
  return {same_class(sum, z.v) ? diff : sum, 2.0 * x.h * y.h - z.h};
}

// Whether the slope t lies beyond edge {x, y}, on the side away from z.
inline bool beyond_edge(Vec2 t, Vec2 x, Vec2 y, Vec2 z) {
  const std::int64_t st = det(t, y) * det(x, t);
  const std::int64_t sz = det(z, y) * det(x, z);
  return st != 0 && ((st > 0) != (sz > 0));
}

inline std::array<Vertex, 3> root_vertices(const TraceTriple& x) {
  return {Vertex{{1, 0}, x.r}, Vertex{{0, 1}, x.s}, Vertex{{1, 1}, x.t}};
}

inline GeodesicInfo make_info(const Vertex& v) {
  return {Slope(v.v.p, v.v.q), v.h, length_from_halftrace(v.h)};
}

}  // namespace detail

/// Half-trace of the geodesic with the given slope, by descending the
/// Farey tessellation from the base triangle {(1,0), (0,1), (1,1)}.
inline HalfTrace halftrace_of_slope(const TraceTriple& x, const Slope& slope) {
  using detail::Vertex;
  const detail::Vec2 target{slope.p(), slope.q()};
  auto tri = detail::root_vertices(x);
  for (;;) {
    for (const Vertex& v : tri)
      if (detail::same_class(v.v, target)) return v.h;

    bool moved = false;
    for (int k = 0; k < 3 && !moved; ++k) {
      const Vertex& a = tri[(k + 1) % 3];
      const Vertex& b = tri[(k + 2) % 3];
      const Vertex& c = tri[k];
      if (detail::beyond_edge(target, a.v, b.v, c.v)) {
        tri[k] = detail::across(a, b, c);
        moved = true;
      }
    }
    if (!moved) throw InvalidSlope("halftrace_of_slope: slope not reached");
    if (!std::isfinite(tri[0].h + tri[1].h + tri[2].h))
      throw NumericalError("halftrace_of_slope: half-trace overflow", 0.0, 0.0);
  }
}

inline void require_cusped(const TraceTriple& x, const char* where) {
  if (!(x.r > 1.0 && x.s > 1.0 && x.t > 1.0)) throw DegenerateSurface(std::string(where) + ": coordinate <= 1");
  const double res = relative_cusp_residual(x);
  if (!(res < 1e-8)) throw DegenerateSurface(std::string(where) + ": triple is not cusped", cusp_relation_residual(x));
}

/// Lengths below this slack past the cutoff are kept; guards against the
/// cutoff being itself a computed length.
inline constexpr double kCutoffSlack = 1e-12;

/// Every simple closed geodesic of length <= cutoff, ascending by length,
/// equal lengths ordered by slope.
///
/// From a normalized root, half-traces grow along every branch of the
/// Farey tree, so a branch is abandoned at its first vertex past the cutoff.
inline std::vector<GeodesicInfo> enumerate_geodesics(const TraceTriple& x, Length cutoff) {
  using detail::Vertex;
  require_cusped(x, "enumerate_geodesics");
  if (!is_normalized(x)) throw DegenerateSurface("enumerate_geodesics: triple must be normalized");

  const double limit = cutoff + kCutoffSlack;
  std::vector<GeodesicInfo> out;
  auto root = detail::root_vertices(x);
  for (const Vertex& v : root)
    if (length_from_halftrace(v.h) <= limit) out.push_back(detail::make_info(v));

  // (x, y, z): expand across edge {x, y} away from z
  struct Edge {
    Vertex x, y, z;
  };
  std::vector<Edge> stack{{root[0], root[1], root[2]}, {root[0], root[2], root[1]}, {root[1], root[2], root[0]}};
  while (!stack.empty()) {
    const Edge e = stack.back();
    stack.pop_back();
    const Vertex n = detail::across(e.x, e.y, e.z);
    if (!(length_from_halftrace(n.h) <= limit)) continue;
    out.push_back(detail::make_info(n));
    stack.push_back({e.x, n, e.y});
    stack.push_back({e.y, n, e.x});
  }

  std::sort(out.begin(), out.end(), [](const GeodesicInfo& a, const GeodesicInfo& b) {
    if (a.length != b.length) return a.length < b.length;
    return a.slope < b.slope;
  });
  return out;
}

/// Unordered pairs from the enumerated spectrum crossing exactly n times.
inline std::vector<CrossingPair> pairs_with_intersection(const TraceTriple& x, std::int64_t n, Length cutoff) {
  if (n < 1) throw DomainError("pairs_with_intersection: n must be at least 1");
  const auto spectrum = enumerate_geodesics(x, cutoff);
  std::vector<CrossingPair> pairs;
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    for (std::size_t j = i + 1; j < spectrum.size(); ++j)
      if (intersection_number(spectrum[i].slope, spectrum[j].slope) == n)
        pairs.push_back({spectrum[i], spectrum[j], n});
  return pairs;
}

}  // namespace geobound
