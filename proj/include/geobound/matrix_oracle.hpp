#pragma once

// Independent length oracle: a real SL(2) representation of the free group
// <A, B> with half-traces tr A / 2 = r, tr B / 2 = s, tr AB / 2 = t, and the
// slope (p, q) read as the Christoffel word with |p| letters A^{sign p} and
// q letters B. Shares no code path with the Farey recursion.

#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <string>

#include "geobound/errors.hpp"
#include "geobound/torus.hpp"

namespace geobound {

struct Mat2 {
  double a = 1.0, b = 0.0, c = 0.0, d = 1.0;

  Mat2 operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
  }
  double trace() const { return a + d; }
  double det() const { return a * d - b * c; }
  Mat2 inverse() const { return {d, -b, -c, a}; }  // det 1
};

struct Representation {
  Mat2 A;
  Mat2 B;
};

/// A = diag(lambda, 1/lambda) with lambda + 1/lambda = 2r. B has trace 2s and
/// its diagonal is fixed by the linear conditions tr B = 2s, tr AB = 2t;
/// the off-diagonal product follows from det B = 1.
inline Representation build_representation(const TraceTriple& x) {
  if (!(x.r > 1.0)) throw DegenerateSurface("matrix oracle: r must exceed 1");
  const double lambda = x.r + std::sqrt(x.r * x.r - 1.0);
  const double inv = 1.0 / lambda;
  Mat2 A{lambda, 0.0, 0.0, inv};

  // lambda * b11 + b22 / lambda = 2t,  b11 + b22 = 2s
  const double b11 = (2.0 * x.t - 2.0 * x.s * inv) / (lambda - inv);
  const double b22 = 2.0 * x.s - b11;
  const double off = b11 * b22 - 1.0;
  Mat2 B{b11, 1.0, off, b22};
  if (!std::isfinite(b11) || std::fabs(B.det() - 1.0) > 1e-9 * std::max(1.0, std::fabs(b11 * b22)))
    throw NumericalError("matrix oracle: representation not constructible", lambda, b11);
  return {A, B};
}

/// Half the absolute trace of the word for the slope.
inline HalfTrace matrix_oracle_halftrace(const TraceTriple& x, const Slope& slope) {
  const Representation rep = build_representation(x);
  const Mat2 a_letter = slope.p() < 0 ? rep.A.inverse() : rep.A;
  const std::int64_t na = std::llabs(slope.p());
  const std::int64_t nb = slope.q();
  const std::int64_t total = na + nb;

  Mat2 word;
  for (std::int64_t i = 1; i <= total; ++i) {
    const bool b_step = (i * nb) / total > ((i - 1) * nb) / total;
    word = word * (b_step ? rep.B : a_letter);
  }
  return 0.5 * std::fabs(word.trace());
}

inline Length matrix_oracle_length(const TraceTriple& x, const Slope& slope) {
  return length_from_halftrace(matrix_oracle_halftrace(x, slope));
}

}  // namespace geobound
