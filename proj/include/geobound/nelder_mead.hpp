#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <numeric>

namespace geobound {

struct NelderMeadOptions {
  double reflection = 1.0;
  double expansion = 2.0;
  double contraction = 0.5;
  double shrink = 0.5;
  /// Stop once every vertex is within this distance of the best one.
  double tol = 1e-9;
  int max_iters = 5000;
};

template <std::size_t N>
struct NelderMeadResult {
  std::array<double, N> x{};
  double value = std::numeric_limits<double>::infinity();
  int iterations = 0;
  int evaluations = 0;
  bool converged = false;
};

/// Derivative-free simplex minimization. f may return +inf for infeasible
/// points; such vertices are simply never accepted.
template <std::size_t N, class F>
NelderMeadResult<N> nelder_mead(F&& f, const std::array<double, N>& start, double step,
                                const NelderMeadOptions& opt = {}) {
  using Point = std::array<double, N>;
  std::array<Point, N + 1> x;
  std::array<double, N + 1> fx;
  NelderMeadResult<N> res;

  auto eval = [&](const Point& p) {
    ++res.evaluations;
    return f(p);
  };

  x[0] = start;
  for (std::size_t i = 0; i < N; ++i) {
    x[i + 1] = start;
    x[i + 1][i] += step;
  }
  for (std::size_t i = 0; i <= N; ++i) fx[i] = eval(x[i]);

  auto order = [&] {
    std::array<std::size_t, N + 1> idx;
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return fx[a] < fx[b]; });
    auto x2 = x;
    auto f2 = fx;
    for (std::size_t k = 0; k <= N; ++k) {
      x[k] = x2[idx[k]];
      fx[k] = f2[idx[k]];
    }
  };

  auto diameter = [&] {
    double d = 0.0;
    for (std::size_t k = 1; k <= N; ++k)
      for (std::size_t i = 0; i < N; ++i) d = std::max(d, std::fabs(x[k][i] - x[0][i]));
    return d;
  };

  auto along = [](const Point& from, const Point& to, double scale) {
    Point p;
    for (std::size_t i = 0; i < N; ++i) p[i] = from[i] + scale * (to[i] - from[i]);
    return p;
  };

  for (; res.iterations < opt.max_iters; ++res.iterations) {
    order();
    if (diameter() < opt.tol) {
      res.converged = true;
      break;
    }

    Point centroid{};
    for (std::size_t k = 0; k < N; ++k)
      for (std::size_t i = 0; i < N; ++i) centroid[i] += x[k][i] / static_cast<double>(N);

    const Point xr = along(centroid, x[N], -opt.reflection);
    const double fr = eval(xr);

    if (fr < fx[0]) {
      const Point xe = along(centroid, x[N], -opt.reflection * opt.expansion);
      const double fe = eval(xe);
      if (fe < fr) {
        x[N] = xe;
        fx[N] = fe;
      } else {
        x[N] = xr;
        fx[N] = fr;
      }
      continue;
    }
    if (fr < fx[N - 1]) {
      x[N] = xr;
      fx[N] = fr;
      continue;
    }

    // outside contraction toward the reflected point, inside otherwise
    const bool outside = fr < fx[N];
    const Point xc = outside ? along(centroid, xr, opt.contraction) : along(centroid, x[N], opt.contraction);
    const double fc = eval(xc);
    if (fc < (outside ? fr : fx[N])) {
      x[N] = xc;
      fx[N] = fc;
      continue;
    }

    for (std::size_t k = 1; k <= N; ++k) {
      x[k] = along(x[0], x[k], opt.shrink);
      fx[k] = eval(x[k]);
    }
  }

  order();
  res.x = x[0];
  res.value = fx[0];
  return res;
}

}  // namespace geobound
