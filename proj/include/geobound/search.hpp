#pragma once

// Minimization of f(S) = min over pairs crossing n times of the longer
// length, over the moduli space of once-punctured tori. Points of the moduli
// space are searched as (r, s) with t the smaller root of the cusp relation.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "geobound/bounds.hpp"
#include "geobound/errors.hpp"
#include "geobound/hypmath.hpp"
#include "geobound/nelder_mead.hpp"
#include "geobound/torus.hpp"

namespace geobound {

struct SearchConfig {
  unsigned n = 1;
  double grid_lo = 1.05;
  double grid_hi = 3.0;
  int grid_steps = 60;
  double cutoff_factor = 2.2;
  double refine_tol = 1e-9;
  int max_refine_iters = 5000;
  /// Worker threads for the grid; 0 means one per hardware thread.
  unsigned jobs = 1;

  void validate() const {
    if (n < 1) throw DomainError("SearchConfig: n must be at least 1");
    if (!(grid_lo > 1.0)) throw DomainError("SearchConfig: grid_lo must exceed 1");
    if (!(grid_hi > grid_lo)) throw DomainError("SearchConfig: grid_hi must exceed grid_lo");
    if (grid_steps < 2) throw DomainError("SearchConfig: grid_steps must be at least 2");
    if (!(cutoff_factor >= 2.0)) throw DomainError("SearchConfig: cutoff_factor must be at least 2");
    if (!(refine_tol > 0.0)) throw DomainError("SearchConfig: refine_tol must be positive");
    if (max_refine_iters < 1) throw DomainError("SearchConfig: max_refine_iters must be positive");
  }
};

struct Certificates {
  Length l_n = 0.0;
  Length u_n = 0.0;
};

struct ExtremalResult {
  unsigned n = 1;
  Length value = std::numeric_limits<double>::infinity();
  /// Normalized coordinates of the minimizing surface.
  TraceTriple triple;
  /// Search coordinates (r, s); t is the smaller completing root.
  double search_r = 0.0;
  double search_s = 0.0;
  CrossingPair pair;
  std::int64_t evaluations = 0;
  bool converged = false;
  Certificates certificates;
  /// n >= 4: only an upper bound for L_n restricted to once-punctured tori.
  bool torus_restricted = false;
};

/// Best pair crossing n times on the surface, or nullopt if none lies
/// under the cutoff. Accepts any marking of a cusped torus.
inline std::optional<CrossingPair> objective(const TraceTriple& x, std::int64_t n, Length cutoff) {
  const TraceTriple base = is_normalized(x) ? x : normalize(x);
  const auto pairs = pairs_with_intersection(base, n, cutoff);
  if (pairs.empty()) return std::nullopt;
  // pairs come in spectrum order, so the first minimum is deterministic
  const auto best = std::min_element(pairs.begin(), pairs.end(), [](const CrossingPair& a, const CrossingPair& b) {
    return a.max_length() < b.max_length();
  });
  return *best;
}

inline Length objective_value(const TraceTriple& x, std::int64_t n, Length cutoff) {
  const auto pair = objective(x, n, cutoff);
  return pair ? pair->max_length() : std::numeric_limits<double>::infinity();
}

struct PointEvaluation {
  TraceTriple triple;  // normalized
  CrossingPair pair;
  Length value() const { return pair.max_length(); }
};

/// Objective at search coordinates (r, s); nullopt where no cusped torus
/// exists or no pair lies under the cutoff.
inline std::optional<PointEvaluation> evaluate_point(double r, double s, std::int64_t n, Length cutoff) {
  if (!(r > 1.0) || !(s > 1.0)) return std::nullopt;
  const double disc = (r * r - 1.0) * (s * s - 1.0) - 1.0;
  if (!(disc >= 0.0)) return std::nullopt;
  try {
    const TraceTriple x = normalize({r, s, complete_triple(r, s).low, 0.0});
    auto pair = objective(x, n, cutoff);
    if (!pair) return std::nullopt;
    return PointEvaluation{x, *pair};
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

inline Length search_cutoff(const SearchConfig& config) { return config.cutoff_factor * solve_ln(config.n); }

namespace detail {

inline unsigned worker_count(unsigned jobs) {
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  return jobs;
}

}  // namespace detail

/// Objective over the (r, s) grid; the smallest value wins, ties going to
/// the lexicographically smallest (r, s).
inline ExtremalResult grid_search(const SearchConfig& config) {
  config.validate();
  const Length cutoff = search_cutoff(config);
  const int m = config.grid_steps;
  const double pitch = (config.grid_hi - config.grid_lo) / (m - 1);
  auto coord = [&](int i) { return i == m - 1 ? config.grid_hi : config.grid_lo + i * pitch; };

  std::vector<std::optional<PointEvaluation>> cells(static_cast<std::size_t>(m) * m);
  auto work = [&](unsigned worker, unsigned workers) {
    for (std::size_t k = worker; k < cells.size(); k += workers)
      cells[k] = evaluate_point(coord(static_cast<int>(k / m)), coord(static_cast<int>(k % m)), config.n, cutoff);
  };

  const unsigned workers = std::min<unsigned>(detail::worker_count(config.jobs), static_cast<unsigned>(cells.size()));
  if (workers <= 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, w, workers);
  }

  std::optional<std::size_t> best;
  for (std::size_t k = 0; k < cells.size(); ++k)
    if (cells[k] && (!best || cells[k]->value() < cells[*best]->value())) best = k;
  if (!best)
    throw SearchFailure("grid_search: no feasible grid point for n = " + std::to_string(config.n) +
                        "; try a larger cutoff_factor or a wider grid range");

  ExtremalResult res;
  res.n = config.n;
  res.value = cells[*best]->value();
  res.triple = cells[*best]->triple;
  res.pair = cells[*best]->pair;
  res.search_r = coord(static_cast<int>(*best / m));
  res.search_s = coord(static_cast<int>(*best % m));
  res.evaluations = static_cast<std::int64_t>(cells.size());
  return res;
}

/// Simplex descent on (r, s) from a feasible start, restarted from the best
/// vertex until a restart no longer improves. Never returns a worse value
/// than the start.
inline ExtremalResult refine(const ExtremalResult& start, const SearchConfig& config) {
  config.validate();
  if (!std::isfinite(start.value)) throw SearchFailure("refine: start point is infeasible");
  const Length cutoff = search_cutoff(config);

  auto f = [&](const std::array<double, 2>& p) {
    const auto e = evaluate_point(p[0], p[1], config.n, cutoff);
    return e ? e->value() : std::numeric_limits<double>::infinity();
  };

  NelderMeadOptions opt;
  opt.tol = config.refine_tol;
  const double step = (config.grid_hi - config.grid_lo) / (config.grid_steps - 1);

  ExtremalResult best = start;
  std::array<double, 2> x{start.search_r, start.search_s};
  double value = start.value;
  int budget = config.max_refine_iters;
  bool converged = false;
  // a collapsed simplex on a kink of the min-max objective can stall short
  // of the minimum; restarting with a fresh simplex moves it on
  for (int restart = 0; restart < 50 && budget > 0; ++restart) {
    opt.max_iters = budget;
    const auto nm = nelder_mead<2>(f, x, step, opt);
    budget -= nm.iterations;
    best.evaluations += nm.evaluations;
    converged = nm.converged;
    if (!(nm.value < value)) break;
    x = nm.x;
    value = nm.value;
  }

  if (value < start.value) {
    const auto e = evaluate_point(x[0], x[1], config.n, cutoff);
    best.value = e->value();
    best.triple = e->triple;
    best.pair = e->pair;
    best.search_r = x[0];
    best.search_s = x[1];
  }
  best.converged = converged;
  return best;
}

/// Grid search, refinement, and the certificate interval [l_n, u_n].
inline ExtremalResult find_extremal(const SearchConfig& config) {
  ExtremalResult res = refine(grid_search(config), config);
  res.certificates = {solve_ln(config.n), construction_upper_bound(config.n).u_n};
  res.torus_restricted = config.n >= 4;
  return res;
}

inline ExtremalResult find_extremal(unsigned n, SearchConfig config) {
  config.n = n;
  return find_extremal(config);
}

}  // namespace geobound
