#pragma once

// Self-verification checks, one per acceptance criterion. Shared by the
// `verify` subcommand and the acceptance test binary.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "geobound/bounds.hpp"
#include "geobound/hypmath.hpp"
#include "geobound/matrix_oracle.hpp"
#include "geobound/search.hpp"
#include "geobound/torus.hpp"

namespace geobound {

enum class VerifyLevel { fast, full };

struct VerifyContext {
  /// Source of the closed-form constants; replaced in mutation tests.
  std::function<Length(unsigned)> known = [](unsigned n) { return known_L(n); };
  std::uint64_t seed = 0x5eed'2006ULL;
  unsigned jobs = 1;
};

struct CheckResult {
  std::string id;
  std::string name;
  bool passed = false;
  double seconds = 0.0;
  std::string detail;
};

/// Random cusped torus in normalized coordinates: (r, s) uniform on
/// [1.05, 3]^2 among points admitting a root, t the smaller root.
template <class Rng>
TraceTriple random_cusped_triple(Rng& rng) {
  std::uniform_real_distribution<double> coord(1.05, 3.0);
  for (;;) {
    const double r = coord(rng);
    const double s = coord(rng);
    if ((r * r - 1.0) * (s * s - 1.0) < 1.0) continue;
    return normalize({r, s, complete_triple(r, s).low, 0.0});
  }
}

/// Primitive slopes with |p|, |q| <= bound, each unoriented class once.
inline std::vector<Slope> slopes_up_to(std::int64_t bound) {
  std::vector<Slope> out;
  for (std::int64_t q = 0; q <= bound; ++q)
    for (std::int64_t p = -bound; p <= bound; ++p) {
      if (q == 0 && p != 1) continue;
      if (std::gcd(p, q) != 1) continue;
      out.emplace_back(p, q);
    }
  return out;
}

namespace detail {

class Report {
public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      passed_ = false;
      if (failures_++ < 5) msg_ << what << "; ";
    }
  }
  void note(const std::string& what) { msg_ << what << "; "; }
  bool passed() const { return passed_; }
  std::string str() const {
    std::string s = msg_.str();
    if (failures_ > 5) s += std::to_string(failures_ - 5) + " more failures";
    return s;
  }

private:
  bool passed_ = true;
  int failures_ = 0;
  std::ostringstream msg_;
};

inline std::string num(double x) {
  std::ostringstream os;
  os.precision(15);
  os << x;
  return os.str();
}

inline bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

inline SearchConfig acceptance_search_config(unsigned n, unsigned jobs) {
  SearchConfig c;
  c.n = n;
  c.grid_lo = 1.05;
  c.grid_hi = 3.0;
  c.grid_steps = 60;
  c.jobs = jobs;
  return c;
}

}  // namespace detail

inline void check_ln_solver(const VerifyContext&, detail::Report& rep) {
  double prev = 0.0;
  for (unsigned n = 1; n <= 10; ++n) {
    const double l = solve_ln(n);
    const double residual = std::fabs(std::sinh(l / (2.0 * n)) * std::sinh(0.5 * l) - 1.0);
    rep.expect(residual < 1e-12, "n=" + std::to_string(n) + " residual " + detail::num(residual));
    rep.expect(l > prev, "l_n not increasing at n=" + std::to_string(n));
    prev = l;
  }
  rep.expect(detail::close(solve_ln(1), 2.0 * std::asinh(1.0), 1e-12), "l_1 != 2 arcsinh 1");
}

inline void check_extremal(const VerifyContext& ctx, detail::Report& rep, unsigned n) {
  const auto res = find_extremal(detail::acceptance_search_config(n, ctx.jobs));
  const double target = ctx.known(n);
  rep.note("value " + detail::num(res.value) + " target " + detail::num(target));
  rep.expect(detail::close(res.value, target, 1e-6), "value off by " + detail::num(res.value - target));
  rep.expect(res.pair.crossings == static_cast<std::int64_t>(n), "pair does not cross n times");
  rep.expect(res.value >= res.certificates.l_n && res.value <= res.certificates.u_n, "value outside [l_n, u_n]");
  if (n == 3) {
    const double ds = std::fabs(res.triple.s - res.triple.t);
    const double dr = std::fabs(res.triple.r - s3_r_star());
    rep.note("|s-t| " + detail::num(ds) + " |r-r*| " + detail::num(dr));
    rep.expect(ds < 1e-5, "argmin off the s = t line");
    rep.expect(dr < 1e-5, "argmin r off r*");
  }
}

inline void check_sandwich(const VerifyContext& ctx, detail::Report& rep) {
  for (unsigned n = 1; n <= 10; ++n) {
    const double l = solve_ln(n);
    const double u = construction_upper_bound(n).u_n;
    rep.expect(l <= u && u < 2.0 * l, "n=" + std::to_string(n) + " l_n <= u_n < 2 l_n fails");
    if (n <= 3) {
      const double k = ctx.known(n);
      rep.expect(k >= l - 1e-12 && k <= u, "n=" + std::to_string(n) + " known L_n outside [l_n, u_n]");
    }
  }
}

inline void check_identities(const VerifyContext& ctx, detail::Report& rep) {
  const double a = 4.0 * std::asinh(1.0);
  const double b = 2.0 * std::acosh(3.0);
  rep.expect(detail::close(a, b, 1e-12), "4 arcsinh 1 != 2 arccosh 3");
  rep.expect(detail::close(four_holed_sphere_bound(), b, 1e-12), "four-holed sphere bound");

  const double l2 = ctx.known(2);
  const double fixed = min_two_crossing_partner(l2, 0.0);
  rep.expect(detail::close(fixed, l2, 1e-12), "two-crossing partner of L_2 is " + detail::num(fixed));

  std::mt19937_64 rng(ctx.seed);
  std::uniform_real_distribution<double> alpha_d(0.5, 10.0);
  std::uniform_real_distribution<double> eps_d(0.0, 10.0);
  double worst = 0.0;
  for (int i = 0; i < 1000; ++i) {
    const double alpha = alpha_d(rng);
    const double eps = eps_d(rng);
    const double half_a = pentagon_adjacent_side(0.5 * alpha, 0.25 * eps);
    const double composed = 4.0 * trirect_quad_opposite(half_a, 0.25 * alpha);
    worst = std::max(worst, std::fabs(composed - min_two_crossing_partner(alpha, eps)));
  }
  rep.note("pipeline max deviation " + detail::num(worst));
  rep.expect(worst <= 1e-12, "pentagon/quadrilateral pipeline deviates");
}

inline void check_oracle(const VerifyContext& ctx, detail::Report& rep) {
  std::mt19937_64 rng(ctx.seed + 1);
  const auto slopes = slopes_up_to(10);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const TraceTriple x = random_cusped_triple(rng);
    for (const Slope& sl : slopes) {
      const double rec = length_from_halftrace(halftrace_of_slope(x, sl));
      const double orc = matrix_oracle_length(x, sl);
      worst = std::max(worst, std::fabs(rec - orc));
    }
  }
  rep.note(std::to_string(slopes.size()) + " slopes, max length deviation " + detail::num(worst));
  rep.expect(worst <= 1e-9, "recursion and matrix oracle disagree");
}

inline void check_remarking(const VerifyContext& ctx, detail::Report& rep) {
  std::mt19937_64 rng(ctx.seed + 2);
  std::uniform_int_distribution<int> pos(1, 3);
  for (int i = 0; i < 50; ++i) {
    const TraceTriple x = random_cusped_triple(rng);
    TraceTriple y = x;
    for (int k = 0; k < 5; ++k) y = markov_move(y, static_cast<Position>(pos(rng)));
    const auto a = enumerate_geodesics(x, 6.0);
    const auto b = enumerate_geodesics(normalize(y), 6.0);
    bool same = a.size() == b.size();
    for (std::size_t j = 0; same && j < a.size(); ++j) same = detail::close(a[j].length, b[j].length, 1e-8);
    rep.expect(same, "spectrum changed under remarking on sample " + std::to_string(i));
  }
}

inline void check_collar(const VerifyContext& ctx, detail::Report& rep) {
  std::mt19937_64 rng(ctx.seed + 3);
  const double bound = 2.0 * std::asinh(1.0);
  std::int64_t pairs = 0;
  for (int i = 0; i < 200; ++i) {
    const TraceTriple x = random_cusped_triple(rng);
    const auto g = enumerate_geodesics(x, 6.0);
    for (std::size_t a = 0; a < g.size(); ++a)
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        if (intersection_number(g[a].slope, g[b].slope) < 1) continue;
        ++pairs;
        const double m = std::max(g[a].length, g[b].length);
        rep.expect(m > bound, "crossing pair with max length " + detail::num(m));
      }
  }
  rep.note(std::to_string(pairs) + " crossing pairs");
}

inline void check_fixtures(const VerifyContext& ctx, detail::Report& rep) {
  const TraceTriple s1{std::sqrt(2.0), std::sqrt(2.0), 2.0, 0.0};
  auto at = [](const TraceTriple& x, unsigned n) { return objective_value(x, n, 2.2 * solve_ln(n)); };
  const double v1 = at(s1, 1);
  const double v2 = at(s1, 2);
  const double v3 = at(s3_triple(), 3);
  rep.expect(detail::close(v1, ctx.known(1), 1e-8), "S1 once-crossing pair at " + detail::num(v1));
  rep.expect(detail::close(v2, ctx.known(2), 1e-8), "S1 twice-crossing pair at " + detail::num(v2));
  rep.expect(detail::close(v3, ctx.known(3), 1e-8), "S3 thrice-crossing pair at " + detail::num(v3));
}

struct CheckSpec {
  std::string id;
  std::string name;
  VerifyLevel level;
  double time_limit_s;
  std::function<void(const VerifyContext&, detail::Report&)> run;
};

inline std::vector<CheckSpec> acceptance_checks() {
  using L = VerifyLevel;
  return {
      {"AC1", "ln_solver", L::fast, 1.0, check_ln_solver},
      {"AC2", "l2_reproduction", L::full, 60.0, [](const VerifyContext& c, detail::Report& r) { check_extremal(c, r, 2); }},
      {"AC3", "l3_reproduction", L::full, 120.0, [](const VerifyContext& c, detail::Report& r) { check_extremal(c, r, 3); }},
      {"AC4", "sandwich", L::fast, 1.0, check_sandwich},
      {"AC5", "exact_identities", L::fast, 5.0, check_identities},
      {"AC6", "oracle_equivalence", L::full, 30.0, check_oracle},
      {"AC7", "remarking_invariance", L::fast, 5.0, check_remarking},
      {"AC8", "collar_property", L::fast, 5.0, check_collar},
      {"AC9", "fixtures", L::fast, 5.0, check_fixtures},
  };
}

/// Runs every check at or below the level. Exceptions and time overruns count as failures.
inline std::vector<CheckResult> run_checks(VerifyLevel level, const VerifyContext& ctx = {}) {
  std::vector<CheckResult> out;
  for (const auto& spec : acceptance_checks()) {
    if (level == VerifyLevel::fast && spec.level == VerifyLevel::full) continue;
    CheckResult res;
    res.id = spec.id;
    res.name = spec.name;
    detail::Report rep;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      spec.run(ctx, rep);
    } catch (const std::exception& e) {
      rep.expect(false, std::string("exception: ") + e.what());
    }
    res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.expect(res.seconds < spec.time_limit_s,
               "runtime " + detail::num(res.seconds) + " s over limit " + detail::num(spec.time_limit_s) + " s");
    res.passed = rep.passed();
    res.detail = rep.str();
    out.push_back(std::move(res));
  }
  return out;
}

}  // namespace geobound
