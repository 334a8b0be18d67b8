// geobound: bounds tables, length spectra, extremal searches and the
// self-verification suite. Exit codes: 0 ok, 1 verify failure, 2 usage,
// 3 invalid surface, 4 search unconverged.

#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"

#include "geobound/bounds.hpp"
#include "geobound/io.hpp"
#include "geobound/search.hpp"
#include "geobound/torus.hpp"
#include "geobound/verify.hpp"

namespace {

using geobound::json;

enum Exit { kOk = 0, kVerifyFail = 1, kUsage = 2, kInvalidSurface = 3, kUnconverged = 4 };

void emit(const std::string& command, const json& params, const json& result, const std::string& status) {
  json env{{"command", command}, {"params", params}, {"result", result}, {"status", status}};
  std::cout << geobound::round_numbers(env).dump(2) << '\n';
}

int fail(const std::string& command, const json& params, const std::string& message, int code) {
  emit(command, params, json{{"message", message}}, "error");
  std::cerr << "geobound " << command << ": " << message << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lower bounds on the longer of two crossing simple closed geodesics"};
  app.require_subcommand(1);

  unsigned n_max = 10;
  std::string format = "json";
  double tol = geobound::kDefaultTol;
  auto* bounds = app.add_subcommand("bounds", "l_n, u_n and known L_n for n = 1..n_max");
  bounds->add_option("--n-max", n_max, "largest n")->check(CLI::PositiveNumber);
  bounds->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  bounds->add_option("--tol", tol, "root-finding tolerance")->check(CLI::PositiveNumber);

  double r = 0.0, s = 0.0, cutoff = 0.0;
  std::optional<double> t;
  auto* spectrum = app.add_subcommand("spectrum", "simple length spectrum of a once-punctured torus");
  spectrum->add_option("--r", r, "half-trace of slope (1,0)")->required();
  spectrum->add_option("--s", s, "half-trace of slope (0,1)")->required();
  spectrum->add_option("--t", t, "half-trace of slope (1,1); defaults to the smaller completing root");
  spectrum->add_option("--cutoff", cutoff, "largest length to list")->required();

  geobound::SearchConfig config;
  auto* extremal = app.add_subcommand("extremal", "minimize the n-crossing objective over once-punctured tori");
  extremal->add_option("--n", config.n, "crossing number")->required()->check(CLI::PositiveNumber);
  extremal->add_option("--grid-lo", config.grid_lo, "grid lower bound for r and s");
  extremal->add_option("--grid-hi", config.grid_hi, "grid upper bound for r and s");
  extremal->add_option("--grid-steps", config.grid_steps, "grid points per axis");
  extremal->add_option("--cutoff-factor", config.cutoff_factor, "enumeration cutoff as a multiple of l_n");
  extremal->add_option("--tol", config.refine_tol, "simplex diameter at which refinement stops");
  extremal->add_option("--max-iters", config.max_refine_iters, "refinement iteration cap");
  extremal->add_option("--jobs", config.jobs, "grid worker threads (0: all cores)")->envname("GEO_JOBS");

  double alpha = 0.0, eps = 0.0;
  auto* pair = app.add_subcommand("pair", "shortest geodesic crossing alpha twice on a one-holed torus");
  pair->add_option("--alpha", alpha, "length of alpha")->required();
  pair->add_option("--eps", eps, "boundary length (0: cusp)");

  std::string level = "fast";
  unsigned verify_jobs = 1;
  auto* verify = app.add_subcommand("verify", "run the self-verification suite");
  verify->add_option("--level", level, "fast or full")->check(CLI::IsMember({"fast", "full"}));
  verify->add_option("--jobs", verify_jobs, "grid worker threads")->envname("GEO_JOBS");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (bounds->parsed()) {
    const json params{{"n_max", n_max}, {"format", format}, {"tol", tol}};
    try {
      if (format == "csv") {
        std::cout << geobound::kBoundsCsvHeader << '\n';
        for (unsigned n = 1; n <= n_max; ++n) std::cout << geobound::bounds_csv_row(geobound::sandwich_report(n, tol)) << '\n';
        return kOk;
      }
      json rows = json::array();
      for (unsigned n = 1; n <= n_max; ++n) {
        json row = geobound::sandwich_report(n, tol);
        if (n <= 3) row["L_n_symbolic"] = geobound::known_L_symbolic(n);
        rows.push_back(std::move(row));
      }
      emit("bounds", params, rows, "ok");
      return kOk;
    } catch (const std::exception& e) {
      return fail("bounds", params, e.what(), kUsage);
    }
  }

  if (spectrum->parsed()) {
    json params{{"r", r}, {"s", s}, {"cutoff", cutoff}};
    if (t) params["t"] = *t;
    try {
      if (!(r > 1.0) || !(s > 1.0) || (t && !(*t > 1.0)))
        return fail("spectrum", params, "degenerate surface: half-traces must exceed 1", kInvalidSurface);
      const double third = t ? *t : geobound::complete_triple(r, s).low;
      const double residual = geobound::cusp_relation_residual(r, s, third);
      if (!(std::fabs(residual) <= 1e-6))
        return fail("spectrum", params, "not a cusped torus: residual " + geobound::format_number(residual),
                    kInvalidSurface);
      const geobound::TraceTriple x = geobound::normalize({r, s, third, 0.0});
      emit("spectrum", params, json{{"triple", x}, {"geodesics", geobound::enumerate_geodesics(x, cutoff)}}, "ok");
      return kOk;
    } catch (const std::domain_error& e) {
      return fail("spectrum", params, e.what(), kInvalidSurface);
    }
  }

  if (extremal->parsed()) {
    const json params{{"n", config.n},
                      {"grid_lo", config.grid_lo},
                      {"grid_hi", config.grid_hi},
                      {"grid_steps", config.grid_steps},
                      {"cutoff_factor", config.cutoff_factor},
                      {"tol", config.refine_tol},
                      {"max_iters", config.max_refine_iters},
                      {"jobs", config.jobs}};
    try {
      const auto res = geobound::find_extremal(config);
      json result = res;
      result["search_domain"] = "once-punctured tori";
      if (config.n <= 3) result["L_n_symbolic"] = geobound::known_L_symbolic(config.n);
      emit("extremal", params, result, res.converged ? "ok" : "unconverged");
      return res.converged ? kOk : kUnconverged;
    } catch (const geobound::SearchFailure& e) {
      emit("extremal", params, json{{"message", e.what()}}, "infeasible");
      std::cerr << "geobound extremal: " << e.what() << '\n';
      return kUsage;
    } catch (const std::exception& e) {
      return fail("extremal", params, e.what(), kUsage);
    }
  }

  if (pair->parsed()) {
    const json params{{"alpha", alpha}, {"eps", eps}};
    try {
      const double beta = geobound::min_two_crossing_partner(alpha, eps);
      emit("pair", params, json{{"alpha", alpha}, {"eps", eps}, {"beta", beta}, {"halftrace", std::cosh(0.5 * beta)}},
           "ok");
      return kOk;
    } catch (const std::exception& e) {
      return fail("pair", params, e.what(), kUsage);
    }
  }

  if (verify->parsed()) {
    const json params{{"level", level}};
    geobound::VerifyContext ctx;
    ctx.jobs = verify_jobs;
    const auto results =
        geobound::run_checks(level == "full" ? geobound::VerifyLevel::full : geobound::VerifyLevel::fast, ctx);
    json checks = json::array();
    bool ok = true;
    for (const auto& c : results) {
      ok = ok && c.passed;
      checks.push_back({{"id", c.id}, {"name", c.name}, {"passed", c.passed}, {"seconds", c.seconds}, {"detail", c.detail}});
      std::cerr << (c.passed ? "PASS " : "FAIL ") << c.id << ' ' << c.name << '\n';
    }
    emit("verify", params, json{{"checks", checks}, {"all_passed", ok}}, ok ? "ok" : "error");
    return ok ? kOk : kVerifyFail;
  }
  return kUsage;
}
