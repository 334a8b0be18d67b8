#pragma once

// JSON and CSV shapes of the public value types.

#include <cstdio>
#include <string>

#include "json.hpp"

#include "geobound/bounds.hpp"
#include "geobound/search.hpp"
#include "geobound/torus.hpp"

namespace geobound {

using json = nlohmann::json;

inline void to_json(json& j, const TraceTriple& x) {
  j = json{{"r", x.r}, {"s", x.s}, {"t", x.t}, {"boundary_length", x.boundary}};
}

inline void from_json(const json& j, TraceTriple& x) {
  j.at("r").get_to(x.r);
  j.at("s").get_to(x.s);
  j.at("t").get_to(x.t);
  j.at("boundary_length").get_to(x.boundary);
}

inline void to_json(json& j, const GeodesicInfo& g) {
  j = json{{"slope_p", g.slope.p()}, {"slope_q", g.slope.q()}, {"halftrace", g.halftrace}, {"length", g.length}};
}

inline void from_json(const json& j, GeodesicInfo& g) {
  g.slope = Slope(j.at("slope_p").get<std::int64_t>(), j.at("slope_q").get<std::int64_t>());
  j.at("halftrace").get_to(g.halftrace);
  j.at("length").get_to(g.length);
}

inline void to_json(json& j, const CrossingPair& c) {
  j = json{{"first", c.first}, {"second", c.second}, {"crossings", c.crossings}};
}

inline void from_json(const json& j, CrossingPair& c) {
  j.at("first").get_to(c.first);
  j.at("second").get_to(c.second);
  j.at("crossings").get_to(c.crossings);
}

inline void to_json(json& j, const BoundsReport& b) {
  j = json{{"n", b.n}, {"l_n", b.l_n}, {"u_n", b.upper_u_n}, {"L_n", nullptr}, {"sandwich_ok", b.sandwich_ok}};
  if (b.known_L_n) j["L_n"] = *b.known_L_n;
}

inline void from_json(const json& j, BoundsReport& b) {
  j.at("n").get_to(b.n);
  j.at("l_n").get_to(b.l_n);
  j.at("u_n").get_to(b.upper_u_n);
  b.known_L_n.reset();
  if (j.contains("L_n") && !j.at("L_n").is_null()) b.known_L_n = j.at("L_n").get<double>();
  j.at("sandwich_ok").get_to(b.sandwich_ok);
}

inline void to_json(json& j, const ExtremalResult& e) {
  j = json{{"n", e.n},
           {"value", e.value},
           {"label", e.torus_restricted ? "torus-restricted upper bound" : "L_n"},
           {"triple", e.triple},
           {"search_point", {{"r", e.search_r}, {"s", e.search_s}}},
           {"pair", e.pair},
           {"evaluations", e.evaluations},
           {"converged", e.converged},
           {"certificates", {{"l_n", e.certificates.l_n}, {"u_n", e.certificates.u_n}}},
           {"torus_restricted", e.torus_restricted}};
}

inline void from_json(const json& j, ExtremalResult& e) {
  j.at("n").get_to(e.n);
  j.at("value").get_to(e.value);
  j.at("triple").get_to(e.triple);
  j.at("search_point").at("r").get_to(e.search_r);
  j.at("search_point").at("s").get_to(e.search_s);
  j.at("pair").get_to(e.pair);
  j.at("evaluations").get_to(e.evaluations);
  j.at("converged").get_to(e.converged);
  j.at("certificates").at("l_n").get_to(e.certificates.l_n);
  j.at("certificates").at("u_n").get_to(e.certificates.u_n);
  j.at("torus_restricted").get_to(e.torus_restricted);
}

/// 15 significant digits.
inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

/// Rounds every floating-point leaf to 15 significant digits.
inline json round_numbers(json j) {
  if (j.is_number_float()) return std::stod(format_number(j.get<double>()));
  if (j.is_structured())
    for (auto& v : j) v = round_numbers(std::move(v));
  return j;
}

inline constexpr const char* kBoundsCsvHeader = "n,l_n,u_n,L_n,sandwich_ok";

inline std::string bounds_csv_row(const BoundsReport& b) {
  std::string row = std::to_string(b.n) + "," + format_number(b.l_n) + "," + format_number(b.upper_u_n) + ",";
  if (b.known_L_n) row += format_number(*b.known_L_n);
  row += b.sandwich_ok ? ",true" : ",false";
  return row;
}

}  // namespace geobound
