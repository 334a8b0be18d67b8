#include <algorithm>

#include <gtest/gtest.h>

#include "geobound/verify.hpp"

using namespace geobound;

namespace {

const CheckResult* find(const std::vector<CheckResult>& rs, const std::string& name) {
  auto it = std::find_if(rs.begin(), rs.end(), [&](const CheckResult& r) { return r.name == name; });
  return it == rs.end() ? nullptr : &*it;
}

}  // namespace

TEST(Verify, FastPassesOnCorrectBuild) {
  const auto rs = run_checks(VerifyLevel::fast);
  EXPECT_EQ(rs.size(), 6u);
  for (const auto& r : rs) EXPECT_TRUE(r.passed) << r.id << " " << r.name << ": " << r.detail;
  EXPECT_EQ(find(rs, "l2_reproduction"), nullptr);
}

TEST(Verify, TamperedConstantFailsNamedChecks) {
  VerifyContext ctx;
  ctx.known = [](unsigned n) { return n == 2 ? known_L(2) + 1e-3 : known_L(n); };
  const auto rs = run_checks(VerifyLevel::fast, ctx);
  ASSERT_NE(find(rs, "exact_identities"), nullptr);
  EXPECT_FALSE(find(rs, "exact_identities")->passed);
  EXPECT_FALSE(find(rs, "fixtures")->passed);
  EXPECT_NE(find(rs, "fixtures")->detail.find("twice-crossing"), std::string::npos);
  EXPECT_TRUE(find(rs, "ln_solver")->passed);
  EXPECT_TRUE(find(rs, "collar_property")->passed);
}

TEST(Verify, TamperedL3FailsOnlyFixturesAtFastLevel) {
  VerifyContext ctx;
  ctx.known = [](unsigned n) { return n == 3 ? known_L(3) - 1e-4 : known_L(n); };
  const auto rs = run_checks(VerifyLevel::fast, ctx);
  EXPECT_FALSE(find(rs, "fixtures")->passed);
  EXPECT_TRUE(find(rs, "exact_identities")->passed);
}
