#include <gtest/gtest.h>

#include <set>

#include "symrig/error.hpp"
#include "symrig/report.hpp"

using namespace symrig;

TEST(Suites, UnknownSuiteThrows) {
  try {
    run_suite("bogus");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInvalidArgument);
  }
}

TEST(Suites, WeightsSuitePassesWithZeroSamples) {
  SuiteOptions o;
  o.seed = 1;
  o.samples = 0;
  SuiteReport r = run_suite("weights", o);
  EXPECT_TRUE(r.all_passed());
  std::size_t zero = 0;
  for (const auto& c : r.checks) zero += c.name.find("zero_weight_multiplicity") != std::string::npos;
  EXPECT_EQ(zero, 4u);
}

TEST(Suites, AllIsTheUnionWithoutDuplicates) {
  SuiteOptions o;
  o.samples = 2;
  o.algebra = AlgebraTag::C;
  std::multiset<std::string> parts;
  for (const auto& s : suite_names()) {
    if (s == "all") continue;
    for (const auto& c : run_suite(s, o).checks) parts.insert(c.name);
  }
  SuiteReport all = run_suite("all", o);
  std::multiset<std::string> names;
  for (const auto& c : all.checks) names.insert(c.name);
  EXPECT_EQ(names, parts);
  EXPECT_EQ(std::set<std::string>(names.begin(), names.end()).size(), names.size());
  EXPECT_TRUE(std::is_sorted(all.checks.begin(), all.checks.end(),
                             [](const CheckRecord& a, const CheckRecord& b) { return a.name < b.name; }));
  for (const auto& c : all.checks)
    if (c.status == CheckStatus::kFail) EXPECT_TRUE(c.witness) << c.name;
}

TEST(Suites, JsonIsDeterministic) {
  SuiteOptions o;
  o.seed = 42;
  o.samples = 5;
  o.algebra = AlgebraTag::HC;
  const std::string a = to_json(run_suite("jordan", o)), b = to_json(run_suite("jordan", o));
  EXPECT_EQ(a, b);
  EXPECT_NE(a.find("\"suite\": \"jordan\""), std::string::npos);
  o.seed = 43;
  EXPECT_EQ(run_suite("jordan", o).checks.size(), run_suite("jordan", o).checks.size());
}

TEST(Suites, DegenerationReportCarriesWitness) {
  SuiteReport r = run_suite("degeneration");
  const CheckRecord* c = r.find("degeneration.contradiction.Theta0");
  ASSERT_NE(c, nullptr);
  ASSERT_TRUE(c->witness);
  EXPECT_NE(c->witness->find("CONTRADICTION"), std::string::npos);
  EXPECT_NE(to_text(r).find("passed"), std::string::npos);
}
