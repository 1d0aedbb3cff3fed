#include <gtest/gtest.h>

#include <algorithm>

#include "pmob/error.hpp"
#include "pmob/mobius_engine.hpp"
#include "pmob/poset_oracle.hpp"
#include "pmob/shape.hpp"
#include "test_support.hpp"

namespace pmob {
namespace {

using test::P;

const MobiusOracleTable& oracle7() {
  static const MobiusOracleTable table(7);
  return table;
}

TEST(DecomposableUpper, SingletonFirstComponent) {
  MobiusEngine e;
  EXPECT_EQ(e.mobius_prop1(P("1"), P("1243")), 0);
  EXPECT_EQ(e.mobius_prop1(P("12"), P("132")), -1);
  EXPECT_EQ(e.mobius_prop1(P("1"), P("123")), 0);
  EXPECT_EQ(e.mobius_prop1(P("1"), P("132")), 1);
  EXPECT_THROW(e.mobius_prop1(P("1"), P("2143")), Error);
  EXPECT_THROW(e.mobius_prop1(Permutation{}, P("132")), Error);
}

TEST(DecomposableUpper, LongerFirstComponent) {
  MobiusEngine e;
  EXPECT_EQ(e.mobius_prop2(P("21"), P("2143")), 1);
  EXPECT_EQ(e.mobius_prop2(P("21"), P("214365")), 1);
  EXPECT_EQ(e.mobius_prop2(P("1"), P("2143")), -1);
  EXPECT_THROW(e.mobius_prop2(P("1"), P("132")), Error);
  EXPECT_THROW(e.mobius_prop2(P("1"), P("3142")), Error);
}

TEST(DecomposableUpper, SingletonBelowSum) {
  MobiusEngine e;
  EXPECT_EQ(e.mobius_cor3(P("21"), P("2143")), 1);
  EXPECT_EQ(e.mobius_cor3(P("21"), P("21435")), -1);
  EXPECT_EQ(e.mobius_cor3(P("21"), P("21543")), 0);
  EXPECT_THROW(e.mobius_cor3(P("2143"), P("214365")), Error);
}

TEST(DecomposableUpper, RoutingMatchesOracleForDecomposableUpperBounds) {
  const auto& oracle = oracle7();
  MobiusEngine e;
  for (std::size_t id = 0; id < oracle.size(); ++id) {
    const Permutation& pi = oracle.permutations()[id];
    if (sum_decompose(pi).size() < 2) continue;
    for (auto sid : oracle.downset_of(id)) {
      const Permutation& sigma = oracle.permutations()[sid];
      ASSERT_EQ(e.mobius(sigma, pi), oracle.mobius(sid, id)) << sigma.to_string() << " " << pi.to_string();
    }
  }
}

TEST(Weights, MinR) {
  EXPECT_EQ(min_r_general(P("21"), P("24153")), 1);
  EXPECT_EQ(min_r_general(P("21"), P("2143")), 1);
  EXPECT_EQ(min_r_general(P("3142"), P("315274968")), 2);
  EXPECT_EQ(min_r_general(P("315264"), P("315274968")), 1);
  EXPECT_EQ(min_r_general(P("21"), P("21436587")), 3);
}

TEST(Weights, General) {
  const Permutation pi = P("315274968");
  EXPECT_EQ(weight_general(P("3142"), P("315264"), pi), -1);
  EXPECT_EQ(weight_general(P("3142"), P("3142"), pi), 0);
  EXPECT_EQ(weight_general(P("3142"), P("31527486"), pi), 1);
  EXPECT_EQ(weight_general(P("21"), P("21"), P("123")), 0);
  EXPECT_EQ(weight_general(P("3142"), P("21"), pi), 0);
}

TEST(Weights, FamilyMembership) {
  EXPECT_FALSE(sum_family_membership(P("3142")).has_value());
  auto m = sum_family_membership(P("2143"));
  ASSERT_TRUE(m.has_value());
  EXPECT_EQ(m->alpha, P("21"));
  EXPECT_EQ(m->sign, 1);
  EXPECT_EQ(sum_family_membership(P("1324"))->sign, 1);
  EXPECT_EQ(sum_family_membership(P("132"))->sign, -1);
  EXPECT_EQ(sum_family_membership(P("21435"))->sign, -1);
  EXPECT_FALSE(sum_family_membership(P("21354")).has_value());
  EXPECT_FALSE(sum_family_membership(P("123")).has_value());
  EXPECT_FALSE(sum_family_membership(P("12")).has_value());
}

TEST(ContributingSet, WorkedExample) {
  MobiusEngine e;
  auto set = e.contributing_set(P("3142"), P("315274968"));
  std::sort(set.begin(), set.end(), [](const auto& a, const auto& b) { return a.alpha < b.alpha; });
  // P2 and R2 have weight 0 and drop out; every remaining row has r = 1.
  const std::vector<WeightedContribution> expected = {
      {P("24153"), 1, -1},   {P("241635"), 1, -1},   {P("315264"), 1, -1},   {P("2416375"), 1, 1},
      {P("3152746"), 1, -1}, {P("24163857"), 1, 1},  {P("31527486"), 1, 1},
  };
  EXPECT_EQ(set, expected);
}

TEST(ContributingSet, SmallCases) {
  MobiusEngine e;
  const auto set = e.contributing_set(P("21"), P("2143"));
  ASSERT_EQ(set.size(), 1u);
  EXPECT_EQ(set[0].alpha, P("21"));
  EXPECT_EQ(set[0].r, 1);
  EXPECT_EQ(set[0].weight, -1);
  EXPECT_TRUE(e.contributing_set(P("21"), P("12")).empty());
}

TEST(GeneralEngine, KnownValues) {
  MobiusEngine e({.oscillation_fast_path = false});
  EXPECT_EQ(e.mobius_theorem(P("3142"), P("315274968")), -6);
  EXPECT_EQ(e.mobius_theorem(P("1"), P("24153")), 6);
  EXPECT_EQ(e.mobius_theorem(P("21"), P("1324")), 1);
  EXPECT_THROW(e.mobius_theorem(P("1"), P("231")), Error);
  EXPECT_THROW(e.mobius_theorem(P("1"), P("1234")), Error);
  EXPECT_THROW(e.mobius_theorem(P("12"), P("2413")), Error);
  std::vector<TheoremTraceRow> trace;
  EXPECT_EQ(e.mobius_theorem(P("3142"), P("315274968"), &trace), -6);
  EXPECT_EQ(trace.size(), 7u);
}

TEST(GeneralEngine, MatchesOracleUpToLength7) {
  const auto& oracle = oracle7();
  MobiusEngine e({.oscillation_fast_path = false});
  for (std::size_t id = 0; id < oracle.size(); ++id) {
    const Permutation& pi = oracle.permutations()[id];
    if (pi.size() < 4 || pi.is_identity() || pi.is_reverse_identity()) continue;
    for (auto sid : oracle.downset_of(id)) {
      const Permutation& sigma = oracle.permutations()[sid];
      if (!is_sum_indecomposable(sigma)) continue;
      ASSERT_EQ(e.mobius_theorem(sigma, pi), oracle.mobius(sid, id)) << sigma.to_string() << " " << pi.to_string();
    }
  }
}

TEST(GeneralEngine, ContributionWeightsStayUnit) {
  MobiusEngine e;
  for (const auto& pi : all_permutations(6)) {
    for (const auto& c : e.contributing_set(P("1"), pi)) ASSERT_TRUE(c.weight == 1 || c.weight == -1) << pi.to_string();
  }
}

TEST(Dispatcher, Examples) {
  MobiusEngine e;
  EXPECT_EQ(e.mobius(P("1"), P("12345")), 0);
  EXPECT_EQ(e.mobius(P("1"), P("1")), 1);
  EXPECT_EQ(e.mobius(P("132"), P("24153")), mobius_naive(P("132"), P("24153")));
  EXPECT_EQ(e.mobius(P("12"), P("24153")), mobius_naive(P("12"), P("24153")));
  EXPECT_GE(e.stats().naive_fallbacks, 1u);
  EXPECT_EQ(e.mobius(P("1"), P("24153")), 6);
  EXPECT_EQ(e.mobius(P("3142"), P("315274968")), -6);
  EXPECT_EQ(e.mobius(P("21"), P("12")), 0);
  EXPECT_EQ(e.mobius(P("1"), P("54321")), 0);
  EXPECT_EQ(e.mobius(P("1"), P("21")), -1);
  EXPECT_EQ(e.mobius(Permutation{}, P("1")), -1);
  EXPECT_EQ(e.mobius(Permutation{}, P("21")), 0);
}

TEST(Dispatcher, AllPairsMatchOracleUpToLength7) {
  const auto& oracle = oracle7();
  MobiusEngine e;
  for (std::size_t id = 0; id < oracle.size(); ++id) {
    for (auto sid : oracle.downset_of(id)) {
      ASSERT_EQ(e.mobius(oracle.permutations()[sid], oracle.permutations()[id]), oracle.mobius(sid, id));
    }
  }
}

TEST(Dispatcher, CacheDoesNotChangeResults) {
  MobiusEngine cached;
  MobiusEngine uncached({.cache_entries = 0});
  for (const auto& pi : all_permutations(6)) {
    for (const auto& sigma : all_permutations(3)) {
      ASSERT_EQ(cached.mobius(sigma, pi), uncached.mobius(sigma, pi));
    }
  }
  EXPECT_EQ(uncached.cache().size(), 0u);
  EXPECT_GT(uncached.cache().dropped(), 0u);
}

TEST(Dispatcher, OptionsFromEnvironment) {
  ::setenv("MOBIUS_CACHE_BYTES", "9600", 1);
  EXPECT_EQ(options_from_environment().cache_entries, 100u);
  ::setenv("MOBIUS_CACHE_BYTES", "lots", 1);
  EXPECT_THROW(options_from_environment(), Error);
  ::unsetenv("MOBIUS_CACHE_BYTES");
  EXPECT_EQ(options_from_environment().cache_entries, MobiusCache::kUnbounded);
}

}  // namespace
}  // namespace pmob
