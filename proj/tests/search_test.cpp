#include "mgd/search.hpp"

#include <gtest/gtest.h>

#include "mgd/canonical.hpp"
#include "test_util.hpp"

namespace mgd {
namespace {

using test::P;

int R(const char* name) { return *rule_index(name); }

// The two closures differ by one triple-point move plus a poke; with the
// right rule set the search finds exactly that two-step script.
TEST(Search, UpperTripleClosureReachesTheClasp) {
  auto a = P(test::kClosure9A);
  auto b = P(test::kClosure9B);
  auto r = search_equivalence(a, b, parse_rule_selector("typeI,omega9"));
  ASSERT_EQ(r.outcome, SearchOutcome::kPath);
  ASSERT_EQ(r.path.size(), 2u);
  EXPECT_EQ(r.path[0].rule, R("omega2"));
  EXPECT_EQ(r.path[0].dir, MoveDir::kForward);
  EXPECT_EQ(r.path[0].site_index, 0);
  EXPECT_EQ(r.path[1].rule, R("omega9_m"));
  EXPECT_EQ(r.path[1].dir, MoveDir::kForward);
  EXPECT_EQ(r.path[1].site_index, 0);
  EXPECT_EQ(r.nodes_expanded, 2385);
  EXPECT_EQ(r.depth_reached, 2);
  EXPECT_EQ(canonical_code(replay(a, r.path)), canonical_code(b));
}

TEST(Search, LowerTripleClosureReachesTheClasp) {
  auto a = P(test::kClosure9pA);
  auto b = P(test::kClosure9B);
  auto r = search_equivalence(a, b, parse_rule_selector("typeI,omega9p"));
  ASSERT_EQ(r.outcome, SearchOutcome::kPath);
  ASSERT_EQ(r.path.size(), 2u);
  EXPECT_EQ(r.path[0].rule, R("omega2"));
  EXPECT_EQ(r.path[1].rule, R("omega9p_m"));
  EXPECT_EQ(r.path[1].dir, MoveDir::kForward);
  EXPECT_EQ(r.nodes_expanded, 2385);
  EXPECT_EQ(canonical_code(replay(a, r.path)), canonical_code(b));
}

// Type-I moves preserve the smoothed circle counts, so the same endpoints
// are separated immediately when triple-point moves are excluded.
TEST(Search, TypeIOnlyDistinguishesTheClosures) {
  auto r = search_equivalence(P(test::kClosure9A), P(test::kClosure9B),
                              parse_rule_selector("typeI"));
  ASSERT_EQ(r.outcome, SearchOutcome::kDistinguished);
  EXPECT_EQ(r.nodes_expanded, 0);
  ASSERT_TRUE(r.distinguisher.has_value());
  EXPECT_EQ(r.distinguisher->invariant, "resolution_counts");
  EXPECT_EQ(r.distinguisher->euler_a, 4);
  EXPECT_EQ(r.distinguisher->euler_b, 4);
  EXPECT_EQ(r.distinguisher->resolution_counts_a, std::make_optional(std::make_pair(2, 3)));
  EXPECT_EQ(r.distinguisher->resolution_counts_b, std::make_optional(std::make_pair(2, 2)));
}

TEST(Search, EulerCharacteristicSeparatesSurfaces) {
  auto r = search_equivalence(P(test::kSphere), P(test::kNonOrientable),
                              parse_rule_selector("typeI"));
  ASSERT_EQ(r.outcome, SearchOutcome::kDistinguished);
  EXPECT_EQ(r.distinguisher->invariant, "euler_characteristic");
  EXPECT_EQ(r.distinguisher->euler_a, 2);
  EXPECT_EQ(r.distinguisher->euler_b, 1);
}

TEST(Search, JonesSetSeparatesTrefoilFromUnknot) {
  auto r = search_equivalence(P(test::kTrefoil), P(test::kUnknot),
                              parse_rule_selector("typeI"));
  ASSERT_EQ(r.outcome, SearchOutcome::kDistinguished);
  EXPECT_EQ(r.distinguisher->invariant, "jones_set_minus");
  EXPECT_EQ(r.distinguisher->resolution_counts_a, std::make_optional(std::make_pair(1, 1)));
  EXPECT_EQ(r.distinguisher->jones_minus_a.size(), 1u);
  EXPECT_EQ(r.distinguisher->jones_minus_b.size(), 1u);
  EXPECT_NE(r.distinguisher->jones_minus_a, r.distinguisher->jones_minus_b);
}

TEST(Search, BudgetBoundaries) {
  auto un = P(test::kUnknot);
  auto two = P("X+(1,1,2,3) X+(3,2,4,4)");
  auto rules = parse_rule_selector("typeI");

  auto shallow = search_equivalence(un, two, rules, SearchBudget{1, 200000});
  EXPECT_EQ(shallow.outcome, SearchOutcome::kExhausted);
  EXPECT_EQ(shallow.nodes_expanded, 3);
  EXPECT_EQ(shallow.depth_reached, 1);

  auto deep = search_equivalence(un, two, rules, SearchBudget{2, 200000});
  ASSERT_EQ(deep.outcome, SearchOutcome::kPath);
  ASSERT_EQ(deep.path.size(), 2u);
  for (const auto& step : deep.path) {
    EXPECT_EQ(step.rule, R("omega1"));
    EXPECT_EQ(step.dir, MoveDir::kBackward);
    EXPECT_EQ(step.site_index, 0);
  }

  auto tight = search_equivalence(un, two, rules, SearchBudget{8, 1});
  EXPECT_EQ(tight.outcome, SearchOutcome::kExhausted);
  EXPECT_EQ(tight.nodes_expanded, 1);
}

TEST(Search, IdenticalEndpointsNeedNoMoves) {
  auto d9b = P(test::kD9b);
  auto r = search_equivalence(d9b, d9b, parse_rule_selector("typeIII"));
  EXPECT_EQ(r.outcome, SearchOutcome::kPath);
  EXPECT_TRUE(r.path.empty());
  EXPECT_EQ(r.nodes_expanded, 0);
}

TEST(Search, UndecidedAdmissibilityBlocksTripleRules) {
  auto d9b = P(test::kD9b);
  auto r = search_equivalence(d9b, d9b, parse_rule_selector("typeIII"), SearchBudget{},
                              SiteOptions{0, 1, nullptr});
  EXPECT_EQ(r.outcome, SearchOutcome::kPreconditionUnknown);
}

TEST(Search, RefutedAdmissibilityThrowsForTripleRules) {
  test::expect_throw_contains<NotHAdmissibleError>(
      [] {
        (void)search_equivalence(P(test::kMarkedPlusTrefoil), P(test::kSphere),
                                 parse_rule_selector("typeIII"));
      },
      "search: an endpoint is not H-admissible, so type-III moves do not apply");
}

TEST(Search, RefutedAdmissibilityIsFineWithoutTripleRules) {
  auto r = search_equivalence(P(test::kMarkedPlusTrefoil), P(test::kSphere),
                              parse_rule_selector("typeI"));
  ASSERT_EQ(r.outcome, SearchOutcome::kDistinguished);
  EXPECT_EQ(r.distinguisher->invariant, "euler_characteristic");
  EXPECT_EQ(r.distinguisher->euler_a, 4);
  EXPECT_EQ(r.distinguisher->euler_b, 2);
}

}  // namespace
}  // namespace mgd
