#include "mgd/bracket.hpp"

#include <cstdlib>
#include <numeric>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "mgd/moves.hpp"
#include "mgd/resolve.hpp"
#include "mgd/text_format.hpp"
#include "test_util.hpp"

namespace mgd {
namespace {

using test::lp;
using test::P;

// Link-diagram fixtures with at most six crossings.
const std::vector<const char*>& link_corpus() {
  static const std::vector<const char*> corpus = {
      test::kUnknot,    test::kKink,       test::kKinkM,       test::kHopf,
      test::kPoke,      test::kTrefoil,    test::kFig8,        test::kT24,
      test::kHopfUnion, test::kKinkedHopf, test::kTrefoilPair, test::kClosure9B,
      "X+(1,1,2,3) X+(3,2,4,4)",
  };
  return corpus;
}

// Plain 2^n state sum written independently of the library: per state, union
// the two darts of every edge and the smoothed slot pairs at every crossing,
// then count cycles. A joins (slot0,slot1),(slot2,slot3); B the other pair.
LaurentPolynomial state_sum(const Diagram& d) {
  const int n = d.vertex_count();
  const int darts = d.dart_count();
  auto total = LaurentPolynomial::zero();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    std::vector<int> parent(darts);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
    for (DartId a = 0; a < darts; ++a) unite(a, d.alpha(a));
    int a_count = 0;
    for (int v = 0; v < n; ++v) {
      if ((mask >> v) & 1u) {
        unite(Diagram::dart(v, 1), Diagram::dart(v, 2));
        unite(Diagram::dart(v, 3), Diagram::dart(v, 0));
      } else {
        ++a_count;
        unite(Diagram::dart(v, 0), Diagram::dart(v, 1));
        unite(Diagram::dart(v, 2), Diagram::dart(v, 3));
      }
    }
    int cycles = 0;
    for (DartId a = 0; a < darts; ++a) cycles += (find(a) == a);
    const int loops = cycles + static_cast<int>(d.loops().size());
    total += LaurentPolynomial::term(1, 2 * a_count - n) * bracket_delta().pow(loops - 1);
  }
  return total;
}

TEST(Bracket, FrozenValues) {
  EXPECT_EQ(kauffman_bracket(P(test::kUnknot)), LaurentPolynomial::one());
  EXPECT_EQ(kauffman_bracket(P("O(1) O(2)")), bracket_delta());
  EXPECT_EQ(kauffman_bracket(P(test::kKink)), lp({{-1, 3}}));
  EXPECT_EQ(kauffman_bracket(P(test::kKinkM)), lp({{-1, -3}}));
  EXPECT_EQ(kauffman_bracket(P(test::kHopf)), lp({{-1, 4}, {-1, -4}}));
  EXPECT_EQ(kauffman_bracket(P(test::kPoke)), bracket_delta());
  EXPECT_EQ(kauffman_bracket(P(test::kTrefoil)), lp({{1, 7}, {-1, 3}, {-1, -5}}));
  EXPECT_EQ(kauffman_bracket(P(test::kFig8)),
            lp({{1, 8}, {-1, 4}, {1, 0}, {-1, -4}, {1, -8}}));
}

TEST(Bracket, MirrorInvertsTheVariable) {
  for (const char* s : link_corpus()) {
    auto d = P(s);
    EXPECT_EQ(kauffman_bracket(mirror(d)), kauffman_bracket(d).invert_variable()) << s;
  }
}

TEST(Bracket, MatchesIndependentStateSum) {
  for (const char* s : link_corpus()) {
    auto d = P(s);
    EXPECT_EQ(kauffman_bracket(d), state_sum(d)) << s;
  }
}

TEST(Bracket, DisjointUnionMultipliesByDelta) {
  EXPECT_EQ(kauffman_bracket(P(test::kHopfUnion)),
            bracket_delta() * kauffman_bracket(P(test::kHopf)));
  EXPECT_EQ(kauffman_bracket(P(test::kTrefoilPair)),
            bracket_delta() * kauffman_bracket(P(test::kTrefoil)).pow(2));
}

TEST(Bracket, JonesValues) {
  EXPECT_EQ(jones(P(test::kUnknot)), LaurentPolynomial::one());
  EXPECT_EQ(jones(P(test::kKink)), LaurentPolynomial::one());
  EXPECT_EQ(jones(P(test::kKinkM)), LaurentPolynomial::one());
  EXPECT_EQ(jones(P(test::kTrefoil)), lp({{-1, 16}, {1, 12}, {1, 4}}));
}

TEST(Bracket, JonesSet) {
  auto hopf = jones_set(P(test::kHopf));
  std::set<LaurentPolynomial> expected = {lp({{-1, -2}, {-1, -10}}),
                                          lp({{-1, 10}, {-1, 2}})};
  EXPECT_EQ(hopf, expected);
  // A knot admits a single value up to global reversal.
  EXPECT_EQ(jones_set(P(test::kTrefoil)),
            std::set<LaurentPolynomial>{jones(P(test::kTrefoil))});
}

// First Reidemeister move: removing a curl divides the bracket by -A^3
// (positive curl) or -A^-3 (its mirror).
TEST(Bracket, CurlRemovalScalesTheBracket) {
  const int r1 = *rule_index("omega1");
  const int r1m = *rule_index("omega1_m");
  int applications = 0;
  for (const char* s : link_corpus()) {
    auto d = P(s);
    auto before = kauffman_bracket(d);
    for (auto [rule, factor] :
         {std::pair{r1, lp({{-1, 3}})}, std::pair{r1m, lp({{-1, -3}})}}) {
      for (const auto& site : enumerate_sites(d, rule, MoveDir::kForward)) {
        auto after = apply_move(d, site);
        EXPECT_EQ(before, factor * kauffman_bracket(after)) << s;
        ++applications;
      }
      for (const auto& site : enumerate_sites(d, rule, MoveDir::kBackward)) {
        auto bigger = apply_move(d, site);
        EXPECT_EQ(kauffman_bracket(bigger), factor * before) << s;
        ++applications;
      }
    }
  }
  EXPECT_GT(applications, 20);
}

// Second Reidemeister move: the bracket is unchanged, both directions.
TEST(Bracket, PokeInvariance) {
  const int r2 = *rule_index("omega2");
  int applications = 0;
  for (const char* s : link_corpus()) {
    auto d = P(s);
    auto before = kauffman_bracket(d);
    for (MoveDir dir : {MoveDir::kForward, MoveDir::kBackward}) {
      for (const auto& site : enumerate_sites(d, r2, dir)) {
        EXPECT_EQ(kauffman_bracket(apply_move(d, site)), before) << s;
        ++applications;
      }
    }
  }
  EXPECT_GT(applications, 50);
}

// Third Reidemeister move: none of the base fixtures carries a triangle, so
// build one by poking the trefoil, then slide the strand both ways.
TEST(Bracket, TriangleSlideInvariance) {
  auto trefoil = P(test::kTrefoil);
  auto poked = apply_move(trefoil, enumerate_sites(trefoil, *rule_index("omega2"),
                                                   MoveDir::kBackward)[2]);
  auto before = kauffman_bracket(poked);
  EXPECT_EQ(before, kauffman_bracket(trefoil));
  int applications = 0;
  for (const char* rule : {"omega3", "omega3_m"}) {
    for (MoveDir dir : {MoveDir::kForward, MoveDir::kBackward}) {
      for (const auto& site : enumerate_sites(poked, *rule_index(rule), dir)) {
        EXPECT_EQ(kauffman_bracket(apply_move(poked, site)), before);
        ++applications;
      }
    }
  }
  EXPECT_GE(applications, 1);
}

TEST(Bracket, CrossingBudget) {
  std::string big;
  for (int i = 0; i < 25; ++i) {
    big += "X+(" + std::to_string(2 * i + 1) + "," + std::to_string(2 * i + 1) + "," +
           std::to_string(2 * i + 2) + "," + std::to_string(2 * i + 2) + ") ";
  }
  auto d = P(big);
  test::expect_throw_contains<CrossingBudgetError>(
      [&] { (void)kauffman_bracket(d); },
      "kauffman_bracket: 25 crossings exceed the cap of 24");
}

TEST(Bracket, MarkedDiagramsAreRejected) {
  for (const char* s : {test::kSphere, test::kD9b}) {
    auto d = P(s);
    test::expect_throw_contains<MgdError>([&] { (void)kauffman_bracket(d); },
                                          "marked vertices");
    test::expect_throw_contains<MgdError>([&] { (void)jones_set(d); }, "marked vertices");
    test::expect_throw_contains<MgdError>([&] { (void)jones(d); }, "marked vertices");
  }
}

TEST(Bracket, ThreadedEvaluationMatches) {
  auto d = P(test::kTrefoilPair);
  auto serial = kauffman_bracket(d);
  ::setenv("MGD_THREADS", "4", 1);
  auto threaded = kauffman_bracket(d);
  ::unsetenv("MGD_THREADS");
  EXPECT_EQ(threaded, serial);
}

}  // namespace
}  // namespace mgd
