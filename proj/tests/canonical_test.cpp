#include "mgd/canonical.hpp"

#include <algorithm>
#include <set>
#include <vector>

#include <gtest/gtest.h>

#include "mgd/text_format.hpp"
#include "test_util.hpp"

namespace mgd {
namespace {

using test::P;

TEST(Canonical, RelabelingInvariance) {
  EXPECT_EQ(canonical_code(P(test::kSphere)), canonical_code(P("M(5,9,9,5)")));
  EXPECT_EQ(canonical_code(P(test::kHopf)),
            canonical_code(P("X+(30,10,40,20) X+(10,30,20,40)")));
}

TEST(Canonical, VertexOrderInvariance) {
  auto kh = P(test::kKinkedHopf);
  for (const auto& perm : std::vector<std::vector<int>>{{1, 0, 2}, {2, 0, 1}, {0, 2, 1}}) {
    EXPECT_EQ(canonical_code(permute_vertices(kh, perm)), canonical_code(kh));
  }
}

TEST(Canonical, DistinguishesDifferentMaps) {
  std::vector<CanonicalCode> codes = {
      canonical_code(P(test::kSphere)),  canonical_code(P(test::kLoopVertex)),
      canonical_code(P(test::kKink)),    canonical_code(P(test::kKinkM)),
      canonical_code(P(test::kHopf)),    canonical_code(P(test::kPoke)),
      canonical_code(P(test::kTrefoil)), canonical_code(P(test::kFig8)),
      canonical_code(P(test::kD9b)),     canonical_code(P(test::kNonOrientable)),
  };
  std::set<CanonicalCode> unique(codes.begin(), codes.end());
  EXPECT_EQ(unique.size(), codes.size());
}

TEST(Canonical, MarkedTrefoilCollapsesToTheMarkedClasp) {
  // Replacing one trefoil crossing with a marked vertex lands, up to
  // relabeling, on the same decorated map as the two-crossing example with a
  // marked vertex; their resolutions and surface data agree for that reason.
  EXPECT_EQ(canonical_code(P(test::kMarkedTrefoil)), canonical_code(P(test::kD9b)));
}

TEST(Canonical, HopfChiralityCollapses) {
  // Intent: rotating one crossing by two slots carries the Hopf clasp onto the
  // clasp with both crossings flipped, so as unoriented decorated maps the two
  // chiralities share one code.  (One flipped crossing is the unlink instead.)
  auto hopf = P(test::kHopf);
  EXPECT_EQ(canonical_code(hopf),
            canonical_code(crossing_change(crossing_change(hopf, 0), 1)));
  EXPECT_EQ(canonical_code(hopf), canonical_code(mirror(hopf)));
  EXPECT_NE(canonical_code(hopf), canonical_code(crossing_change(hopf, 0)));
}

TEST(Canonical, FormIsIdempotent) {
  for (const char* s : {test::kSphere, test::kHopf, test::kD9b, test::kHopfUnion,
                        test::kTrefoilPair, test::kClosure9A}) {
    auto once = canonical_form(P(s));
    EXPECT_EQ(canonical_form(once), once) << s;
    EXPECT_EQ(canonical_code(once), canonical_code(P(s))) << s;
  }
}

TEST(Canonical, FrozenCanonicalTexts) {
  EXPECT_EQ(serialize(canonical_form(P(test::kSphere))), "M(1,2,2,1)\n");
  EXPECT_EQ(serialize(canonical_form(P(test::kKink))), "X+(1,1,2,2)\n");
  EXPECT_EQ(serialize(canonical_form(P(test::kHopf))), "X+(1,2,3,4) X+(2,1,4,3)\n");
  EXPECT_EQ(serialize(canonical_form(P(test::kD9b))), "X+(1,2,3,4) X+(2,1,5,6) M(4,3,6,5)\n");
}

TEST(Canonical, RankIsAPermutation) {
  for (const char* s : {test::kSphere, test::kHopf, test::kD9b, test::kTrefoilPair}) {
    auto d = P(s);
    auto rank = canonical_rank(d);
    ASSERT_EQ(static_cast<int>(rank.size()), d.dart_count()) << s;
    auto sorted = rank;
    std::sort(sorted.begin(), sorted.end());
    for (int i = 0; i < d.dart_count(); ++i) EXPECT_EQ(sorted[i], i) << s;
  }
}

TEST(Canonical, RankIsRelabelingStable) {
  // Intent: ranks name darts independently of vertex numbering; a permuted
  // copy must assign the same rank to the corresponding dart.
  auto kh = P(test::kKinkedHopf);
  std::vector<int> perm = {2, 0, 1};
  auto permuted = permute_vertices(kh, perm);
  auto ra = canonical_rank(kh);
  auto rb = canonical_rank(permuted);
  for (int v = 0; v < kh.vertex_count(); ++v) {
    for (int s = 0; s < 4; ++s) {
      EXPECT_EQ(ra[Diagram::dart(v, s)], rb[Diagram::dart(perm[v], s)]);
    }
  }
}

TEST(Canonical, CodeOrdering) {
  auto a = canonical_code(P(test::kSphere));
  auto b = canonical_code(P(test::kHopf));
  EXPECT_TRUE(a == a);
  EXPECT_TRUE((a < b) != (b < a));
  std::set<CanonicalCode> s{a, b, a};
  EXPECT_EQ(s.size(), 2u);
}

}  // namespace
}  // namespace mgd
