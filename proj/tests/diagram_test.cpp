#include "mgd/diagram.hpp"

#include <gtest/gtest.h>

#include "mgd/bracket.hpp"
#include "mgd/canonical.hpp"
#include "mgd/validate.hpp"
#include "test_util.hpp"

namespace mgd {
namespace {

using test::P;

TEST(Diagram, BuilderSphere) {
  // Intent: the one-marked-vertex sphere diagram wires darts 0..3 as
  // alpha = (0 3)(1 2) with sigma the slot rotation.
  Diagram::Builder b;
  b.add_vertex(VertexKind::kMarked, {1, 2, 2, 1});
  auto d = b.build();
  EXPECT_EQ(d.vertex_count(), 1);
  EXPECT_EQ(d.dart_count(), 4);
  EXPECT_EQ(d.edge_count(), 2);
  EXPECT_EQ(d.kind(0), VertexKind::kMarked);
  EXPECT_EQ(d.alpha(0), 3);
  EXPECT_EQ(d.alpha(1), 2);
  EXPECT_EQ(Diagram::sigma(0), 1);
  EXPECT_EQ(Diagram::sigma(3), 0);
  EXPECT_EQ(Diagram::vertex_of(7), 1);
  EXPECT_EQ(Diagram::slot_of(7), 3);
  EXPECT_EQ(Diagram::dart(1, 3), 7);
  for (int dart = 0; dart < d.dart_count(); ++dart) {
    EXPECT_NE(d.alpha(dart), dart);
    EXPECT_EQ(d.alpha(d.alpha(dart)), dart);
  }
}

TEST(Diagram, BuilderRejectsUnpairedLabels) {
  {
    Diagram::Builder b;
    b.add_vertex(VertexKind::kMarked, {1, 2, 3, 1});  // 2 and 3 occur once
    EXPECT_THROW((void)b.build(), MgdError);
  }
  {
    Diagram::Builder b;
    b.add_vertex(VertexKind::kMarked, {1, 2, 2, 1});
    b.add_vertex(VertexKind::kCrossing, {1, 3, 3, 4});  // 1 occurs three times
    EXPECT_THROW((void)b.build(), MgdError);
  }
}

TEST(Diagram, FreeLoops) {
  Diagram::Builder b;
  b.add_loop();
  b.add_loop(7);
  auto d = b.build();
  EXPECT_EQ(d.vertex_count(), 0);
  ASSERT_EQ(d.loops().size(), 2u);
  EXPECT_EQ(d.loops()[0].face_tag, 0);
  EXPECT_EQ(d.loops()[1].face_tag, 7);
}

TEST(Diagram, EqualityIsStructural) {
  EXPECT_EQ(P(test::kHopf), P(test::kHopf));
  EXPECT_NE(P(test::kHopf), P(test::kPoke));
  // Same structure written with different arc labels parses to the same diagram.
  EXPECT_EQ(P(test::kSphere), P("M(5,9,9,5)"));
}

TEST(Diagram, MirrorIsAnInvolution) {
  for (const char* s : {test::kSphere, test::kHopf, test::kTrefoil, test::kD9b, test::kKink}) {
    auto d = P(s);
    EXPECT_EQ(mirror(mirror(d)), d) << s;
  }
  // Mirroring swaps the two curl chiralities.
  EXPECT_EQ(canonical_code(mirror(P(test::kKink))), canonical_code(P(test::kKinkM)));
}

TEST(Diagram, CrossingChange) {
  auto hopf = P(test::kHopf);
  auto once = crossing_change(hopf, 0);
  // One flipped clasp crossing unlinks the diagram: the bracket drops to delta.
  EXPECT_EQ(kauffman_bracket(once), bracket_delta());
  // Changing back restores the map up to relabeling: each change re-attaches
  // the four edge ends one slot around, so dart labels drift even though the
  // underlying decorated map returns.
  EXPECT_EQ(canonical_code(crossing_change(once, 0)), canonical_code(hopf));
  EXPECT_EQ(kauffman_bracket(crossing_change(once, 0)), kauffman_bracket(hopf));
  EXPECT_THROW((void)crossing_change(P(test::kSphere), 0), MgdError);
}

TEST(Diagram, PermuteVertices) {
  // The kinked Hopf has a unique curl vertex, so moving it yields a different
  // vertex ordering of the same map.
  auto kh = P(test::kKinkedHopf);
  auto permuted = permute_vertices(kh, {2, 0, 1});
  EXPECT_NE(permuted, kh);
  EXPECT_EQ(canonical_code(permuted), canonical_code(kh));
  auto back = permute_vertices(permuted, {1, 2, 0});
  EXPECT_EQ(back, kh);
  EXPECT_EQ(validate(permuted).faces, validate(kh).faces);
}

TEST(Diagram, TrefoilCyclicSymmetry) {
  // Intent: the standard trefoil closure is invariant under rotating its three
  // crossings, so the cyclic permutation reproduces the identical diagram.
  auto tre = P(test::kTrefoil);
  EXPECT_EQ(permute_vertices(tre, {1, 2, 0}), tre);
}

}  // namespace
}  // namespace mgd
