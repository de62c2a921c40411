#include "mgd/surface.hpp"

#include <gtest/gtest.h>

#include "test_util.hpp"

namespace mgd {
namespace {

using test::P;

struct Expected {
  const char* text;
  int chi;
  int dp;
  int trivial_minus, hopf_minus, trivial_plus, hopf_plus;
  bool orientable;
  bool admissible;
};

TEST(Surface, FixtureReports) {
  const Expected table[] = {
      // One saddle between one circle and two: a sphere.
      {test::kSphere, 2, 0, 1, 0, 2, 0, true, true},
      {test::kLoopVertex, 2, 0, 2, 0, 1, 0, true, true},
      // One Hopf cap above the saddle: an immersed sphere with one double point.
      {test::kD9b, 2, 1, 1, 0, 0, 1, true, false},
      {test::kMarkedTrefoil, 2, 1, 1, 0, 0, 1, true, false},
      // chi = 1: a projective plane, necessarily non-orientable.
      {test::kNonOrientable, 1, 0, 1, 0, 1, 0, false, true},
      {test::kUnknot, 2, 0, 1, 0, 1, 0, true, true},
      // No saddles: each resolution is the diagram itself, so a Hopf diagram
      // presents two spheres meeting in two double points.
      {test::kHopf, 4, 2, 0, 1, 0, 1, true, false},
      {test::kHopfUnion, 6, 2, 1, 1, 1, 1, true, false},
  };
  for (const auto& e : table) {
    auto r = surface_report(P(e.text));
    ASSERT_EQ(r.status, SurfaceStatus::kOk) << e.text;
    EXPECT_EQ(r.report.euler_characteristic, e.chi) << e.text;
    EXPECT_EQ(r.report.double_points, e.dp) << e.text;
    EXPECT_EQ(r.report.trivial_minus, e.trivial_minus) << e.text;
    EXPECT_EQ(r.report.hopf_minus, e.hopf_minus) << e.text;
    EXPECT_EQ(r.report.trivial_plus, e.trivial_plus) << e.text;
    EXPECT_EQ(r.report.hopf_plus, e.hopf_plus) << e.text;
    EXPECT_EQ(r.report.orientable, e.orientable) << e.text;
    EXPECT_EQ(r.report.admissible, e.admissible) << e.text;
    EXPECT_EQ(r.admissibility.verdict, Verdict::kCertified) << e.text;
  }
}

TEST(Surface, EulerCharacteristicFormula) {
  // chi = circles(minus) + circles(plus) - saddles, counting a Hopf pair as
  // two circles.
  for (const char* s : {test::kSphere, test::kLoopVertex, test::kD9b, test::kNonOrientable,
                        test::kHopf, test::kHopfUnion}) {
    auto d = P(s);
    auto r = surface_report(d);
    ASSERT_EQ(r.status, SurfaceStatus::kOk) << s;
    const int c_minus = r.report.trivial_minus + 2 * r.report.hopf_minus;
    const int c_plus = r.report.trivial_plus + 2 * r.report.hopf_plus;
    EXPECT_EQ(r.report.euler_characteristic, c_minus + c_plus - d.marked_count()) << s;
    EXPECT_EQ(r.report.double_points, r.report.hopf_minus + r.report.hopf_plus) << s;
    EXPECT_EQ(r.report.admissible, r.report.double_points == 0) << s;
  }
}

TEST(Surface, RefutedAdmissibilityIsNotAdmissible) {
  auto r = surface_report(P(test::kMarkedPlusTrefoil));
  EXPECT_EQ(r.status, SurfaceStatus::kNotAdmissible);
  EXPECT_EQ(r.admissibility.verdict, Verdict::kRefuted);
}

TEST(Surface, StarvedBudgetIsUnknown) {
  auto r = surface_report(P(test::kD9b), CertifyBudget{1, 3});
  EXPECT_EQ(r.status, SurfaceStatus::kUnknown);
  EXPECT_EQ(r.admissibility.verdict, Verdict::kUnknown);
}

}  // namespace
}  // namespace mgd
