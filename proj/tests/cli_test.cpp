// End-to-end tests for the mgd command line tool. The binary path arrives via
// the MGD_BIN compile definition; fixtures are written to a fresh temp dir.

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

namespace {

struct RunResult {
  std::string output;  // stdout and stderr combined
  int exit_code = -1;
};

class CliTest : public ::testing::Test {
 protected:
  static void SetUpTestSuite() {
    char tmpl[] = "/tmp/mgd_cli_XXXXXX";
    ASSERT_NE(mkdtemp(tmpl), nullptr);
    dir_ = tmpl;
    write("sphere.mgd", "M(1,2,2,1)\n");
    write("torus.mgd", "M(1,2,1,2)\n");
    write("hopf.mgd", "X+(1,3,2,4) X+(3,1,4,2)\n");
    write("trefoil.mgd", "X+(1,4,2,5) X+(3,6,4,1) X+(5,2,6,3)\n");
    write("d9b.mgd", "M(1,2,3,4) X+(4,3,5,6) X+(6,5,2,1)\n");
    write("kink.mgd", "X+(1,1,2,2)\n");
    write("unknot.mgd", "O(1)\n");
    write("twokink.mgd", "X+(1,1,2,3) X+(3,2,4,4)\n");
    write("t24.mgd", "X+(1,2,4,3) X+(3,4,6,5) X+(5,6,8,7) X+(7,8,2,1)\n");
    write("mplustre.mgd", "M(1,2,2,1) X+(3,6,4,7) X+(5,8,6,3) X+(7,4,8,5)\n");
    write("a9.mgd", "M(3,2,6,4) X+(1,7,2,8) X+(5,8,3,9) X+(9,4,10,5) X+(1,10,6,7)\n");
    write("b9.mgd", "X+(2,3,4,1) X+(1,4,3,2)\n");
    write("poke.mgd", "X+(1,2,3,4) X+(1,4,3,2)\n");
    write("bad.mgd", "M(1,2,2)\n");
  }

  static void write(const std::string& name, const std::string& content) {
    std::ofstream out(dir_ + "/" + name);
    ASSERT_TRUE(out.good());
    out << content;
  }

  static std::string fx(const std::string& name) { return dir_ + "/" + name; }

  static RunResult run(const std::vector<std::string>& args) {
    std::string cmd = std::string("\"") + MGD_BIN + "\"";
    for (const auto& a : args) cmd += " " + a;
    cmd += " 2>&1";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.output.append(buf, n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
  }

  static std::string dir_;
};

std::string CliTest::dir_;

TEST_F(CliTest, ValidateText) {
  auto ok = run({"validate", fx("sphere.mgd"), "--format=text"});
  EXPECT_EQ(ok.output, "planar, 1 vertex, 2 edges, 3 faces, 0 free loops\n");
  EXPECT_EQ(ok.exit_code, 0);

  auto bad = run({"validate", fx("torus.mgd"), "--format=text"});
  EXPECT_EQ(bad.output, "non-planar, component genus [1]\n");
  EXPECT_EQ(bad.exit_code, 1);
}

TEST_F(CliTest, ValidateJson) {
  auto r = run({"validate", fx("sphere.mgd")});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"planar\": true"), std::string::npos);
  EXPECT_NE(r.output.find("\"faces\": 3"), std::string::npos);
  EXPECT_NE(r.output.find("\"marked_vertices\": 1"), std::string::npos);
}

TEST_F(CliTest, ResolveText) {
  auto lo = run({"resolve", fx("d9b.mgd"), "--side=minus", "--format=text"});
  EXPECT_EQ(lo.output, "X+(1,1,2,3) X+(3,2,4,4)\n");
  EXPECT_EQ(lo.exit_code, 0);
  auto hi = run({"resolve", fx("d9b.mgd"), "--side=plus", "--format=text"});
  EXPECT_EQ(hi.output, "X+(1,2,3,4) X+(2,1,4,3)\n");
  EXPECT_EQ(hi.exit_code, 0);
}

TEST_F(CliTest, InvariantsText) {
  auto r = run({"invariants", fx("hopf.mgd"), "--format=text"});
  EXPECT_EQ(r.output,
            "components: 2\n"
            "writhe: -2\n"
            "bracket: -A^4 - A^-4\n"
            "jones: -A^10 - A^2\n"
            "jones_set: -A^-2 - A^-10 -A^10 - A^2\n");
  EXPECT_EQ(r.exit_code, 0);
}

TEST_F(CliTest, CertifyVerdictsAndExitCodes) {
  // A refutation is a definite answer: exit 0.
  auto ref = run({"certify", fx("trefoil.mgd"), "--format=text"});
  EXPECT_EQ(ref.output, "h-admissible: no\n");
  EXPECT_EQ(ref.exit_code, 0);

  auto yes = run({"certify", fx("d9b.mgd"), "--format=text"});
  EXPECT_EQ(yes.output,
            "h-admissible: yes\n"
            "lower: 1 circles, 0 hopf\n"
            "upper: 0 circles, 1 hopf\n");
  EXPECT_EQ(yes.exit_code, 0);

  auto unk = run({"certify", fx("poke.mgd"), "--budget-nodes=1", "--format=text"});
  EXPECT_EQ(unk.output, "h-admissible: unknown\n");
  EXPECT_EQ(unk.exit_code, 2);
}

TEST_F(CliTest, CertifySingularJson) {
  auto r = run({"certify", fx("d9b.mgd"), "--singular"});
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.output.find("\"h_admissible\": true"), std::string::npos);
  EXPECT_NE(r.output.find("\"admissible\": false"), std::string::npos);
  EXPECT_NE(r.output.find("\"hopf_positive\": 1"), std::string::npos);
  EXPECT_NE(r.output.find("\"singular_vertices\": []"), std::string::npos);
  EXPECT_NE(r.output.find("\"singular_vertices\": [\n      1,\n      2\n    ]"),
            std::string::npos);
  EXPECT_NE(r.output.find("\"any_unknown\": false"), std::string::npos);
}

TEST_F(CliTest, SurfaceStatusesAndExitCodes) {
  auto ok = run({"surface", fx("sphere.mgd"), "--format=text"});
  EXPECT_EQ(ok.output,
            "status: ok\n"
            "euler_characteristic: 2\n"
            "double_points: 0\n"
            "orientable: yes\n"
            "admissible: yes\n");
  EXPECT_EQ(ok.exit_code, 0);

  auto unk = run({"surface", fx("d9b.mgd"), "--budget-depth=1", "--budget-nodes=3",
                  "--format=text"});
  EXPECT_EQ(unk.output, "status: unknown\n");
  EXPECT_EQ(unk.exit_code, 2);

  auto not_adm = run({"surface", fx("mplustre.mgd"), "--format=text"});
  EXPECT_EQ(not_adm.output, "status: not_admissible\n");
  EXPECT_EQ(not_adm.exit_code, 0);
}

TEST_F(CliTest, SitesText) {
  auto curls = run({"sites", fx("kink.mgd"), "--rules=omega1", "--dir=forward",
                    "--format=text"});
  EXPECT_EQ(curls.output, "omega1 forward 0\nomega1 forward 1\n");
  EXPECT_EQ(curls.exit_code, 0);

  // A base-rule selector includes its mirror.
  auto triples = run({"sites", fx("hopf.mgd"), "--rules=omega9", "--dir=backward",
                      "--format=text"});
  EXPECT_EQ(triples.output,
            "omega9 backward 0\nomega9 backward 1\nomega9 backward 2\n"
            "omega9 backward 3\nomega9_m backward 0\nomega9_m backward 1\n"
            "omega9_m backward 2\nomega9_m backward 3\n");
  EXPECT_EQ(triples.exit_code, 0);
}

TEST_F(CliTest, MoveApplication) {
  auto r = run({"move", fx("kink.mgd"), "--rule=omega1", "--site=0", "--dir=forward",
                "--format=text"});
  EXPECT_EQ(r.output, "O(1)\n");
  EXPECT_EQ(r.exit_code, 0);
}

TEST_F(CliTest, MoveErrors) {
  auto oor = run({"move", fx("unknot.mgd"), "--rule=omega1", "--site=7",
                  "--dir=backward", "--format=text"});
  EXPECT_EQ(oor.output, "error: rule omega1: site 7 out of range (2 sites)\n");
  EXPECT_EQ(oor.exit_code, 1);

  // Refuted side condition: a definite error.
  auto refused = run({"move", fx("t24.mgd"), "--rule=omega9", "--site=0",
                      "--dir=backward", "--format=text"});
  EXPECT_EQ(refused.output,
            "side condition: omega9: a side of the move is not H-admissible\n");
  EXPECT_EQ(refused.exit_code, 1);

  // Undecided side condition under a starved budget: exit 2.
  auto undecided = run({"move", fx("hopf.mgd"), "--rule=omega9", "--site=0",
                        "--dir=backward", "--budget-nodes=1", "--format=text"});
  EXPECT_EQ(undecided.output,
            "side condition: omega9: could not decide whether crossing p is singular\n");
  EXPECT_EQ(undecided.exit_code, 2);
}

TEST_F(CliTest, SearchText) {
  auto path = run({"search", fx("a9.mgd"), fx("b9.mgd"), "--rules=typeI,omega9",
                   "--format=text"});
  EXPECT_EQ(path.output,
            "outcome: path\n"
            "steps: 2\n"
            "  omega2 forward 0\n"
            "  omega9_m forward 0\n");
  EXPECT_EQ(path.exit_code, 0);

  auto exhausted = run({"search", fx("unknot.mgd"), fx("twokink.mgd"), "--rules=typeI",
                        "--depth=1", "--format=text"});
  EXPECT_EQ(exhausted.output, "outcome: exhausted\n");
  EXPECT_EQ(exhausted.exit_code, 2);

  auto nonplanar = run({"search", fx("sphere.mgd"), fx("torus.mgd"), "--rules=typeI",
                        "--format=text"});
  EXPECT_EQ(nonplanar.output, "non-planar: diagram is not planar; component genus: 1\n");
  EXPECT_EQ(nonplanar.exit_code, 1);
}

TEST_F(CliTest, ErrorReporting) {
  auto missing = run({"validate", "/nonexistent.mgd"});
  EXPECT_EQ(missing.output, "error: cannot read file: /nonexistent.mgd\n");
  EXPECT_EQ(missing.exit_code, 1);

  auto parse = run({"validate", fx("bad.mgd")});
  EXPECT_EQ(parse.output, "parse error: line 1, column 1: expected ',' in 'M(1,2,2)'\n");
  EXPECT_EQ(parse.exit_code, 1);

  auto selector = run({"sites", fx("hopf.mgd"), "--rules=bogus", "--format=text"});
  EXPECT_EQ(selector.output, "error: unknown rule selector 'bogus'\n");
  EXPECT_EQ(selector.exit_code, 1);
}

TEST_F(CliTest, OutputIsByteDeterministic) {
  const std::vector<std::vector<std::string>> commands = {
      {"validate", fx("sphere.mgd")},
      {"validate", fx("torus.mgd"), "--format=text"},
      {"resolve", fx("d9b.mgd"), "--side=plus"},
      {"invariants", fx("hopf.mgd")},
      {"certify", fx("d9b.mgd"), "--singular"},
      {"certify", fx("trefoil.mgd")},
      {"surface", fx("d9b.mgd")},
      {"sites", fx("hopf.mgd"), "--rules=all", "--dir=both"},
      {"move", fx("hopf.mgd"), "--rule=omega2", "--site=3", "--dir=backward"},
      {"search", fx("a9.mgd"), fx("b9.mgd"), "--rules=typeI,omega9"},
  };
  for (const auto& cmd : commands) {
    auto first = run(cmd);
    auto second = run(cmd);
    EXPECT_EQ(first.output, second.output) << cmd[0];
    EXPECT_EQ(first.exit_code, second.exit_code) << cmd[0];
    EXPECT_FALSE(first.output.empty()) << cmd[0];
  }
}

}  // namespace
