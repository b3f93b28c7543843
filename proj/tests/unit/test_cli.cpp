#include <gtest/gtest.h>

#include <cstdlib>
#include <sstream>

#include <nlohmann/json.hpp>

#include "cli.hpp"
#include "corpus.hpp"

using namespace triaco;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string data(const std::string& name) { return std::string(TRIACO_TEST_DATA) + "/" + name; }

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "triaco");
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Check, ValidAndCorrupt) {
  const Result ok = run({"check", data("d2.json")});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out.substr(0, 4), "PASS");
  const Result bad = run({"check", data("d2_corrupt.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("FAIL"), std::string::npos);
  EXPECT_NE(bad.out.find("(7)"), std::string::npos);
}

TEST(Check, JsonStatus) {
  const Result r = run({"--json", "check", data("d2_corrupt.json")});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "fail");
  EXPECT_GT(j["violations"].get<int>(), 0);
}

TEST(Trees, CountAndList) {
  EXPECT_EQ(run({"trees", "--degree", "3", "--count"}).out, "11\n");
  const Result list = run({"trees", "--degree", "2", "--list"});
  EXPECT_EQ(list.out, "((**)*)\n(*(**))\n(***)\n");
  EXPECT_EQ(run({"trees", "--degree", "9", "--count"}).code, 2);
}

TEST(Coho2, AbelianH2) {
  const Result r = run({"h2", data("abelian1.json"), "--module", data("trivial1.json")});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, 6), "dim 3\n");
}

TEST(Coho2, EquivalentExtensions) {
  const std::vector<std::string> base{"equiv-ext", data("abelian1.json"), "--module", data("trivial1.json")};
  auto with = [&](const char* f, const char* g) {
    auto args = base;
    args.insert(args.end(), {"--cocycle", data(f), "--other", data(g)});
    return run(args);
  };
  EXPECT_EQ(with("f_left.json", "f_left.json").code, 0);
  const Result r = with("f_left.json", "f_right.json");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not equivalent\n");
}

TEST(Hochschild, EnvironmentDegreeGuard) {
  const std::vector<std::string> args{"hochschild", data("abelian1.json"), "--coeff", "trivial", "--degree", "5"};
  unsetenv("TRIACO_MAX_DEGREE");
  const Result guarded = run(args);
  EXPECT_EQ(guarded.code, 2);
  EXPECT_NE(guarded.err.find("DegreeTooHigh"), std::string::npos);
  setenv("TRIACO_MAX_DEGREE", "5", 1);
  const Result allowed = run(args);
  unsetenv("TRIACO_MAX_DEGREE");
  EXPECT_EQ(allowed.code, 0);
  EXPECT_NE(allowed.out.find("\n5\t197\t"), std::string::npos);
}

TEST(Deformation, VerifyAndEquiv) {
  const Result good = run({"deform-verify", data("d2_deform.json")});
  EXPECT_EQ(good.code, 0);
  EXPECT_NE(good.out.find("infinitesimal cocycle: yes"), std::string::npos);
  const Result bad = run({"deform-verify", data("d2_deform_bad.json")});
  EXPECT_EQ(bad.code, 1);
  EXPECT_NE(bad.out.find("infinitesimal cocycle: no"), std::string::npos);
  EXPECT_EQ(run({"deform-equiv", data("d2_deform.json"), data("d2_deform.json"), data("phi_id.json")}).code, 0);
}

TEST(Transport, PushforwardPreservesAxioms) {
  const Result r = run({"pushforward", data("d2.json"), data("shear.json")});
  ASSERT_EQ(r.code, 0);
  const Trialgebra pushed = parse_algebra(r.out);
  EXPECT_TRUE(check_axioms(pushed).ok());
  EXPECT_EQ(pushed, pushforward(corpus::dual_numbers(), LinearMap(Matrix{{1, 1}, {0, 1}})));
}

TEST(Derivations, Companions) {
  EXPECT_EQ(run({"derive", data("d2.json")}).out.substr(0, 6), "dim 5\n");
  const Result r = run({"derive-companions", data("d2.json"), "--given-d", data("d_diag.json")});
  EXPECT_EQ(r.code, 0);
}

TEST(Errors, BadInputsExitTwo) {
  for (const char* f : {"bad_syntax.json", "bad_rational.json", "missing.json"}) {
    const Result r = run({"check", data(f)});
    EXPECT_EQ(r.code, 2) << f;
    EXPECT_EQ(r.err.substr(0, 7), "error: ") << f;
    EXPECT_NE(r.err.find(f), std::string::npos) << f;
  }
  EXPECT_EQ(run({"no-such-command"}).code, 2);
}

TEST(Output, Deterministic) {
  for (const std::vector<std::string>& args :
       {std::vector<std::string>{"derive", data("d2.json")},
        std::vector<std::string>{"hochschild", data("d2.json"), "--coeff", "self", "--degree", "3"},
        std::vector<std::string>{"--json", "center", data("d2.json")}}) {
    const Result a = run(args), b = run(args);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(a.code, b.code);
  }
}
