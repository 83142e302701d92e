#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "popmatch/error.hpp"
#include "popmatch/gadgets.hpp"
#include "popmatch/io.hpp"
#include "popmatch/solver.hpp"

namespace popmatch {
namespace {

namespace fs = std::filesystem;

std::vector<Instance> corpus() {
  return {condorcet_instance(CondorcetVariant::ZeroB),
          condorcet_instance(CondorcetVariant::ThreeOne),
          six_path_gadget(Rational(2)),
          appendix_instance(Rational(7, 2)),
          sat_to_instance(parse_cnf("(x|y|z)&(!x|y|w)"), Rational(3, 2))};
}

TEST(TextFormat, InstanceRoundTrip) {
  for (const Instance& inst : corpus()) {
    const std::string text = format_instance(inst);
    std::istringstream in(text);
    const LoadedInstance back = read_instance(in);
    EXPECT_EQ(format_instance(back.instance), text);
    EXPECT_EQ(back.instance.edges(), inst.edges());
  }
  const CostedInstance ci = is_to_instance(parse_graph("triangle"), Rational(4));
  const std::string text = format_instance(ci.instance, ci.costs);
  std::istringstream in(text);
  const LoadedInstance back = read_instance(in);
  EXPECT_EQ(back.costs, ci.costs);
  EXPECT_EQ(format_instance(back.instance, back.costs), text);
}

TEST(TextFormat, MatchingAndWitnessRoundTrip) {
  const Instance inst = appendix_instance(Rational(4));
  const SolveResult r = solve(inst);
  ASSERT_TRUE(r.matching);
  std::istringstream m_in(format_matching(inst, *r.matching));
  EXPECT_EQ(read_matching(inst, m_in), *r.matching);
  std::istringstream y_in(format_witness(inst, *r.witness));
  EXPECT_EQ(read_witness(inst, y_in), *r.witness);
}

ErrorCode parse_error_of(const std::string& text) {
  std::istringstream in(text);
  try {
    (void)read_instance(in);
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "accepted:\n" << text;
  return ErrorCode::InternalInconsistency;
}

TEST(TextFormat, RejectsMalformedInstances) {
  EXPECT_EQ(parse_error_of("popmatch-instance 2\nsizes 1 1\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of("popmatch-instance 1\nsizes 1 1\na a1 1/0 : b1\nb b1 1 : a1\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of("popmatch-instance 1\nsizes 1 1\na a1 1 : b9\nb b1 1 :\n"), ErrorCode::ParseError);
  EXPECT_EQ(parse_error_of("popmatch-instance 1\nsizes 1 1\na a1 1 : b1\nb b1 1 :\n"),
            ErrorCode::AsymmetricAdjacency);
  EXPECT_EQ(parse_error_of("popmatch-instance 1\nsizes 1 1\na a1 -1 : b1\nb b1 1 : a1\n"),
            ErrorCode::NegativeWeight);
}

// Runs the CLI in-process.
struct Cli {
  std::string out, err;
  int code = -1;
  explicit Cli(std::vector<std::string> args) {
    std::ostringstream o, e;
    code = cli::run(args, o, e);
    out = o.str();
    err = e.str();
  }
  nlohmann::json json() const { return nlohmann::json::parse(out); }
};

class CliTest : public ::testing::Test {
 protected:
  fs::path dir;
  void SetUp() override {
    dir = fs::temp_directory_path() /
          ("popmatch_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir);
  }
  void TearDown() override { fs::remove_all(dir); }
  std::string file(const std::string& name, const std::string& text) {
    const fs::path p = dir / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string& name) const { return (dir / name).string(); }
};

TEST_F(CliTest, SolveAppendixAndReCheck) {
  const std::string inst = path("app.txt");
  ASSERT_EQ(Cli({"gen", "appendix", "--out", inst}).code, 0);
  const Cli s({"solve", inst, "--matching-out", path("m.txt"), "--witness-out", path("w.txt")});
  ASSERT_EQ(s.code, cli::kOk) << s.err;
  const auto j = s.json();
  EXPECT_EQ(j["format"], "popmatch-result 1");
  EXPECT_EQ(j["outcome"], "FOUND");
  EXPECT_EQ(Cli({"verify", inst, path("m.txt")}).code, cli::kOk);
  EXPECT_EQ(Cli({"check-witness", inst, path("m.txt"), path("w.txt")}).code, cli::kOk);
  const std::string result = file("result.json", s.out);
  EXPECT_EQ(Cli({"verify", inst, result}).code, cli::kOk);
  EXPECT_EQ(Cli({"check-witness", inst, result, result}).code, cli::kOk);
}

TEST_F(CliTest, ExitCodes) {
  const std::string cond = path("c.txt");
  ASSERT_EQ(Cli({"gen", "condorcet", "--variant", "three-one", "--out", cond}).code, 0);
  const Cli e({"enumerate", cond});
  EXPECT_EQ(e.code, cli::kOk);
  EXPECT_EQ(e.json()["total"], 13);
  EXPECT_EQ(e.json()["popular_count"], 0);

  const std::string heavy = path("h.txt");
  ASSERT_EQ(Cli({"gen", "condorcet", "--variant", "custom", "--weights", "4,4,4,1,1", "--out", heavy}).code, 0);
  EXPECT_EQ(Cli({"solve", heavy}).code, cli::kNoPopular);
  EXPECT_EQ(Cli({"solve", cond}).code, cli::kInputError);  // c = 3 is not above 3

  const std::string m = file("m.txt", "popmatch-matching 1\na1 b1\n");
  const Cli v({"verify", cond, m});
  EXPECT_EQ(v.code, cli::kNegative);
  EXPECT_EQ(v.json()["outcome"], "unpopular");

  const std::string bad = file("bad.txt", "popmatch-instance 1\nsizes 1 1\na a1 1/0 : b1\nb b1 1 : a1\n");
  const Cli p({"solve", bad});
  EXPECT_EQ(p.code, cli::kInputError);
  EXPECT_NE(p.err.find("PARSE_ERROR"), std::string::npos);
  EXPECT_EQ(Cli({"solve", path("missing.txt")}).code, cli::kInputError);
  EXPECT_EQ(Cli({"frobnicate"}).code, cli::kInputError);
}

TEST_F(CliTest, EnumerationCapFromEnvironmentAndFlag) {
  const std::string cond = path("c.txt");
  ASSERT_EQ(Cli({"gen", "condorcet", "--variant", "zero-b", "--out", cond}).code, 0);
  ::setenv("POPMATCH_CAP", "5", 1);
  const Cli capped({"enumerate", cond});
  EXPECT_EQ(capped.code, cli::kScaleLimit);
  EXPECT_NE(capped.err.find("SCALE_LIMIT"), std::string::npos);
  EXPECT_EQ(Cli({"enumerate", cond, "--cap", "100"}).code, cli::kOk);
  ::unsetenv("POPMATCH_CAP");
  EXPECT_EQ(Cli({"enumerate", cond, "--jobs", "2"}).code, cli::kOk);
}

TEST_F(CliTest, GeneratorsAndWitnessCheck) {
  const std::string sat = path("s.txt");
  ASSERT_EQ(Cli({"gen", "sat", "--cnf", "(x|y|z)", "--c", "2", "--assignment", "x=1,y=0,z=0", "--out", sat,
                 "--matching-out", path("sm.txt"), "--witness-out", path("sw.txt")})
                .code,
            0);
  EXPECT_EQ(load_instance_file(sat).instance.vertex_count(), 30u);
  EXPECT_EQ(Cli({"check-witness", sat, path("sm.txt"), path("sw.txt")}).code, cli::kOk);

  const std::string is = path("t.txt");
  ASSERT_EQ(Cli({"gen", "independent-set", "--graph", "triangle", "--c", "4", "--out", is}).code, 0);
  const Cli e({"enumerate", is, "--omega"});
  ASSERT_EQ(e.code, cli::kOk);
  EXPECT_EQ(e.json()["max_omega"]["value"], "1");

  // A witness with a bumped value is rejected with the negative exit code.
  std::ifstream in(path("sw.txt"));
  std::stringstream buf;
  buf << in.rdbuf();
  std::string text = buf.str();
  const auto pos = text.find("\nb1 ");
  ASSERT_NE(pos, std::string::npos);
  const auto end = text.find('\n', pos + 1);
  text.replace(pos, end - pos, "\nb1 -100");
  const Cli bad({"check-witness", sat, path("sm.txt"), file("bad.txt", text)});
  EXPECT_EQ(bad.code, cli::kNegative);
  EXPECT_EQ(bad.json()["ok"], false);
}

TEST_F(CliTest, ForcedEdgeGenerator) {
  const std::string base = file("base.txt",
                                "popmatch-instance 1\nsizes 2 2\n"
                                "a a1 1 : b1 b2\na a2 1 : b1 b2\n"
                                "b b1 1 : a1 a2\nb b2 1 : a1 a2\n");
  const std::string red = path("r.txt");
  ASSERT_EQ(Cli({"gen", "forced-edges", "--base", base, "--forced", "a1:b1,a2:b2", "--out", red}).code, 0);
  const Instance inst = load_instance_file(red).instance;
  EXPECT_EQ(inst.a_count(), 12u);
  EXPECT_EQ(Cli({"gen", "forced-edges", "--base", base, "--forced", "a1:b1", "--out", red}).code,
            cli::kInputError);
}

}  // namespace
}  // namespace popmatch
