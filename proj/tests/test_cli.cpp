#include <blocksuper/blocksuper.hpp>
#include <blocksuper/cli.hpp>

#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace blocksuper;
using cli::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const CliHooks& hooks = {}) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err, hooks);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_path(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "blocksuper_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string write_config(const std::string& name, const json& cfg) {
  const auto p = temp_path(name);
  std::ofstream(p) << cfg.dump(2);
  return p.string();
}

// Odd-odd coefficient depends on the first index: breaks super-Jacobi and the module axioms.
std::optional<Term> corrupted_rule(const StructureParams& p, const BasisKey& x, const BasisKey& y) {
  auto t = block_bracket_rule(p, x, y);
  if (t && x.is_odd() && y.is_odd()) t->coef += Scalar(x.twice_index);
  return t;
}

}  // namespace

TEST(Cli, BracketExample) {
  const auto r = run({"bracket", "--sector", "RB", "--q", "2", "--x", "L(1,0)", "--y", "L(2,0)"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "2*L(3,0)\n");
}

TEST(Cli, SemanticErrorExitsTwo) {
  const auto r = run({"bracket", "--sector", "RB", "--q", "2", "--x", "G(1/2,0)", "--y", "L(2,0)"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("semantic error"), std::string::npos);
  EXPECT_NE(r.err.find("G(1/2,0)"), std::string::npos);
}

TEST(Cli, UsageErrorsExitTwo) {
  const auto unknown = run({"frobnicate"});
  EXPECT_EQ(unknown.code, 2);
  EXPECT_NE(unknown.err.find("Usage"), std::string::npos);
  EXPECT_EQ(run({"bracket", "--sector", "RB", "--q", "2", "--x", "L(1,0)", "--y", "L(2,0)", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"bracket", "--sector", "RB", "--q", "0", "--x", "L(1,0)", "--y", "L(2,0)"}).code, 2);
  EXPECT_EQ(run({"bracket", "--sector", "RB", "--q", "2", "--x", "L(1,0", "--y", "L(2,0)"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST(Cli, ActAndParseCheck) {
  const auto r = run({"act", "--family", "R", "--q", "2", "--lambda", "3", "--a", "1", "--b", "0", "--x", "L(1,0)",
                      "--v", "even: 1; odd: 0"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "even: 3*u - 6; odd: 0\n");
  const auto p = run({"parse-check", "--kind", "element", "--sector", "NSB", "--text", " 3/2 * G( 1/2 , 0)+L(2,1)"});
  EXPECT_EQ(p.code, 0);
  EXPECT_EQ(p.out, "L(2,1) + 3/2*G(1/2,0)\n");
}

TEST(Cli, ReportSchema) {
  const auto path = temp_path("probe.json");
  const auto r = run({"probe", "--report", path.string()});
  EXPECT_EQ(r.code, 0);
  const json doc = json::parse(slurp(path));
  std::vector<std::string> keys;
  for (auto it = doc.begin(); it != doc.end(); ++it) keys.push_back(it.key());
  EXPECT_EQ(keys, (std::vector<std::string>{"version", "config", "records", "summary"}));
  EXPECT_EQ(doc["version"], kToolVersion);
  ASSERT_FALSE(doc["records"].empty());
  std::size_t pass = 0;
  for (const auto& rec : doc["records"]) {
    for (const char* k : {"id", "params", "status", "defect", "certificate"}) EXPECT_TRUE(rec.contains(k)) << k;
    if (rec["status"] == "pass") ++pass;
    for (const auto& [k, v] : rec["params"].items()) EXPECT_TRUE(v.is_string()) << k;
  }
  EXPECT_EQ(doc["summary"]["pass"], pass);
  EXPECT_EQ(doc["summary"]["fail"], doc["records"].size() - pass);
}

TEST(Cli, ReportExamples) {
  cli::Report empty;
  const json e = empty.to_json(json::object());
  EXPECT_EQ(e["records"], json::array());
  EXPECT_EQ(e["summary"], (json{{"pass", 0}, {"fail", 0}}));

  cli::Report one;
  CheckReport ok("ok");
  ok.check(true, [] { return std::string(); });
  one.add("ok", json::object(), ok);
  EXPECT_EQ(one.to_json(json::object())["summary"], (json{{"pass", 1}, {"fail", 0}}));

  cli::Report bad;
  CheckReport fail("bad");
  fail.check(false, [] { return std::string("J(L(0,0), G(0,0), G(1,0)) = 2*L(1,0)"); });
  bad.add("bad", json::object(), fail);
  const json b = bad.to_json(json::object());
  EXPECT_EQ(b["records"][0]["status"], "fail");
  ASSERT_TRUE(b["records"][0]["defect"].is_string());
  EXPECT_NE(b["records"][0]["defect"].get<std::string>().find("2*L(1,0)"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
  const auto path = temp_path("det.json");
  const std::vector<std::string> args{"invariants", "--report", path.string()};
  ASSERT_EQ(run(args).code, 0);
  const std::string first = slurp(path);
  ASSERT_EQ(run(args).code, 0);
  EXPECT_EQ(slurp(path), first);
}

TEST(Cli, UnwritableReportPathExitsTwo) {
  const auto r = run({"rank2", "--q", "1", "--lambda", "1", "--a", "0", "--b", "0", "--e", "1", "--report",
                      "/nonexistent-dir/x/report.json"});
  EXPECT_EQ(r.code, 2);
}

TEST(Cli, CorruptedBracketTableExitsOne) {
  json cfg;
  cfg["jacobi"] = {{"sectors", {"RB"}}, {"q", {"2"}}, {"max_twice_index", 2}, {"max_grade", 1}};
  cfg["module"] = {{"sectors", {"RB"}}, {"q", {"-1"}},          {"a", {"0"}},         {"b", {"5"}},
                   {"lambda", {"1"}},   {"max_twice_index", 2}, {"max_grade", 1},     {"max_degree", 2},
                   {"witt_max_index", 1}, {"lemma32_max_m", 1}, {"lemma32_max_r", 1}, {"lemma32_max_degree", 1},
                   {"lemma52_max_twice_index", 1}, {"restriction_max_mode", 1}};
  const std::string path = write_config("small.json", cfg);
  const CliHooks bad{corrupted_rule};
  EXPECT_EQ(run({"jacobi-suite", "--config", path}).code, 0);
  EXPECT_EQ(run({"jacobi-suite", "--config", path}, bad).code, 1);
  EXPECT_EQ(run({"module-suite", "--config", path}).code, 0);
  const auto r = run({"module-suite", "--config", path}, bad);
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.out.find("FAIL"), std::string::npos);
}

TEST(Cli, ConfigValidation) {
  EXPECT_EQ(run({"jacobi-suite", "--config", write_config("unknown.json", json{{"nope", json::object()}})}).code, 2);
  EXPECT_EQ(run({"jacobi-suite", "--config", write_config("zero.json", json{{"jacobi", {{"q", {"0"}}}}})}).code, 2);
  EXPECT_EQ(run({"phi-suite", "--config", write_config("sigma.json", json{{"phi", {{"sigma", {"3", "3/2"}}}}})}).code,
            2);
  EXPECT_EQ(run({"jacobi-suite", "--config", temp_path("missing.json").string()}).code, 2);
}

TEST(Cli, CheckedInConfigMatchesEmbeddedDefault) {
  std::ifstream in(std::string(BLOCKSUPER_SOURCE_DIR) + "/config/default_suites.json");
  ASSERT_TRUE(in);
  EXPECT_EQ(json::parse(in), json::parse(default_config_text()));
}

TEST(Cli, Rank2AndInvariantsPoints) {
  const auto r = run({"rank2", "--q", "1", "--lambda", "1", "--a", "0", "--b", "0", "--e", "1", "--max-deg", "2"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("c_plus"), std::string::npos);
  EXPECT_NE(r.out.find("c_minus"), std::string::npos);
  const auto i = run({"invariants", "--family", "L", "--q", "-1", "--lambda", "3", "--a", "1", "--b", "5"});
  EXPECT_EQ(i.code, 0);
  EXPECT_NE(i.out.find("PASS"), std::string::npos);
}
