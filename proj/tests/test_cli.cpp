#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "commands.hpp"
#include "config.hpp"

using namespace semient;
using namespace semient::cli;

namespace {

Json z2z3() { return Json::parse(R"({"generators":[{"num":[1,0,0]},{"num":[1,0,0,0]}]})"); }

Error error_of(const Json& doc) {
  try {
    parse_config_json(doc);
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "config accepted";
  return Error(ErrorCode::ZeroVector, "");
}

std::filesystem::path scratch(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / "semient_cli_test";
  std::filesystem::create_directories(dir);
  return dir / name;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run_cli(const std::string& args, const std::filesystem::path& out) {
  const std::string cmd = std::string(SEMIENT_CLI) + " " + args + " > " + out.string() + " 2>&1";
  const int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(ParseConfig, MinimalFillsDefaults) {
  const auto cfg = parse_config_json(Json::parse(R"({"generators":[{"num":[1,0,0]}]})"));
  EXPECT_EQ(cfg.seed, 0u);
  EXPECT_EQ(cfg.generators.size(), 1u);
  EXPECT_EQ(cfg.multiplicities, (std::vector<std::int64_t>{1}));
  EXPECT_EQ(cfg.echo["estimator"]["eps_grid"], Json({0.02, 0.05, 0.1, 0.2}));
  EXPECT_EQ(cfg.echo["estimator"]["start_pool"], 200);
  EXPECT_EQ(cfg.echo["coincidence"]["depth"], 12);
  EXPECT_EQ(cfg.echo["seed"], 0);
}

TEST(ParseConfig, CommonFactorNamesGenerator) {
  const auto e = error_of(Json::parse(R"({"generators":[{"num":[1,0],"den":[1,0]}]})"));
  EXPECT_EQ(e.code(), ErrorCode::SchemaViolation);
  EXPECT_EQ(e.pointer(), "/generators/0");
}

TEST(ParseConfig, FractionScalar) {
  bool is_float = false;
  const auto s = parse_scalar(Json::parse(R"({"re":"1/2","im":"-3/4"})"), "/x", &is_float);
  EXPECT_EQ(s.re(), mpq_class(1, 2));
  EXPECT_EQ(s.im(), mpq_class(-3, 4));
  EXPECT_FALSE(is_float);
  parse_scalar(Json(0.5), "/x", &is_float);
  EXPECT_TRUE(is_float);
}

TEST(ParseConfig, Violations) {
  EXPECT_EQ(error_of(Json::parse(R"({"generators":[{"num":["1/x"]}]})")).code(), ErrorCode::BadScalarLiteral);
  EXPECT_EQ(error_of(Json::parse(R"({"generators":[{"num":["1/x"]}]})")).pointer(), "/generators/0/num/0");
  EXPECT_EQ(error_of(Json::parse(R"({"generators":[]})")).pointer(), "/generators");
  EXPECT_EQ(error_of(Json::parse(R"({"generators":[{"num":[1,0]}],"bogus":1})")).pointer(), "/bogus");
  EXPECT_EQ(error_of(Json::parse(R"({"generators":[{"num":[1,0,0]}],"estimator":{"eps_grid":[0.1,1.5]}})")).pointer(),
            "/estimator/eps_grid/1");
  EXPECT_EQ(error_of(Json::parse(R"({"generators":[{"num":[1,0,0]},{"num":[2,0,0],"den":[2]}]})")).pointer(), "/generators/1");
  EXPECT_EQ(error_of(Json::parse(R"({"generators":[{"num":[1,0,0]}],"multiplicities":[1,2]})")).pointer(),
            "/multiplicities");
  EXPECT_EQ(error_of(Json::parse(R"({"space":"P2"})")).pointer(), "/degrees");
}

TEST(ParseConfig, FloatGeneratorsAreInexact) {
  const auto cfg = parse_config_json(Json::parse(R"({"generators":[{"num":[1.5,0.1]},{"num":[1,0,0]}]})"));
  EXPECT_FALSE(cfg.generators[0].exact());
  EXPECT_TRUE(cfg.generators[1].exact());
}

TEST(ParseConfig, UnreadableFile) {
  try {
    parse_config("/nonexistent/semient.json");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnreadableFile);
  }
}

TEST(RunCommand, ExactReportsLogFive) {
  const auto r = run_command("exact", parse_config_json(z2z3()), {});
  EXPECT_EQ(r.report["exact"]["h_top_exact"].get<double>(), std::log(5.0));
  EXPECT_EQ(r.report["estimates"]["dinh_sibony"]["absent"], true);
  EXPECT_TRUE(r.csv.empty());
}

TEST(RunCommand, SymbolicProjectiveSpace) {
  const auto cfg = parse_config_json(Json::parse(R"({"space":"P2","degrees":[2,2]})"));
  const auto r = run_command("exact", cfg, {});
  EXPECT_NEAR(r.report["exact"]["h_top_exact"].get<double>(), std::log(8.0), 1e-15);
  EXPECT_THROW(run_command("estimate", cfg, {}), Error);
}

TEST(RunCommand, RelationsOnCommutingPowers) {
  const auto cfg = parse_config_json(Json::parse(R"({"generators":[{"num":[1,0,0]},{"num":[1,0,0,0,0]}]})"));
  RunOptions opt;
  opt.word_length = 2;
  const auto r = run_command("relations", cfg, opt);
  EXPECT_EQ(r.report["relations"]["relation_count"], 1);
  EXPECT_EQ(r.report["relations"]["distinct_maps"], 3);
}

TEST(RunCommand, EstimateIsDeterministicAcrossThreads) {
  Json doc = z2z3();
  doc["estimator"] = {{"nu_ladder", {2, 3, 4}}, {"start_pool", 30}, {"terminals", 2}};
  doc["seed"] = 42;
  const auto cfg = parse_config_json(doc);
  RunOptions a;
  a.method = Method::DinhSibony;
  RunOptions b = a;
  b.threads = 3;
  const auto ra = run_command("estimate", cfg, a), rb = run_command("estimate", cfg, b);
  EXPECT_EQ(ra.csv, rb.csv);
  EXPECT_EQ(ra.report.dump(2), rb.report.dump(2));
  EXPECT_EQ(ra.csv.substr(0, ra.csv.find('\n')), "method,epsilon,nu,count,exact_flag,pool_size");
  EXPECT_EQ(ra.report["estimates"]["friedland"]["absent"], true);
}

TEST(RunCommand, CoincidenceAndBounds) {
  const auto cfg =
      parse_config_json(Json::parse(R"({"generators":[{"num":[1,1]},{"num":[1,{"re":"0","im":"1"}]}]})"));
  const auto c = run_command("coincidence", cfg, {});
  ASSERT_EQ(c.report["coincidence"]["points"].size(), 1u);
  EXPECT_EQ(c.report["coincidence"]["points"][0]["exact_point"]["h1"]["re"], "0");
  const auto b = run_command("friedland-bounds", cfg, {});
  EXPECT_EQ(b.report["friedland_bounds"]["lower"].get<double>(), 0.0);
  EXPECT_EQ(b.report["friedland_bounds"]["upper"].get<double>(), std::log(2.0));
}

TEST(Binary, ErrorJsonAndExitStatus) {
  const auto cfg = scratch("bad.json");
  std::ofstream(cfg) << R"({"generators":[{"num":[1,0],"den":[1,0]}]})";
  const auto out = scratch("bad.out");
  EXPECT_EQ(run_cli("-c " + cfg.string() + " exact", out), 2);
  const Json err = Json::parse(slurp(out));
  EXPECT_EQ(err["error"]["code"], "SchemaViolation");
  EXPECT_EQ(err["error"]["pointer"], "/generators/0");
}

TEST(Binary, ByteIdenticalOutputs) {
  const auto cfg = scratch("small.json");
  std::ofstream(cfg) << R"({"generators":[{"num":[1,0,0]},{"num":[1,0,0,0]}],
    "estimator":{"nu_ladder":[2,3,4],"start_pool":30,"terminals":2}})";
  const auto log = scratch("run.log");
  for (const char* tag : {"a", "b"}) {
    const std::string args = "-c " + cfg.string() + " --seed 42 -o " + scratch(std::string(tag) + ".json").string() +
                             " --csv " + scratch(std::string(tag) + ".csv").string() + " estimate --method ds";
    ASSERT_EQ(run_cli(args, log), 0);
  }
  EXPECT_EQ(slurp(scratch("a.csv")), slurp(scratch("b.csv")));
  EXPECT_EQ(slurp(scratch("a.json")), slurp(scratch("b.json")));
  EXPECT_FALSE(slurp(scratch("a.csv")).empty());
}

TEST(Binary, ExampleConfigsMatchSchema) {
  if (std::system("python3 -c 'import jsonschema' > /dev/null 2>&1") != 0) GTEST_SKIP() << "jsonschema unavailable";
  const auto cfg = scratch("schema_ok.json");
  std::ofstream(cfg) << R"({"generators":[{"num":[1,{"re":"1/2","im":"-3/4"}],"den":["1",0.5]}],
    "multiplicities":[2],"seed":3,"estimator":{"eps_grid":[0.1]},"coincidence":{"depth":4}})";
  const std::string py = "import json,jsonschema,sys; jsonschema.validate(json.load(open(sys.argv[2])), "
                         "json.load(open(sys.argv[1])))";
  const std::string cmd =
      "python3 -c \"" + py + "\" " + std::string(SEMIENT_SCHEMA) + " " + cfg.string() + " > /dev/null 2>&1";
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  parse_config(cfg.string());
}
