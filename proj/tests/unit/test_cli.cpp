#include <gtest/gtest.h>

#include <sstream>

#include "cli_app.hpp"

using namespace klr;
using klr::cli::Json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = klr::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json run_json(std::vector<std::string> args) {
  args.push_back("--format");
  args.push_back("json");
  const auto r = run(args);
  EXPECT_EQ(r.code, 0) << r.out << r.err;
  return Json::parse(r.out);
}

}  // namespace

TEST(Cli, GradedPair) {
  const auto r = run({"gdim", "--cartan", "A1~", "--weight", "1,2", "--nu", "2,1", "--nuprime", "2,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "1+2q^2+2q^4+q^6\n");
}

TEST(Cli, AllPairsTable) {
  const auto r = run({"dim", "--cartan", "A2", "--weight", "1,1", "--beta", "1,1", "--all-pairs"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "(1,2)  (1,2)  2\n(1,2)  (2,1)  1\n(2,1)  (1,2)  1\n(2,1)  (2,1)  2\ntotal  6\n");
}

TEST(Cli, VerifyOracle) {
  const auto r = run({"verify", "--suite", "oracle", "--max-n", "3", "--cartan", "A2", "--weight", "1,1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "OK: 9/9 β-blocks, 0 mismatches\n");
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"dim", "--bogus"}).code, 2);
  EXPECT_EQ(run({"verify", "--suite", "nope"}).code, 2);
  auto r = run({"dim", "--cartan", "A2", "--weight", "1", "--nu", "1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("LengthMismatch"), std::string::npos);
  r = run({"dim", "--cartan", "Z9", "--weight", "1", "--nu", "1"});
  EXPECT_EQ(r.code, 1);
  r = run({"dim", "--cartan", "A2", "--weight", "1,-1", "--nu", "1", "--format", "json"});
  EXPECT_EQ(r.code, 1);
  const auto doc = Json::parse(r.out);
  EXPECT_EQ(doc.at("error").at("kind"), "NotDominant");
  EXPECT_EQ(doc.at("schema"), "klr/1");
}

TEST(Cli, JsonRoundTrip) {
  const auto doc = run_json({"gdim", "--cartan", "A1~", "--weight", "1,2", "--nu", "2,1"});
  EXPECT_EQ(doc.at("schema"), "klr/1");
  const auto p = klr::cli::poly_from_json(doc.at("pairs").at(0).at("graded"));
  EXPECT_EQ(p, graded_dim(builtin_cartan("A1~"), Weight({1, 2}), IndexTuple{1, 0}, IndexTuple{1, 0}));
  EXPECT_EQ(Json::parse(doc.dump()), doc);

  const auto alg = run_json({"algebra", "--cartan", "A3", "--weight", "3,2,2", "--n", "2"});
  EXPECT_EQ(alg.at("dim"), 93);
  EXPECT_EQ(alg.at("blocks").size(), 6u);
}

TEST(Cli, Deterministic) {
  const std::vector<std::string> args{"basis", "--cartan", "A2", "--weight", "3,2", "--mu", "1,2,1", "--list", "--format",
                                      "json"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> threaded{"dim", "--cartan", "A2", "--weight", "3,2", "--beta", "2,2", "--all-pairs",
                                          "--threads", "3"};
  auto single = threaded;
  single.resize(single.size() - 2);
  EXPECT_EQ(run(threaded).out, run(single).out);
}

TEST(Cli, OtherCommands) {
  auto doc = run_json({"nonzero", "--cartan", "A2", "--weight", "1,1", "--nu", "1,2"});
  for (const auto& v : doc.at("verdicts")) EXPECT_TRUE(v.at("nonzero").get<bool>());

  doc = run_json({"basis", "--cartan", "A2", "--weight", "2,1", "--mu", "2,1,1", "--letters", "1,2"});
  EXPECT_EQ(doc.at("bounds"), Json::array({1, 2, 1}));
  EXPECT_EQ(doc.at("d_mu"), Json::array({3, 1, 2}));

  doc = run_json({"tilde", "--cartan", "A2", "--weight", "2,1", "--nu", "1,1,2"});
  EXPECT_EQ(doc.at("dim"), 12);

  doc = run_json({"reduce", "--cartan", "A1~", "--weight", "1,2", "--beta", "1,1"});
  EXPECT_TRUE(doc.at("equal").get<bool>());
  EXPECT_EQ(doc.at("parts").size(), 3u);

  doc = run_json({"block", "--cartan", "A2", "--weight", "3,2", "--beta", "1,1"});
  EXPECT_EQ(doc.at("dim"), 29);

  doc = run_json({"dim", "--cartan", "A2", "--weight", "3,2", "--nu", "1,2,1", "--method", "divided"});
  EXPECT_EQ(doc.at("total"), 36);
}

TEST(Cli, CartanFile) {
  const auto path = std::filesystem::temp_directory_path() / "klr_test_cartan.json";
  {
    std::ofstream f(path);
    f << R"({"matrix": [[2, -1], [-3, 2]], "labels": [5, 7]})";
  }
  const auto doc = run_json({"dim", "--cartan", path.string(), "--weight", "7:2", "--nu", "7"});
  EXPECT_EQ(doc.at("total"), 2);
  EXPECT_EQ(doc.at("cartan").at("symmetrizer"), Json::array({3, 1}));
  std::filesystem::remove(path);
}
