#include "gkc/cli.hpp"

#include <gtest/gtest.h>

#include <sstream>

namespace gkc {
namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

json run_json(std::vector<std::string> args) {
  args.insert(args.begin() + 1, {"--format", "json"});
  const auto r = run(args);
  EXPECT_EQ(r.code, kOk) << r.err;
  return json::parse(r.out);
}

TEST(Cli, InvariantAf) {
  const auto j = run_json({"invariant", "--m", "0", "--n", "2"});
  EXPECT_EQ(j["scalars"]["alpha"], "1");
  EXPECT_EQ(j["invariant"]["middle"]["cone"]["tag"], "AlphaCone");
  EXPECT_EQ(j["invariant"]["middle"]["cone"]["alpha"], "1");
  EXPECT_EQ(j["invariant"]["caseTag"], "AF-AF");
}

TEST(Cli, InvariantInfiniteLoops) {
  const auto j = run_json({"invariant", "--m", "inf", "--n", "1"});
  EXPECT_EQ(j["invariant"]["middle"]["cone"]["tag"], "AllPositive");
}

TEST(Cli, InvariantFiniteLoops) {
  const auto j = run_json({"invariant", "--m", "4", "--n", "3"});
  EXPECT_EQ(j["scalars"]["x"], "3");
  EXPECT_EQ(j["scalars"]["M"], "3");
  EXPECT_EQ(j["scalars"]["N"], "3");
  EXPECT_EQ(j["invariant"]["quotient"]["group"]["name"], "Z/3");
}

TEST(Cli, ConditionKExitsTwo) {
  const auto r = run({"invariant", "--m", "1", "--n", "1"});
  EXPECT_EQ(r.code, kInputError);
  EXPECT_NE(r.err.find("ConditionK"), std::string::npos);
}

TEST(Cli, MalformedInputsExitTwo) {
  EXPECT_EQ(run({"invariant", "--m", "x", "--n", "1"}).code, kInputError);
  EXPECT_EQ(run({"invariant", "--n", "1"}).code, kInputError);
  EXPECT_EQ(run({"frobnicate"}).code, kInputError);
  EXPECT_EQ(run({"scan", "--max-m", "1"}).code, kInputError);
  EXPECT_EQ(run({"compare", "--a", "m=8,n=1", "--b", "m=8,n=1", "--mode", "loose"}).code, kInputError);
  EXPECT_EQ(run({"invariant", "--spec", "{\"m\": "}).code, kInputError);
}

TEST(Cli, FullnessVerdicts) {
  auto j = run_json({"fullness", "--m", "8", "--n", "1"});
  EXPECT_EQ(j["verdict"]["stabilizedFull"], true);
  EXPECT_EQ(j["verdict"]["unstabilized"], "Full");

  j = run_json({"fullness", "--m", "0", "--n", "2"});
  EXPECT_EQ(j["verdict"]["stabilizedFull"], false);
  EXPECT_EQ(j["verdict"]["unstabilized"], "Unknown");
  EXPECT_EQ(j["verdict"]["note"], kUndecidedNote);

  j = run_json({"fullness", "--m", "0", "--n", "1", "--tail", "doubling:1"});
  EXPECT_EQ(j["verdict"]["stenotic"], true);
  EXPECT_EQ(j["verdict"]["kLexicographic"], true);
  EXPECT_EQ(j["verdict"]["stabilizedFull"], true);
  EXPECT_EQ(j["verdict"]["unstabilized"], "Full");
}

TEST(Cli, UnknownNoteAppearsInText) {
  const auto r = run({"fullness", "--m", "0", "--n", "2"});
  EXPECT_NE(r.out.find(kUndecidedNote), std::string::npos);
}

TEST(Cli, Compare) {
  auto j = run_json({"compare", "--a", "m=8,n=1", "--b", "m=8,n=3", "--mode", "exact"});
  EXPECT_EQ(j["verdict"]["isomorphic"], false);
  EXPECT_TRUE(j["witness"].is_null());

  j = run_json({"compare", "--a", "m=8,n=1", "--b", "m=8,n=3", "--mode", "stable"});
  EXPECT_EQ(j["verdict"]["isomorphic"], true);
  EXPECT_EQ(j["witness"]["unit"], "5");
  EXPECT_TRUE(j["scalars"].is_array());

  j = run_json({"compare", "--a", "m=4,n=1", "--b", "m=8,n=1", "--mode", "stable"});
  EXPECT_EQ(j["verdict"]["isomorphic"], false);
  EXPECT_EQ(j["verdict"]["reason"], "m mismatch");
}

TEST(Cli, CompareOutOfScopeCarriesInvariants) {
  const auto r = run({"--format", "json", "compare", "--a", "m=0,n=1", "--b", "m=0,n=2"});
  EXPECT_EQ(r.code, kInputError);
  const auto j = json::parse(r.out);
  EXPECT_EQ(j["verdict"]["outOfScope"], true);
  EXPECT_EQ(j["invariant"].size(), 2u);
}

TEST(Cli, SpecArgumentForms) {
  EXPECT_EQ(parse_spec_argument("m=8,n=1,0,3"), validate_family(8, {1, 0, 3}, TailSpec::zero()));
  EXPECT_EQ(parse_spec_argument("m=0,n=1,tail=constant:2"), validate_family(0, {1}, TailSpec::constant(2)));
  EXPECT_EQ(parse_spec_argument(R"({"m": "inf", "n": ["1"], "tail": {"kind": "doubling", "c": "1"}})"),
            validate_family(LoopCount::infinity(), {1}, TailSpec::doubling(1)));
}

TEST(Cli, Scan) {
  auto j = run_json({"scan", "--max-m", "20"});
  EXPECT_EQ(j["verdict"]["smallestDivergentM"], "8");
  EXPECT_EQ(j["verdict"]["rows"].size(), 19u);
  EXPECT_TRUE(run_json({"scan", "--max-m", "7"})["verdict"]["smallestDivergentM"].is_null());
  EXPECT_TRUE(run_json({"scan", "--max-m", "2"})["verdict"]["smallestDivergentM"].is_null());
}

const std::vector<std::vector<std::string>> kCommands{
    {"invariant", "--m", "0", "--n", "1,1"},
    {"invariant", "--m", "13", "--n", "1,0,3"},
    {"invariant", "--m", "inf", "--tail", "constant:3"},
    {"fullness", "--m", "0", "--n", "2"},
    {"fullness", "--m", "0", "--n", "1", "--tail", "doubling:1"},
    {"compare", "--a", "m=8,n=1", "--b", "m=8,n=3", "--mode", "stable"},
    {"compare", "--a", "m=8,n=1", "--b", "m=8,n=2"},
    {"scan", "--max-m", "12"},
};

TEST(Report, JsonRoundTrips) {
  for (const auto& args : kCommands) {
    const json j = run_json(args);
    const Report r = report_from_json(j);
    EXPECT_EQ(report_to_json(r), j) << j.dump();
    EXPECT_EQ(report_from_json(report_to_json(r)), r);
  }
}

TEST(Report, TextAndJsonCarryTheSameData) {
  for (auto args : kCommands) {
    const auto text = run(args);
    args.insert(args.begin() + 1, {"--format", "json"});
    const auto j = json::parse(run(args).out);
    auto leaves = flatten(j);
    // argv differs by the format flag only
    auto text_leaves = parse_text(text.out);
    std::erase_if(leaves, [](const auto& kv) { return kv.first.rfind("argv", 0) == 0; });
    std::erase_if(text_leaves, [](const auto& kv) { return kv.first.rfind("argv", 0) == 0; });
    EXPECT_EQ(text_leaves, leaves);
    EXPECT_EQ(parse_text(render_text(j)), flatten(j));
  }
}

TEST(Report, OutputIsDeterministic) {
  for (const auto& args : kCommands) EXPECT_EQ(run(args).out, run(args).out);
}

TEST(Report, IntegersAreStrings) {
  const auto j = run_json({"invariant", "--m", "100000000000000000000001", "--n", "7"});
  EXPECT_EQ(j["inputs"][0]["m"], "100000000000000000000001");
  EXPECT_TRUE(j["scalars"]["x"].is_string());
}

}  // namespace
}  // namespace gkc
