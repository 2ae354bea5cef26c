#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

#include "betti/api.hpp"
#include "betti/errors.hpp"
#include "betti/fixtures.hpp"
#include "betti/json_io.hpp"
#include "betti/reference_tables.hpp"
#include "test_support.hpp"

using namespace betti;
using nlohmann::json;

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run_cli(const std::string& arguments, const std::string& env = "") {
  const std::string command = env + " " + std::string(BETTI_CLI) + " " + arguments + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return r;
  std::array<char, 4096> buffer{};
  while (std::fgets(buffer.data(), buffer.size(), pipe)) r.out += buffer.data();
  int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string quoted(const json& j) { return "'" + j.dump() + "'"; }

}  // namespace

TEST(JsonIo, RoundTrips) {
  auto table = reference::filtered_module_table();
  EXPECT_EQ(table_from_json(to_json(table)), table);
  auto L = support::ideal(3, {"x^2", "x*y", "x*z^2", "y^4"});
  EXPECT_EQ(ideal_from_json(to_json(L)), L);
  auto h = HilbertFunction({1, 2, 2}, Tail::Unspecified);
  EXPECT_EQ(hilbert_from_json(to_json(h)).tail(), Tail::Unspecified);
  EXPECT_EQ(hilbert_from_json(json::parse("[1,1,1]")), support::artinian({1, 1, 1}));
  Cancellation c{3, 5, 6};
  EXPECT_EQ(cancellation_from_json(to_json(c)), c);
  EXPECT_EQ(to_json(c)["class"], "negative");
  EXPECT_EQ(positions_from_json(json::parse(R"([[3,1],{"row":4,"col":2}])")),
            (std::vector<MatrixPosition>{{3, 1}, {4, 2}}));
}

TEST(JsonIo, TableFormat) {
  auto j = to_json(reference::semigroup_ring_table());
  EXPECT_EQ(j.dump(),
            R"({"kind":"quotient","rows":[{"i":0,"shifts":{"0":1}},{"i":1,"shifts":{"3":5}},)"
            R"({"i":2,"shifts":{"4":3,"5":2,"6":1}},{"i":3,"shifts":{"5":1,"8":1}}]})");
}

TEST(JsonIo, RejectsMalformed) {
  EXPECT_THROW(table_from_json(json::parse(R"({"kind":"other","rows":[]})")), DomainError);
  EXPECT_THROW(ideal_from_json(json::parse(R"({"generators":[]})")), DomainError);
  EXPECT_THROW(mode_from_string("sideways"), DomainError);
}

TEST(Api, EveryOpIsListed) {
  EXPECT_EQ(op_names().size(), 21u);
  EXPECT_THROW(run_op("nope", json::object()), DomainError);
  try {
    run_op("lex", json::object());
    FAIL();
  } catch (const DomainError& e) {
    EXPECT_EQ(e.reason(), "bad-input");
  }
}

TEST(Api, OutputsReparseToEqualValues) {
  json args{{"hf", {1, 2, 3, 4, 3, 3, 3, 2, 2, 1}}, {"positions", {{3, 1}, {4, 2}, {5, 3}}}};
  auto out = run_op("codim2.realize", args);
  EXPECT_EQ(json::parse(out.dump()), out);
  EXPECT_EQ(run_op("codim2.realize", args).dump(), out.dump());
}

TEST(Fixtures, CorpusPasses) {
  auto corpus = load_corpus(default_corpus_path());
  EXPECT_GE(corpus.size(), 8u);
  for (const auto& f : corpus) {
    auto r = run_fixture(f);
    EXPECT_TRUE(r.passed) << f.id << " " << r.error << " " << r.diff.dump();
  }
}

TEST(Fixtures, CorruptedPayloadReportsDiff) {
  auto corpus = load_corpus(default_corpus_path());
  auto f = corpus.front();
  f.expected["generators"][0] = "x^3";
  auto r = run_fixture(f);
  EXPECT_FALSE(r.passed);
  ASSERT_FALSE(r.diff.empty());
  EXPECT_EQ(r.diff[0]["op"], "replace");
  EXPECT_EQ(r.diff[0]["path"], "/generators/0");
}

TEST(Fixtures, ProjectKeepsMentionedKeys) {
  json actual{{"a", 1}, {"b", {{"c", 2}, {"d", 3}}}};
  json expected{{"b", {{"c", 0}}}};
  EXPECT_EQ(project(actual, expected), json({{"b", {{"c", 2}}}}));
}

TEST(Cli, LexExamples) {
  auto r = run_cli("lex --n 2 '[1,2,3,4,3,3,3,2,2,1]'");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["generators"].size(), 5u);
  EXPECT_EQ(json::parse(run_cli("lex --n 1 '[1,1,1]'").out)["generators"][0], "x^3");
  EXPECT_EQ(run_cli("lex --n 2 '[1,2,4]'").code, 2);
}

TEST(Cli, EkExamples) {
  EXPECT_EQ(run_cli(R"(ek '{"n":1,"generators":["x"]}')").code, 0);
  EXPECT_EQ(run_cli(R"(ek '{"n":2,"generators":["x*y"]}')").code, 2);
}

TEST(Cli, CancelCommands) {
  auto seven = run_op("ek", {{"ideal", run_op("lex", {{"hf", {1, 3, 4, 4, 1, 1, 1}}, {"n", 3}})}});
  auto r = run_cli("cancel min --row 3 --mode both " + quoted(seven));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["min"], 2);

  auto semigroup = to_json(reference::semigroup_ring_table());
  auto reach = json::parse(run_cli("cancel reachable --mode negative " + quoted(semigroup)).out);
  EXPECT_NE(std::find(reach["totals"].begin(), reach["totals"].end(), json({1, 5, 5, 1})), reach["totals"].end());

  auto same = json::parse(run_cli("cancel apply " + quoted(semigroup)).out);
  EXPECT_EQ(same["table"], semigroup);
  EXPECT_EQ(run_cli("cancel apply --sequence '[[3,5,6],[3,5,6]]' " + quoted(semigroup)).code, 2);
}

TEST(Cli, SizeGuardExitCode) {
  auto stretched = to_json(reference::stretched_algebra_table());
  EXPECT_EQ(run_cli("cancel reachable " + quoted(stretched)).code, 3);
  EXPECT_EQ(run_cli("cancel reachable " + quoted(stretched), "BETTI_SIZE_GUARD=200").code, 0);
  EXPECT_EQ(run_cli("cancel reachable --size-guard 10 " + quoted(to_json(reference::semigroup_ring_table()))).code, 3);
}

TEST(Cli, RealizeCommands) {
  auto full = run_cli("codim2 realize '[1,2,3,4,3,3,3,2,2,1]' '[[3,1],[4,2],[5,3]]'");
  EXPECT_EQ(full.code, 0);
  EXPECT_EQ(json::parse(full.out)["verification"]["passed"], true);
  auto empty = json::parse(run_cli("codim2 realize '[1,2,3,4,3,3,3,2,2,1]'").out);
  EXPECT_EQ(empty["verification"]["mu"], 5);
  EXPECT_EQ(run_cli("codim2 realize '[1,2,3,4,3,3,3,2,2,1]' '[[1,1]]'").code, 2);
}

TEST(Cli, PayloadFromFile) {
  auto path = std::filesystem::temp_directory_path() / "betti_cli_payload.json";
  std::ofstream(path) << R"({"n":2,"generators":["x^2","y^3"]})";
  auto r = run_cli("local mu @" + path.string());
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(json::parse(r.out)["mu"], 2);
  std::filesystem::remove(path);
  EXPECT_EQ(run_cli("local mu @/nonexistent/file.json").code, 2);
  EXPECT_EQ(run_cli("local mu 'not json'").code, 2);
}

TEST(Cli, FixturesCommands) {
  auto list = json::parse(run_cli("fixtures list").out);
  EXPECT_GE(list["count"].get<int>(), 8);
  auto run = run_cli("fixtures run");
  EXPECT_EQ(run.code, 0);
  EXPECT_EQ(json::parse(run.out)["failed"], 0);

  auto corpus = json::parse(std::ifstream(default_corpus_path()));
  corpus["fixtures"][0]["expected"]["n"] = 4;
  auto path = std::filesystem::temp_directory_path() / "betti_corrupt_corpus.json";
  std::ofstream(path) << corpus.dump();
  auto bad = run_cli("fixtures run --corpus " + path.string());
  EXPECT_EQ(bad.code, 1);
  auto report = json::parse(bad.out);
  EXPECT_EQ(report["failed"], 1);
  EXPECT_EQ(report["results"][0]["diff"][0]["path"], "/n");
  std::filesystem::remove(path);
}

TEST(Cli, ByteIdenticalOutput) {
  auto a = run_cli("check codim2-gorenstein '[1,2,3,4,3,3,3,2,2,1]'");
  auto b = run_cli("check codim2-gorenstein '[1,2,3,4,3,3,3,2,2,1]'");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
}
