#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "idealis/io.hpp"
#include "idealis/verify.hpp"

using namespace idealis;

TEST_CASE("graph specs parse from json") {
  PartitionedGraph g = graph_from_json(
      R"({"blocks": [2, 2], "edges": "complete", "loops": "all"})");
  PartitionedGraph named = strong_quasi_n_partite({2, 2});
  CHECK(g.edges() == named.edges());
  CHECK(g.loops() == named.loops());

  PartitionedGraph explicit_graph = graph_from_json(
      R"({"blocks": [2, 1],
          "edges": [["x1_1", "x2_1"], ["x2_1", "x1_2"]],
          "loops": ["x1_2"]})");
  CHECK(explicit_graph.edges() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 2}, {1, 2}});
  CHECK(explicit_graph.loops() == std::vector<std::size_t>{1});

  // Defaults: complete edges, no loops.
  PartitionedGraph defaulted = graph_from_json(R"({"blocks": [1, 1]})");
  CHECK(defaulted.edges().size() == 1);
  CHECK(defaulted.loops().empty());

  PartitionedGraph bare =
      graph_from_json(R"({"blocks": [1, 1], "edges": "none"})");
  CHECK(bare.edges().empty());

  PartitionedGraph path = graph_from_json(
      R"({"blocks": [1, 1, 1], "edges": "complete"})", /*adjacent_only=*/true);
  CHECK(path.edges() ==
        std::vector<std::pair<std::size_t, std::size_t>>{{0, 1}, {1, 2}});

  CHECK_THROWS_AS(graph_from_json(R"({"edges": "complete"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"blocks": [1, 1], "edges": "web"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(graph_from_json(R"({"blocks": [1, 1], "loops": "some"})"),
                  std::invalid_argument);
  CHECK_THROWS_AS(
      graph_from_json(R"({"blocks": [1, 1], "edges": [["x1_1"]]})"),
      std::invalid_argument);
  CHECK_THROWS_AS(
      graph_from_json(R"({"blocks": [2, 1], "edges": [["x1_1", "x1_2"]]})"),
      std::invalid_argument);
}

TEST_CASE("ideals parse from json arrays or plain lines") {
  VariableSetPtr vars = make_variables({2, 1});
  MonomialIdeal from_json =
      ideal_from_text(vars, R"(["x1_1*x2_1", "x1_2^2"])");
  CHECK(from_json.generator_count() == 2);

  MonomialIdeal from_lines =
      ideal_from_text(vars, "x1_1*x2_1\n\n  x1_2^2  \n");
  CHECK(from_lines == from_json);

  CHECK_THROWS_AS(ideal_from_text(vars, "x5_1"), ParseError);
}

TEST_CASE("at-file indirection") {
  CHECK(resolve_at_file("plain text") == "plain text");
  CHECK(resolve_at_file("") == "");

  namespace fs = std::filesystem;
  fs::path path = fs::temp_directory_path() / "idealis_atfile_test.txt";
  {
    std::ofstream out(path);
    out << "x1_1*x2_1\n";
  }
  CHECK(resolve_at_file("@" + path.string()) == "x1_1*x2_1\n");
  std::remove(path.string().c_str());
  CHECK_THROWS_AS(resolve_at_file("@" + path.string()), std::invalid_argument);
}

TEST_CASE("closure serialization") {
  VariableSetPtr vars = make_variables({1, 1});
  std::vector<Monomial> gens = {parse_monomial(vars, "x1_1^2"),
                                parse_monomial(vars, "x2_1^2")};
  ClosureResult result =
      integral_closure(MonomialIdeal::make(vars, std::move(gens)));
  Json doc = closure_to_json(result);
  CHECK(doc["generators"] ==
        Json::array({"x1_1^2", "x1_1*x2_1", "x2_1^2"}));
  CHECK(doc["generator_count"] == 3);
  CHECK(doc["was_closed"] == false);
  CHECK(doc["added_generators"] == Json::array({"x1_1*x2_1"}));
}

TEST_CASE("invariant serialization with every field present") {
  VariableSetPtr vars = make_variables({1});
  MonomialIdeal principal =
      MonomialIdeal::make(vars, {parse_monomial(vars, "x1_1")});
  InvariantReport report = invariant_report(principal);

  Json doc = report_to_json(report);
  CHECK(doc["variables"] == 1);
  CHECK(doc["height"] == 1);
  CHECK(doc["bight"] == 1);
  CHECK(doc["dim"] == 0);
  CHECK(doc["depth"] == 0);
  CHECK(doc["projdim"] == 1);
  CHECK(doc["reg"] == 0);
  CHECK(doc["betti"] == Json::array({"1"}));
  CHECK(doc["type"] == "1");
  CHECK(doc["provenance"].contains("height"));

  std::string text = report_to_text(report);
  CHECK(text.find("height: 1\n") != std::string::npos);
  CHECK(text.find("betti: 1\n") != std::string::npos);

  CHECK(invariants_csv_header() ==
        "instance,M,height,bight,dim,depth,projdim,reg,type,betti");
  CHECK(invariants_csv_row("inst", report) == "inst,1,1,1,0,0,1,0,1,1");
}

TEST_CASE("invariant serialization with absent fields") {
  VariableSetPtr vars = make_variables({1, 1, 1, 1});
  std::vector<Monomial> gens = {parse_monomial(vars, "x1_1*x2_1"),
                                parse_monomial(vars, "x3_1*x4_1")};
  InvariantReport report =
      invariant_report(MonomialIdeal::make(vars, std::move(gens)));

  Json doc = report_to_json(report);
  CHECK(doc["betti"].is_null());
  CHECK(doc["reg"].is_null());
  CHECK(doc["type"].is_null());
  CHECK(doc["height"] == 2);

  std::string row = invariants_csv_row("pair", report);
  CHECK(row == "pair,4,2,2,2,n/a (no supported route),"
               "n/a (no supported route),n/a (no supported route),"
               "n/a (no supported route),n/a (no supported route)");
}

TEST_CASE("verification runs a small sweep and serializes it") {
  SweepConfig config;
  config.n_range = {2};
  config.m_range = {1, 2};
  config.checks = {"structure", "closedness-boundary"};
  VerificationReport report = run_verification(config);

  // Four block tuples, two checks each.
  CHECK(report.results.size() == 8);
  CHECK(report.passed == 8);
  CHECK(report.failed == 0);
  CHECK(report.all_passed());
  for (const CheckResult& r : report.results) {
    CHECK(r.pass);
    CHECK(!r.instance.empty());
    CHECK(!r.expected.empty());
    CHECK(!r.computed.empty());
  }

  Json doc = verification_to_json(report);
  CHECK(doc["passed"] == 8);
  CHECK(doc["failed"] == 0);
  CHECK(doc["results"].size() == 8);
  CHECK(doc["results"][0].contains("instance"));

  std::string text = verification_to_text(report);
  CHECK(text.find("PASS structure") != std::string::npos);
  CHECK(text.find("8 passed, 0 failed") != std::string::npos);
}

TEST_CASE("verification is deterministic across thread counts") {
  SweepConfig config;
  config.n_range = {2};
  config.m_range = {1, 2};
  config.checks = {"structure", "betti", "cover"};
  config.threads = 1;
  VerificationReport sequential = run_verification(config);
  config.threads = 4;
  VerificationReport parallel = run_verification(config);

  REQUIRE(sequential.results.size() == parallel.results.size());
  for (std::size_t i = 0; i < sequential.results.size(); ++i) {
    CHECK(sequential.results[i].instance == parallel.results[i].instance);
    CHECK(sequential.results[i].check == parallel.results[i].check);
    CHECK(sequential.results[i].computed == parallel.results[i].computed);
    CHECK(sequential.results[i].pass == parallel.results[i].pass);
  }
}

TEST_CASE("verification config validation") {
  SweepConfig empty;
  empty.checks = {};
  CHECK_THROWS_AS(run_verification(empty), std::invalid_argument);

  SweepConfig unknown;
  unknown.checks = {"structure", "mystery"};
  CHECK_THROWS_AS(run_verification(unknown), std::invalid_argument);

  CHECK(known_checks().size() == 8);
}

TEST_CASE("hand-picked power instances pass the powers check") {
  SweepConfig config;
  config.checks = {"powers"};
  config.k_max_oracle = 6;
  VerificationReport report = run_verification(config);
  CHECK(report.failed == 0);
  CHECK(report.results.size() >= 15);  // at least five graphs, three powers
}
