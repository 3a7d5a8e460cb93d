#include <random>

#include "doctest.h"

#include "cantor/edge_list.hpp"
#include "cantor/errors.hpp"
#include "cantor/random_graph.hpp"
#include "cantor/report.hpp"
#include "fixtures.hpp"

using namespace cantor;
using namespace cantor::testing;

TEST_CASE("parse_edge_list") {
  CHECK(parse_edge_list("n 3\n0 1\n1 2\n2 0\n") == c3());
  CHECK(parse_edge_list("0 0\n") == single_loop());
  CHECK(parse_edge_list("n 2\n") == edgeless(2));
  CHECK(parse_edge_list("# a cycle\n\n0 1   # inline\r\n1 2\n\t2 0") == c3());
  CHECK(parse_edge_list("0 3\n").order() == 4);
}

TEST_CASE("parse_edge_list errors carry line numbers") {
  auto line_of = [](std::string_view text) {
    try {
      (void)parse_edge_list(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return std::size_t{999};
  };
  CHECK(line_of("n 3\n0 1\nzero 1\n") == 3);
  CHECK(line_of("n 3\n0 1 2\n") == 2);
  CHECK(line_of("n 2\n0 2\n") == 2);
  CHECK(line_of("0 1\nn 2\n") == 2);
  CHECK(line_of("n 2\nn 2\n") == 2);
  CHECK(line_of("n 0\n") == 1);
  CHECK(line_of("-1 0\n") == 1);
  CHECK(line_of("# nothing\n\n") == 0);
  CHECK(line_of("") == 0);
}

TEST_CASE("property: emit then parse is the identity") {
  std::mt19937_64 rng(61);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = random_graph(rng, 30, trial % 3 == 0 ? 0.0 : 0.2);
    CHECK(parse_edge_list(emit_edge_list(g, {"x", "seed 9"})) == g);
  }
}

TEST_CASE("generator_seed") {
  CHECK(generator_seed("# gen n=3\n# seed 42\nn 3\n") == 42);
  CHECK_FALSE(generator_seed("n 3\n").has_value());
}

TEST_CASE("gen_random") {
  CHECK(gen_random(5, 0.0, 7, LoopPolicy::Allow) == edgeless(5));
  CHECK(gen_random(3, 1.0, 7, LoopPolicy::Allow) == complete_with_loops(3));
  CHECK(gen_random(3, 1.0, 7, LoopPolicy::Forbid).loops().empty());
  CHECK(gen_random(3, 1.0, 7, LoopPolicy::Forbid).edge_count() == 6);

  const Graph a = gen_random(16, 0.25, 42, LoopPolicy::Forbid);
  CHECK(a == gen_random(16, 0.25, 42, LoopPolicy::Forbid));
  CHECK_FALSE(a == gen_random(16, 0.25, 43, LoopPolicy::Forbid));
  CHECK(a.loops().empty());

  CHECK_THROWS_AS(gen_random(3, 1.5, 1, LoopPolicy::Allow), InvalidArgument);
  CHECK_THROWS_AS(gen_random(3, -0.1, 1, LoopPolicy::Allow), InvalidArgument);
  CHECK_THROWS_AS(gen_random(0, 0.5, 1, LoopPolicy::Allow), InvalidArgument);
}

TEST_CASE("report on C3") {
  AnalyzeOptions options;
  options.n_values = {1, 2};
  options.s_values = {UPSet::from_finite({0, 2}), UPSet::progression(0, 2)};
  options.spectra = true;
  const ReportJson report = build_report(c3(), options);

  std::vector<std::string> keys;
  for (const auto& item : report.items()) keys.push_back(item.key());
  CHECK(keys == std::vector<std::string>{"tool", "version", "seed", "graph", "diagonals", "spectra", "chain",
                                         "timings_ms"});
  CHECK(report["seed"].is_null());
  CHECK(report["graph"]["distinct_out_sets"] == 3);

  const auto& diagonals = report["diagonals"];
  REQUIRE(diagonals.size() == 6);
  CHECK(diagonals[0]["spec"]["name"] == "D");
  CHECK(diagonals[0]["set"] == std::vector<int>{0, 1, 2});
  CHECK(diagonals[1]["spec"]["name"] == "D1");
  CHECK(diagonals[1]["set"] == std::vector<int>{0, 1, 2});
  CHECK(diagonals[2]["spec"]["name"] == "D2");
  CHECK(diagonals[2]["set"].empty());
  CHECK(diagonals[3]["spec"]["name"] == "Dinf");
  CHECK(diagonals[3]["set"].empty());
  CHECK(diagonals[5]["spec"]["S"] == "up(t=0,d=2,r=0)");

  CHECK(report["spectra"]["trace"]["lambda"] == 3);
  CHECK(report["spectra"]["vertices"][0]["literal"] == "up(t=1,d=3,r=0)");
  CHECK(report_chain_passed(report));
  CHECK_FALSE(report_defect(c3(), nlohmann::json::parse(report.dump())).has_value());
}

TEST_CASE("report round-trips through a generic parser and survives reload checks") {
  std::mt19937_64 rng(73);
  AnalyzeOptions options;
  options.n_values = {1, 3, 1'000'000};
  options.s_values = {UPSet::from_finite({1}), UPSet::progression(1, 2)};
  for (int trial = 0; trial < 30; ++trial) {
    const Graph g = random_graph(rng, 12, 0.25);
    ReportJson report = build_report(g, options);
    const auto reparsed = nlohmann::json::parse(report.dump());
    CHECK(reparsed == nlohmann::json::parse(ReportJson::parse(report.dump()).dump()));
    CHECK_FALSE(report_defect(g, reparsed).has_value());

    // Tampering with a witness is caught.
    auto tampered = reparsed;
    auto& w = tampered["diagonals"][0]["witnesses"][0];
    w["side"] = w["side"] == "OutMinusDx" ? "DxMinusOut" : "OutMinusDx";
    CHECK(report_defect(g, tampered).has_value());

    report.erase("timings_ms");
    ReportJson again = build_report(g, options);
    again.erase("timings_ms");
    CHECK(report.dump() == again.dump());
  }
}

TEST_CASE("witness JSON round-trip") {
  Witness w;
  w.vertex = 2;
  w.against = 0;
  w.side = WitnessSide::OutMinusDx;
  w.evidence = InfiniteTail{{2, 3}, {3, 4, 3}};
  const Witness back = witness_from_json(nlohmann::json::parse(witness_json(w).dump()));
  CHECK(back.vertex == 2);
  CHECK(back.against == 0);
  CHECK(back.side == WitnessSide::OutMinusDx);
  CHECK(std::get<InfiniteTail>(back.evidence).cycle == std::vector<VertexId>{3, 4, 3});

  CHECK_THROWS_AS(witness_from_json(nlohmann::json{{"v", 0}, {"u", 0}, {"side", "up"}, {"evidence", nullptr}}),
                  ParseError);
  CHECK_THROWS_AS(spec_from_json(nlohmann::json{{"kind", "Dx"}}), ParseError);
}
