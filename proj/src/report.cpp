#include "cantor/report.hpp"

#include <chrono>

#include "cantor/errors.hpp"
#include "cantor/version.hpp"
#include "cantor/walks.hpp"

namespace cantor {
namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

}  // namespace

ReportJson spec_json(const DiagonalSpec& spec) {
  ReportJson j;
  j["name"] = describe(spec);
  if (std::holds_alternative<CantorDiagonal>(spec)) {
    j["kind"] = "D";
  } else if (const auto* wd = std::get_if<WalkDiagonal>(&spec)) {
    j["kind"] = "Dn";
    j["n"] = wd->n;
  } else if (std::holds_alternative<InfiniteDiagonal>(spec)) {
    j["kind"] = "Dinf";
  } else {
    j["kind"] = "DS";
    j["S"] = std::get<SetDiagonal>(spec).s.literal();
  }
  return j;
}

DiagonalSpec spec_from_json(const nlohmann::json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "D") return CantorDiagonal{};
  if (kind == "Dn") return WalkDiagonal{j.at("n").get<std::uint64_t>()};
  if (kind == "Dinf") return InfiniteDiagonal{};
  if (kind == "DS") return SetDiagonal{UPSet::parse(j.at("S").get<std::string>())};
  throw ParseError("unknown diagonal kind '" + kind + "'", 0);
}

ReportJson witness_json(const Witness& w) {
  ReportJson j;
  j["v"] = w.against;
  j["u"] = w.vertex;
  j["side"] = to_string(w.side);
  if (const auto* walk = std::get_if<ClosedWalk>(&w.evidence)) {
    j["evidence"] = {{"type", "closed_walk"}, {"walk", walk->vertices}};
  } else if (const auto* tail = std::get_if<InfiniteTail>(&w.evidence)) {
    j["evidence"] = {{"type", "infinite_tail"}, {"prefix", tail->prefix}, {"cycle", tail->cycle}};
  } else {
    j["evidence"] = nullptr;
  }
  return j;
}

Witness witness_from_json(const nlohmann::json& j) {
  Witness w;
  w.against = j.at("v").get<VertexId>();
  w.vertex = j.at("u").get<VertexId>();
  const auto side = j.at("side").get<std::string>();
  if (side == "OutMinusDx") {
    w.side = WitnessSide::OutMinusDx;
  } else if (side == "DxMinusOut") {
    w.side = WitnessSide::DxMinusOut;
  } else {
    throw ParseError("unknown witness side '" + side + "'", 0);
  }
  const auto& ev = j.at("evidence");
  if (ev.is_null()) return w;
  const auto type = ev.at("type").get<std::string>();
  if (type == "closed_walk") {
    w.evidence = ClosedWalk{ev.at("walk").get<std::vector<VertexId>>()};
  } else if (type == "infinite_tail") {
    w.evidence = InfiniteTail{ev.at("prefix").get<std::vector<VertexId>>(),
                              ev.at("cycle").get<std::vector<VertexId>>()};
  } else {
    throw ParseError("unknown evidence type '" + type + "'", 0);
  }
  return w;
}

ReportJson spectrum_json(VertexId v, const UPSet& s) {
  ReportJson j;
  j["vertex"] = v;
  j["t"] = s.threshold();
  j["d"] = s.period();
  j["R"] = s.residues();
  j["F"] = s.exceptionals();
  j["literal"] = s.literal();
  return j;
}

ReportJson build_report(const Graph& g, const AnalyzeOptions& options) {
  ReportJson report;
  ReportJson timings = ReportJson::object();
  if (options.parse_ms) timings["parse"] = *options.parse_ms;

  report["tool"] = "cantor";
  report["version"] = kVersion;
  report["seed"] = options.seed ? ReportJson(*options.seed) : ReportJson(nullptr);

  const auto count = distinct_out_count(g);
  report["graph"] = {{"order", g.order()},
                     {"edges", g.edge_count()},
                     {"loops", g.loops().size()},
                     {"distinct_out_sets", count.count}};

  std::vector<DiagonalSpec> specs{CantorDiagonal{}};
  for (auto n : options.n_values) specs.emplace_back(WalkDiagonal{n});
  specs.emplace_back(InfiniteDiagonal{});
  for (const auto& s : options.s_values) specs.emplace_back(SetDiagonal{s});

  auto start = Clock::now();
  ReportJson diagonals = ReportJson::array();
  for (const auto& spec : specs) {
    const auto witnesses = verify_unequal(g, spec);
    ReportJson entry;
    entry["spec"] = spec_json(spec);
    entry["set"] = compute_diagonal(g, spec).to_vector();
    ReportJson table = ReportJson::array();
    for (const auto& w : witnesses) table.push_back(witness_json(w));
    entry["witnesses"] = std::move(table);
    diagonals.push_back(std::move(entry));
  }
  report["diagonals"] = std::move(diagonals);
  timings["diagonals"] = elapsed_ms(start);

  if (options.spectra) {
    start = Clock::now();
    const PowerTrace trace = power_trace(g);
    ReportJson spectra;
    spectra["trace"] = {{"mu", trace.mu()}, {"lambda", trace.lambda()}};
    ReportJson vertices = ReportJson::array();
    const auto all = closed_walk_spectra(g, trace);
    for (VertexId v = 0; v < g.order(); ++v) vertices.push_back(spectrum_json(v, all[v]));
    spectra["vertices"] = std::move(vertices);
    report["spectra"] = std::move(spectra);
    timings["spectra"] = elapsed_ms(start);
  }

  start = Clock::now();
  ReportJson chain;
  try {
    const auto result = inclusion_chain_check(g, options.chain_n_max, options.s_values);
    chain["verdict"] = "pass";
    chain["n_max"] = result.n_max;
    chain["D"] = result.d;
    chain["Dinf"] = result.d_inf;
    ReportJson identities = ReportJson::array();
    for (const auto& id : result.set_identities) {
      ReportJson item;
      item["S"] = id.literal;
      item["finite"] = id.finite;
      item["bound"] = id.bound ? ReportJson(*id.bound) : ReportJson(nullptr);
      item["DS"] = id.diagonal;
      identities.push_back(std::move(item));
    }
    chain["set_identities"] = std::move(identities);
  } catch (const TheoremViolation& e) {
    chain["verdict"] = "fail";
    chain["error"] = e.what();
  }
  report["chain"] = std::move(chain);
  timings["chain"] = elapsed_ms(start);

  report["timings_ms"] = std::move(timings);
  return report;
}

std::optional<std::string> report_defect(const Graph& g, const nlohmann::json& report) {
  try {
    if (report.at("graph").at("order").get<std::size_t>() != g.order()) return "order mismatch";
    for (const auto& entry : report.at("diagonals")) {
      const DiagonalSpec spec = spec_from_json(entry.at("spec"));
      const auto ids = entry.at("set").get<std::vector<VertexId>>();
      const VertexSet dx = VertexSet::from_ids(g.order(), ids);
      if (!(dx == compute_diagonal(g, spec))) return describe(spec) + ": set differs from recomputation";
      const auto& table = entry.at("witnesses");
      if (table.size() != g.order()) return describe(spec) + ": witness table size";
      for (VertexId v = 0; v < g.order(); ++v) {
        if (auto defect = witness_defect(g, spec, dx, v, witness_from_json(table[v]))) {
          return describe(spec) + ": " + *defect;
        }
      }
    }
  } catch (const std::exception& e) {
    return std::string("malformed report: ") + e.what();
  }
  return std::nullopt;
}

bool report_chain_passed(const ReportJson& report) {
  return report.at("chain").at("verdict") == "pass";
}

}  // namespace cantor
