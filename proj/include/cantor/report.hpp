#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "cantor/diagonals.hpp"
#include "cantor/graph.hpp"
#include "cantor/upset.hpp"

namespace cantor {

using ReportJson = nlohmann::ordered_json;

struct AnalyzeOptions {
  std::vector<std::uint64_t> n_values;
  std::vector<UPSet> s_values;
  bool spectra = false;
  std::uint64_t chain_n_max = 8;
  std::optional<std::uint64_t> seed;
  std::optional<double> parse_ms;  // recorded under timings_ms.parse
};

/// Full analysis report. Keys appear in a fixed order; everything except
/// `timings_ms` is a function of the graph and options. Throws
/// TheoremViolation if some diagonal set equals an outgoing set.
ReportJson build_report(const Graph& g, const AnalyzeOptions& options);

/// JSON encodings shared with the report.
ReportJson spec_json(const DiagonalSpec& spec);
DiagonalSpec spec_from_json(const nlohmann::json& j);
ReportJson witness_json(const Witness& w);
Witness witness_from_json(const nlohmann::json& j);
ReportJson spectrum_json(VertexId v, const UPSet& s);

/// Re-reads a report: each diagonal set must match a fresh computation on g
/// and every witness must validate against it. Returns the first problem.
std::optional<std::string> report_defect(const Graph& g, const nlohmann::json& report);

/// True when the chain section of the report passed.
bool report_chain_passed(const ReportJson& report);

}  // namespace cantor
