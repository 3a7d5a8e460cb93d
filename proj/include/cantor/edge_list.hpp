#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cantor/graph.hpp"

namespace cantor {

/// Edge-list documents:
///
///   # comment (anywhere; runs to end of line)
///   n 3        optional header, before any edge, at most once
///   0 1        one edge per line, 0-based decimal ids
///
/// Without a header the order is 1 + the largest id, so an edgeless graph
/// needs the header. Throws ParseError carrying the 1-based line number.
Graph parse_edge_list(std::string_view text);

/// Header line followed by edges in (source, target) order. Each entry of
/// `comments` becomes a leading `# ` line.
std::string emit_edge_list(const Graph& g, const std::vector<std::string>& comments = {});

/// Value of a `# seed <N>` comment line, if the document has one.
std::optional<std::uint64_t> generator_seed(std::string_view text);

}  // namespace cantor
