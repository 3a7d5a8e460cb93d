#include "cantor/edge_list.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

#include "cantor/errors.hpp"

namespace cantor {
namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

std::optional<std::uint64_t> to_natural(std::string_view token) {
  std::uint64_t value = 0;
  const char* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

template <typename F>
void for_each_line(std::string_view text, F&& f) {
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    f(++line_no, text.substr(start, end - start));
    start = end + 1;
  }
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
  std::optional<std::uint64_t> order;
  std::vector<Edge> edges;

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    const auto tokens = split_ws(line);
    if (tokens.empty()) return;
    if (tokens[0] == "n") {
      if (tokens.size() != 2) throw ParseError("header must be 'n <order>'", line_no);
      if (order) throw ParseError("duplicate header", line_no);
      if (!edges.empty()) throw ParseError("header must precede every edge", line_no);
      order = to_natural(tokens[1]);
      if (!order) throw ParseError("invalid order '" + std::string(tokens[1]) + "'", line_no);
      if (*order == 0) throw ParseError("graph order must be at least 1", line_no);
      return;
    }
    if (tokens.size() != 2) throw ParseError("expected '<u> <v>'", line_no);
    const auto u = to_natural(tokens[0]);
    const auto v = to_natural(tokens[1]);
    if (!u || !v) throw ParseError("vertex ids must be non-negative decimal integers", line_no);
    if (order && (*u >= *order || *v >= *order)) {
      throw ParseError("vertex id out of range for declared order " + std::to_string(*order),
                       line_no);
    }
    edges.emplace_back(*u, *v);
  });

  if (!order) {
    if (edges.empty()) throw ParseError("empty document needs an 'n <order>' header", 0);
    std::uint64_t max_id = 0;
    for (const auto& [u, v] : edges) max_id = std::max<std::uint64_t>(max_id, std::max(u, v));
    order = max_id + 1;
  }
  return Graph(*order, edges);
}

std::string emit_edge_list(const Graph& g, const std::vector<std::string>& comments) {
  std::ostringstream os;
  for (const auto& c : comments) os << "# " << c << '\n';
  os << "n " << g.order() << '\n';
  for (const auto& [u, v] : g.edges()) os << u << ' ' << v << '\n';
  return os.str();
}

std::optional<std::uint64_t> generator_seed(std::string_view text) {
  std::optional<std::uint64_t> seed;
  for_each_line(text, [&](std::size_t, std::string_view line) {
    if (seed) return;
    const auto hash = line.find('#');
    if (hash == std::string_view::npos) return;
    const auto tokens = split_ws(line.substr(hash + 1));
    if (tokens.size() == 2 && tokens[0] == "seed") seed = to_natural(tokens[1]);
  });
  return seed;
}

}  // namespace cantor
