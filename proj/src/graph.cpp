#include "cantor/graph.hpp"

#include <string>

#include "cantor/errors.hpp"

namespace cantor {

Graph::Graph(std::size_t n, std::span<const Edge> edges) {
  if (n == 0) throw InvalidArgument("graph order must be at least 1");
  rows_.assign(n, VertexSet(n));
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      throw InvalidArgument("edge (" + std::to_string(u) + "," + std::to_string(v) +
                            ") has an endpoint outside [0," + std::to_string(n) + ")");
    }
    rows_[u].insert(v);
  }
}

Graph Graph::from_rows(std::vector<VertexSet> rows) {
  if (rows.empty()) throw InvalidArgument("graph order must be at least 1");
  for (const auto& row : rows) {
    if (row.width() != rows.size()) throw InvalidArgument("adjacency row width differs from order");
  }
  Graph g;
  g.rows_ = std::move(rows);
  return g;
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t m = 0;
  for (const auto& row : rows_) m += row.size();
  return m;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  check_vertex(u);
  check_vertex(v);
  return rows_[u].contains(v);
}

const VertexSet& Graph::out_set(VertexId v) const {
  check_vertex(v);
  return rows_[v];
}

VertexSet Graph::loops() const {
  VertexSet s(order());
  for (VertexId v = 0; v < order(); ++v) {
    if (rows_[v].contains(v)) s.insert(v);
  }
  return s;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count());
  for (VertexId u = 0; u < order(); ++u) {
    rows_[u].for_each([&](VertexId v) { out.emplace_back(u, v); });
  }
  return out;
}

Graph Graph::transpose() const {
  std::vector<VertexSet> rows(order(), VertexSet(order()));
  for (VertexId u = 0; u < order(); ++u) {
    rows_[u].for_each([&](VertexId v) { rows[v].insert(u); });
  }
  return from_rows(std::move(rows));
}

void Graph::check_vertex(VertexId v) const {
  if (v >= order()) {
    throw InvalidArgument("vertex " + std::to_string(v) + " out of range for order " +
                          std::to_string(order()));
  }
}

}  // namespace cantor
