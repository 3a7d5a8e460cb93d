#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "cantor/vertex_set.hpp"

namespace cantor {

using Edge = std::pair<VertexId, VertexId>;

/// Finite directed graph on vertices [0, n), n >= 1. Row v of the adjacency
/// is Out(v). Immutable once built.
class Graph {
 public:
  /// Throws InvalidArgument on n == 0 or an endpoint >= n. Duplicate edges
  /// collapse.
  Graph(std::size_t n, std::span<const Edge> edges);
  Graph(std::size_t n, std::initializer_list<Edge> edges)
      : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

  /// Takes ownership of prebuilt rows; each row's width must be n.
  static Graph from_rows(std::vector<VertexSet> rows);

  std::size_t order() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept;

  bool has_edge(VertexId u, VertexId v) const;
  const VertexSet& out_set(VertexId v) const;

  /// Looped vertices {v | vEv}.
  VertexSet loops() const;

  /// Edges sorted by (source, target).
  std::vector<Edge> edges() const;

  /// Reverse graph, In(v) as rows.
  Graph transpose() const;

  bool operator==(const Graph& other) const { return rows_ == other.rows_; }

 private:
  Graph() = default;
  void check_vertex(VertexId v) const;

  std::vector<VertexSet> rows_;
};

inline Graph make_graph(std::size_t n, std::span<const Edge> edges) { return Graph(n, edges); }

}  // namespace cantor
