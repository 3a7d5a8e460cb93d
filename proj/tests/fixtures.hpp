#pragma once

#include <functional>
#include <random>
#include <vector>

#include "cantor/graph.hpp"

namespace cantor::testing {

inline Graph c3() { return Graph(3, {{0, 1}, {1, 2}, {2, 0}}); }
inline Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
inline Graph single_loop() { return Graph(1, {{0, 0}}); }
inline Graph edgeless(std::size_t n) { return Graph(n, std::span<const Edge>{}); }

inline Graph complete_with_loops(std::size_t n) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph(n, edges);
}

// 0 -> 1 and a loop on 1.
inline Graph tail_into_loop() { return Graph(2, {{0, 1}, {1, 1}}); }

// Cycles of length 2 (0 1 0) and 3 (0 2 3 0) sharing vertex 0.
inline Graph two_cycles() { return Graph(4, {{0, 1}, {1, 0}, {0, 2}, {2, 3}, {3, 0}}); }

inline Graph random_graph(std::mt19937_64& rng, std::size_t max_order, double p) {
  std::uniform_int_distribution<std::size_t> order(1, max_order);
  std::bernoulli_distribution coin(p);
  const std::size_t n = order(rng);
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return Graph(n, edges);
}

// Plain recursive enumeration of every walk u -> w with `length` edges.
// No pruning, no memo; only for tiny inputs.
inline bool naive_walk_exists(const Graph& g, VertexId u, VertexId w, std::uint64_t length) {
  if (length == 0) return u == w;
  for (VertexId x = 0; x < g.order(); ++x) {
    if (g.has_edge(u, x) && naive_walk_exists(g, x, w, length - 1)) return true;
  }
  return false;
}

}  // namespace cantor::testing
