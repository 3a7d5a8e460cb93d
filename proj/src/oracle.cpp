#include "cantor/oracle.hpp"

#include <algorithm>
#include <functional>

#include "cantor/errors.hpp"

namespace cantor::oracle {
namespace {

// Successor lists read edge by edge through has_edge.
struct Successors {
  std::size_t n = 0;
  std::vector<std::vector<VertexId>> next;
};

Successors successors(const Graph& g) {
  if (g.order() > kMaxOrder) {
    throw GuardExceeded("oracle handles at most " + std::to_string(kMaxOrder) + " vertices, got " +
                        std::to_string(g.order()));
  }
  Successors s;
  s.n = g.order();
  s.next.resize(s.n);
  for (VertexId u = 0; u < s.n; ++u) {
    for (VertexId v = 0; v < s.n; ++v) {
      if (g.has_edge(u, v)) s.next[u].push_back(v);
    }
  }
  return s;
}

void check_length(std::uint64_t length) {
  if (length > kMaxWalkLength) {
    throw GuardExceeded("oracle walk length " + std::to_string(length) + " exceeds " +
                        std::to_string(kMaxWalkLength));
  }
}

bool walk_exists(const Successors& s, VertexId u, VertexId w, std::uint64_t length) {
  check_length(length);
  // dead[x][r]: no walk of r edges from x ends at w.
  std::vector<std::vector<bool>> dead(s.n, std::vector<bool>(length + 1, false));
  std::function<bool(VertexId, std::uint64_t)> extend = [&](VertexId x, std::uint64_t left) {
    if (left == 0) return x == w;
    if (dead[x][left]) return false;
    for (VertexId y : s.next[x]) {
      if (extend(y, left - 1)) return true;
    }
    dead[x][left] = true;
    return false;
  };
  return extend(u, length);
}

IdList no_closed_walk_for(const Successors& s, const std::vector<std::uint64_t>& members) {
  IdList out;
  for (VertexId v = 0; v < s.n; ++v) {
    bool excluded = false;
    for (auto n : members) {
      if (n == 0) {
        excluded = std::find(s.next[v].begin(), s.next[v].end(), v) != s.next[v].end();
      } else {
        excluded = walk_exists(s, v, v, n + 1);
      }
      if (excluded) break;
    }
    if (!excluded) out.push_back(v);
  }
  return out;
}

}  // namespace

bool walk_exists_bf(const Graph& g, VertexId u, VertexId w, std::uint64_t length) {
  const Successors s = successors(g);
  if (u >= s.n || w >= s.n) throw InvalidArgument("oracle vertex out of range");
  return walk_exists(s, u, w, length);
}

IdList diagonal_bf(const Graph& g) {
  const Successors s = successors(g);
  return no_closed_walk_for(s, {0});
}

IdList diagonal_n_bf(const Graph& g, std::uint64_t n) {
  if (n == 0) throw InvalidArgument("D_n needs n >= 1");
  check_length(n + 1);
  const Successors s = successors(g);
  IdList out;
  for (VertexId v = 0; v < s.n; ++v) {
    if (!walk_exists(s, v, v, n + 1)) out.push_back(v);
  }
  return out;
}

IdList diagonal_inf_bf(const Graph& g) {
  const Successors s = successors(g);
  const std::size_t n = s.n;

  IdList by_length;
  for (VertexId v = 0; v < n; ++v) {
    bool long_walk = false;
    for (VertexId w = 0; w < n && !long_walk; ++w) long_walk = walk_exists(s, v, w, n);
    if (!long_walk) by_length.push_back(v);
  }

  std::vector<bool> on_cycle(n, false);
  for (VertexId c = 0; c < n; ++c) {
    for (std::uint64_t len = 1; len <= n && !on_cycle[c]; ++len) on_cycle[c] = walk_exists(s, c, c, len);
  }
  IdList by_cycle;
  for (VertexId v = 0; v < n; ++v) {
    bool reaches = false;
    for (VertexId c = 0; c < n && !reaches; ++c) {
      if (!on_cycle[c]) continue;
      for (std::uint64_t k = 0; k < n && !reaches; ++k) reaches = walk_exists(s, v, c, k);
    }
    if (!reaches) by_cycle.push_back(v);
  }
  if (by_length != by_cycle) {
    throw InternalDisagreement("oracle D_inf by walk length and by cycle reachability differ");
  }
  return by_length;
}

IdList diagonal_S_bf(const Graph& g, const std::vector<std::uint64_t>& s) {
  if (s.empty()) throw InvalidArgument("D_S needs a nonempty S");
  for (auto n : s) check_length(n + 1);
  return no_closed_walk_for(successors(g), s);
}

IdList diagonal_S_truncated_bf(const Graph& g, const UPSet& s, std::uint64_t max_n) {
  if (s.empty()) throw InvalidArgument("D_S needs a nonempty S");
  check_length(max_n + 1);
  return no_closed_walk_for(successors(g), s.members_up_to(max_n));
}

}  // namespace cantor::oracle
