#include "cantor/random_graph.hpp"

#include <random>
#include <string>

#include "cantor/errors.hpp"

namespace cantor {

Graph gen_random(std::size_t n, double p, std::uint64_t seed, LoopPolicy loops) {
  if (n == 0) throw InvalidArgument("graph order must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InvalidArgument("edge probability " + std::to_string(p) + " is outside [0, 1]");
  }
  std::mt19937_64 rng(seed);
  std::vector<VertexSet> rows(n, VertexSet(n));
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = 0; v < n; ++v) {
      if (u == v && loops == LoopPolicy::Forbid) continue;
      const double draw = static_cast<double>(rng() >> 11) * 0x1.0p-53;
      if (draw < p) rows[u].insert(v);
    }
  }
  return Graph::from_rows(std::move(rows));
}

}  // namespace cantor
