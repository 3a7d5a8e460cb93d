#pragma once

#include <cstdint>

#include "cantor/graph.hpp"

namespace cantor {

enum class LoopPolicy { Allow, Forbid };

/// G(n, p) digraph: each ordered pair (u, v), u-major, is drawn from
/// std::mt19937_64 seeded with `seed` and kept iff the top 53 bits, read as a
/// fraction in [0, 1), are below p. Pairs u == v are skipped without a draw
/// under LoopPolicy::Forbid. Throws InvalidArgument on n == 0 or p outside
/// [0, 1].
Graph gen_random(std::size_t n, double p, std::uint64_t seed, LoopPolicy loops);

}  // namespace cantor
