#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cantor/diagonals.hpp"
#include "cantor/graph.hpp"
#include "cantor/random_graph.hpp"
#include "cantor/upset.hpp"

/// Brute-force reference implementations. Nothing here touches the matrix,
/// trace or SCC machinery of the engine; sets are plain sorted id lists.
namespace cantor::oracle {

inline constexpr std::size_t kMaxOrder = 8;
inline constexpr std::uint64_t kMaxWalkLength = 256;

using IdList = std::vector<VertexId>;

/// Depth-first enumeration of walks u -> w with exactly `length` edges.
/// Branches from a (vertex, steps left) state already shown to be dead are
/// cut. Length 0 means the empty walk (u == w). Throws GuardExceeded beyond
/// kMaxOrder vertices or kMaxWalkLength edges.
bool walk_exists_bf(const Graph& g, VertexId u, VertexId w, std::uint64_t length);

IdList diagonal_bf(const Graph& g);
IdList diagonal_n_bf(const Graph& g, std::uint64_t n);
/// Vertices with no walk of |V| edges; cross-checked against "reaches a
/// vertex with a closed walk of length at most |V|" enumerated over lengths
/// 1..|V|. Throws InternalDisagreement if those differ.
IdList diagonal_inf_bf(const Graph& g);
/// Literal two-clause reading: no closed walk of length n + 1 for 0 < n in S,
/// and no loop when 0 in S.
IdList diagonal_S_bf(const Graph& g, const std::vector<std::uint64_t>& s);
/// Same for the members of an ultimately periodic S up to max_n.
IdList diagonal_S_truncated_bf(const Graph& g, const UPSet& s, std::uint64_t max_n);

struct PropertyResult {
  std::uint64_t pass = 0;
  std::uint64_t fail = 0;
  std::optional<std::string> counterexample;  // first failure
};

struct SweepReport {
  std::uint64_t graphs_checked = 0;
  std::map<std::size_t, std::uint64_t> graphs_by_order;
  std::map<std::string, PropertyResult> properties;

  std::uint64_t failures() const;
  bool ok() const { return failures() == 0; }
  void merge(const SweepReport& other);
  void record(const std::string& property, bool passed, const std::string& detail);
};

/// What to check on every graph of a sweep.
struct SweepConfig {
  std::vector<std::uint64_t> n_values{1, 2, 3, 4, 5, 6};
  std::vector<UPSet> s_samples = default_s_samples();
  std::uint64_t chain_n_max = 8;
  std::uint64_t spectrum_max_length = 40;
  unsigned threads = 0;  // 0: hardware concurrency

  /// finite(0), finite(1), finite(0,2), evens, odds
  static std::vector<UPSet> default_s_samples();
};

/// Every diagonal spec a sweep verifies: D, Dn for n_values, Dinf, DS for
/// each sample.
std::vector<DiagonalSpec> sweep_specs(const SweepConfig& config);

/// Runs every property on one graph. Oracle comparisons are skipped for
/// graphs above kMaxOrder.
void check_graph(const Graph& g, const SweepConfig& config, SweepReport& report);

/// All digraphs of order 1..order_max (2, 16, 512, 65536 per order). Order 4
/// must be requested with allow_order4. Throws InvalidArgument otherwise.
SweepReport exhaustive_sweep(std::size_t order_max, const SweepConfig& config,
                             bool allow_order4 = false);

struct RandomSweepConfig {
  std::size_t count = 500;
  std::size_t size_min = 4;
  std::size_t size_max = 64;
  std::vector<double> p_values{0.05, 0.2, 0.5, 0.9};
  std::uint64_t seed = 1;
};

struct RandomGraphSpec {
  std::size_t n;
  double p;
  std::uint64_t seed;
  LoopPolicy loops;
};

/// The i-th graph parameters of a random sweep: p cycles through p_values,
/// loop policy alternates every |p_values| graphs, order and per-graph seed
/// come from std::mt19937_64 seeded with config.seed.
std::vector<RandomGraphSpec> random_corpus(const RandomSweepConfig& config);

SweepReport random_sweep(const RandomSweepConfig& random, const SweepConfig& config);

/// Edge list "n k; u v; ..." on one line, for counterexample messages.
std::string describe_graph(const Graph& g);

}  // namespace cantor::oracle
