#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cantor/graph.hpp"
#include "cantor/upset.hpp"
#include "cantor/vertex_set.hpp"

namespace cantor {

/// Square boolean matrix over the (OR, AND) semiring, rows packed into 64-bit
/// words. Entry (u, w) of A^L is set iff a walk of length exactly L runs from
/// u to w.
class BoolMatrix {
 public:
  using Word = VertexSet::Word;

  explicit BoolMatrix(std::size_t n);
  static BoolMatrix identity(std::size_t n);
  static BoolMatrix adjacency(const Graph& g);

  std::size_t order() const noexcept { return n_; }
  bool get(VertexId u, VertexId w) const;
  void set(VertexId u, VertexId w);

  std::span<const Word> row_words(VertexId u) const {
    return {data_.data() + u * stride_, stride_};
  }
  VertexSet row(VertexId u) const;
  VertexSet column(VertexId w) const;
  VertexSet diagonal() const;
  bool row_empty(VertexId u) const;

  bool operator==(const BoolMatrix& other) const = default;
  std::size_t hash() const noexcept;

 private:
  friend BoolMatrix mat_mul_bool(const BoolMatrix& a, const BoolMatrix& b);
  std::span<Word> mutable_row(VertexId u) { return {data_.data() + u * stride_, stride_}; }

  std::size_t n_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> data_;
};

/// Boolean product. Throws InvalidArgument on order mismatch.
BoolMatrix mat_mul_bool(const BoolMatrix& a, const BoolMatrix& b);

/// A^exponent by square-and-multiply. Throws InvalidArgument when exponent is 0.
BoolMatrix mat_pow_bool(const BoolMatrix& a, std::uint64_t exponent);

/// Eventual-periodicity certificate of A, A^2, A^3, ...:
/// A^(mu + lambda) = A^mu with mu >= 1 and lambda >= 1 both minimal.
class PowerTrace {
 public:
  std::uint64_t mu() const noexcept { return mu_; }
  std::uint64_t lambda() const noexcept { return lambda_; }

  /// Index in [1, mu + lambda) whose stored power equals A^exponent.
  std::uint64_t reduce(std::uint64_t exponent) const;
  /// A^exponent, exponent >= 1.
  const BoolMatrix& power(std::uint64_t exponent) const;
  /// Stored powers A^1 .. A^(mu + lambda - 1).
  std::span<const BoolMatrix> powers() const noexcept { return powers_; }

 private:
  friend PowerTrace power_trace(const Graph& g, std::uint64_t cap);
  std::uint64_t mu_ = 1;
  std::uint64_t lambda_ = 1;
  std::vector<BoolMatrix> powers_;
};

/// max(64, n^2 + n + 2)
std::uint64_t default_trace_cap(std::size_t order);

/// Computes successive powers until one repeats. Throws InvalidArgument when
/// cap < 2 and TraceNotFound when no repeat occurs among the first cap powers.
PowerTrace power_trace(const Graph& g, std::uint64_t cap);
inline PowerTrace power_trace(const Graph& g) { return power_trace(g, default_trace_cap(g.order())); }

/// True iff a closed walk of length exactly `length` >= 1 passes through v.
bool has_closed_walk(const Graph& g, VertexId v, std::uint64_t length);

/// True iff some walk of length exactly `length` >= 1 starts at v.
bool has_walk_from(const Graph& g, VertexId v, std::uint64_t length);

/// CW(v) = {L >= 1 | a closed walk of length L passes through v}.
UPSet closed_walk_spectrum(const PowerTrace& trace, VertexId v);
UPSet closed_walk_spectrum(const Graph& g, VertexId v);
/// Spectrum of every vertex from a single trace.
std::vector<UPSet> closed_walk_spectra(const Graph& g, const PowerTrace& trace);

/// Vertices lying on some closed walk: SCC of size >= 2, or a self-loop.
VertexSet cyclic_vertices(const Graph& g);

/// Vertices with a (possibly empty) walk into `targets`.
VertexSet reach_backward(const Graph& g, const VertexSet& targets);

/// Longest walk find_walk will materialize.
inline constexpr std::uint64_t kMaxMaterializedWalk = std::uint64_t{1} << 16;

/// Some walk of exactly `length` edges from `from` to `to`, as its vertex
/// sequence, or nullopt when none exists. Throws InvalidArgument when length
/// exceeds kMaxMaterializedWalk.
std::optional<std::vector<VertexId>> find_walk(const Graph& g, VertexId from, VertexId to,
                                               std::uint64_t length);

/// Shortest walk (at least one edge when `nonempty`) from `from` into
/// `targets`, or nullopt.
std::optional<std::vector<VertexId>> shortest_walk_into(const Graph& g, VertexId from,
                                                        const VertexSet& targets,
                                                        bool nonempty);

}  // namespace cantor
