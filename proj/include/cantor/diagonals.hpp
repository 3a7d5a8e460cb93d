#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "cantor/graph.hpp"
#include "cantor/upset.hpp"
#include "cantor/vertex_set.hpp"
#include "cantor/walks.hpp"

namespace cantor {

// Which anti-diagonal set to build.
struct CantorDiagonal {};  // unlooped vertices
struct WalkDiagonal {      // no closed walk of length n + 1
  std::uint64_t n = 1;
};
struct InfiniteDiagonal {};  // no infinite walk starts here
struct SetDiagonal {         // no closed walk of length n + 1 for any n in S
  UPSet s;
};
using DiagonalSpec = std::variant<CantorDiagonal, WalkDiagonal, InfiniteDiagonal, SetDiagonal>;

/// "D", "D3", "Dinf", "DS[finite(0,2)]".
std::string describe(const DiagonalSpec& spec);

/// Throws InvalidArgument for WalkDiagonal with n == 0 or SetDiagonal with
/// an empty S.
void validate(const DiagonalSpec& spec);

VertexSet diagonal(const Graph& g);
VertexSet diagonal_n(const Graph& g, std::uint64_t n);
/// Computed twice, by SCC reachability and by the length-|V| matrix power;
/// throws InternalDisagreement if the two differ.
VertexSet diagonal_inf(const Graph& g);
VertexSet diagonal_S(const Graph& g, const UPSet& s);
VertexSet diagonal_S(const Graph& g, const UPSet& s, const PowerTrace& trace);
VertexSet compute_diagonal(const Graph& g, const DiagonalSpec& spec);

enum class WitnessSide { OutMinusDx, DxMinusOut };
const char* to_string(WitnessSide side);

/// Closed walk u -> ... -> u, listed by vertex (first == last).
struct ClosedWalk {
  std::vector<VertexId> vertices;
  std::uint64_t length() const { return vertices.size() - 1; }
};
/// Walk from u into a vertex lying on `cycle`, which then repeats forever.
struct InfiniteTail {
  std::vector<VertexId> prefix;
  std::vector<VertexId> cycle;  // closed, starts at prefix.back()
};
using Evidence = std::variant<std::monostate, ClosedWalk, InfiniteTail>;

/// A vertex in the symmetric difference of a diagonal set and Out(against).
struct Witness {
  VertexId vertex = 0;
  WitnessSide side = WitnessSide::DxMinusOut;
  VertexId against = 0;
  Evidence evidence;
};

/// The classic witness: the vertex itself, on whichever side its loop puts it.
Witness cantor_witness(const Graph& g, VertexId v);

/// Witness for Dn, Dinf or DS following the case split on vEv and v in Dx.
/// Throws InvalidArgument for CantorDiagonal.
Witness variant_witness(const Graph& g, VertexId v, const DiagonalSpec& spec);

/// Reason the witness does not certify dx != Out(v), or nullopt if it does.
std::optional<std::string> witness_defect(const Graph& g, const DiagonalSpec& spec,
                                          const VertexSet& dx, VertexId v, const Witness& w);

/// One validated witness per vertex, in vertex order. Throws TheoremViolation
/// if some Out(v) equals the diagonal set or a witness fails validation.
std::vector<Witness> verify_unequal(const Graph& g, const DiagonalSpec& spec);

struct SetIdentityCheck {
  std::string literal;
  bool finite = true;
  std::optional<std::uint64_t> bound;  // B*, for infinite S
  std::vector<VertexId> diagonal;
};

struct ChainReport {
  std::uint64_t n_max = 0;
  std::vector<VertexId> d;
  std::vector<VertexId> d_inf;
  std::vector<SetIdentityCheck> set_identities;
};

/// Checks Dinf <= Dn <= D for 1 <= n <= n_max and D_S = intersection of D_n
/// over n in S (D_0 = D), truncated at
/// B* = max(mu, t_S + 1) + lcm(lambda, d_S) when S is infinite. Throws
/// TheoremViolation on any failure.
ChainReport inclusion_chain_check(const Graph& g, std::uint64_t n_max,
                                  const std::vector<UPSet>& s_samples);

/// Upper bound on the members of S that decide D_S.
std::uint64_t set_truncation_bound(const PowerTrace& trace, const UPSet& s);

struct OutSetCount {
  std::size_t count = 0;
  std::size_t order = 0;
};
/// Number of distinct outgoing sets; never more than the order.
OutSetCount distinct_out_count(const Graph& g);

}  // namespace cantor
