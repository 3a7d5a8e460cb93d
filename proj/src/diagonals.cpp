#include "cantor/diagonals.hpp"

#include <numeric>
#include <set>

#include "cantor/errors.hpp"

namespace cantor {
namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Diagonals of A^1, A^2, ... computed by repeated multiplication on demand.
class PowerDiagonals {
 public:
  explicit PowerDiagonals(const Graph& g)
      : adj_(BoolMatrix::adjacency(g)), current_(adj_), diagonals_{current_.diagonal()} {}

  // Vertices with a closed walk of length `length`.
  const VertexSet& closed(std::uint64_t length) {
    while (diagonals_.size() < length) {
      current_ = mat_mul_bool(current_, adj_);
      diagonals_.push_back(current_.diagonal());
    }
    return diagonals_[length - 1];
  }

 private:
  BoolMatrix adj_;
  BoolMatrix current_;
  std::vector<VertexSet> diagonals_;
};

// Beyond this, D_n comes from square-and-multiply instead of successive powers.
constexpr std::uint64_t kIncrementalLimit = 4096;

}  // namespace

std::string describe(const DiagonalSpec& spec) {
  return std::visit(overloaded{
                        [](const CantorDiagonal&) { return std::string("D"); },
                        [](const WalkDiagonal& d) { return "D" + std::to_string(d.n); },
                        [](const InfiniteDiagonal&) { return std::string("Dinf"); },
                        [](const SetDiagonal& d) { return "DS[" + d.s.literal() + "]"; },
                    },
                    spec);
}

void validate(const DiagonalSpec& spec) {
  if (const auto* w = std::get_if<WalkDiagonal>(&spec); w && w->n == 0) {
    throw InvalidArgument("D_n needs n >= 1; use the plain diagonal for n = 0");
  }
  if (const auto* s = std::get_if<SetDiagonal>(&spec); s && s->s.empty()) {
    throw InvalidArgument("D_S needs a nonempty S");
  }
}

VertexSet diagonal(const Graph& g) { return g.loops().complement(); }

VertexSet diagonal_n(const Graph& g, std::uint64_t n) {
  validate(WalkDiagonal{n});
  if (n == UINT64_MAX) throw InvalidArgument("walk length n + 1 overflows");
  return mat_pow_bool(BoolMatrix::adjacency(g), n + 1).diagonal().complement();
}

VertexSet diagonal_inf(const Graph& g) {
  const VertexSet by_scc = reach_backward(g, cyclic_vertices(g)).complement();

  const BoolMatrix walks = mat_pow_bool(BoolMatrix::adjacency(g), g.order());
  VertexSet by_matrix(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (walks.row_empty(v)) by_matrix.insert(v);
  }
  if (!(by_scc == by_matrix)) {
    throw InternalDisagreement("D_inf by SCC " + by_scc.to_string() + " differs from D_inf by A^|V| " +
                               by_matrix.to_string());
  }
  return by_scc;
}

VertexSet diagonal_S(const Graph& g, const UPSet& s, const PowerTrace& trace) {
  validate(SetDiagonal{s});
  const UPSet lengths = s.shifted(1);
  VertexSet out(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (UPSet::intersect(closed_walk_spectrum(trace, v), lengths).empty()) out.insert(v);
  }
  return out;
}

VertexSet diagonal_S(const Graph& g, const UPSet& s) {
  validate(SetDiagonal{s});
  return diagonal_S(g, s, power_trace(g));
}

VertexSet compute_diagonal(const Graph& g, const DiagonalSpec& spec) {
  return std::visit(overloaded{
                        [&](const CantorDiagonal&) { return diagonal(g); },
                        [&](const WalkDiagonal& d) { return diagonal_n(g, d.n); },
                        [&](const InfiniteDiagonal&) { return diagonal_inf(g); },
                        [&](const SetDiagonal& d) { return diagonal_S(g, d.s); },
                    },
                    spec);
}

const char* to_string(WitnessSide side) {
  return side == WitnessSide::OutMinusDx ? "OutMinusDx" : "DxMinusOut";
}

std::uint64_t set_truncation_bound(const PowerTrace& trace, const UPSet& s) {
  const std::uint64_t lcm = std::lcm(trace.lambda(), s.period());
  return std::max(trace.mu(), s.threshold() + 1) + lcm;
}

ChainReport inclusion_chain_check(const Graph& g, std::uint64_t n_max,
                                  const std::vector<UPSet>& s_samples) {
  if (n_max == 0) throw InvalidArgument("n_max must be at least 1");
  ChainReport report;
  report.n_max = n_max;
  const VertexSet d = diagonal(g);
  const VertexSet d_inf = diagonal_inf(g);
  report.d = d.to_vector();
  report.d_inf = d_inf.to_vector();

  PowerDiagonals powers(g);
  auto walk_diagonal = [&](std::uint64_t n) { return powers.closed(n + 1).complement(); };

  for (std::uint64_t n = 1; n <= n_max; ++n) {
    const VertexSet dn = walk_diagonal(n);
    if (!d_inf.is_subset_of(dn)) {
      throw TheoremViolation("Dinf " + d_inf.to_string() + " not inside D" + std::to_string(n) +
                             " " + dn.to_string());
    }
    if (!dn.is_subset_of(d)) {
      throw TheoremViolation("D" + std::to_string(n) + " " + dn.to_string() + " not inside D " +
                             d.to_string());
    }
  }

  std::optional<PowerTrace> trace;
  for (const UPSet& s : s_samples) {
    if (s.empty()) throw InvalidArgument("S samples must be nonempty");
    if (!trace) trace = power_trace(g);
    SetIdentityCheck check;
    check.literal = s.literal();
    check.finite = s.is_finite();
    const VertexSet ds = diagonal_S(g, s, *trace);
    check.diagonal = ds.to_vector();

    std::vector<std::uint64_t> members;
    if (s.is_finite()) {
      members = s.exceptionals();
    } else {
      check.bound = set_truncation_bound(*trace, s);
      members = s.members_up_to(*check.bound);
    }
    VertexSet expected = VertexSet::full(g.order());
    for (auto n : members) {
      if (n == 0) {
        expected &= d;
      } else if (n > kIncrementalLimit) {
        expected &= diagonal_n(g, n);
      } else {
        expected &= walk_diagonal(n);
      }
    }
    if (!(ds == expected)) {
      throw TheoremViolation("D_S for S=" + check.literal + " is " + ds.to_string() +
                             " but the intersection of D_n over S is " + expected.to_string());
    }
    report.set_identities.push_back(std::move(check));
  }
  return report;
}

OutSetCount distinct_out_count(const Graph& g) {
  std::set<std::vector<VertexSet::Word>> rows;
  for (VertexId v = 0; v < g.order(); ++v) {
    const auto words = g.out_set(v).words();
    rows.emplace(words.begin(), words.end());
  }
  return {rows.size(), g.order()};
}

}  // namespace cantor
