#include <map>

#include "cantor/diagonals.hpp"
#include "cantor/errors.hpp"

namespace cantor {
namespace {

bool edge_valid(const Graph& g, const std::vector<VertexId>& walk) {
  for (std::size_t i = 0; i + 1 < walk.size(); ++i) {
    if (walk[i] >= g.order() || walk[i + 1] >= g.order()) return false;
    if (!g.has_edge(walk[i], walk[i + 1])) return false;
  }
  return walk.empty() || walk.back() < g.order();
}

ClosedWalk pumped_loop(VertexId v, std::uint64_t length) {
  return ClosedWalk{std::vector<VertexId>(length + 1, v)};
}

// Shared state for producing witnesses against every vertex of one graph.
class WitnessBuilder {
 public:
  WitnessBuilder(const Graph& g, const DiagonalSpec& spec)
      : g_(g), spec_(spec), dx_(compute_diagonal(g, spec)) {
    if (const auto* set = std::get_if<SetDiagonal>(&spec_)) {
      trace_ = power_trace(g_);
      lengths_ = set->s.shifted(1);
    }
  }

  const VertexSet& dx() const { return dx_; }

  Witness build(VertexId v) {
    if (std::holds_alternative<CantorDiagonal>(spec_)) {
      throw InvalidArgument("variant witnesses are for Dn, Dinf and DS; use cantor_witness for D");
    }
    Witness w;
    w.against = v;
    if (g_.has_edge(v, v)) {
      // A loop puts v on closed walks of every length and on an infinite walk.
      w.vertex = v;
      w.side = WitnessSide::OutMinusDx;
      if (std::holds_alternative<InfiniteDiagonal>(spec_)) {
        w.evidence = InfiniteTail{{v}, {v, v}};
      } else {
        const std::uint64_t length = loop_length();
        if (length <= kMaxMaterializedWalk) w.evidence = pumped_loop(v, length);
      }
      return w;
    }
    if (dx_.contains(v)) {
      w.vertex = v;
      w.side = WitnessSide::DxMinusOut;
      return w;
    }
    // v is unlooped and outside Dx, so a violating walk leaves v; its first
    // step is outside Dx as well.
    w.side = WitnessSide::OutMinusDx;
    if (std::holds_alternative<InfiniteDiagonal>(spec_)) {
      return infinite_step(std::move(w), v);
    }
    return closed_step(std::move(w), v, violating_length(v));
  }

 private:
  // Length of the closed walk a loop must certify.
  std::uint64_t loop_length() const {
    if (const auto* wd = std::get_if<WalkDiagonal>(&spec_)) return wd->n + 1;
    return *std::get<SetDiagonal>(spec_).s.min_element() + 1;
  }

  std::uint64_t violating_length(VertexId v) const {
    if (const auto* wd = std::get_if<WalkDiagonal>(&spec_)) return wd->n + 1;
    const auto common = UPSet::intersect(closed_walk_spectrum(*trace_, v), lengths_);
    const auto length = common.min_element();
    if (!length) {
      throw TheoremViolation("vertex " + std::to_string(v) + " is outside " + describe(spec_) +
                             " but has no closed walk of a length in S+1");
    }
    return *length;
  }

  Witness infinite_step(Witness w, VertexId v) {
    const VertexSet next = g_.out_set(v) - dx_;
    if (next.empty()) {
      throw TheoremViolation("vertex " + std::to_string(v) +
                             " is outside Dinf but every successor is inside it");
    }
    w.vertex = next.to_vector().front();
    if (!cyclic_) cyclic_ = cyclic_vertices(g_);
    auto prefix = shortest_walk_into(g_, w.vertex, *cyclic_, false);
    if (!prefix) {
      throw TheoremViolation("vertex " + std::to_string(w.vertex) + " reaches no cycle");
    }
    const VertexId entry = prefix->back();
    auto cycle = shortest_walk_into(g_, entry, VertexSet(g_.order(), {entry}), true);
    if (!cycle) throw TheoremViolation("cyclic vertex " + std::to_string(entry) + " has no cycle");
    w.evidence = InfiniteTail{std::move(*prefix), std::move(*cycle)};
    return w;
  }

  Witness closed_step(Witness w, VertexId v, std::uint64_t length) {
    if (length <= kMaxMaterializedWalk) {
      auto walk = find_walk(g_, v, v, length);
      if (!walk) {
        throw TheoremViolation("vertex " + std::to_string(v) + " has no closed walk of length " +
                               std::to_string(length));
      }
      // Rotate v w1 ... v into w1 ... v w1.
      std::vector<VertexId> rotated(walk->begin() + 1, walk->end());
      rotated.push_back((*walk)[1]);
      w.vertex = rotated.front();
      w.evidence = ClosedWalk{std::move(rotated)};
      return w;
    }
    // Too long to list: pick w1 in Out(v) with a walk of length - 1 back to v.
    auto it = returns_.find(length - 1);
    if (it == returns_.end()) {
      it = returns_.emplace(length - 1, mat_pow_bool(BoolMatrix::adjacency(g_), length - 1)).first;
    }
    const VertexSet first_steps = g_.out_set(v) & it->second.column(v);
    if (first_steps.empty()) {
      throw TheoremViolation("vertex " + std::to_string(v) + " has no closed walk of length " +
                             std::to_string(length));
    }
    w.vertex = first_steps.to_vector().front();
    return w;
  }

  const Graph& g_;
  const DiagonalSpec& spec_;
  VertexSet dx_;
  std::optional<PowerTrace> trace_;
  UPSet lengths_;
  std::optional<VertexSet> cyclic_;
  std::map<std::uint64_t, BoolMatrix> returns_;
};

}  // namespace

Witness cantor_witness(const Graph& g, VertexId v) {
  Witness w;
  w.vertex = v;
  w.against = v;
  if (g.has_edge(v, v)) {
    w.side = WitnessSide::OutMinusDx;
    w.evidence = ClosedWalk{{v, v}};
  } else {
    w.side = WitnessSide::DxMinusOut;
  }
  return w;
}

Witness variant_witness(const Graph& g, VertexId v, const DiagonalSpec& spec) {
  validate(spec);
  (void)g.out_set(v);
  WitnessBuilder builder(g, spec);
  return builder.build(v);
}

std::optional<std::string> witness_defect(const Graph& g, const DiagonalSpec& spec,
                                          const VertexSet& dx, VertexId v, const Witness& w) {
  const std::size_t n = g.order();
  if (dx.width() != n) return "diagonal set width differs from graph order";
  if (v >= n || w.against != v) return "witness is not against vertex " + std::to_string(v);
  if (w.vertex >= n) return "witness vertex out of range";

  const bool in_out = g.has_edge(v, w.vertex);
  const bool in_dx = dx.contains(w.vertex);
  if (w.side == WitnessSide::OutMinusDx && !(in_out && !in_dx)) {
    return "vertex " + std::to_string(w.vertex) + " is not in Out(" + std::to_string(v) +
           ") minus " + describe(spec);
  }
  if (w.side == WitnessSide::DxMinusOut && !(in_dx && !in_out)) {
    return "vertex " + std::to_string(w.vertex) + " is not in " + describe(spec) + " minus Out(" +
           std::to_string(v) + ")";
  }

  if (std::holds_alternative<std::monostate>(w.evidence)) return std::nullopt;
  if (w.side != WitnessSide::OutMinusDx) return "DxMinusOut witnesses carry no walk";

  if (const auto* walk = std::get_if<ClosedWalk>(&w.evidence)) {
    const auto& vs = walk->vertices;
    if (vs.size() < 2 || vs.front() != w.vertex || vs.back() != w.vertex) {
      return "evidence is not a closed walk through the witness";
    }
    if (!edge_valid(g, vs)) return "evidence walk uses a missing edge";
    const std::uint64_t length = walk->length();
    bool length_ok = true;
    if (std::holds_alternative<CantorDiagonal>(spec)) {
      length_ok = length == 1;
    } else if (const auto* wd = std::get_if<WalkDiagonal>(&spec)) {
      length_ok = length == wd->n + 1;
    } else if (const auto* sd = std::get_if<SetDiagonal>(&spec)) {
      length_ok = sd->s.contains(length - 1);
    }
    if (!length_ok) {
      return "closed walk of length " + std::to_string(length) + " does not exclude the witness from " +
             describe(spec);
    }
    return std::nullopt;
  }

  const auto& tail = std::get<InfiniteTail>(w.evidence);
  if (!std::holds_alternative<InfiniteDiagonal>(spec)) return "infinite tail only certifies Dinf";
  if (tail.prefix.empty() || tail.prefix.front() != w.vertex) {
    return "infinite tail does not start at the witness";
  }
  if (tail.cycle.size() < 2 || tail.cycle.front() != tail.prefix.back() ||
      tail.cycle.back() != tail.prefix.back()) {
    return "infinite tail does not end in a cycle";
  }
  if (!edge_valid(g, tail.prefix) || !edge_valid(g, tail.cycle)) {
    return "infinite tail uses a missing edge";
  }
  return std::nullopt;
}

std::vector<Witness> verify_unequal(const Graph& g, const DiagonalSpec& spec) {
  validate(spec);
  const bool classic = std::holds_alternative<CantorDiagonal>(spec);
  std::optional<WitnessBuilder> builder;
  VertexSet dx = classic ? diagonal(g) : (builder.emplace(g, spec), builder->dx());

  std::vector<Witness> witnesses;
  witnesses.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) {
    if (dx == g.out_set(v)) {
      throw TheoremViolation(describe(spec) + " = " + dx.to_string() + " equals Out(" +
                             std::to_string(v) + ")");
    }
    Witness w = classic ? cantor_witness(g, v) : builder->build(v);
    if (auto defect = witness_defect(g, spec, dx, v, w)) {
      throw TheoremViolation("witness against " + std::to_string(v) + " for " + describe(spec) +
                             ": " + *defect);
    }
    witnesses.push_back(std::move(w));
  }
  return witnesses;
}

}  // namespace cantor
