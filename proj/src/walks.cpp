#include "cantor/walks.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_map>

#include "cantor/errors.hpp"

namespace cantor {

BoolMatrix::BoolMatrix(std::size_t n)
    : n_(n), stride_(VertexSet::words_for(n)), data_(n * stride_, 0) {}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n);
  for (VertexId v = 0; v < n; ++v) m.set(v, v);
  return m;
}

BoolMatrix BoolMatrix::adjacency(const Graph& g) {
  BoolMatrix m(g.order());
  for (VertexId u = 0; u < g.order(); ++u) {
    const auto words = g.out_set(u).words();
    std::copy(words.begin(), words.end(), m.mutable_row(u).begin());
  }
  return m;
}

bool BoolMatrix::get(VertexId u, VertexId w) const {
  if (u >= n_ || w >= n_) throw InvalidArgument("matrix index out of range");
  return (data_[u * stride_ + w / 64] >> (w % 64)) & 1U;
}

void BoolMatrix::set(VertexId u, VertexId w) {
  if (u >= n_ || w >= n_) throw InvalidArgument("matrix index out of range");
  data_[u * stride_ + w / 64] |= Word{1} << (w % 64);
}

VertexSet BoolMatrix::row(VertexId u) const {
  if (u >= n_) throw InvalidArgument("matrix row out of range");
  VertexSet s(n_);
  const auto src = row_words(u);
  std::copy(src.begin(), src.end(), s.words().begin());
  return s;
}

VertexSet BoolMatrix::column(VertexId w) const {
  VertexSet s(n_);
  for (VertexId u = 0; u < n_; ++u) {
    if (get(u, w)) s.insert(u);
  }
  return s;
}

VertexSet BoolMatrix::diagonal() const {
  VertexSet s(n_);
  for (VertexId v = 0; v < n_; ++v) {
    if (get(v, v)) s.insert(v);
  }
  return s;
}

bool BoolMatrix::row_empty(VertexId u) const {
  const auto r = row_words(u);
  return std::all_of(r.begin(), r.end(), [](Word w) { return w == 0; });
}

std::size_t BoolMatrix::hash() const noexcept {
  // FNV-1a over the packed words.
  std::uint64_t h = 1469598103934665603ULL;
  for (Word w : data_) {
    h ^= w;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h ^ n_);
}

BoolMatrix mat_mul_bool(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.order() != b.order()) {
    throw InvalidArgument("matrix order mismatch: " + std::to_string(a.order()) + " vs " +
                          std::to_string(b.order()));
  }
  BoolMatrix out(a.order());
  const std::size_t stride = a.stride_;
  for (VertexId u = 0; u < a.order(); ++u) {
    auto dst = out.mutable_row(u);
    const auto src = a.row_words(u);
    for (std::size_t w = 0; w < stride; ++w) {
      BoolMatrix::Word bits = src[w];
      while (bits != 0) {
        const VertexId k = w * 64 + static_cast<std::size_t>(__builtin_ctzll(bits));
        bits &= bits - 1;
        const auto brow = b.row_words(k);
        for (std::size_t j = 0; j < stride; ++j) dst[j] |= brow[j];
      }
    }
  }
  return out;
}

BoolMatrix mat_pow_bool(const BoolMatrix& a, std::uint64_t exponent) {
  if (exponent == 0) throw InvalidArgument("matrix exponent must be at least 1");
  std::optional<BoolMatrix> result;
  BoolMatrix base = a;
  while (true) {
    if (exponent & 1U) result = result ? mat_mul_bool(*result, base) : base;
    exponent >>= 1U;
    if (exponent == 0) break;
    base = mat_mul_bool(base, base);
  }
  return *result;
}

std::uint64_t PowerTrace::reduce(std::uint64_t exponent) const {
  if (exponent == 0) throw InvalidArgument("trace exponent must be at least 1");
  if (exponent < mu_) return exponent;
  return mu_ + (exponent - mu_) % lambda_;
}

const BoolMatrix& PowerTrace::power(std::uint64_t exponent) const {
  return powers_[reduce(exponent) - 1];
}

std::uint64_t default_trace_cap(std::size_t order) {
  const std::uint64_t n = order;
  return std::max<std::uint64_t>(64, n * n + n + 2);
}

PowerTrace power_trace(const Graph& g, std::uint64_t cap) {
  if (cap < 2) throw InvalidArgument("trace cap must be at least 2");
  const BoolMatrix a = BoolMatrix::adjacency(g);
  PowerTrace trace;
  std::unordered_multimap<std::size_t, std::uint64_t> seen;  // hash -> exponent
  BoolMatrix current = a;
  for (std::uint64_t k = 1; k <= cap; ++k) {
    const auto h = current.hash();
    const auto [lo, hi] = seen.equal_range(h);
    for (auto it = lo; it != hi; ++it) {
      if (trace.powers_[it->second - 1] == current) {
        trace.mu_ = it->second;
        trace.lambda_ = k - it->second;
        return trace;
      }
    }
    seen.emplace(h, k);
    trace.powers_.push_back(current);
    if (k < cap) current = mat_mul_bool(current, a);
  }
  throw TraceNotFound("boolean powers did not repeat within cap " + std::to_string(cap) +
                      "; raise the trace cap");
}

bool has_closed_walk(const Graph& g, VertexId v, std::uint64_t length) {
  (void)g.out_set(v);
  return mat_pow_bool(BoolMatrix::adjacency(g), length).get(v, v);
}

bool has_walk_from(const Graph& g, VertexId v, std::uint64_t length) {
  (void)g.out_set(v);
  return !mat_pow_bool(BoolMatrix::adjacency(g), length).row_empty(v);
}

UPSet closed_walk_spectrum(const PowerTrace& trace, VertexId v) {
  UPSetParts parts;
  parts.threshold = trace.mu();
  parts.period = trace.lambda();
  const std::uint64_t end = trace.mu() + trace.lambda();
  for (std::uint64_t len = 1; len < end; ++len) {
    if (!trace.power(len).get(v, v)) continue;
    if (len < trace.mu()) {
      parts.exceptionals.push_back(len);
    } else {
      parts.residues.push_back(len % trace.lambda());
    }
  }
  return UPSet::normalize(std::move(parts),
                          std::max<std::uint64_t>(UPSet::kDefaultPeriodCap, trace.lambda()));
}

UPSet closed_walk_spectrum(const Graph& g, VertexId v) {
  (void)g.out_set(v);
  return closed_walk_spectrum(power_trace(g), v);
}

std::vector<UPSet> closed_walk_spectra(const Graph& g, const PowerTrace& trace) {
  std::vector<UPSet> out;
  out.reserve(g.order());
  for (VertexId v = 0; v < g.order(); ++v) out.push_back(closed_walk_spectrum(trace, v));
  return out;
}

VertexSet cyclic_vertices(const Graph& g) {
  // Iterative Tarjan.
  const std::size_t n = g.order();
  constexpr std::size_t kUnvisited = static_cast<std::size_t>(-1);
  std::vector<std::size_t> index(n, kUnvisited);
  std::vector<std::size_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<VertexId> stack;
  std::vector<std::vector<VertexId>> succ(n);
  for (VertexId v = 0; v < n; ++v) succ[v] = g.out_set(v).to_vector();

  VertexSet cyclic(n);
  std::size_t next_index = 0;
  struct Frame {
    VertexId v;
    std::size_t child;
  };
  std::vector<Frame> call;

  for (VertexId root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      if (f.child < succ[f.v].size()) {
        const VertexId w = succ[f.v][f.child++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.v] = std::min(lowlink[f.v], index[w]);
        }
        continue;
      }
      const VertexId v = f.v;
      call.pop_back();
      if (!call.empty()) {
        lowlink[call.back().v] = std::min(lowlink[call.back().v], lowlink[v]);
      }
      if (lowlink[v] != index[v]) continue;
      std::vector<VertexId> component;
      VertexId w = 0;
      do {
        w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        component.push_back(w);
      } while (w != v);
      if (component.size() >= 2) {
        for (VertexId c : component) cyclic.insert(c);
      } else if (g.has_edge(v, v)) {
        cyclic.insert(v);
      }
    }
  }
  return cyclic;
}

VertexSet reach_backward(const Graph& g, const VertexSet& targets) {
  if (targets.width() != g.order()) throw InvalidArgument("target set width differs from order");
  const Graph reverse = g.transpose();
  VertexSet reached = targets;
  std::deque<VertexId> queue;
  targets.for_each([&](VertexId v) { queue.push_back(v); });
  while (!queue.empty()) {
    const VertexId v = queue.front();
    queue.pop_front();
    reverse.out_set(v).for_each([&](VertexId u) {
      if (!reached.contains(u)) {
        reached.insert(u);
        queue.push_back(u);
      }
    });
  }
  return reached;
}

std::optional<std::vector<VertexId>> find_walk(const Graph& g, VertexId from, VertexId to,
                                               std::uint64_t length) {
  (void)g.out_set(from);
  (void)g.out_set(to);
  if (length > kMaxMaterializedWalk) {
    throw InvalidArgument("walk of length " + std::to_string(length) +
                          " is too long to materialize");
  }
  std::vector<VertexSet> layers;
  layers.reserve(length + 1);
  layers.emplace_back(g.order(), std::initializer_list<VertexId>{from});
  for (std::uint64_t i = 1; i <= length; ++i) {
    VertexSet next(g.order());
    layers.back().for_each([&](VertexId x) { next |= g.out_set(x); });
    if (next.empty()) return std::nullopt;
    layers.push_back(std::move(next));
  }
  if (!layers.back().contains(to)) return std::nullopt;

  const Graph reverse = g.transpose();
  std::vector<VertexId> walk(length + 1);
  walk[length] = to;
  for (std::uint64_t i = length; i > 0; --i) {
    const VertexSet preds = layers[i - 1] & reverse.out_set(walk[i]);
    walk[i - 1] = preds.to_vector().front();
  }
  return walk;
}

std::optional<std::vector<VertexId>> shortest_walk_into(const Graph& g, VertexId from,
                                                        const VertexSet& targets,
                                                        bool nonempty) {
  if (targets.width() != g.order()) throw InvalidArgument("target set width differs from order");
  if (!nonempty && targets.contains(from)) return std::vector<VertexId>{from};

  const std::size_t n = g.order();
  std::vector<VertexId> parent(n, n);
  VertexSet discovered(n);
  std::deque<VertexId> queue{from};
  auto reconstruct = [&](VertexId end) {
    std::vector<VertexId> walk{end};
    VertexId cur = parent[end];
    while (cur != from) {
      walk.push_back(cur);
      cur = parent[cur];
    }
    walk.push_back(from);
    std::reverse(walk.begin(), walk.end());
    return walk;
  };
  while (!queue.empty()) {
    const VertexId x = queue.front();
    queue.pop_front();
    for (VertexId y : g.out_set(x).to_vector()) {
      if (targets.contains(y)) {
        parent[y] = x;
        return reconstruct(y);
      }
      if (y == from || discovered.contains(y)) continue;
      discovered.insert(y);
      parent[y] = x;
      queue.push_back(y);
    }
  }
  return std::nullopt;
}

}  // namespace cantor
