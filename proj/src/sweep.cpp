#include <algorithm>
#include <random>
#include <sstream>
#include <thread>

#include "cantor/errors.hpp"
#include "cantor/oracle.hpp"
#include "cantor/walks.hpp"

namespace cantor::oracle {
namespace {

// Every nonempty subset of {0, ..., 5}.
const std::vector<std::vector<std::uint64_t>>& small_finite_sets() {
  static const auto sets = [] {
    std::vector<std::vector<std::uint64_t>> out;
    for (unsigned mask = 1; mask < 64; ++mask) {
      std::vector<std::uint64_t> s;
      for (std::uint64_t i = 0; i < 6; ++i) {
        if (mask & (1U << i)) s.push_back(i);
      }
      out.push_back(std::move(s));
    }
    return out;
  }();
  return sets;
}

std::string join_ids(const std::vector<VertexId>& ids) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < ids.size(); ++i) os << (i ? "," : "") << ids[i];
  os << '}';
  return os.str();
}

class GraphChecker {
 public:
  GraphChecker(const Graph& g, const SweepConfig& config, SweepReport& report)
      : g_(g), config_(config), report_(report), small_(g.order() <= kMaxOrder) {}

  void run() {
    check("cantor_fixed_point", [&] { return cantor_fixed_point(); });
    check("pigeonhole", [&] { return pigeonhole(); });
    check("dinf_scc_vs_matrix", [&] {
      (void)diagonal_inf(g_);
      return std::string();
    });
    for (const auto& spec : sweep_specs(config_)) {
      check("unequal_witness", [&] { return unequal(spec); });
    }
    check("chain_identities", [&] { return chain(); });
    check("cyclic_vs_spectrum", [&] { return cyclic_vs_spectrum(); });
    check("spectrum_soundness", [&] { return spectrum_soundness(); });
    check("spectrum_closure", [&] { return spectrum_closure(); });
    check("trace_validity", [&] { return trace_validity(); });
    if (!small_) return;
    check("walk_semantics", [&] { return walk_semantics(); });
    check("oracle_diagonal_n", [&] { return oracle_diagonal_n(); });
    check("oracle_diagonal_inf", [&] { return oracle_diagonal_inf(); });
    check("oracle_diagonal_S_finite", [&] { return oracle_diagonal_s_finite(); });
    check("oracle_diagonal_S_infinite", [&] { return oracle_diagonal_s_infinite(); });
    check("oracle_witness_sets", [&] { return oracle_witness_sets(); });
  }

 private:
  // Each check returns an empty string on success, else the failure detail.
  template <typename F>
  void check(const std::string& property, F&& body) {
    std::string detail;
    try {
      detail = body();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    report_.record(property, detail.empty(),
                   detail.empty() ? std::string() : describe_graph(g_) + " :: " + detail);
  }

  const PowerTrace& trace() {
    if (!trace_) trace_ = power_trace(g_);
    return *trace_;
  }

  const std::vector<UPSet>& spectra() {
    if (!spectra_) spectra_ = closed_walk_spectra(g_, trace());
    return *spectra_;
  }

  std::string cantor_fixed_point() {
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (cantor_witness(g_, v).vertex != v) return "witness moved off vertex " + std::to_string(v);
    }
    return {};
  }

  std::string pigeonhole() {
    const auto count = distinct_out_count(g_);
    if (count.count > count.order || count.order != g_.order()) return "more out-sets than vertices";
    const VertexSet d = diagonal(g_);
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (g_.out_set(v) == d) return "D equals Out(" + std::to_string(v) + ")";
    }
    return {};
  }

  std::string unequal(const DiagonalSpec& spec) {
    const auto witnesses = verify_unequal(g_, spec);
    if (witnesses.size() != g_.order()) return describe(spec) + ": wrong witness count";
    return {};
  }

  std::string chain() {
    std::vector<UPSet> samples = config_.s_samples;
    if (small_) {
      for (const auto& s : small_finite_sets()) samples.push_back(UPSet::from_finite(s));
    }
    (void)inclusion_chain_check(g_, config_.chain_n_max, samples);
    return {};
  }

  std::string cyclic_vs_spectrum() {
    const VertexSet cyclic = cyclic_vertices(g_);
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (cyclic.contains(v) == spectra()[v].empty()) {
        return "vertex " + std::to_string(v) + " cyclic/spectrum mismatch";
      }
    }
    return {};
  }

  std::string spectrum_soundness() {
    const BoolMatrix a = BoolMatrix::adjacency(g_);
    BoolMatrix power = a;
    for (std::uint64_t len = 1; len <= config_.spectrum_max_length; ++len) {
      if (len > 1) power = mat_mul_bool(power, a);
      for (VertexId v = 0; v < g_.order(); ++v) {
        const bool in_spectrum = spectra()[v].contains(len);
        if (in_spectrum != power.get(v, v)) {
          return "vertex " + std::to_string(v) + " length " + std::to_string(len) +
                 ": spectrum disagrees with A^L";
        }
        if (small_ && in_spectrum != has_closed_walk(g_, v, len)) {
          return "vertex " + std::to_string(v) + " length " + std::to_string(len) +
                 ": spectrum disagrees with has_closed_walk";
        }
        if (small_ && in_spectrum != walk_exists_bf(g_, v, v, len)) {
          return "vertex " + std::to_string(v) + " length " + std::to_string(len) +
                 ": spectrum disagrees with enumeration";
        }
      }
    }
    for (VertexId v = 0; v < g_.order(); ++v) {
      if (spectra()[v].contains(0)) return "0 in spectrum of " + std::to_string(v);
    }
    return {};
  }

  std::string spectrum_closure() {
    for (VertexId v = 0; v < g_.order(); ++v) {
      const auto members = spectra()[v].members_up_to(20);
      for (auto a : members) {
        for (auto b : members) {
          if (!spectra()[v].contains(a + b)) {
            return "spectrum of " + std::to_string(v) + " not closed under " + std::to_string(a) +
                   "+" + std::to_string(b);
          }
        }
      }
    }
    return {};
  }

  std::string trace_validity() {
    const BoolMatrix a = BoolMatrix::adjacency(g_);
    const auto& t = trace();
    const std::uint64_t end = t.mu() + 3 * t.lambda();
    for (std::uint64_t len = 1; len <= end; ++len) {
      if (!(mat_pow_bool(a, len) == t.power(len))) {
        return "A^" + std::to_string(len) + " differs from trace power " + std::to_string(t.reduce(len));
      }
    }
    return {};
  }

  std::string walk_semantics() {
    const BoolMatrix a = BoolMatrix::adjacency(g_);
    BoolMatrix power = a;
    for (std::uint64_t len = 1; len <= 12; ++len) {
      if (len > 1) power = mat_mul_bool(power, a);
      for (VertexId u = 0; u < g_.order(); ++u) {
        for (VertexId w = 0; w < g_.order(); ++w) {
          if (power.get(u, w) != walk_exists_bf(g_, u, w, len)) {
            return "A^" + std::to_string(len) + "(" + std::to_string(u) + "," + std::to_string(w) +
                   ") disagrees with enumeration";
          }
        }
      }
    }
    return {};
  }

  std::string oracle_diagonal_n() {
    for (std::uint64_t n = 1; n <= 5; ++n) {
      const auto engine = diagonal_n(g_, n).to_vector();
      const auto brute = diagonal_n_bf(g_, n);
      if (engine != brute) return "D" + std::to_string(n) + " engine " + join_ids(engine) + " oracle " + join_ids(brute);
    }
    const auto d = diagonal(g_).to_vector();
    if (d != diagonal_bf(g_)) return "D engine " + join_ids(d) + " oracle " + join_ids(diagonal_bf(g_));
    return {};
  }

  std::string oracle_diagonal_inf() {
    const auto engine = diagonal_inf(g_).to_vector();
    const auto brute = diagonal_inf_bf(g_);
    if (engine != brute) return "Dinf engine " + join_ids(engine) + " oracle " + join_ids(brute);
    return {};
  }

  std::string oracle_diagonal_s_finite() {
    for (const auto& s : small_finite_sets()) {
      const UPSet set = UPSet::from_finite(s);
      const auto engine = diagonal_S(g_, set, trace()).to_vector();
      const auto brute = diagonal_S_bf(g_, s);
      if (engine != brute) {
        return "DS[" + set.literal() + "] engine " + join_ids(engine) + " oracle " + join_ids(brute);
      }
    }
    return {};
  }

  std::string oracle_diagonal_s_infinite() {
    for (const auto& s : config_.s_samples) {
      if (s.is_finite()) continue;
      const auto engine = diagonal_S(g_, s, trace()).to_vector();
      const std::uint64_t bound = set_truncation_bound(trace(), s);
      const auto at_bound = diagonal_S_truncated_bf(g_, s, bound);
      const auto deep = diagonal_S_truncated_bf(g_, s, kMaxWalkLength - 1);
      if (engine != at_bound || engine != deep) {
        return "DS[" + s.literal() + "] engine " + join_ids(engine) + " oracle@B* " +
               join_ids(at_bound) + " oracle@" + std::to_string(kMaxWalkLength - 1) + " " + join_ids(deep);
      }
    }
    return {};
  }

  // Witnesses re-checked against sets computed by the oracle.
  std::string oracle_witness_sets() {
    for (const auto& spec : sweep_specs(config_)) {
      IdList ids;
      if (std::holds_alternative<CantorDiagonal>(spec)) {
        ids = diagonal_bf(g_);
      } else if (const auto* wd = std::get_if<WalkDiagonal>(&spec)) {
        if (wd->n + 1 > kMaxWalkLength) continue;
        ids = diagonal_n_bf(g_, wd->n);
      } else if (std::holds_alternative<InfiniteDiagonal>(spec)) {
        ids = diagonal_inf_bf(g_);
      } else {
        ids = diagonal_S_truncated_bf(g_, std::get<SetDiagonal>(spec).s, kMaxWalkLength - 1);
      }
      const VertexSet dx = VertexSet::from_ids(g_.order(), ids);
      const auto witnesses = verify_unequal(g_, spec);
      for (VertexId v = 0; v < g_.order(); ++v) {
        if (auto defect = witness_defect(g_, spec, dx, v, witnesses[v])) {
          return describe(spec) + " against " + std::to_string(v) + ": " + *defect;
        }
      }
    }
    return {};
  }

  const Graph& g_;
  const SweepConfig& config_;
  SweepReport& report_;
  bool small_;
  std::optional<PowerTrace> trace_;
  std::optional<std::vector<UPSet>> spectra_;
};

unsigned worker_count(const SweepConfig& config, std::size_t jobs) {
  unsigned threads = config.threads != 0 ? config.threads : std::thread::hardware_concurrency();
  threads = std::max(1U, threads);
  return static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(jobs, 1)));
}

// Splits [0, jobs) into contiguous chunks, one report per chunk, merged in
// chunk order so the result does not depend on scheduling.
template <typename MakeGraph>
SweepReport parallel_sweep(std::size_t jobs, const SweepConfig& config, MakeGraph make_graph) {
  const unsigned workers = worker_count(config, jobs);
  std::vector<SweepReport> partial(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (jobs + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(jobs, begin + chunk);
      for (std::size_t i = begin; i < end; ++i) {
        const Graph g = make_graph(i);
        partial[w].graphs_checked += 1;
        partial[w].graphs_by_order[g.order()] += 1;
        GraphChecker(g, config, partial[w]).run();
      }
    });
  }
  for (auto& t : pool) t.join();
  SweepReport total;
  for (const auto& p : partial) total.merge(p);
  return total;
}

}  // namespace

std::uint64_t SweepReport::failures() const {
  std::uint64_t total = 0;
  for (const auto& [name, result] : properties) total += result.fail;
  return total;
}

void SweepReport::merge(const SweepReport& other) {
  graphs_checked += other.graphs_checked;
  for (const auto& [order, count] : other.graphs_by_order) graphs_by_order[order] += count;
  for (const auto& [name, result] : other.properties) {
    auto& mine = properties[name];
    mine.pass += result.pass;
    mine.fail += result.fail;
    if (!mine.counterexample) mine.counterexample = result.counterexample;
  }
}

void SweepReport::record(const std::string& property, bool passed, const std::string& detail) {
  auto& result = properties[property];
  if (passed) {
    ++result.pass;
    return;
  }
  ++result.fail;
  if (!result.counterexample) result.counterexample = detail;
}

std::vector<UPSet> SweepConfig::default_s_samples() {
  return {UPSet::from_finite({0}), UPSet::from_finite({1}), UPSet::from_finite({0, 2}),
          UPSet::progression(0, 2), UPSet::progression(1, 2)};
}

std::vector<DiagonalSpec> sweep_specs(const SweepConfig& config) {
  std::vector<DiagonalSpec> specs{CantorDiagonal{}};
  for (auto n : config.n_values) specs.emplace_back(WalkDiagonal{n});
  specs.emplace_back(InfiniteDiagonal{});
  for (const auto& s : config.s_samples) specs.emplace_back(SetDiagonal{s});
  return specs;
}

void check_graph(const Graph& g, const SweepConfig& config, SweepReport& report) {
  GraphChecker(g, config, report).run();
}

SweepReport exhaustive_sweep(std::size_t order_max, const SweepConfig& config, bool allow_order4) {
  if (order_max == 0 || order_max > 4) throw InvalidArgument("order_max must be in 1..4");
  if (order_max == 4 && !allow_order4) {
    throw InvalidArgument("order 4 adds 65536 graphs and must be requested explicitly");
  }
  // Flatten (order, edge mask) pairs into one index range.
  std::vector<std::pair<std::size_t, std::uint64_t>> offsets;  // order -> first index
  std::size_t jobs = 0;
  for (std::size_t k = 1; k <= order_max; ++k) {
    offsets.emplace_back(k, jobs);
    jobs += std::size_t{1} << (k * k);
  }
  return parallel_sweep(jobs, config, [&](std::size_t index) {
    std::size_t k = 1;
    std::uint64_t first = 0;
    for (const auto& [order, start] : offsets) {
      if (index >= start) {
        k = order;
        first = start;
      }
    }
    const std::uint64_t mask = index - first;
    std::vector<Edge> edges;
    for (VertexId u = 0; u < k; ++u) {
      for (VertexId v = 0; v < k; ++v) {
        if ((mask >> (u * k + v)) & 1U) edges.emplace_back(u, v);
      }
    }
    return Graph(k, edges);
  });
}

std::vector<RandomGraphSpec> random_corpus(const RandomSweepConfig& config) {
  if (config.size_min == 0 || config.size_max < config.size_min) {
    throw InvalidArgument("random sizes need 1 <= min <= max");
  }
  if (config.p_values.empty()) throw InvalidArgument("random sweep needs at least one p");
  std::mt19937_64 rng(config.seed);
  const std::uint64_t span = config.size_max - config.size_min + 1;
  std::vector<RandomGraphSpec> out;
  out.reserve(config.count);
  for (std::size_t i = 0; i < config.count; ++i) {
    RandomGraphSpec spec;
    spec.n = config.size_min + static_cast<std::size_t>(rng() % span);
    spec.p = config.p_values[i % config.p_values.size()];
    spec.loops = (i / config.p_values.size()) % 2 == 0 ? LoopPolicy::Allow : LoopPolicy::Forbid;
    spec.seed = rng();
    out.push_back(spec);
  }
  return out;
}

SweepReport random_sweep(const RandomSweepConfig& random, const SweepConfig& config) {
  const auto corpus = random_corpus(random);
  return parallel_sweep(corpus.size(), config, [&](std::size_t i) {
    const auto& spec = corpus[i];
    return gen_random(spec.n, spec.p, spec.seed, spec.loops);
  });
}

std::string describe_graph(const Graph& g) {
  std::ostringstream os;
  os << "n " << g.order();
  for (const auto& [u, v] : g.edges()) os << "; " << u << ' ' << v;
  return os.str();
}

}  // namespace cantor::oracle
