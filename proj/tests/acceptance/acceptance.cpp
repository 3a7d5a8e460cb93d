// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "cantor/diagonals.hpp"
#include "cantor/oracle.hpp"
#include "cantor/random_graph.hpp"
#include "cantor/walks.hpp"

using namespace cantor;
using Clock = std::chrono::steady_clock;

namespace {

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int id, const std::string& title, const std::function<Outcome()>& body) {
  Outcome out;
  try {
    out = body();
  } catch (const std::exception& e) {
    out = {false, std::string("exception: ") + e.what()};
  }
  if (!out.pass) ++failures;
  std::cout << (out.pass ? "PASS" : "FAIL") << " criterion " << id << ": " << title;
  if (!out.detail.empty()) std::cout << " (" << out.detail << ")";
  std::cout << std::endl;
}

// Sum the named properties over both reports; the detail names the first counterexample.
Outcome properties_clean(const std::vector<const oracle::SweepReport*>& reports,
                         const std::vector<std::string>& names) {
  std::uint64_t passed = 0;
  std::uint64_t failed = 0;
  std::string first;
  for (const auto* r : reports) {
    for (const auto& name : names) {
      auto it = r->properties.find(name);
      if (it == r->properties.end()) return {false, "property " + name + " never ran"};
      passed += it->second.pass;
      failed += it->second.fail;
      if (first.empty() && it->second.counterexample) first = name + ": " + *it->second.counterexample;
    }
  }
  std::ostringstream os;
  os << passed << " checks, " << failed << " failures";
  if (!first.empty()) os << "; " << first;
  return {failed == 0 && passed > 0, os.str()};
}

struct Command {
  int status;
  std::string output;
};

Command run(const std::string& args) {
  const std::string line = std::string("\"") + CANTOR_CLI_PATH + "\" " + args + " 2>/dev/null";
  FILE* pipe = popen(line.c_str(), "r");
  if (!pipe) throw std::runtime_error("popen failed");
  std::string out;
  char buf[4096];
  while (std::size_t got = std::fread(buf, 1, sizeof buf, pipe)) out.append(buf, got);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

}  // namespace

int main() {
  oracle::SweepConfig config;

  const auto exhaustive_start = Clock::now();
  const oracle::SweepReport exhaustive = oracle::exhaustive_sweep(3, config);
  const double exhaustive_s = seconds_since(exhaustive_start);

  oracle::RandomSweepConfig wide;
  const auto wide_start = Clock::now();
  const oracle::SweepReport wide_report = oracle::random_sweep(wide, config);
  const double wide_s = seconds_since(wide_start);

  oracle::RandomSweepConfig small;
  small.count = 200;
  small.size_min = 1;
  small.size_max = oracle::kMaxOrder;
  small.seed = 2;
  const oracle::SweepReport small_report = oracle::random_sweep(small, config);

  const std::vector<const oracle::SweepReport*> all = {&exhaustive, &wide_report, &small_report};
  const std::vector<const oracle::SweepReport*> oracle_corpus = {&exhaustive, &small_report};

  report(1, "every diagonal differs from every out-set, order <= 3, under 10 s", [&] {
    Outcome o = properties_clean({&exhaustive}, {"unequal_witness"});
    std::ostringstream os;
    os << exhaustive.graphs_checked << " graphs, " << o.detail << ", " << exhaustive_s << " s";
    return Outcome{o.pass && exhaustive.graphs_checked == 530 && exhaustive_s < 10.0, os.str()};
  });

  report(2, "500 random graphs of order 4..64, all properties, under 60 s", [&] {
    std::ostringstream os;
    os << wide_report.graphs_checked << " graphs, " << wide_report.failures() << " failures, " << wide_s << " s";
    for (const auto& [name, result] : wide_report.properties) {
      if (result.counterexample) {
        os << "; " << name << ": " << *result.counterexample;
        break;
      }
    }
    return Outcome{wide_report.graphs_checked == 500 && wide_report.ok() && wide_s < 60.0, os.str()};
  });

  report(3, "engine matches brute-force oracle on small graphs", [&] {
    return properties_clean(oracle_corpus, {"walk_semantics", "oracle_diagonal_n", "oracle_diagonal_inf",
                                            "oracle_diagonal_S_finite", "oracle_diagonal_S_infinite",
                                            "oracle_witness_sets"});
  });

  report(4, "closed-walk spectra are exact for lengths <= 40", [&] {
    return properties_clean(all, {"spectrum_soundness", "spectrum_closure", "cyclic_vs_spectrum", "trace_validity"});
  });

  report(5, "infinite diagonal agrees across SCC, matrix and oracle routes", [&] {
    Outcome a = properties_clean(all, {"dinf_scc_vs_matrix"});
    Outcome b = properties_clean(oracle_corpus, {"oracle_diagonal_inf"});
    return Outcome{a.pass && b.pass, a.detail + " / " + b.detail};
  });

  report(6, "inclusion chain and set-diagonal identities", [&] { return properties_clean(all, {"chain_identities"}); });

  report(7, "Cantor diagonal is never an out-set", [&] { return properties_clean(all, {"cantor_fixed_point"}); });

  report(8, "distinct out-sets at most |V| and the diagonal is never among them", [&] {
    return properties_clean(all, {"pigeonhole"});
  });

  report(9, "diagonal for n = 1e9+7 on a 256-vertex graph under 2 s, matches trace", [&] {
    const Graph g = gen_random(256, 0.05, 9, LoopPolicy::Forbid);
    const std::uint64_t n = 1'000'000'007;
    const auto start = Clock::now();
    const VertexSet direct = diagonal_n(g, n);
    const double elapsed = seconds_since(start);
    const PowerTrace trace = power_trace(g);
    const VertexSet via_trace = trace.power(n + 1).diagonal().complement();
    std::ostringstream os;
    os << elapsed << " s, |Dn| = " << direct.size() << ", trace mu=" << trace.mu() << " lambda=" << trace.lambda();
    return Outcome{direct == via_trace && elapsed < 2.0, os.str()};
  });

  report(10, "CLI output is deterministic and verify exits cleanly", [&] {
    const Command gen_a = run("gen --n 12 --p 0.3 --seed 42");
    const Command gen_b = run("gen --n 12 --p 0.3 --seed 42");
    if (gen_a.status != 0 || gen_a.output.empty() || gen_a.output != gen_b.output) {
      return Outcome{false, "gen output differs or failed"};
    }
    const auto path = std::filesystem::temp_directory_path() / "cantor_acceptance_graph.txt";
    std::ofstream(path) << gen_a.output;
    const std::string analyze = "analyze --input \"" + path.string() + "\" --n 1,2,1000 --s 'finite(0,2)' --spectra";
    const Command an_a = run(analyze);
    const Command an_b = run(analyze);
    std::filesystem::remove(path);
    if (an_a.status != 0 || an_b.status != 0) return Outcome{false, "analyze exited nonzero"};
    auto ja = nlohmann::ordered_json::parse(an_a.output);
    auto jb = nlohmann::ordered_json::parse(an_b.output);
    ja.erase("timings_ms");
    jb.erase("timings_ms");
    if (ja.dump() != jb.dump()) return Outcome{false, "analyze reports differ"};
    if (ja["seed"] != 42) return Outcome{false, "analyze did not record the generator seed"};
    const Command verify = run("verify --order-max 3");
    if (verify.status != 0) return Outcome{false, "verify --order-max 3 exited " + std::to_string(verify.status)};
    return Outcome{true, ""};
  });

  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
