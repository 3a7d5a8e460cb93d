// cantor: diagonal sets, witnesses and theorem sweeps on finite digraphs.
//
//   cantor analyze --input g.txt --n 1,2 --s "finite(0,2)" --spectra
//   cantor verify --order-max 3 --random 100 --size 4..32 --p 0.1,0.5 --seed 7
//   cantor spectrum --input g.txt --vertex 0
//   cantor gen --n 16 --p 0.25 --seed 42 --loops forbid
//
// Exit codes: 0 success, 1 verification failure, 2 usage or parse error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "cantor/edge_list.hpp"
#include "cantor/errors.hpp"
#include "cantor/oracle.hpp"
#include "cantor/random_graph.hpp"
#include "cantor/report.hpp"
#include "cantor/version.hpp"
#include "cantor/walks.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ostringstream os;
  if (path == "-") {
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read '" + path + "'");
  os << in.rdbuf();
  return os.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw UsageError("cannot write '" + path + "'");
  out << text;
}

std::pair<std::size_t, std::size_t> parse_size_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto n = std::stoull(text);
      return {n, n};
    }
    return {std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("--size expects MIN..MAX, got '" + text + "'");
  }
}

struct AnalyzeArgs {
  std::string input;
  std::vector<std::uint64_t> n_values;
  std::vector<std::string> s_literals;
  bool spectra = false;
  std::uint64_t chain_n_max = 8;
  std::string out;
};

int run_analyze(const AnalyzeArgs& args) {
  const auto start = std::chrono::steady_clock::now();
  const std::string text = read_file(args.input);
  const cantor::Graph g = cantor::parse_edge_list(text);

  cantor::AnalyzeOptions options;
  options.n_values = args.n_values;
  for (const auto& lit : args.s_literals) options.s_values.push_back(cantor::UPSet::parse(lit));
  options.spectra = args.spectra;
  options.chain_n_max = args.chain_n_max;
  options.seed = cantor::generator_seed(text);
  options.parse_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  const auto report = cantor::build_report(g, options);
  write_output(args.out, report.dump(2) + "\n");
  return cantor::report_chain_passed(report) ? kExitOk : kExitFailure;
}

struct VerifyArgs {
  std::size_t order_max = 3;
  bool allow_order4 = false;
  std::size_t random = 0;
  std::string size = "4..64";
  std::vector<double> p_values{0.05, 0.2, 0.5, 0.9};
  std::uint64_t seed = 1;
  unsigned threads = 0;
  bool json = false;
};

cantor::ReportJson sweep_json(const std::string& name, const cantor::oracle::SweepReport& r) {
  cantor::ReportJson j;
  j["sweep"] = name;
  j["graphs_checked"] = r.graphs_checked;
  cantor::ReportJson by_order = cantor::ReportJson::object();
  for (const auto& [order, count] : r.graphs_by_order) by_order[std::to_string(order)] = count;
  j["graphs_by_order"] = std::move(by_order);
  cantor::ReportJson props = cantor::ReportJson::array();
  for (const auto& [prop, result] : r.properties) {
    props.push_back({{"property", prop},
                     {"pass", result.pass},
                     {"fail", result.fail},
                     {"counterexample", result.counterexample ? cantor::ReportJson(*result.counterexample)
                                                              : cantor::ReportJson(nullptr)}});
  }
  j["properties"] = std::move(props);
  return j;
}

void print_sweep(const std::string& name, const cantor::oracle::SweepReport& r) {
  std::cout << name << ": " << r.graphs_checked << " graphs";
  for (const auto& [order, count] : r.graphs_by_order) {
    if (r.graphs_by_order.size() <= 4) std::cout << " [order " << order << ": " << count << "]";
  }
  std::cout << "\n";
  for (const auto& [prop, result] : r.properties) {
    std::cout << "  " << (result.fail == 0 ? "ok  " : "FAIL") << "  " << prop << "  pass=" << result.pass
              << " fail=" << result.fail << "\n";
    if (result.counterexample) std::cout << "        first counterexample: " << *result.counterexample << "\n";
  }
}

int run_verify(const VerifyArgs& args) {
  cantor::oracle::SweepConfig config;
  config.threads = args.threads;

  std::vector<std::pair<std::string, cantor::oracle::SweepReport>> sweeps;
  if (args.order_max > 0) {
    sweeps.emplace_back("exhaustive",
                        cantor::oracle::exhaustive_sweep(args.order_max, config, args.allow_order4));
  }
  if (args.random > 0) {
    cantor::oracle::RandomSweepConfig random;
    random.count = args.random;
    std::tie(random.size_min, random.size_max) = parse_size_range(args.size);
    random.p_values = args.p_values;
    random.seed = args.seed;
    sweeps.emplace_back("random", cantor::oracle::random_sweep(random, config));
  }

  bool ok = true;
  cantor::ReportJson all = cantor::ReportJson::array();
  for (const auto& [name, report] : sweeps) {
    ok = ok && report.ok();
    if (args.json) {
      all.push_back(sweep_json(name, report));
    } else {
      print_sweep(name, report);
    }
  }
  if (args.json) {
    std::cout << all.dump(2) << "\n";
  } else {
    std::cout << (ok ? "all properties hold" : "FAILURES FOUND") << "\n";
  }
  return ok ? kExitOk : kExitFailure;
}

int run_spectrum(const std::string& input, cantor::VertexId vertex) {
  const cantor::Graph g = cantor::parse_edge_list(read_file(input));
  if (vertex >= g.order()) throw UsageError("vertex " + std::to_string(vertex) + " out of range");
  std::cout << cantor::closed_walk_spectrum(g, vertex).literal() << "\n";
  return kExitOk;
}

struct GenArgs {
  std::size_t n = 0;
  double p = 0.0;
  std::uint64_t seed = 0;
  std::string loops = "allow";
};

int run_gen(const GenArgs& args) {
  const auto policy = args.loops == "forbid" ? cantor::LoopPolicy::Forbid : cantor::LoopPolicy::Allow;
  const cantor::Graph g = cantor::gen_random(args.n, args.p, args.seed, policy);
  std::ostringstream params;
  params << "gen n=" << args.n << " p=" << args.p << " loops=" << args.loops << " rng=mt19937_64";
  std::cout << cantor::emit_edge_list(g, {params.str(), "seed " + std::to_string(args.seed)});
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cantor diagonal sets on finite directed graphs"};
  app.set_version_flag("--version", cantor::kVersion);
  app.require_subcommand(1);

  AnalyzeArgs analyze;
  auto* analyze_cmd = app.add_subcommand("analyze", "Diagonal sets, witnesses and identities as JSON");
  analyze_cmd->add_option("--input", analyze.input, "Edge-list file (- for stdin)")->required();
  analyze_cmd->add_option("--n", analyze.n_values, "Walk diagonals D_n to compute, e.g. 1,2,5")
      ->delimiter(',')
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--s", analyze.s_literals, "Index set S for D_S (repeatable), e.g. 'finite(0,2)'");
  analyze_cmd->add_flag("--spectra", analyze.spectra, "Include closed-walk spectra");
  analyze_cmd->add_option("--chain-n-max", analyze.chain_n_max, "Largest n in the inclusion-chain check")
      ->check(CLI::PositiveNumber);
  analyze_cmd->add_option("--out", analyze.out, "Output file (default stdout)");

  VerifyArgs verify;
  auto* verify_cmd = app.add_subcommand("verify", "Exhaustive and randomized theorem sweeps");
  verify_cmd->add_option("--order-max", verify.order_max, "Enumerate all digraphs up to this order (0 skips)")
      ->check(CLI::Range(0, 4));
  verify_cmd->add_flag("--allow-order4", verify.allow_order4, "Permit --order-max 4 (65536 more graphs)");
  verify_cmd->add_option("--random", verify.random, "Number of seeded random graphs");
  verify_cmd->add_option("--size", verify.size, "Random graph orders MIN..MAX");
  verify_cmd->add_option("--p", verify.p_values, "Edge probabilities, e.g. 0.05,0.5")
      ->delimiter(',')
      ->check(CLI::Range(0.0, 1.0));
  verify_cmd->add_option("--seed", verify.seed, "Random sweep seed");
  verify_cmd->add_option("--threads", verify.threads, "Worker threads (0 = all cores)");
  verify_cmd->add_flag("--json", verify.json, "Print sweep reports as JSON");

  std::string spectrum_input;
  cantor::VertexId spectrum_vertex = 0;
  auto* spectrum_cmd = app.add_subcommand("spectrum", "Closed-walk length set of one vertex");
  spectrum_cmd->add_option("--input", spectrum_input, "Edge-list file (- for stdin)")->required();
  spectrum_cmd->add_option("--vertex", spectrum_vertex, "0-based vertex id")->required();

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Seeded G(n,p) digraph as an edge list");
  gen_cmd->add_option("--n", gen.n, "Order")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--p", gen.p, "Edge probability")->required()->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen.seed, "Seed")->required();
  gen_cmd->add_option("--loops", gen.loops, "allow|forbid")->check(CLI::IsMember({"allow", "forbid"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*analyze_cmd) return run_analyze(analyze);
    if (*verify_cmd) return run_verify(verify);
    if (*spectrum_cmd) return run_spectrum(spectrum_input, spectrum_vertex);
    if (*gen_cmd) return run_gen(gen);
  } catch (const cantor::TheoremViolation& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const cantor::InternalDisagreement& e) {
    std::cerr << "verification failure: " << e.what() << "\n";
    return kExitFailure;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const cantor::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
