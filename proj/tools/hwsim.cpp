// Copyright 2026 The hwsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// hwsim: command-line front end for the Hamming-weight subspace simulator.

#include <cstdio>
#include <iostream>
#include <memory>
#include <numbers>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hwsim/ansatz.hpp"
#include "hwsim/circuit.hpp"
#include "hwsim/combinatorics.hpp"
#include "hwsim/control.hpp"
#include "hwsim/design.hpp"
#include "hwsim/errors.hpp"
#include "hwsim/gradients.hpp"
#include "hwsim/io.hpp"
#include "hwsim/subspace.hpp"
#include "hwsim/variance.hpp"
#include "json.hpp"
#include "json_config.hpp"

namespace {

using nlohmann::json;
using namespace hwsim;

// Thrown for bad flag combinations discovered after CLI11 has parsed.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty() || out_path == "-") {
    std::cout << text;
    std::cout.flush();
  } else {
    write_text_file(out_path, text);
  }
}

std::string dump(const json& doc) { return doc.dump(2) + "\n"; }

std::vector<Edge> topology(const std::string& name, int n) {
  if (name == "line") return line_graph(n);
  if (name == "full") return full_graph(n);
  throw UsageError("unknown topology '" + name + "' (expected line or full)");
}

// --graph FILE, or --topology {line,full} with --n.
Graph load_graph(const std::string& path, const std::string& topo, std::optional<int> n) {
  if (!path.empty()) {
    Graph g = read_graph_file(path);
    if (n && *n != g.n) {
      if (*n < g.n) throw UsageError("--n is smaller than the graph");
      g.n = *n;
    }
    return g;
  }
  if (topo.empty()) throw UsageError("give --graph FILE or --topology with --n");
  if (!n) throw UsageError("--topology needs --n");
  return {*n, topology(topo, *n)};
}

std::size_t initial_index_for(int n, int k, std::optional<std::size_t> index, const std::string& bits) {
  const BasisIndexer indexer(n, k);
  if (!bits.empty()) return indexer.rank(indexer.from_string(bits));
  if (index) {
    if (*index >= indexer.dim()) throw DomainError("--initial out of range for C(n,k)");
    return *index;
  }
  return default_initial_index(n, k);
}

void check_format(const std::string& format, std::initializer_list<const char*> allowed) {
  for (const char* a : allowed) {
    if (format == a) return;
  }
  throw UsageError("unsupported --format '" + format + "' for this command");
}

// ---------------------------------------------------------------- basis

struct BasisArgs {
  int n = 0;
  int k = 0;
  std::string format = "csv";
  std::string out;
};

void run_basis(const BasisArgs& a) {
  check_format(a.format, {"csv", "json"});
  const BasisIndexer indexer(a.n, a.k);
  const auto basis = enumerate_basis(a.n, a.k);
  if (a.format == "json") {
    json rows = json::array();
    for (Bits s : basis) rows.push_back(indexer.to_string(s));
    emit(dump({{"schema", kSchema}, {"n", a.n}, {"k", a.k}, {"dim", indexer.dim()}, {"basis", rows}}), a.out);
    return;
  }
  std::ostringstream os;
  os << "# schema=" << kSchema << "\nindex,bitstring\n";
  for (std::size_t r = 0; r < basis.size(); ++r) os << r << ',' << indexer.to_string(basis[r]) << '\n';
  emit(os.str(), a.out);
}

// ---------------------------------------------------------------- simulate

struct SimulateArgs {
  std::string circuit;
  int k = 0;
  std::optional<std::size_t> initial;
  std::string initial_bits;
  std::vector<double> theta;
  std::string out;
};

void run_simulate(const SimulateArgs& a) {
  Circuit circuit = read_circuit_file(a.circuit);
  if (!a.theta.empty()) {
    if (a.theta.size() != circuit.size()) {
      throw UsageError("--theta has " + std::to_string(a.theta.size()) + " values, circuit has " +
                       std::to_string(circuit.size()) + " gates");
    }
    circuit = circuit.with_thetas(Eigen::Map<const Eigen::VectorXd>(a.theta.data(), static_cast<Eigen::Index>(a.theta.size())));
  }
  const BasisIndexer indexer(circuit.n(), a.k);
  const std::size_t start = initial_index_for(circuit.n(), a.k, a.initial, a.initial_bits);
  const SubspaceState out = apply_circuit(circuit, a.k, SubspaceState::basis(indexer, start));
  std::ostringstream os;
  write_state_csv(os, out);
  emit(os.str(), a.out);
}

// ---------------------------------------------------------------- check

struct CheckArgs {
  std::string circuit;
  int k = 0;
  std::string out;
};

void run_check(const CheckArgs& a) {
  const Circuit circuit = read_circuit_file(a.circuit);
  const std::size_t cap = dim_cap_from_env();
  const SubspaceUnitary wk = circuit_unitary(circuit, a.k, cap);
  const SubspaceUnitary w1 = circuit_unitary(circuit, 1, cap);
  const double compound = (wk.matrix - compound_matrix(w1.matrix, a.k)).cwiseAbs().maxCoeff();
  json doc = {{"schema", kSchema},
              {"n", circuit.n()},
              {"k", a.k},
              {"dim", wk.indexer.dim()},
              {"gates", circuit.size()},
              {"orthogonality_residual", wk.orthogonality_residual()},
              {"fbs_only", circuit.fbs_only()},
              {"non_adjacent_rbs", circuit.has_non_adjacent_rbs()},
              {"compound_residual", compound}};
  emit(dump(doc), a.out);
}

// ---------------------------------------------------------------- dla

struct DlaArgs {
  std::string graph;
  std::string topology;
  std::optional<int> n;
  int k = 0;
  std::string gate = "rbs";
  double tolerance = 1e-10;
  std::size_t cap = kDefaultDlaDimCap;
  std::string format = "json";
  std::string out;
};

void run_dla(const DlaArgs& a) {
  check_format(a.format, {"json", "csv"});
  const Graph g = load_graph(a.graph, a.topology, a.n);
  const GateKind kind = parse_gate_kind(a.gate);
  const std::size_t dim = dla_dimension(generators_from_graph(g.n, a.k, g.edges, kind), {a.tolerance, a.cap});
  const std::size_t bound = orthogonal_algebra_dim(binomial(g.n, a.k));
  if (a.format == "csv") {
    std::ostringstream os;
    os << "# schema=" << kSchema << "\nn,k,gate_kind,dim,upper_bound\n"
       << g.n << ',' << a.k << ',' << to_string(kind) << ',' << dim << ',' << bound << '\n';
    emit(os.str(), a.out);
    return;
  }
  emit(dump({{"schema", kSchema}, {"n", g.n}, {"k", a.k}, {"gate_kind", to_string(kind)}, {"dim", dim}, {"upper_bound", bound}}),
       a.out);
}

// ---------------------------------------------------------------- qfim

struct QfimArgs {
  std::string circuit;
  std::optional<int> n;
  std::optional<int> periodic_layers;
  std::string gate = "rbs";
  int k = 0;
  std::optional<std::size_t> initial;
  std::string initial_bits;
  bool random_theta = false;
  std::size_t samples = 3;
  std::uint64_t seed = 0;
  double tolerance = kDefaultRankTolerance;
  std::string format = "csv";
  std::string out;
};

void run_qfim(const QfimArgs& a) {
  check_format(a.format, {"csv", "json"});
  Circuit circuit(1);
  if (!a.circuit.empty()) {
    circuit = read_circuit_file(a.circuit);
  } else if (a.periodic_layers && a.n) {
    circuit = periodic_ansatz(*a.n, *a.periodic_layers, parse_gate_kind(a.gate));
  } else {
    throw UsageError("give --circuit FILE or --periodic-layers L with --n");
  }
  const SubspaceCircuit bound(circuit, a.k);
  const std::size_t start = initial_index_for(circuit.n(), a.k, a.initial, a.initial_bits);

  std::mt19937_64 rng(a.seed);
  Eigen::VectorXd theta = circuit.thetas();
  if (a.random_theta) {
    std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
    for (auto& t : theta) t = angle(rng);
  }
  const QfimMatrix q = qfim(bound, start, theta);
  const std::size_t rank = qfim_rank(q, a.tolerance);
  const std::size_t max_rank = a.samples > 0 ? max_qfim_rank(bound, start, a.samples, rng, a.tolerance) : rank;
  const Eigen::VectorXd spectrum = qfim_spectrum(q);

  if (a.format == "json") {
    json doc = {{"schema", kSchema},   {"n", circuit.n()},         {"k", a.k},
                {"gates", circuit.size()}, {"initial_index", start}, {"seed", a.seed},
                {"rank", rank},        {"max_rank", std::max(rank, max_rank)}, {"target_rank", bound.dim() - 1},
                {"spectrum", std::vector<double>(spectrum.data(), spectrum.data() + spectrum.size())}};
    emit(dump(doc), a.out);
    return;
  }
  std::ostringstream os;
  os << "# schema=" << kSchema << "\n# seed=" << a.seed << "\n# rank=" << rank
     << "\n# max_rank=" << std::max(rank, max_rank) << "\n# target_rank=" << bound.dim() - 1 << "\nindex,eigenvalue\n";
  for (Eigen::Index i = 0; i < spectrum.size(); ++i) os << i << ',' << format_double(spectrum(i)) << '\n';
  emit(os.str(), a.out);
}

// ---------------------------------------------------------------- design

struct DesignArgs {
  std::string graph;
  std::string topology;
  std::optional<int> n;
  int k = 0;
  std::string gate = "rbs";
  std::string mode = "greedy";
  std::string order = "parallel";
  std::optional<std::size_t> initial;
  std::string initial_bits;
  std::uint64_t seed = 0;
  std::size_t max_sweeps = 64;
  std::size_t rank_samples = 3;
  double seed_factor = 2.0;
  bool no_dla = false;
  std::string out;
};

void run_design(const DesignArgs& a) {
  const Graph g = load_graph(a.graph, a.topology, a.n);
  DesignConfig cfg;
  cfg.kind = parse_gate_kind(a.gate);
  if (a.order == "parallel") {
    cfg.order = CandidateOrder::kParallelFirst;
  } else if (a.order == "lex") {
    cfg.order = CandidateOrder::kLexicographic;
  } else {
    throw UsageError("unknown --order '" + a.order + "' (expected parallel or lex)");
  }
  cfg.max_sweeps = a.max_sweeps;
  cfg.rank_samples = a.rank_samples;
  cfg.seed_factor = a.seed_factor;
  cfg.compute_dla = !a.no_dla;
  cfg.seed = a.seed;
  const std::size_t start = initial_index_for(g.n, a.k, a.initial, a.initial_bits);

  DesignReport report;
  if (a.mode == "greedy") {
    report = design_greedy(g.n, a.k, g.edges, start, cfg);
  } else if (a.mode == "prune") {
    report = design_by_pruning(g.n, a.k, g.edges, start, cfg);
  } else if (a.mode == "composed") {
    report = design_composed(g.n, a.k, g.edges, start, cfg);
  } else {
    throw UsageError("unknown --mode '" + a.mode + "' (expected greedy, prune or composed)");
  }
  // The emitted circuit carries the full graph so later commands see the same hardware.
  const Circuit circuit(g.n, report.circuit.gates(), g.edges);

  json doc = json::parse(circuit_to_json(circuit));
  doc["report"] = {{"mode", a.mode},
                   {"k", a.k},
                   {"gate_kind", to_string(cfg.kind)},
                   {"initial_index", start},
                   {"seed", a.seed},
                   {"final_rank", report.final_rank},
                   {"target_rank", report.target_rank},
                   {"dla_dim", report.dla_dim ? json(*report.dla_dim) : json(nullptr)},
                   {"verdict", to_string(report.verdict)},
                   {"reason", report.reason},
                   {"gate_count", circuit.size()},
                   {"rank_history", report.rank_history}};
  emit(dump(doc), a.out);
}

// ---------------------------------------------------------------- train

struct TrainArgs {
  std::string circuit;
  int k = 0;
  std::string targets;
  std::optional<std::size_t> initial;
  std::string initial_bits;
  std::string method = "gd";
  double learning_rate = 0.1;
  double momentum = 0.9;
  double beta1 = 0.9;
  double beta2 = 0.999;
  std::size_t iterations = 10000;
  double tolerance = 1e-6;
  bool random_init = false;
  std::size_t restarts = 1;
  std::uint64_t seed = 0;
  bool no_history = false;
  std::string out;
};

void run_train(const TrainArgs& a) {
  const Circuit circuit = read_circuit_file(a.circuit);
  const auto targets = read_vectors_file(a.targets);
  if (targets.empty()) throw ParseError("targets: no rows");
  const std::size_t start = initial_index_for(circuit.n(), a.k, a.initial, a.initial_bits);

  OptimizerConfig cfg;
  cfg.method = parse_optimizer(a.method);
  cfg.learning_rate = a.learning_rate;
  cfg.momentum = a.momentum;
  cfg.beta1 = a.beta1;
  cfg.beta2 = a.beta2;
  cfg.max_iterations = a.iterations;
  cfg.tolerance = a.tolerance;
  cfg.random_init = a.random_init;
  cfg.restarts = a.restarts;

  json runs = json::array();
  double total = 0.0;
  for (std::size_t t = 0; t < targets.size(); ++t) {
    cfg.seed = a.seed + t;  // one stream per target row
    TrainingResult r;
    try {
      r = train_loader(circuit, a.k, start, targets[t], cfg);
    } catch (const DomainError& e) {
      throw ParseError("targets row " + std::to_string(t + 1) + ": " + e.what());
    }
    total += r.final_cost;
    json run = {{"final_cost", r.final_cost},
                {"iterations", r.iterations},
                {"thetas", std::vector<double>(r.thetas.data(), r.thetas.data() + r.thetas.size())}};
    if (!a.no_history) run["history"] = r.history;
    runs.push_back(std::move(run));
  }
  json doc = {{"schema", kSchema},
              {"seed", a.seed},
              {"method", to_string(cfg.method)},
              {"k", a.k},
              {"initial_index", start},
              {"mean_final_cost", total / static_cast<double>(targets.size())},
              {"runs", std::move(runs)}};
  emit(dump(doc), a.out);
}

// ---------------------------------------------------------------- variance

struct VarianceArgs {
  std::string sweep;
  std::vector<int> n;
  std::vector<std::string> k;
  std::vector<int> layers;
  std::vector<std::string> gate;
  std::vector<std::string> input;
  std::vector<std::string> target;
  std::optional<std::size_t> basis_index;
  std::optional<std::size_t> samples;
  std::optional<std::uint64_t> seed;
  unsigned threads = 1;
  std::string out;
};

// k entries are integers or "n/2".
int resolve_k(const std::string& text, int n) {
  if (text == "n/2") return n / 2;
  std::size_t used = 0;
  int k = 0;
  try {
    k = std::stoi(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != text.size() || text.empty()) throw UsageError("bad k value '" + text + "' (integer or n/2)");
  return k;
}

template <typename T>
std::vector<T> json_list(const json& doc, const char* key, std::vector<T> fallback) {
  const auto it = doc.find(key);
  if (it == doc.end()) return fallback;
  std::vector<T> out;
  const auto take = [&](const json& v) {
    try {
      if constexpr (std::is_same_v<T, std::string>) {
        out.push_back(v.is_string() ? v.get<std::string>() : v.dump());
      } else {
        out.push_back(v.get<T>());
      }
    } catch (const json::exception&) {
      throw ParseError(std::string("sweep.") + key + ": wrong value type");
    }
  };
  if (it->is_array()) {
    for (const auto& v : *it) take(v);
  } else {
    take(*it);
  }
  return out;
}

void run_variance(VarianceArgs a) {
  if (!a.sweep.empty()) {
    json doc;
    try {
      doc = json::parse(read_text_file(a.sweep));
    } catch (const json::parse_error& e) {
      throw ParseError("sweep: invalid JSON at byte " + std::to_string(e.byte));
    }
    if (!doc.is_object()) throw ParseError("sweep: top level must be an object");
    // Sweep values fill in whatever was not given as a flag.
    if (a.n.empty()) a.n = json_list<int>(doc, "n", {});
    if (a.k.empty()) a.k = json_list<std::string>(doc, "k", {});
    if (a.layers.empty()) a.layers = json_list<int>(doc, "L", {});
    if (a.gate.empty()) a.gate = json_list<std::string>(doc, "gate", {});
    if (a.input.empty()) a.input = json_list<std::string>(doc, "input", {});
    if (a.target.empty()) a.target = json_list<std::string>(doc, "target", {});
    if (!a.samples && doc.contains("samples")) a.samples = json_list<std::size_t>(doc, "samples", {}).front();
    if (!a.seed && doc.contains("seed")) a.seed = json_list<std::uint64_t>(doc, "seed", {}).front();
    if (!a.basis_index && doc.contains("basis_index")) a.basis_index = json_list<std::size_t>(doc, "basis_index", {}).front();
  }
  if (a.n.empty() || a.k.empty()) throw UsageError("variance needs --n and --k (or a --sweep file)");
  if (a.layers.empty()) a.layers = {1};
  if (a.gate.empty()) a.gate = {"rbs"};
  if (a.input.empty()) a.input = {"haar_sphere"};
  if (a.target.empty()) a.target = {"haar_sphere"};
  const std::size_t samples = a.samples.value_or(10000);
  const std::uint64_t seed = a.seed.value_or(0);

  std::ostringstream os;
  os << "# schema=" << kSchema << "\n# seed=" << seed << "\n# samples=" << samples << '\n';
  os << "n,k,gate,param_index,mean,var,stderr,theory_var,lambda0,L,input,target\n";
  for (const int n : a.n) {
    for (const std::string& kspec : a.k) {
      const int k = resolve_k(kspec, n);
      for (const int layers : a.layers) {
        for (const std::string& gate : a.gate) {
          const Circuit circuit = periodic_ansatz(n, layers, parse_gate_kind(gate));
          for (const std::string& in : a.input) {
            for (const std::string& tg : a.target) {
              VarianceConfig cfg;
              const std::size_t basis = a.basis_index ? *a.basis_index : default_initial_index(n, k);
              cfg.input = {parse_sampling_mode(in), basis};
              cfg.target = {parse_sampling_mode(tg), basis};
              cfg.samples = samples;
              cfg.seed = seed;
              cfg.threads = a.threads;
              const GradStats s = gradient_statistics(circuit, k, cfg);
              for (Eigen::Index p = 0; p < s.per_param_mean.size(); ++p) {
                os << n << ',' << k << ',' << gate << ',' << p << ',' << format_double(s.per_param_mean(p)) << ','
                   << format_double(s.per_param_var(p)) << ',' << format_double(s.stderr_mean(p)) << ','
                   << format_double(s.theory_var) << ',' << s.lambda0 << ',' << layers << ','
                   << to_string(cfg.input.mode) << ',' << to_string(cfg.target.mode) << '\n';
              }
            }
          }
        }
      }
    }
  }
  emit(os.str(), a.out);
}

// ---------------------------------------------------------------- main

std::string one_line(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
  }
  return s;
}

// One line on stderr: error kind=<kind> message="<text>"
int fail(const char* kind, const std::string& message, int code) {
  std::string text = one_line(message);
  std::string quoted;
  for (char c : text) {
    if (c == '"' || c == '\\') quoted += '\\';
    quoted += c;
  }
  std::cerr << "error kind=" << kind << " message=\"" << quoted << "\"\n";
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hamming-weight-preserving circuit simulator and analysis tools", "hwsim"};
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();
  app.config_formatter(std::make_shared<hwsim::cli::JsonConfig>(&app));
  app.set_config("--config", "", "JSON file with option values; explicit flags take precedence");

  const auto gate_check = CLI::IsMember({"rbs", "fbs"});

  BasisArgs basis;
  auto* c_basis = app.add_subcommand("basis", "List B_k^n with its index");
  c_basis->add_option("--n", basis.n, "Qubit count")->required();
  c_basis->add_option("--k", basis.k, "Hamming weight")->required();
  c_basis->add_option("--format", basis.format, "csv or json");
  c_basis->add_option("--out", basis.out, "Output file (default stdout)");

  SimulateArgs sim;
  auto* c_sim = app.add_subcommand("simulate", "Run a circuit on a basis state and print amplitudes");
  c_sim->add_option("--circuit", sim.circuit, "Circuit JSON")->required()->check(CLI::ExistingFile);
  c_sim->add_option("--k", sim.k, "Hamming weight")->required();
  auto* sim_init = c_sim->add_option("--initial", sim.initial, "Initial basis index (default: k first qubits set)");
  c_sim->add_option("--initial-bits", sim.initial_bits, "Initial basis state as a bitstring")->excludes(sim_init);
  c_sim->add_option("--theta", sim.theta, "Replacement angles, one per gate")->delimiter(',');
  c_sim->add_option("--out", sim.out, "Output file (default stdout)");

  CheckArgs check;
  auto* c_check = app.add_subcommand("check", "Orthogonality and compound-identity residuals of W^k");
  c_check->add_option("--circuit", check.circuit, "Circuit JSON")->required()->check(CLI::ExistingFile);
  c_check->add_option("--k", check.k, "Hamming weight")->required();
  c_check->add_option("--out", check.out, "Output file (default stdout)");

  DlaArgs dla;
  auto* c_dla = app.add_subcommand("dla", "Dimension of the subspace dynamical Lie algebra");
  auto* dla_graph = c_dla->add_option("--graph", dla.graph, "Connectivity graph JSON")->check(CLI::ExistingFile);
  c_dla->add_option("--topology", dla.topology, "line or full (with --n)")->excludes(dla_graph);
  c_dla->add_option("--n", dla.n, "Qubit count");
  c_dla->add_option("--k", dla.k, "Hamming weight")->required();
  c_dla->add_option("--gate", dla.gate, "rbs or fbs")->check(gate_check);
  c_dla->add_option("--tolerance", dla.tolerance, "Relative Gram-Schmidt threshold");
  c_dla->add_option("--dla-cap", dla.cap, "Refuse subspaces with d_k above this");
  c_dla->add_option("--format", dla.format, "json or csv");
  c_dla->add_option("--out", dla.out, "Output file (default stdout)");

  QfimArgs qf;
  auto* c_qfim = app.add_subcommand("qfim", "QFIM rank and spectrum");
  auto* qf_circ = c_qfim->add_option("--circuit", qf.circuit, "Circuit JSON")->check(CLI::ExistingFile);
  c_qfim->add_option("--periodic-layers", qf.periodic_layers, "Use the periodic ansatz with L blocks (needs --n)")
      ->excludes(qf_circ);
  c_qfim->add_option("--n", qf.n, "Qubit count for --periodic-layers");
  c_qfim->add_option("--gate", qf.gate, "Gate kind for --periodic-layers")->check(gate_check);
  c_qfim->add_option("--k", qf.k, "Hamming weight")->required();
  auto* qf_init = c_qfim->add_option("--initial", qf.initial, "Initial basis index");
  c_qfim->add_option("--initial-bits", qf.initial_bits, "Initial basis state as a bitstring")->excludes(qf_init);
  c_qfim->add_flag("--random-theta", qf.random_theta, "Evaluate at random angles instead of the stored ones");
  c_qfim->add_option("--samples", qf.samples, "Random points for the max-rank estimate");
  c_qfim->add_option("--seed", qf.seed, "RNG seed");
  c_qfim->add_option("--tolerance", qf.tolerance, "Relative eigenvalue cutoff");
  c_qfim->add_option("--format", qf.format, "csv or json");
  c_qfim->add_option("--out", qf.out, "Output file (default stdout)");

  DesignArgs des;
  auto* c_design = app.add_subcommand("design", "Build a loader circuit for a connectivity graph");
  auto* des_graph = c_design->add_option("--graph", des.graph, "Connectivity graph JSON")->check(CLI::ExistingFile);
  c_design->add_option("--topology", des.topology, "line or full (with --n)")->excludes(des_graph);
  c_design->add_option("--n", des.n, "Qubit count");
  c_design->add_option("--k", des.k, "Hamming weight")->required();
  c_design->add_option("--gate", des.gate, "rbs or fbs")->check(gate_check);
  c_design->add_option("--mode", des.mode, "greedy, prune or composed");
  c_design->add_option("--order", des.order, "Candidate order: parallel or lex");
  auto* des_init = c_design->add_option("--initial", des.initial, "Initial basis index");
  c_design->add_option("--initial-bits", des.initial_bits, "Initial basis state as a bitstring")->excludes(des_init);
  c_design->add_option("--seed", des.seed, "RNG seed");
  c_design->add_option("--max-sweeps", des.max_sweeps, "Greedy sweep limit");
  c_design->add_option("--rank-samples", des.rank_samples, "Random points per max-rank estimate");
  c_design->add_option("--seed-factor", des.seed_factor, "Pruning seed size as a multiple of dim(DLA)");
  c_design->add_flag("--no-dla", des.no_dla, "Skip the DLA dimension in the report");
  c_design->add_option("--out", des.out, "Output file (default stdout)");

  TrainArgs tr;
  auto* c_train = app.add_subcommand("train", "Fit circuit angles to target vectors");
  c_train->add_option("--circuit", tr.circuit, "Circuit JSON")->required()->check(CLI::ExistingFile);
  c_train->add_option("--k", tr.k, "Hamming weight")->required();
  c_train->add_option("--targets", tr.targets, "CSV, one target vector per row")->required()->check(CLI::ExistingFile);
  auto* tr_init = c_train->add_option("--initial", tr.initial, "Initial basis index");
  c_train->add_option("--initial-bits", tr.initial_bits, "Initial basis state as a bitstring")->excludes(tr_init);
  c_train->add_option("--method", tr.method, "gd, momentum or adam")
      ->check(CLI::IsMember({"gd", "momentum", "adam"}));
  c_train->add_option("--lr", tr.learning_rate, "Step size");
  c_train->add_option("--momentum", tr.momentum, "Heavy-ball coefficient");
  c_train->add_option("--beta1", tr.beta1, "Adam first-moment decay");
  c_train->add_option("--beta2", tr.beta2, "Adam second-moment decay");
  c_train->add_option("--iterations", tr.iterations, "Iteration limit");
  c_train->add_option("--tolerance", tr.tolerance, "Stop once the cost is below this");
  c_train->add_flag("--random-init", tr.random_init, "Start from uniform random angles");
  c_train->add_option("--restarts", tr.restarts, "Random restarts per target (with --random-init)");
  c_train->add_option("--seed", tr.seed, "RNG seed (row t uses seed + t)");
  c_train->add_flag("--no-history", tr.no_history, "Leave cost histories out of the report");
  c_train->add_option("--out", tr.out, "Output file (default stdout)");

  VarianceArgs var;
  auto* c_var = app.add_subcommand("variance", "Gradient mean and variance over the periodic ansatz");
  c_var->add_option("--sweep", var.sweep, "Sweep JSON with lists n, k, L, gate, input, target")
      ->check(CLI::ExistingFile);
  c_var->add_option("--n", var.n, "Qubit counts")->delimiter(',');
  c_var->add_option("--k", var.k, "Hamming weights (integer or n/2)")->delimiter(',');
  c_var->add_option("--layers", var.layers, "Periodic ansatz depths L")->delimiter(',');
  c_var->add_option("--gate", var.gate, "Gate kinds")->delimiter(',')->check(gate_check);
  c_var->add_option("--input", var.input, "haar_sphere, cube_normalized or basis_point")->delimiter(',');
  c_var->add_option("--target", var.target, "haar_sphere, cube_normalized or basis_point")->delimiter(',');
  c_var->add_option("--basis-index", var.basis_index, "Basis state for basis_point (default: k first qubits set)");
  c_var->add_option("--samples", var.samples, "Monte-Carlo samples per configuration");
  c_var->add_option("--seed", var.seed, "RNG seed");
  c_var->add_option("--threads", var.threads, "Worker threads")->check(CLI::PositiveNumber);
  c_var->add_option("--out", var.out, "Output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), 2);
  }

  try {
    if (c_basis->parsed()) run_basis(basis);
    if (c_sim->parsed()) run_simulate(sim);
    if (c_check->parsed()) run_check(check);
    if (c_dla->parsed()) run_dla(dla);
    if (c_qfim->parsed()) run_qfim(qf);
    if (c_design->parsed()) run_design(des);
    if (c_train->parsed()) run_train(tr);
    if (c_var->parsed()) run_variance(var);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), 2);
  } catch (const hwsim::ParseError& e) {
    return fail("parse", e.what(), 3);
  } catch (const hwsim::DomainError& e) {
    return fail("domain", e.what(), 4);
  } catch (const hwsim::ResourceError& e) {
    return fail("resource", e.what(), 5);
  } catch (const std::exception& e) {
    return fail("internal", e.what(), 1);
  }
  return 0;
}
