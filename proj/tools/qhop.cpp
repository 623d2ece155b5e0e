// Command-line front end: solution counting on the nonlinear single-qubit
// machine, fermionic lattice evolution under the native and compiled-qubit
// backends, the native-vs-compiled cross-check, and the gate-cost scaling
// benchmark. Exit codes: 0 success, 1 assertion/verification failure,
// 2 usage or input error.

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <string>

#include "qhop/qhop.hpp"

namespace {

using qhop::Json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + out_path);
  }
  out << text;
}

Json base_config(const std::string& mode, std::uint64_t seed) {
  Json config;
  config["mode"] = mode;
  config["seed"] = seed;
  config["rng"] = qhop::SplitMix64::name();
  return config;
}

Json wrap_result(Json config, Json result) {
  Json doc;
  doc["version"] = qhop::kVersion;
  doc["config"] = std::move(config);
  doc["result"] = std::move(result);
  return doc;
}

Json amplitudes_to_json(const qhop::StateVector& state) {
  Json amps = Json::array();
  for (Eigen::Index k = 0; k < state.amplitudes.size(); ++k) {
    amps.push_back(Json::array(
        {state.amplitudes(k).real(), state.amplitudes(k).imag()}));
  }
  return amps;
}

struct CountOptions {
  std::string oracle_path;
  std::string map_name = "doubling";
  double lambda = std::numbers::ln2;
  double threshold = qhop::kDefaultThreshold;
  bool verify = false;
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_count(const CountOptions& opt) {
  if (opt.map_name != "doubling") {
    std::cerr << "count: exact counting requires the doubling map; '"
              << opt.map_name << "' supports existence decisions only\n";
    return kExitUsage;
  }
  const qhop::OracleTable oracle = qhop::load_oracle(opt.oracle_path);
  const qhop::NonlinearMap map = qhop::NonlinearMap::doubling();
  const qhop::CountResult result =
      qhop::count_solutions(oracle, map, opt.threshold);

  Json config = base_config("count", opt.seed);
  config["oracle"] = opt.oracle_path;
  config["map"] = opt.map_name;
  config["lambda"] = map.lambda;
  config["threshold"] = opt.threshold;
  config["verify"] = opt.verify;

  Json result_json = qhop::count_result_to_json(result);
  result_json["oracle_consultations"] = oracle.consultations();

  emit(wrap_result(std::move(config), std::move(result_json)).dump(2) + "\n",
       opt.out_path);

  if (opt.verify && result.n_estimated != qhop::brute_force_count(oracle)) {
    std::cerr << "count: verification failed: nonlinear count "
              << result.n_estimated << " != brute force "
              << qhop::brute_force_count(oracle) << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

struct EvolveOptions {
  std::string config_path;
  std::string backend;
  std::optional<std::size_t> steps;
  std::optional<double> t;
  std::uint64_t seed = 0;
  std::string out_path;
};

qhop::FermiInstance resolve_instance(const EvolveOptions& opt) {
  qhop::FermiInstance inst = qhop::load_fermi_instance(opt.config_path);
  if (!opt.backend.empty()) {
    if (opt.backend == "native") {
      inst.spec.backend = qhop::Backend::kNative;
    } else if (opt.backend == "jw") {
      inst.spec.backend = qhop::Backend::kJordanWigner;
    } else {
      throw std::invalid_argument("unknown backend '" + opt.backend + "'");
    }
  }
  if (opt.steps) inst.spec.steps = *opt.steps;
  if (opt.t) inst.spec.t = *opt.t;
  return inst;
}

int run_fermi_evolve(const EvolveOptions& opt) {
  const qhop::FermiInstance inst = resolve_instance(opt);
  const std::size_t sites = inst.hamiltonian.geometry.site_count();
  if (sites > 12) {
    throw std::length_error("fermi-evolve: instance exceeds 12 sites");
  }

  const qhop::StateVector initial =
      qhop::new_basis_state(sites, inst.initial_word);
  const qhop::EvolveResult evolved =
      qhop::trotter_evolve(initial, inst.hamiltonian, inst.spec);

  Json config = base_config("fermi-evolve", opt.seed);
  config["config"] = opt.config_path;
  config["instance"] = qhop::instance_to_json(inst);

  Json result;
  result["native_ops"] = evolved.native_ops;
  result["jw_weight_total"] = evolved.jw_weight_total;
  result["norm"] = evolved.state.norm();
  result["amplitudes"] = amplitudes_to_json(evolved.state);

  emit(wrap_result(std::move(config), std::move(result)).dump(2) + "\n",
       opt.out_path);
  return kExitOk;
}

struct XcheckOptions {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::size_t d = 2;
  std::size_t l = 2;
  std::optional<std::size_t> steps;
  std::optional<double> t;
  std::string out_path;
};

int run_fermi_xcheck(const XcheckOptions& opt) {
  qhop::FermiInstance inst;
  if (!opt.config_path.empty()) {
    EvolveOptions eopt;
    eopt.config_path = opt.config_path;
    eopt.steps = opt.steps;
    eopt.t = opt.t;
    inst = resolve_instance(eopt);
  } else if (opt.seed) {
    inst = qhop::random_instance(opt.d, opt.l, *opt.seed);
    if (opt.steps) inst.spec.steps = *opt.steps;
    if (opt.t) inst.spec.t = *opt.t;
  } else {
    throw std::invalid_argument("fermi-xcheck: need --config or --seed");
  }

  const std::size_t sites = inst.hamiltonian.geometry.site_count();
  if (sites > 12) {
    throw std::length_error("fermi-xcheck: instance exceeds 12 sites");
  }

  const qhop::StateVector initial =
      qhop::new_basis_state(sites, inst.initial_word);

  qhop::EvolutionSpec native_spec = inst.spec;
  native_spec.backend = qhop::Backend::kNative;
  qhop::EvolutionSpec jw_spec = inst.spec;
  jw_spec.backend = qhop::Backend::kJordanWigner;

  const qhop::EvolveResult native =
      qhop::trotter_evolve(initial, inst.hamiltonian, native_spec);
  const qhop::EvolveResult jw =
      qhop::trotter_evolve(initial, inst.hamiltonian, jw_spec);
  const qhop::StateVector exact =
      qhop::exact_evolve(initial, inst.hamiltonian, inst.spec.t);

  const double distance = qhop::global_phase_distance(native.state, jw.state);
  const double trotter_error =
      (native.state.amplitudes - exact.amplitudes).cwiseAbs().maxCoeff();

  Json config = base_config("fermi-xcheck", opt.seed.value_or(0));
  if (!opt.config_path.empty()) config["config"] = opt.config_path;
  config["instance"] = qhop::instance_to_json(inst);

  Json result;
  result["backend_distance"] = distance;
  result["trotter_error"] = trotter_error;
  result["native_ops"] = native.native_ops;
  result["jw_weight_total"] = jw.jw_weight_total;
  // Mean compiled weight per term application, against the native cost of 1.
  result["overhead_ratio"] = static_cast<double>(jw.jw_weight_total) /
                             static_cast<double>(native.native_ops);
  result["sites"] = sites;
  result["terms"] = inst.hamiltonian.terms.size();

  emit(wrap_result(std::move(config), std::move(result)).dump(2) + "\n",
       opt.out_path);

  if (distance > qhop::kPipelineTol) {
    std::cerr << "fermi-xcheck: backends disagree: distance " << distance
              << " > " << qhop::kPipelineTol << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

struct BenchOptions {
  std::size_t d = 2;
  std::size_t l_min = 2;
  std::size_t l_max = 6;
  std::string shape = "hypercubic";
  std::uint64_t seed = 0;
  std::string out_path;
};

int run_bench_scaling(const BenchOptions& opt) {
  if (opt.l_min < 2 || opt.l_max < opt.l_min) {
    throw std::invalid_argument("bench-scaling: need 2 <= l-min <= l-max");
  }

  qhop::GateCostReport report;
  if (opt.shape == "hypercubic") {
    std::vector<std::size_t> l_values;
    for (std::size_t l = opt.l_min; l <= opt.l_max; ++l) l_values.push_back(l);
    report = qhop::gate_count_scaling(opt.d, l_values);
  } else if (opt.shape == "hypercube") {
    // For hypercube graphs the range flags sweep the dimension; the side is 2.
    std::vector<std::size_t> d_values;
    for (std::size_t d = opt.l_min; d <= opt.l_max; ++d) d_values.push_back(d);
    report = qhop::gate_count_scaling_hypercube(d_values);
  } else {
    throw std::invalid_argument("bench-scaling: unknown shape '" + opt.shape + "'");
  }

  Json config = base_config("bench-scaling", opt.seed);
  config["d"] = opt.d;
  config["l_min"] = opt.l_min;
  config["l_max"] = opt.l_max;
  config["shape"] = opt.shape;
  config["version"] = qhop::kVersion;

  std::string csv = qhop::report_to_csv(report);
  csv += "# config " + config.dump() + "\n";
  emit(csv, opt.out_path);

  if (!report.all_ok()) {
    std::cerr << "bench-scaling: worst string length check failed\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Simulators for two unconventional quantum machines: a "
               "fermionic conditional-hopping lattice with a compiled-qubit "
               "cross-check, and a nonlinear single-qubit solution counter."};
  app.require_subcommand(1);

  CountOptions count_opt;
  CLI::App* count = app.add_subcommand(
      "count", "Count oracle solutions with the nonlinear Bloch-angle machine");
  count->add_option("--oracle", count_opt.oracle_path, "Oracle JSON file")
      ->required();
  count->add_option("--map", count_opt.map_name, "Map kind: doubling or smooth");
  count->add_option("--lambda", count_opt.lambda, "Lyapunov exponent (smooth map)");
  count->add_option("--threshold", count_opt.threshold,
                    "Distinguishability threshold angle (radians)");
  count->add_flag("--verify", count_opt.verify,
                  "Cross-check the count against brute-force enumeration");
  count->add_option("--seed", count_opt.seed, "Seed recorded in the run config");
  count->add_option("--out", count_opt.out_path, "Write JSON here instead of stdout");

  EvolveOptions evolve_opt;
  CLI::App* evolve = app.add_subcommand(
      "fermi-evolve", "Trotter-evolve a fermionic lattice instance");
  evolve->add_option("--config", evolve_opt.config_path, "Instance JSON file")
      ->required();
  evolve->add_option("--backend", evolve_opt.backend, "native or jw");
  evolve->add_option("--steps", evolve_opt.steps, "Trotter step count");
  evolve->add_option("--t", evolve_opt.t, "Evolution time");
  evolve->add_option("--seed", evolve_opt.seed, "Seed recorded in the run config");
  evolve->add_option("--out", evolve_opt.out_path, "Write JSON here instead of stdout");

  XcheckOptions xcheck_opt;
  CLI::App* xcheck = app.add_subcommand(
      "fermi-xcheck",
      "Evolve under both backends plus the dense oracle and compare");
  xcheck->add_option("--config", xcheck_opt.config_path, "Instance JSON file");
  xcheck->add_option("--seed", xcheck_opt.seed,
                     "Generate a seeded random instance instead of --config");
  xcheck->add_option("--d", xcheck_opt.d, "Lattice dimension for seeded instances");
  xcheck->add_option("--l", xcheck_opt.l, "Lattice side for seeded instances");
  xcheck->add_option("--steps", xcheck_opt.steps, "Trotter step count");
  xcheck->add_option("--t", xcheck_opt.t, "Evolution time");
  xcheck->add_option("--out", xcheck_opt.out_path, "Write JSON here instead of stdout");

  BenchOptions bench_opt;
  CLI::App* bench = app.add_subcommand(
      "bench-scaling", "Emit the compiled gate-cost table as CSV");
  bench->add_option("--d", bench_opt.d, "Lattice dimension");
  bench->add_option("--l-min", bench_opt.l_min, "Smallest side length");
  bench->add_option("--l-max", bench_opt.l_max, "Largest side length");
  bench->add_option("--shape", bench_opt.shape,
                    "hypercubic, or hypercube (range flags sweep the dimension)");
  bench->add_option("--seed", bench_opt.seed, "Seed recorded in the run config");
  bench->add_option("--out", bench_opt.out_path, "Write CSV here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (count->parsed()) return run_count(count_opt);
    if (evolve->parsed()) return run_fermi_evolve(evolve_opt);
    if (xcheck->parsed()) return run_fermi_xcheck(xcheck_opt);
    if (bench->parsed()) return run_bench_scaling(bench_opt);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
