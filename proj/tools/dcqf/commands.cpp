// Copyright 2026 The DCQF Authors
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

#include "dcqf/commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <random>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dcqf/manifest.hpp"
#include "dcqf/qaoa.hpp"
#include "dcqf/spectrum.hpp"
#include "dcqf/statevector.hpp"

namespace dcqf::cli {
namespace {

using nlohmann::json;

struct ProblemOptions {
  std::string instance_file;
  std::string builtin;
  std::string mode = "full-cd";
  std::string variant = "local";
  int order = 1;
  double total_time = 0.4;
  double dt = 0.1;
  std::string sampling = "integrated";
  double prune = 0.0;
  std::optional<long long> truncate;
  std::optional<std::uint64_t> seed;
  std::string out;
};

struct Problem {
  IsingInstance instance;
  std::string source;
  ProtocolConfig cfg;
};

void add_problem_options(CLI::App* cmd, ProblemOptions& o) {
  cmd->add_option("--instance", o.instance_file, "Instance JSON file");
  cmd->add_option("--builtin", o.builtin, "Built-in instance name (yan26)");
  cmd->add_option("--mode", o.mode, "adiabatic | full-cd | impulse")->capture_default_str();
  cmd->add_option("--variant", o.variant, "local | nc")->capture_default_str();
  cmd->add_option("--l", o.order, "Nested-commutator expansion order")->capture_default_str();
  cmd->add_option("--T", o.total_time, "Total evolution time")->capture_default_str();
  cmd->add_option("--dt", o.dt, "Trotter step")->capture_default_str();
  cmd->add_option("--sampling", o.sampling, "integrated | midpoint | left")->capture_default_str();
  cmd->add_option("--prune", o.prune, "Drop terms with rotation angle below this (rad)")->capture_default_str();
  cmd->add_option("--truncate", o.truncate, "Keep this many largest 2-local CD terms per step");
  cmd->add_option("--seed", o.seed, "Seed for all randomness (random and recorded if absent)");
  cmd->add_option("--out", o.out, "Output file");
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
  if (!out) throw Error("failed writing '" + path + "'");
}

Problem resolve(const ProblemOptions& o) {
  Problem p;
  if (o.instance_file.empty() == o.builtin.empty()) {
    throw Error("exactly one of --instance FILE or --builtin NAME is required");
  }
  if (!o.builtin.empty()) {
    p.instance = builtin_instance(o.builtin);
    p.source = "builtin:" + o.builtin;
  } else {
    p.instance = parse_instance(read_file(o.instance_file));
    p.source = "file:" + o.instance_file;
  }
  p.cfg.mode = parse_drive_mode(o.mode);
  if (o.variant == "local") {
    p.cfg.variant = CDVariant::local();
  } else if (o.variant == "nc") {
    p.cfg.variant = CDVariant::nested(o.order);
  } else {
    throw Error("unknown variant '" + o.variant + "' (expected local or nc)");
  }
  p.cfg.total_time = o.total_time;
  p.cfg.dt = o.dt;
  p.cfg.sampling = parse_sampling(o.sampling);
  p.cfg.prune_threshold = o.prune;
  if (o.truncate) {
    if (*o.truncate < 0) throw Error("--truncate must be >= 0");
    p.cfg.truncate_2local = static_cast<std::size_t>(*o.truncate);
  }
  p.cfg.validate();
  return p;
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed) {
  if (seed) return *seed;
  std::random_device rd;
  return (static_cast<std::uint64_t>(rd()) << 32) ^ rd();
}

RunManifest make_manifest(const std::vector<std::string>& args, const Problem& p, json config,
                          std::optional<std::uint64_t> seed) {
  RunManifest m;
  std::vector<std::string> echo = args;
  if (!echo.empty()) echo.front() = "dcqf";
  m.command = join_command(echo);
  config["instance_source"] = p.source;
  m.config = std::move(config);
  m.seed = seed;
  m.version = DCQF_VERSION;
  m.input_digest = digest(serialize_instance(p.instance));
  return m;
}

std::string fmt(double v, int precision = 6) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << v;
  return os.str();
}

json ground_json(const GroundStates& g, const Distribution& dist) {
  double mass = 0.0;
  for (const auto& b : g.bitstrings) mass += dist.at(b);
  return {{"bitstrings", g.bitstrings}, {"energy", g.energy}, {"ground_space_p", mass}};
}

struct DcqfRun {
  CircuitIR circuit;
  RunResult result;
  GroundStates ground;
};

DcqfRun run_dcqf(const CounterdiabaticModel& model, const ProtocolConfig& cfg) {
  DcqfRun run;
  run.circuit = compile_protocol(model, cfg);
  run.result.final_state = run_circuit(run.circuit, initial_plus_state(model.num_sites()));
  run.result.distribution = distribution(run.result.final_state);
  run.result.config = cfg.to_json();
  run.ground = brute_force_ground(model.instance());
  return run;
}

int cmd_solve(const std::vector<std::string>& args, const ProblemOptions& o, long long shots, std::ostream& out) {
  const Problem p = resolve(o);
  if (shots < 0) throw Error("--shots must be >= 0");
  const std::uint64_t seed = resolve_seed(o.seed);
  const CounterdiabaticModel model(p.instance);
  DcqfRun run = run_dcqf(model, p.cfg);
  run.result.seed = seed;
  if (shots > 0) run.result.shot_counts = sample(run.result.distribution, static_cast<std::uint64_t>(shots), seed);

  const std::string& target = run.ground.bitstrings.front();
  json doc = run_result_to_json(run.result, target);
  doc["ground"] = ground_json(run.ground, run.result.distribution);
  doc["circuit_stats"] = stats(run.circuit).to_json();
  if (p.cfg.variant == CDVariant::nested(1) && p.cfg.mode != DriveMode::kAdiabatic) {
    const auto r = compare_first_order_forms(model, 0.5 * p.cfg.total_time, Schedule(p.cfg.total_time));
    doc["first_order_forms"] = {{"t", r.t},
                                {"lambda", r.lambda},
                                {"alpha1", r.alpha1},
                                {"derived_norm", r.derived_norm},
                                {"shorthand_norm", r.shorthand_norm},
                                {"relative_difference", r.relative_difference}};
  }
  json config = p.cfg.to_json();
  config["shots"] = shots;
  doc["manifest"] = make_manifest(args, p, config, seed).to_json();

  if (!o.out.empty()) write_file(o.out, doc.dump(2) + "\n");
  out << "ground state " << target << " (E = " << run.ground.energy << ")\n";
  out << "success probability " << fmt(success_probability(run.result, target)) << '\n';
  if (run.result.shot_counts) {
    const auto it = run.result.shot_counts->find(target);
    const std::uint64_t hits = it == run.result.shot_counts->end() ? 0 : it->second;
    out << "sampled " << hits << " / " << shots << " shots on target (seed " << seed << ")\n";
  }
  return 0;
}

int cmd_compare(const std::vector<std::string>& args, const ProblemOptions& o, long long qaoa_p, long long budget,
                std::ostream& out) {
  const Problem p = resolve(o);
  if (qaoa_p < 1) throw Error("--qaoa-p must be >= 1");
  if (budget < 1) throw Error("--qaoa-budget must be >= 1");
  const std::uint64_t seed = resolve_seed(o.seed);
  const CounterdiabaticModel model(p.instance);
  DcqfRun dcqf = run_dcqf(model, p.cfg);
  dcqf.result.seed = seed;
  const std::string& target = dcqf.ground.bitstrings.front();

  const QaoaResult q =
      optimize_angles(p.instance, static_cast<std::size_t>(qaoa_p), static_cast<std::size_t>(budget), seed);
  const CircuitIR qaoa = qaoa_circuit(p.instance, q.params);
  RunResult qres;
  qres.final_state = run_circuit(qaoa, initial_plus_state(p.instance.n));
  qres.distribution = distribution(qres.final_state);
  qres.config = {{"p", qaoa_p}, {"budget", budget}, {"objective", "success_probability"}};
  qres.seed = seed;

  json dcqf_doc = run_result_to_json(dcqf.result, target);
  dcqf_doc["stats"] = stats(dcqf.circuit).to_json();
  json qaoa_doc = run_result_to_json(qres, target);
  qaoa_doc["angles"] = q.params.to_json();
  qaoa_doc["evaluations"] = q.evaluations;
  qaoa_doc["stats"] = stats(qaoa).to_json();

  const double p_dcqf = success_probability(dcqf.result, target);
  const double p_qaoa = success_probability(qres, target);
  json config = p.cfg.to_json();
  config["qaoa_p"] = qaoa_p;
  config["qaoa_budget"] = budget;
  json doc = {{"target", target},
              {"ground", ground_json(dcqf.ground, dcqf.result.distribution)},
              {"dcqf", dcqf_doc},
              {"qaoa", qaoa_doc},
              {"summary", {{"dcqf_success", p_dcqf}, {"qaoa_success", p_qaoa}, {"ratio", p_qaoa > 0 ? p_dcqf / p_qaoa : 0.0}}},
              {"manifest", make_manifest(args, p, config, seed).to_json()}};
  if (!o.out.empty()) write_file(o.out, doc.dump(2) + "\n");

  const auto ds = stats(dcqf.circuit);
  const auto qs = stats(qaoa);
  out << "target " << target << '\n';
  out << "dcqf  success " << fmt(p_dcqf) << "  two-qubit gates " << ds.two_qubit << "  depth " << ds.depth << '\n';
  out << "qaoa  success " << fmt(p_qaoa) << "  two-qubit gates " << qs.two_qubit << "  depth " << qs.depth
      << "  (p=" << qaoa_p << ", " << q.evaluations << " evaluations)\n";
  return 0;
}

int cmd_spectrum(const std::vector<std::string>& args, const ProblemOptions& o, long long grid, long long levels,
                 std::ostream& out) {
  const Problem p = resolve(o);
  if (grid < 2) throw Error("--grid must be >= 2");
  if (levels < 2) throw Error("--levels must be >= 2");
  const auto report = instantaneous_spectrum(p.instance, p.cfg, static_cast<std::size_t>(grid),
                                             static_cast<std::size_t>(levels));
  json config = p.cfg.to_json();
  config["grid"] = grid;
  config["levels"] = levels;
  const std::string manifest = make_manifest(args, p, config, o.seed).to_json().dump();
  std::ostringstream mg;
  mg.precision(17);
  mg << "min_gap t=" << report.min_gap.t << " lambda=" << report.min_gap.lambda << " gap=" << report.min_gap.gap;
  const std::string csv = spectrum_to_csv(report, {"manifest " + manifest, mg.str()});
  if (!o.out.empty()) write_file(o.out, csv);
  out << "minimum gap " << fmt(report.min_gap.gap, 9) << " at t = " << fmt(report.min_gap.t) << " (lambda = "
      << fmt(report.min_gap.lambda) << ")\n";
  return 0;
}

int cmd_compile(const std::vector<std::string>& args, const ProblemOptions& o, std::ostream& out) {
  const Problem p = resolve(o);
  const CircuitIR circuit = compile_protocol(p.instance, p.cfg);
  json doc = circuit_to_json(circuit);
  doc["config"] = p.cfg.to_json();
  doc["manifest"] = make_manifest(args, p, p.cfg.to_json(), o.seed).to_json();
  if (!o.out.empty()) write_file(o.out, doc.dump(2) + "\n");
  const auto s = stats(circuit);
  out << "gates " << s.total << " (RX " << s.counts.at("RX") << ", RY " << s.counts.at("RY") << ", RZ "
      << s.counts.at("RZ") << ", ZZ " << s.counts.at("ZZ") << "), depth " << s.depth << ", pruned terms "
      << circuit.pruned.removed_terms << '\n';
  return 0;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
  json doc;
  try {
    doc = json::parse(read_file(path));
  } catch (const json::parse_error& e) {
    throw Error("circuit JSON: " + std::string(e.what()));
  }
  const CircuitIR circuit = circuit_from_json(doc);
  const json recomputed = stats(circuit).to_json();
  out << recomputed.dump() << '\n';
  if (doc.contains("stats") && doc["stats"] != recomputed) {
    err << "dcqf: error: embedded stats do not match the gate list\n";
    return 1;
  }
  return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digitized-counterdiabatic ground-state search for Ising spin glasses", "dcqf"};
  app.require_subcommand(1);

  ProblemOptions solve_opts;
  long long shots = 1000;
  auto* solve = app.add_subcommand("solve", "Compile, simulate and sample one protocol run");
  add_problem_options(solve, solve_opts);
  solve->add_option("--shots", shots, "Measurement shots (0 disables sampling)")->capture_default_str();

  ProblemOptions compare_opts;
  long long qaoa_p = 1;
  long long qaoa_budget = 5000;
  auto* compare = app.add_subcommand("compare", "Compare the protocol against optimised QAOA");
  add_problem_options(compare, compare_opts);
  compare->add_option("--qaoa-p", qaoa_p, "QAOA layers")->capture_default_str();
  compare->add_option("--qaoa-budget", qaoa_budget, "QAOA circuit evaluations")->capture_default_str();

  ProblemOptions spectrum_opts;
  spectrum_opts.mode = "adiabatic";
  long long grid = 101;
  long long levels = 4;
  auto* spectrum = app.add_subcommand("spectrum", "Instantaneous spectrum and minimum gap (CSV)");
  add_problem_options(spectrum, spectrum_opts);
  spectrum->add_option("--grid", grid, "Uniform time grid points")->capture_default_str();
  spectrum->add_option("--levels", levels, "Lowest eigenvalues to report")->capture_default_str();

  ProblemOptions compile_opts;
  auto* compile = app.add_subcommand("compile", "Lower the protocol to a native-gate circuit (JSON)");
  add_problem_options(compile, compile_opts);

  std::string verify_path;
  auto* verify = app.add_subcommand("verify", "Re-read a circuit file and recompute its statistics");
  verify->add_option("circuit", verify_path, "Circuit JSON file")->required();

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "dcqf: error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (*solve) return cmd_solve(args, solve_opts, shots, out);
    if (*compare) return cmd_compare(args, compare_opts, qaoa_p, qaoa_budget, out);
    if (*spectrum) return cmd_spectrum(args, spectrum_opts, grid, levels, out);
    if (*compile) return cmd_compile(args, compile_opts, out);
    if (*verify) return cmd_verify(verify_path, out, err);
  } catch (const std::exception& e) {
    err << "dcqf: error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace dcqf::cli
