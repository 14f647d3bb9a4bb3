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

#include "dcqf/trotter.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <tuple>

#include "quadrature.hpp"

namespace dcqf {

using nlohmann::json;

std::string to_string(Sampling s) {
  switch (s) {
    case Sampling::kIntegrated: return "integrated";
    case Sampling::kMidpoint: return "midpoint";
    case Sampling::kLeft: return "left";
  }
  return "unknown";
}

Sampling parse_sampling(std::string_view text) {
  if (text == "integrated") return Sampling::kIntegrated;
  if (text == "midpoint") return Sampling::kMidpoint;
  if (text == "left") return Sampling::kLeft;
  throw Error("unknown sampling '" + std::string(text) + "' (expected integrated, midpoint or left)");
}

void ProtocolConfig::validate() const {
  variant.validate();
  if (!(total_time > 0.0) || !std::isfinite(total_time)) throw Error("protocol: T must be positive and finite");
  if (!(dt > 0.0) || !std::isfinite(dt)) throw Error("protocol: dt must be positive and finite");
  const double ratio = total_time / dt;
  if (std::abs(ratio - std::round(ratio)) > 1e-9 * std::max(1.0, ratio) || std::round(ratio) < 1.0) {
    throw Error("protocol: T/dt = " + std::to_string(ratio) + " is not a positive integer step count");
  }
  if (!(prune_threshold >= 0.0)) throw Error("protocol: prune threshold must be >= 0");
}

std::size_t ProtocolConfig::steps() const {
  validate();
  return static_cast<std::size_t>(std::llround(total_time / dt));
}

json ProtocolConfig::to_json() const {
  json j = {
      {"mode", to_string(mode)},
      {"variant", variant.kind == CDKind::kLocalY ? "local" : "nc"},
      {"order", variant.order},
      {"T", total_time},
      {"dt", dt},
      {"steps", steps()},
      {"sampling", to_string(sampling)},
      {"prune", prune_threshold},
  };
  j["truncate"] = truncate_2local ? json(*truncate_2local) : json(nullptr);
  return j;
}

PauliSum interval_hamiltonian(const CounterdiabaticModel& model, const ProtocolConfig& cfg, double t_begin,
                              double t_end) {
  const Schedule schedule(cfg.total_time);
  const double width = t_end - t_begin;
  const std::size_t n = model.num_sites();

  PauliSum drive(n);
  PauliSum cd(n);
  if (cfg.sampling == Sampling::kIntegrated) {
    if (cfg.mode != DriveMode::kImpulse) {
      const double lam_bar =
          detail::integrate_adaptive<double>([&](double t) { return schedule.lambda(t); }, t_begin, t_end,
                                             1e-15 * width, 1e-14) /
          width;
      drive = model.adiabatic(lam_bar);
    }
    if (cfg.mode != DriveMode::kAdiabatic) {
      // The time integral of lambda_dot * A is the lambda integral of A.
      cd = (1.0 / width) * model.gauge_potential_integral(schedule.lambda(t_begin), schedule.lambda(t_end),
                                                          cfg.variant);
    }
  } else {
    const double t = cfg.sampling == Sampling::kMidpoint ? 0.5 * (t_begin + t_end) : t_begin;
    if (cfg.mode != DriveMode::kImpulse) drive = model.adiabatic(schedule.lambda(t));
    if (cfg.mode != DriveMode::kAdiabatic) cd = model.cd_term(t, schedule, cfg.variant);
  }
  if (cfg.truncate_2local) cd = truncate_2local(cd, *cfg.truncate_2local);
  return drive + cd;
}

std::vector<DigitizedStep> digitize(const CounterdiabaticModel& model, const ProtocolConfig& cfg) {
  const std::size_t steps = cfg.steps();
  std::vector<DigitizedStep> out;
  out.reserve(steps);
  for (std::size_t k = 0; k < steps; ++k) {
    DigitizedStep step;
    step.t_begin = static_cast<double>(k) * cfg.dt;
    step.t_end = k + 1 == steps ? cfg.total_time : static_cast<double>(k + 1) * cfg.dt;
    step.t = cfg.sampling == Sampling::kLeft ? step.t_begin : (static_cast<double>(k) + 0.5) * cfg.dt;
    step.hamiltonian = interval_hamiltonian(model, cfg, step.t_begin, step.t_end);
    out.push_back(std::move(step));
  }
  return out;
}

std::vector<DigitizedStep> digitize(const IsingInstance& inst, const ProtocolConfig& cfg) {
  return digitize(CounterdiabaticModel(inst), cfg);
}

std::string to_string(GateKind kind) {
  switch (kind) {
    case GateKind::kRX: return "RX";
    case GateKind::kRY: return "RY";
    case GateKind::kRZ: return "RZ";
    case GateKind::kZZ: return "ZZ";
  }
  return "?";
}

GateKind parse_gate_kind(std::string_view text) {
  if (text == "RX") return GateKind::kRX;
  if (text == "RY") return GateKind::kRY;
  if (text == "RZ") return GateKind::kRZ;
  if (text == "ZZ") return GateKind::kZZ;
  throw Error("unknown gate kind '" + std::string(text) + "'");
}

void CircuitIR::validate() const {
  if (!origins.empty() && origins.size() != gates.size()) {
    throw Error("circuit: provenance list does not match gate list");
  }
  for (std::size_t g = 0; g < gates.size(); ++g) {
    const Gate& gate = gates[g];
    const std::size_t arity = gate.kind == GateKind::kZZ ? 2 : 1;
    if (gate.sites.size() != arity) {
      throw Error("circuit: gate " + std::to_string(g) + " (" + to_string(gate.kind) + ") needs " +
                  std::to_string(arity) + " site(s)");
    }
    for (auto s : gate.sites) {
      if (s >= n) throw Error("circuit: gate " + std::to_string(g) + " site " + std::to_string(s) + " out of range");
    }
    if (arity == 2 && gate.sites[0] == gate.sites[1]) {
      throw Error("circuit: gate " + std::to_string(g) + " ZZ needs two distinct sites");
    }
    if (!std::isfinite(gate.theta)) throw Error("circuit: gate " + std::to_string(g) + " has non-finite angle");
  }
}

void CircuitIR::append(const CircuitIR& other) {
  if (n == 0 && gates.empty()) n = other.n;
  if (other.n != n) throw Error("circuit: cannot append circuits of different width");
  gates.insert(gates.end(), other.gates.begin(), other.gates.end());
  origins.insert(origins.end(), other.origins.begin(), other.origins.end());
}

namespace {

// Canonical class of a compilable term: X, Z, ZZ, Y, ZY/YZ.
enum TermClass { kX = 0, kZ = 1, kZZ = 2, kY = 3, kZY = 4 };

struct LoweredTerm {
  TermClass cls;
  std::vector<std::size_t> sites;
  std::vector<Axis> axes;
  PauliString string;
  double coeff;
};

LoweredTerm classify(const PauliString& s, Complex c) {
  if (std::abs(c.imag()) > kDropTolerance * std::max(1.0, std::abs(c))) {
    throw Error("compile_step: term " + s.str() + " has a complex coefficient (non-Hermitian step)");
  }
  LoweredTerm t{kX, s.support(), {}, s, c.real()};
  for (auto site : t.sites) t.axes.push_back(s.at(site));
  if (t.sites.size() == 1) {
    switch (t.axes[0]) {
      case Axis::X: t.cls = kX; return t;
      case Axis::Z: t.cls = kZ; return t;
      case Axis::Y: t.cls = kY; return t;
      default: break;
    }
  } else if (t.sites.size() == 2) {
    const Axis a = t.axes[0];
    const Axis b = t.axes[1];
    if (a == Axis::Z && b == Axis::Z) {
      t.cls = kZZ;
      return t;
    }
    if ((a == Axis::Z && b == Axis::Y) || (a == Axis::Y && b == Axis::Z)) {
      t.cls = kZY;
      return t;
    }
  }
  throw Error("compile_step: unsupported Pauli string " + s.str() +
              " (only X, Y, Z, ZZ, ZY and YZ terms can be lowered)");
}

}  // namespace

CircuitIR compile_step(const PauliSum& H, double dt, int step) {
  CircuitIR circuit;
  circuit.n = H.num_sites();

  std::vector<LoweredTerm> terms;
  for (const auto& [s, c] : H) {
    if (s.is_identity()) continue;
    terms.push_back(classify(s, c));
  }
  std::sort(terms.begin(), terms.end(), [](const LoweredTerm& a, const LoweredTerm& b) {
    return std::tie(a.cls, a.sites, a.axes) < std::tie(b.cls, b.sites, b.axes);
  });

  int term_id = 0;
  for (const auto& t : terms) {
    const double theta = 2.0 * t.coeff * dt;
    const std::string label = t.string.str();
    auto emit = [&](GateKind kind, std::vector<std::size_t> sites, double angle, bool basis) {
      circuit.gates.push_back(Gate{kind, std::move(sites), angle});
      circuit.origins.push_back(GateOrigin{step, term_id, label, basis});
    };
    switch (t.cls) {
      case kX: emit(GateKind::kRX, t.sites, theta, false); break;
      case kZ: emit(GateKind::kRZ, t.sites, theta, false); break;
      case kY: emit(GateKind::kRY, t.sites, theta, false); break;
      case kZZ: emit(GateKind::kZZ, t.sites, theta, false); break;
      case kZY: {
        // Y = RX(-pi/2) Z RX(pi/2): rotate the Y site onto Z, apply ZZ, rotate back.
        const std::size_t y_site = t.axes[0] == Axis::Y ? t.sites[0] : t.sites[1];
        constexpr double quarter = std::numbers::pi / 2.0;
        emit(GateKind::kRX, {y_site}, quarter, true);
        emit(GateKind::kZZ, t.sites, theta, false);
        emit(GateKind::kRX, {y_site}, -quarter, true);
        break;
      }
    }
    ++term_id;
  }
  return circuit;
}

CircuitIR compile_protocol(const CounterdiabaticModel& model, const ProtocolConfig& cfg) {
  const auto steps = digitize(model, cfg);
  CircuitIR circuit;
  circuit.n = model.num_sites();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    circuit.append(compile_step(steps[k].hamiltonian, cfg.dt, static_cast<int>(k)));
  }
  return prune(circuit, cfg.prune_threshold);
}

CircuitIR compile_protocol(const IsingInstance& inst, const ProtocolConfig& cfg) {
  return compile_protocol(CounterdiabaticModel(inst), cfg);
}

CircuitIR prune(const CircuitIR& circuit, double threshold) {
  if (!(threshold >= 0.0)) throw Error("prune: threshold must be >= 0");
  circuit.validate();
  CircuitIR out;
  out.n = circuit.n;
  out.pruned = circuit.pruned;
  out.pruned.threshold = std::max(out.pruned.threshold, threshold);

  if (circuit.origins.empty()) {
    // No provenance: each gate is its own term.
    for (const auto& g : circuit.gates) {
      if (std::abs(g.theta) < threshold) {
        ++out.pruned.removed_terms;
        ++out.pruned.removed_gates;
        out.pruned.max_removed_angle = std::max(out.pruned.max_removed_angle, std::abs(g.theta));
      } else {
        out.gates.push_back(g);
      }
    }
    return out;
  }

  std::set<std::pair<int, int>> dropped;
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& origin = circuit.origins[g];
    const double angle = std::abs(circuit.gates[g].theta);
    if (!origin.basis_change && angle < threshold) {
      dropped.emplace(origin.step, origin.term);
      ++out.pruned.removed_terms;
      out.pruned.max_removed_angle = std::max(out.pruned.max_removed_angle, angle);
    }
  }
  for (std::size_t g = 0; g < circuit.gates.size(); ++g) {
    const auto& origin = circuit.origins[g];
    if (dropped.count({origin.step, origin.term}) != 0) {
      ++out.pruned.removed_gates;
      continue;
    }
    out.gates.push_back(circuit.gates[g]);
    out.origins.push_back(origin);
  }
  return out;
}

PauliSum truncate_2local(const PauliSum& H, std::size_t k) {
  std::vector<std::pair<PauliString, Complex>> two_local;
  PauliSum out(H.num_sites());
  for (const auto& [s, c] : H) {
    if (s.weight() == 2) {
      two_local.emplace_back(s, c);
    } else {
      out.add(s, c);
    }
  }
  // The term map is already in lexicographic order, so a stable sort breaks ties by it.
  std::stable_sort(two_local.begin(), two_local.end(),
                   [](const auto& a, const auto& b) { return std::abs(a.second) > std::abs(b.second); });
  for (std::size_t i = 0; i < std::min(k, two_local.size()); ++i) out.add(two_local[i].first, two_local[i].second);
  return out;
}

json CircuitStats::to_json() const {
  return json{{"counts", counts}, {"total", total}, {"two_qubit", two_qubit}, {"depth", depth}};
}

CircuitStats stats(const CircuitIR& circuit) {
  CircuitStats s;
  for (auto kind : {GateKind::kRX, GateKind::kRY, GateKind::kRZ, GateKind::kZZ}) s.counts[to_string(kind)] = 0;
  std::vector<std::size_t> level(circuit.n, 0);
  for (const auto& g : circuit.gates) {
    ++s.counts[to_string(g.kind)];
    ++s.total;
    if (g.sites.size() == 2) ++s.two_qubit;
    std::size_t d = 0;
    for (auto site : g.sites) d = std::max(d, level.at(site));
    for (auto site : g.sites) level[site] = d + 1;
    s.depth = std::max(s.depth, d + 1);
  }
  return s;
}

json circuit_to_json(const CircuitIR& circuit) {
  json gates = json::array();
  for (const auto& g : circuit.gates) {
    gates.push_back({{"kind", to_string(g.kind)}, {"sites", g.sites}, {"theta", g.theta}});
  }
  json provenance = json::array();
  for (const auto& o : circuit.origins) {
    provenance.push_back({{"step", o.step}, {"term", o.term}, {"pauli", o.pauli}, {"basis_change", o.basis_change}});
  }
  return json{
      {"n", circuit.n},
      {"conventions",
       {{"rotation", "R_P(theta) = exp(-i theta P / 2)"},
        {"zz", "ZZ(theta) = exp(-i theta Z(x)Z / 2)"},
        {"term_angle", "theta = 2 c dt"},
        {"tensor_order", "site 0 is the most significant factor; bitstring character i is site i"}}},
      {"gates", gates},
      {"provenance", provenance},
      {"pruned",
       {{"threshold", circuit.pruned.threshold},
        {"removed_terms", circuit.pruned.removed_terms},
        {"removed_gates", circuit.pruned.removed_gates},
        {"max_removed_angle", circuit.pruned.max_removed_angle}}},
      {"stats", stats(circuit).to_json()},
  };
}

CircuitIR circuit_from_json(const json& doc) {
  try {
    CircuitIR c;
    c.n = doc.at("n").get<std::size_t>();
    for (const auto& g : doc.at("gates")) {
      c.gates.push_back(Gate{parse_gate_kind(g.at("kind").get<std::string>()),
                             g.at("sites").get<std::vector<std::size_t>>(), g.at("theta").get<double>()});
    }
    if (doc.contains("provenance")) {
      for (const auto& o : doc.at("provenance")) {
        c.origins.push_back(GateOrigin{o.at("step").get<int>(), o.at("term").get<int>(),
                                       o.at("pauli").get<std::string>(), o.at("basis_change").get<bool>()});
      }
    }
    if (doc.contains("pruned")) {
      const auto& p = doc.at("pruned");
      c.pruned.threshold = p.at("threshold").get<double>();
      c.pruned.removed_terms = p.at("removed_terms").get<std::size_t>();
      c.pruned.removed_gates = p.at("removed_gates").get<std::size_t>();
      c.pruned.max_removed_angle = p.at("max_removed_angle").get<double>();
    }
    c.validate();
    return c;
  } catch (const json::exception& e) {
    throw Error(std::string("circuit JSON: ") + e.what());
  }
}

}  // namespace dcqf
