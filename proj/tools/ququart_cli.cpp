// Copyright 2026 ququart-sim contributors
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

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ququart/angular.hpp"
#include "ququart/code422.hpp"
#include "ququart/csv.hpp"
#include "ququart/distill.hpp"
#include "ququart/ftqec.hpp"
#include "ququart/aklt.hpp"
#include "ququart/mipt.hpp"
#include "ququart/pulses.hpp"
#include "ququart/readout.hpp"
#include "ququart/rydberg_sim.hpp"
#include "ququart/tomography.hpp"

namespace ququart {
namespace {

constexpr int kUsageExit = 2;
constexpr const char* kThreadsEnv = "QUQUART_THREADS";

struct Globals {
  uint64_t seed = 1;
  size_t threads = 1;
  std::string output;
};

// "a,b,c" or "lo:hi:n" (n evenly spaced points, inclusive).
std::vector<double> parse_grid(std::string text) {
  std::replace(text.begin(), text.end(), '\n', ',');
  std::vector<double> out;
  if (text.find(':') != std::string::npos) {
    std::stringstream ss(text);
    std::string lo, hi, n;
    std::getline(ss, lo, ':');
    std::getline(ss, hi, ':');
    std::getline(ss, n, ':');
    const double a = std::stod(lo);
    const double b = std::stod(hi);
    const int points = std::stoi(n);
    if (points < 1) throw std::invalid_argument("grid needs at least one point: " + text);
    for (int k = 0; k < points; ++k) out.push_back(points == 1 ? a : a + (b - a) * k / (points - 1));
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(std::stod(item));
  }
  if (out.empty()) throw std::invalid_argument("empty grid: " + text);
  return out;
}

std::string str(double x) { return format_double(x); }

size_t default_threads() {
  if (const char* env = std::getenv(kThreadsEnv)) {
    try {
      long n = std::stol(env);
      if (n > 0) return static_cast<size_t>(n);
    } catch (const std::exception&) {
    }
  }
  return 1;
}

// ---- c6-table ----
struct C6Options {
  double theta = 0.0;
  double phi = 0.0;
};

void run_c6(const C6Options& o, const Globals& g, std::ostream& out) {
  CsvWriter csv(out);
  csv.provenance("c6-table", {{"theta", str(o.theta)}, {"phi", str(o.phi)}}, g.seed);
  const std::vector<std::string> labels = {"mF=-3/2", "mF=-1/2", "mF=+1/2", "mF=+3/2"};
  write_matrix(csv, c6_table({o.theta, o.phi}), labels, labels);
}

// ---- rydberg-gate ----
struct GateOptions {
  std::string protocol = "cccz";
  double omega_mhz = 3.0;
  double delta_ratio = 0.375;
  double v_ghz = 2.0;
  double eta = 0.989;
  double b_gauss = 120.0;
  double parasitic_ratio = 1.0 / std::sqrt(3.0);
  double tau_omega = 0.0;  // 0: calibrate
  double xi = 0.0;
};

void run_gate(const GateOptions& o, const Globals& g, std::ostream& out) {
  const GateProtocol protocol = parse_protocol(o.protocol);
  AtomLevelScheme scheme;
  scheme.b_field_gauss = o.b_gauss;
  const double omega = kTwoPi * o.omega_mhz * 1e6;
  const InteractionModel interaction = InteractionModel::from_eta(kTwoPi * o.v_ghz * 1e9, o.eta);
  LevinePulse pulse;
  if (o.tau_omega > 0.0) {
    pulse = {omega, o.delta_ratio * omega, o.tau_omega / omega, o.xi};
  } else {
    pulse = calibrate_pulse(protocol, omega, o.delta_ratio, interaction, scheme, o.parasitic_ratio).pulse;
  }
  const GateResult r = simulate_gate(protocol, pulse, interaction, scheme, o.parasitic_ratio);
  const GateFidelity f = gate_fidelity(r.realized, protocol);
  double leak = 0.0;
  for (double l : r.leakage) leak = std::max(leak, l);
  CsvWriter csv(out);
  csv.provenance("rydberg-gate",
                 {{"protocol", o.protocol}, {"omega_mhz", str(o.omega_mhz)}, {"delta_ratio", str(o.delta_ratio)},
                  {"v_ghz", str(o.v_ghz)}, {"eta", str(o.eta)}, {"b_gauss", str(o.b_gauss)},
                  {"parasitic_ratio", str(o.parasitic_ratio)}},
                 g.seed);
  csv.header({"protocol", "tau_omega", "xi", "fidelity", "phi", "max_leakage"});
  csv.row({protocol_name(protocol), str(pulse.tau * omega), str(pulse.xi), str(f.fidelity), str(f.phi), str(leak)});
}

// ---- rydberg-sweep ----
struct SweepOptions {
  std::string etas = "0.05,0.2,0.4,0.6,0.8,0.9,0.95,0.99,1";
  std::string v_ghz = "0.5,1,2";
  double omega_mhz = 3.0;
  double delta_ratio = 0.375;
  double b_gauss = 120.0;
};

void run_sweep(const SweepOptions& o, const Globals& g, std::ostream& out) {
  AtomLevelScheme scheme;
  scheme.b_field_gauss = o.b_gauss;
  std::vector<double> vs;
  for (double v : parse_grid(o.v_ghz)) vs.push_back(kTwoPi * v * 1e9);
  const auto points = sweep_eta(parse_grid(o.etas), vs, kTwoPi * o.omega_mhz * 1e6, o.delta_ratio, scheme);
  CsvWriter csv(out);
  csv.provenance("rydberg-sweep", {{"etas", o.etas}, {"v_ghz", o.v_ghz}, {"omega_mhz", str(o.omega_mhz)},
                                   {"delta_ratio", str(o.delta_ratio)}, {"b_gauss", str(o.b_gauss)}},
                 g.seed);
  csv.header({"v_ghz", "spacing_um", "eta", "cz_infidelity"});
  for (const auto& p : points) {
    csv.row(std::vector<double>{p.v_overall / kTwoPi / 1e9, spacing_for_shift(p.v_overall), p.eta, p.infidelity});
  }
}

// ---- distill ----
struct DistillOptions {
  std::string error = "paulix:0";
  std::string sweep = "entanglement";
  std::string grid = "0:0.5:11";
  double gate_infidelity = 0.0;
  double measurement_error = 0.0;
};

void run_distill(const DistillOptions& o, const Globals& g, std::ostream& out) {
  DistillConfig base;
  base.entanglement_error = ErrorModel::parse(o.error);
  base.intra_gate_infidelity = o.gate_infidelity;
  base.measurement_error = o.measurement_error;
  const auto grid = parse_grid(o.grid);
  std::vector<DistillPoint> points;
  if (o.sweep == "entanglement") {
    points = sweep_entanglement_error(base, grid);
  } else if (o.sweep == "gate") {
    points = sweep_gate_infidelity(base, grid);
  } else {
    throw std::invalid_argument("--sweep must be entanglement or gate");
  }
  CsvWriter csv(out);
  csv.provenance("distill", {{"error", base.entanglement_error.to_string()}, {"sweep", o.sweep}, {"grid", o.grid},
                             {"gate_infidelity", str(o.gate_infidelity)},
                             {"measurement_error", str(o.measurement_error)}},
                 g.seed);
  csv.header({"parameter", "pre_infidelity", "post_infidelity", "yield"});
  for (const auto& p : points) {
    csv.row(std::vector<double>{p.parameter, p.result.pre_infidelity, p.result.post_infidelity, p.result.yield});
  }
}

// ---- qec-threshold ----
struct QecOptions {
  std::string code = "513";
  std::string grid = "5e-4,1e-3,2e-3,4e-3,7e-3,1e-2,1.5e-2,2e-2,3e-2,5e-2";
  size_t trials = 100000;
  std::string modes = "normal,ququart";
};

void run_qec(const QecOptions& o, const Globals& g, std::ostream& out) {
  const StabilizerCode code = StabilizerCode::by_name(o.code);
  if (code.name == "422") {
    throw std::invalid_argument("threshold curves need a correcting code (513 or 713)");
  }
  const FlagProtocol protocol = FlagProtocol::build(code);
  const auto grid = parse_grid(o.grid);
  CsvWriter csv(out);
  csv.provenance("qec-threshold", {{"code", o.code}, {"grid", o.grid}, {"trials", std::to_string(o.trials)},
                                   {"modes", o.modes}},
                 g.seed);
  std::vector<std::string> modes;
  std::string mode_list = o.modes;
  std::replace(mode_list.begin(), mode_list.end(), '\n', ',');
  std::stringstream ss(mode_list);
  for (std::string m; std::getline(ss, m, ',');) modes.push_back(m);
  std::vector<std::string> notes;
  csv.header({"mode", "p", "p_logical", "stderr", "failures", "trials"});
  for (const auto& m : modes) {
    const auto curve = threshold_curve(protocol, parse_flag_mode(m), grid, o.trials, g.seed, g.threads);
    for (const auto& c : curve) {
      csv.row({m, str(c.p), str(c.p_logical), str(c.stderr_), std::to_string(c.failures), std::to_string(c.trials)});
    }
    const auto pt = pseudo_threshold(curve);
    notes.push_back("pseudo_threshold " + m + " " + (pt ? str(*pt) : std::string("none")));
  }
  for (const auto& n : notes) csv.comment(n);
}

// ---- qec-422 ----
struct Qec422Options {
  std::string errors = "single";
};

std::vector<PauliOperator> parse_error_list(std::string text) {
  std::vector<PauliOperator> errors = {PauliOperator(4)};
  if (text == "single") {
    for (size_t q = 0; q < 4; ++q) {
      for (int p = 1; p <= 3; ++p) errors.push_back(PauliOperator::single(4, q, p));
    }
    return errors;
  }
  std::replace(text.begin(), text.end(), '\n', ',');
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (item.empty()) continue;
    auto e = PauliOperator::from_string(item);
    if (e.num_qubits() != 4) {
      throw std::invalid_argument("four-qubit code errors need 4 Pauli characters: " + item);
    }
    if (!e.is_identity()) errors.push_back(e);
  }
  return errors;
}

void run_qec422(const Qec422Options& o, const Globals& g, std::ostream& out) {
  const std::vector<PauliOperator> errors = parse_error_list(o.errors);
  CsvWriter csv(out);
  csv.provenance("qec-422", {{"errors", o.errors}}, g.seed);
  csv.header({"label", "error", "accept_probability", "logical_fidelity", "flag_probability", "detected"});
  for (const char* label : {"00", "01", "10", "11", "0+", "0-"}) {
    for (const auto& e : errors) {
      const DetectionResult r = code422_prepare_and_detect(label, e);
      const bool detected = r.accept_probability < 1e-12;
      csv.row({label, e.to_string(), str(r.accept_probability), str(r.logical_fidelity), str(r.flag_probability),
               e.is_identity() ? "-" : (detected ? "1" : "0")});
    }
  }
}

// ---- aklt ----
struct AkltOptions {
  size_t length = 10;
  size_t trajectories = 1;
};

void run_aklt(const AkltOptions& o, const Globals& g, std::ostream& out) {
  CsvWriter csv(out);
  csv.provenance("aklt", {{"length", std::to_string(o.length)}, {"trajectories", std::to_string(o.trajectories)}},
                 g.seed);
  csv.header({"trajectory", "record", "retained", "string_order_z", "energy_per_bond"});
  const QuquartChain prepared = prepare_singlet_chain(o.length);
  Rng rng(g.seed);
  for (size_t t = 0; t < o.trajectories; ++t) {
    QuquartChain chain = prepared;
    project_sites(chain, rng);
    std::string record;
    for (const auto& r : chain.record) record += (*r == SiteOutcome::kSinglet ? 'S' : 'T');
    std::string order = "nan";
    std::string energy = "nan";
    if (record.find('T') == std::string::npos) {
      csv.row({std::to_string(t), record, "0", order, energy});
      continue;
    }
    const QuquartChain kept = rearrange(chain);
    if (kept.length() >= 2) {
      const StateVector s = to_spin1(kept);
      order = str(string_order(s, 'z', 0, kept.length() - 1));
      energy = str(aklt_energy_per_bond(s));
    }
    csv.row({std::to_string(t), record, std::to_string(kept.length()), order, energy});
  }
}

// ---- mipt ----
struct MiptOptions {
  size_t length = 8;
  std::string p = "0,0.05,0.1,0.2,0.4";
  size_t cycles = 20;
  size_t trajectories = 1000;
};

void run_mipt(const MiptOptions& o, const Globals& g, std::ostream& out) {
  CsvWriter csv(out);
  csv.provenance("mipt", {{"length", std::to_string(o.length)}, {"p", o.p}, {"cycles", std::to_string(o.cycles)},
                          {"trajectories", std::to_string(o.trajectories)}},
                 g.seed);
  csv.header({"p", "cycle", "active_density", "stderr"});
  for (double p : parse_grid(o.p)) {
    MiptConfig cfg{o.length, p, o.cycles, o.trajectories, g.seed, g.threads};
    const MiptResult r = mipt_run(cfg);
    for (size_t c = 0; c < r.density.size(); ++c) {
      csv.row({str(p), std::to_string(c + 1), str(r.density[c]), str(r.stderr_[c])});
    }
  }
}

// ---- readout-probs ----
void run_readout(const ReadoutImperfections& imp, const Globals& g, std::ostream& out) {
  CsvWriter csv(out);
  csv.provenance("readout-probs",
                 {{"fm", str(imp.fm)}, {"fpi", str(imp.fpi)}, {"pf", str(imp.pf)}, {"pl", str(imp.pl)}}, g.seed);
  write_matrix(csv, two_round_confusion(imp), {"00", "01", "10", "11"}, {"BB", "BD", "DB", "DD"});
}

// ---- pulse-map ----
struct PulseOptions {
  std::string gate = "pi";
  std::string omega_grid = "70:110:21";  // kHz
  std::string tau_grid = "14:20:25";     // us
  double delta_khz = 0.0;
  double trap_khz = 30.0;
  double eta_ld = 0.34;
  size_t n_max = 40;
};

void run_pulse_map(const PulseOptions& o, const Globals& g, std::ostream& out) {
  const PulseGate gate = parse_pulse_gate(o.gate);
  TrapParams trap{kTwoPi * o.trap_khz * 1e3, o.eta_ld, o.n_max, 0.0};
  std::vector<double> omegas;
  std::vector<double> taus;
  for (double w : parse_grid(o.omega_grid)) omegas.push_back(kTwoPi * w * 1e3);
  for (double t : parse_grid(o.tau_grid)) taus.push_back(t * 1e-6);
  const auto cells = parameter_map(gate, trap, {0.0, kTwoPi * o.delta_khz * 1e3, 0.0}, omegas, taus, g.threads);
  CsvWriter csv(out);
  csv.provenance("pulse-map", {{"gate", o.gate}, {"omega_grid_khz", o.omega_grid}, {"tau_grid_us", o.tau_grid},
                               {"delta_khz", str(o.delta_khz)}, {"trap_khz", str(o.trap_khz)},
                               {"eta_ld", str(o.eta_ld)}, {"n_max", std::to_string(o.n_max)}},
                 g.seed);
  csv.header({"omega_khz", "tau_us", "infidelity", "delta_nbar"});
  for (const auto& c : cells) {
    csv.row(std::vector<double>{c.omega / kTwoPi / 1e3, c.tau * 1e6, c.infidelity, c.delta_nbar});
  }
}

// ---- light-shift ----
struct LightShiftOptions {
  double intensity = 2.8e3;
  double gamma_khz = 182.0;
  double tau_us = 20.0;
  double target_khz = 50.0;
};

void run_light_shift(const LightShiftOptions& o, const Globals& g, std::ostream& out) {
  ProbeParams probe{o.intensity, 0.0, kTwoPi * o.gamma_khz * 1e3, o.tau_us * 1e-6, 1.0};
  probe.delta = equalize_splittings(probe, kTwoPi * o.target_khz * 1e3);
  CsvWriter csv(out);
  csv.provenance("light-shift", {{"intensity", str(o.intensity)}, {"gamma_khz", str(o.gamma_khz)},
                                 {"tau_us", str(o.tau_us)}, {"target_khz", str(o.target_khz)}},
                 g.seed);
  csv.header({"delta_mhz", "shift_khz", "scattering_rate_per_s", "scattering_probability"});
  csv.row(std::vector<double>{probe.delta / kTwoPi / 1e6, light_shift(probe) / kTwoPi / 1e3, scattering_rate(probe),
                              scattering_probability(probe)});
}

// ---- raman-mismatch ----
struct RamanOptions {
  std::string domega_grid = "-0.2:0.2:21";
  std::string dphi_grid = "-0.3141592653589793:0.3141592653589793:21";
};

void run_raman(const RamanOptions& o, const Globals& g, std::ostream& out) {
  CsvWriter csv(out);
  csv.provenance("raman-mismatch", {{"domega_grid", o.domega_grid}, {"dphi_grid", o.dphi_grid}}, g.seed);
  csv.header({"d_omega_rel", "d_phi", "n_qubit_fidelity", "single_qubit_fidelity"});
  for (double dw : parse_grid(o.domega_grid)) {
    for (double dp : parse_grid(o.dphi_grid)) {
      csv.row(std::vector<double>{dw, dp, raman_mismatch_fidelity(dw, dp), single_qubit_rotation_fidelity(dw, dp)});
    }
  }
}

// ---- qst ----
struct QstOptions {
  std::string method = "pauli";
  std::string state = "bell";
  size_t shots = 10000;
};

// Builtin names (zero, bell, random) or a file with four "re,im" amplitude lines.
DensityMatrix load_state(const std::string& spec, Rng& rng) {
  const QuditRegister reg({4});
  if (spec == "zero") return DensityMatrix(StateVector::basis(reg, {0}));
  if (spec == "bell") {
    Vector v = Vector::Zero(4);
    v(0) = v(3) = 1.0 / std::sqrt(2.0);
    return DensityMatrix(StateVector(reg, v));
  }
  if (spec == "random") return DensityMatrix::random(reg, rng);
  std::ifstream in(spec);
  if (!in) throw std::invalid_argument("cannot open state file: " + spec);
  Vector v(4);
  int k = 0;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    if (k == 4) throw std::invalid_argument("state file must hold exactly four amplitudes");
    std::stringstream ss(line);
    std::string re, im;
    std::getline(ss, re, ',');
    std::getline(ss, im, ',');
    v(k++) = Complex(std::stod(re), im.empty() ? 0.0 : std::stod(im));
  }
  if (k != 4) throw std::invalid_argument("state file must hold exactly four amplitudes");
  if (v.norm() == 0.0) throw std::invalid_argument("state has zero norm");
  v.normalize();
  return DensityMatrix(StateVector(reg, v));
}

void run_qst(const QstOptions& o, const Globals& g, std::ostream& out) {
  const QstMethod method = parse_qst_method(o.method);
  Rng rng(g.seed);
  const DensityMatrix truth = load_state(o.state, rng);
  QstResult est{truth, 0.0, true};
  double frob = 0.0;
  double infid = 0.0;
  if (o.shots == 0) {
    est = reconstruct(method, forward_probabilities(truth, settings_for(method)));
    frob = (est.rho.elements() - truth.elements()).norm();
    infid = 1.0 - fidelity(clip_to_psd(est.rho), truth);
  } else {
    const SampledQst s = sample_and_reconstruct(truth, o.shots, method, rng);
    est = s.estimate;
    frob = s.frobenius_error;
    infid = s.infidelity;
  }
  CsvWriter csv(out);
  csv.provenance("qst", {{"method", o.method}, {"state", o.state}, {"shots", std::to_string(o.shots)}}, g.seed);
  csv.comment("frobenius_error " + str(frob));
  csv.comment("infidelity " + str(infid));
  csv.comment("min_eigenvalue " + str(est.min_eigenvalue));
  write_matrix(csv, est.rho.elements());
}

}  // namespace
}  // namespace ququart

int main(int argc, char** argv) {
  using namespace ququart;
  CLI::App app{"Ququart architecture simulation toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "INI configuration file; [subcommand] sections set subcommand options");
  app.set_version_flag("--version", kVersion);
  Globals g;
  g.threads = default_threads();
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--threads", g.threads, std::string("Worker threads (default from ") + kThreadsEnv + ")")
      ->capture_default_str();
  app.add_option("-o,--output", g.output, "Write CSV to this file instead of stdout");

  C6Options c6;
  auto* c6_cmd = app.add_subcommand("c6-table", "Normalized C6 weights between 3S1 F=3/2 pair states");
  c6_cmd->add_option("--theta", c6.theta, "Polar angle of the interatomic axis (rad)")->capture_default_str();
  c6_cmd->add_option("--phi", c6.phi, "Azimuthal angle of the interatomic axis (rad)")->capture_default_str();

  GateOptions gate;
  auto* gate_cmd = app.add_subcommand("rydberg-gate", "Two-pulse CCCZ/CZ gate simulation and fidelity");
  gate_cmd->add_option("--protocol", gate.protocol, "cccz or cz")->capture_default_str();
  gate_cmd->add_option("--omega-mhz,--omega", gate.omega_mhz, "Rydberg Rabi frequency / 2pi (MHz)")->capture_default_str();
  gate_cmd->add_option("--delta-ratio", gate.delta_ratio, "Detuning / Rabi frequency")->capture_default_str();
  gate_cmd->add_option("--v-ghz,--shift", gate.v_ghz, "Pair shift / 2pi (GHz)")->capture_default_str();
  gate_cmd->add_option("--eta", gate.eta, "Weight of the (+-3/2, -+3/2) pair shift")->capture_default_str();
  gate_cmd->add_option("--b-gauss,--b-field", gate.b_gauss, "Magnetic field (G)")->capture_default_str();
  gate_cmd->add_option("--parasitic-ratio", gate.parasitic_ratio, "Parasitic tone amplitude ratio")
      ->capture_default_str();
  gate_cmd->add_option("--tau-omega", gate.tau_omega, "Pulse area tau*Omega (0 calibrates)")->capture_default_str();
  gate_cmd->add_option("--xi", gate.xi, "Phase jump of the second pulse (rad)")->capture_default_str();

  SweepOptions sweep;
  auto* sweep_cmd = app.add_subcommand("rydberg-sweep", "CZ infidelity versus eta and pair shift");
  sweep_cmd->add_option("--etas", sweep.etas, "eta grid")->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);
  sweep_cmd->add_option("--v-ghz,--shift", sweep.v_ghz, "Pair shift grid / 2pi (GHz)")->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);
  sweep_cmd->add_option("--omega-mhz,--omega", sweep.omega_mhz, "Rydberg Rabi frequency / 2pi (MHz)")->capture_default_str();
  sweep_cmd->add_option("--delta-ratio", sweep.delta_ratio, "Detuning / Rabi frequency")->capture_default_str();
  sweep_cmd->add_option("--b-gauss,--b-field", sweep.b_gauss, "Magnetic field (G)")->capture_default_str();

  DistillOptions dist;
  auto* dist_cmd = app.add_subcommand("distill", "Two-copy entanglement distillation within two ququarts");
  dist_cmd->add_option("--error-model,--error", dist.error, "Entanglement error model (paulix:p, depol:p, depol:p@2)")
      ->capture_default_str();
  dist_cmd->add_option("--sweep", dist.sweep, "entanglement or gate")->capture_default_str();
  dist_cmd->add_option("--grid", dist.grid, "Swept parameter grid (list or lo:hi:n)")->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);
  dist_cmd->add_option("--gate-infid,--gate-infidelity", dist.gate_infidelity, "Intra-ququart gate infidelity")
      ->capture_default_str();
  dist_cmd->add_option("--meas-err,--measurement-error", dist.measurement_error, "Readout flip probability")
      ->capture_default_str();

  QecOptions qec;
  auto* qec_cmd = app.add_subcommand("qec-threshold", "Flag-QEC logical error rates, normal vs ququart flags");
  qec_cmd->add_option("--code", qec.code, "513 or 713")->capture_default_str();
  qec_cmd->add_option("--p-grid,--grid", qec.grid, "Physical error rate grid")->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);
  qec_cmd->add_option("--trials", qec.trials, "Trials per point")->capture_default_str();
  qec_cmd->add_option("--mode,--modes", qec.modes, "Comma-separated flag modes")->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);

  Qec422Options q422;
  auto* q422_cmd = app.add_subcommand("qec-422", "Four-qubit code preparation and single-Pauli detection");
  q422_cmd->add_option("--errors", q422.errors, "Data errors: single (all one-qubit Paulis) or a list such as XIII,IZZI")
      ->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);

  AkltOptions aklt;
  auto* aklt_cmd = app.add_subcommand("aklt", "Measurement-based AKLT preparation");
  aklt_cmd->add_option("--length", aklt.length, "Number of ququarts")->capture_default_str();
  aklt_cmd->add_option("--trajectories", aklt.trajectories, "Independent preparations")->capture_default_str();

  MiptOptions mipt;
  auto* mipt_cmd = app.add_subcommand("mipt", "Adaptive circuit with resets to |00>: active density");
  mipt_cmd->add_option("--length", mipt.length, "Number of ququarts")->capture_default_str();
  mipt_cmd->add_option("--p", mipt.p, "Reset probability grid")->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);
  mipt_cmd->add_option("--cycles", mipt.cycles, "Cycles per trajectory")->capture_default_str();
  mipt_cmd->add_option("--trajectories", mipt.trajectories, "Trajectories per point")->capture_default_str();

  ReadoutImperfections ro;
  auto* ro_cmd = app.add_subcommand("readout-probs", "Two-round ququart readout confusion matrix");
  ro_cmd->add_option("--fm", ro.fm, "Single-shot readout fidelity")->capture_default_str();
  ro_cmd->add_option("--fpi", ro.fpi, "Intra-ququart SWAP fidelity")->capture_default_str();
  ro_cmd->add_option("--pf", ro.pf, "Nuclear-spin flip probability of a bright atom")->capture_default_str();
  ro_cmd->add_option("--pl", ro.pl, "Atom loss probability after the first round")->capture_default_str();

  PulseOptions pulse;
  auto* pulse_cmd = app.add_subcommand("pulse-map", "Motion-preserving clock pulse infidelity and heating maps");
  pulse_cmd->add_option("--gate", pulse.gate, "pi or hadamard")->capture_default_str();
  pulse_cmd->add_option("--omega-grid", pulse.omega_grid, "Rabi frequency / 2pi grid (kHz)")->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);
  pulse_cmd->add_option("--tau-grid", pulse.tau_grid, "Pulse duration grid (us)")->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);
  pulse_cmd->add_option("--delta-khz", pulse.delta_khz, "Detuning / 2pi (kHz)")->capture_default_str();
  pulse_cmd->add_option("--trap-khz", pulse.trap_khz, "Trap frequency / 2pi (kHz)")->capture_default_str();
  pulse_cmd->add_option("--eta-ld", pulse.eta_ld, "Lamb-Dicke parameter")->capture_default_str();
  pulse_cmd->add_option("--n-max", pulse.n_max, "Oscillator levels kept")->capture_default_str();

  LightShiftOptions ls;
  auto* ls_cmd = app.add_subcommand("light-shift", "Detuning equalizing nuclear splittings, scattering estimate");
  ls_cmd->add_option("--intensity", ls.intensity, "I / I_sat")->capture_default_str();
  ls_cmd->add_option("--gamma-khz", ls.gamma_khz, "Linewidth / 2pi (kHz)")->capture_default_str();
  ls_cmd->add_option("--tau-us", ls.tau_us, "Exposure (us)")->capture_default_str();
  ls_cmd->add_option("--target-khz", ls.target_khz, "Required light shift / 2pi (kHz)")->capture_default_str();

  RamanOptions raman;
  auto* raman_cmd = app.add_subcommand("raman-mismatch", "n-qubit R_X(pi/2) fidelity under Raman mismatch");
  raman_cmd->add_option("--domega-grid", raman.domega_grid, "Relative Rabi offset grid")->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);
  raman_cmd->add_option("--dphi-grid", raman.dphi_grid, "Phase offset grid (rad)")->capture_default_str()->multi_option_policy(CLI::MultiOptionPolicy::Join);

  QstOptions qst;
  auto* qst_cmd = app.add_subcommand("qst", "Ququart state tomography (Pauli or ladder settings)");
  qst_cmd->add_option("--method", qst.method, "pauli or ladder")->capture_default_str();
  qst_cmd->add_option("--state", qst.state, "zero, bell, random, or a file of four re,im lines")
      ->capture_default_str();
  qst_cmd->add_option("--shots", qst.shots, "Shots per setting (0: exact probabilities)")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kUsageExit;
  }

  try {
    std::ofstream file;
    if (!g.output.empty()) {
      file.open(g.output);
      if (!file) throw std::runtime_error("cannot open output file: " + g.output);
    }
    std::ostream& out = g.output.empty() ? std::cout : file;
    if (g.threads == 0) throw std::invalid_argument("--threads must be positive");
    if (*c6_cmd) run_c6(c6, g, out);
    if (*gate_cmd) run_gate(gate, g, out);
    if (*sweep_cmd) run_sweep(sweep, g, out);
    if (*dist_cmd) run_distill(dist, g, out);
    if (*qec_cmd) run_qec(qec, g, out);
    if (*q422_cmd) run_qec422(q422, g, out);
    if (*aklt_cmd) run_aklt(aklt, g, out);
    if (*mipt_cmd) run_mipt(mipt, g, out);
    if (*ro_cmd) {
      ro.validate();
      run_readout(ro, g, out);
    }
    if (*pulse_cmd) run_pulse_map(pulse, g, out);
    if (*ls_cmd) run_light_shift(ls, g, out);
    if (*raman_cmd) run_raman(raman, g, out);
    if (*qst_cmd) run_qst(qst, g, out);
    if (!g.output.empty()) std::cout << "wrote " << g.output << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
