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

#include "ququart/rydberg_sim.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ququart/optimize.hpp"
#include "ququart/ququart_gates.hpp"

namespace ququart {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double two_mf_of_rydberg(int level) { return 2.0 * (level - 4) - 3.0; }

}  // namespace

void AtomLevelScheme::validate() const {
  if (!std::isfinite(b_field_gauss) || !std::isfinite(rydberg_g) || !std::isfinite(mu_b_hz_per_gauss)) {
    throw std::invalid_argument("level scheme parameters must be finite");
  }
}

double AtomLevelScheme::rydberg_step() const { return kTwoPi * rydberg_g * mu_b_hz_per_gauss * b_field_gauss; }

std::array<double, kAtomLevels> AtomLevelScheme::zeeman() const {
  validate();
  std::array<double, kAtomLevels> z{};
  const double ground = kTwoPi * ground_g_hz_per_gauss * b_field_gauss;
  const double clock = kTwoPi * clock_g_hz_per_gauss * b_field_gauss;
  z[0] = -0.5 * ground;
  z[1] = 0.5 * ground;
  z[2] = -0.5 * clock;
  z[3] = 0.5 * clock;
  for (int r = 4; r < 8; ++r) z[r] = 0.5 * two_mf_of_rydberg(r) * rydberg_step();
  return z;
}

GateProtocol parse_protocol(const std::string& name) {
  if (name == "cccz") return GateProtocol::kCccz;
  if (name == "cz") return GateProtocol::kCz;
  throw std::invalid_argument("unknown protocol: " + name);
}

std::string protocol_name(GateProtocol protocol) { return protocol == GateProtocol::kCccz ? "cccz" : "cz"; }

void RydbergDrive::validate() const {
  for (const auto& t : tones) {
    if (t.clock != kClockMinus && t.clock != kClockPlus) {
      throw std::invalid_argument("Rydberg tone must start from a clock level");
    }
    if (!is_rydberg_level(t.rydberg)) {
      throw std::invalid_argument("Rydberg tone must end on a Rydberg level");
    }
    if (!(t.omega >= 0.0)) {
      throw std::invalid_argument("Rabi frequency must be non-negative");
    }
  }
}

RydbergDrive RydbergDrive::with_phase(double phase) const {
  RydbergDrive d = *this;
  for (auto& t : d.tones) t.phase += phase;
  return d;
}

RydbergDrive RydbergDrive::for_protocol(GateProtocol protocol, double omega, double delta,
                                        const AtomLevelScheme& scheme, double parasitic_ratio) {
  const auto z = scheme.zeeman();
  RydbergDrive d;
  auto add = [&](int clock, int main, int parasitic, Polarization main_pol, Polarization par_pol) {
    d.tones.push_back({clock, main, omega, delta, 0.0, main_pol});
    if (parasitic_ratio != 0.0) {
      d.tones.push_back({clock, parasitic, parasitic_ratio * omega, delta + z[main] - z[parasitic], 0.0, par_pol});
    }
  };
  add(kClockPlus, rydberg_level(3), rydberg_level(-1), Polarization::kSigmaPlus, Polarization::kSigmaMinus);
  if (protocol == GateProtocol::kCz) {
    add(kClockMinus, rydberg_level(-3), rydberg_level(1), Polarization::kSigmaMinus, Polarization::kSigmaPlus);
  }
  d.validate();
  return d;
}

InteractionModel InteractionModel::from_eta(double v_overall, double eta) {
  InteractionModel m;
  m.v_overall = v_overall;
  m.eta = eta;
  m.weights(0, 3) = eta;
  m.weights(3, 0) = eta;
  m.validate();
  return m;
}

void InteractionModel::validate() const {
  if (!std::isfinite(v_overall) || !(eta >= -1.0 && eta <= 1.0) || !weights.allFinite()) {
    throw std::invalid_argument("interaction model needs finite V and eta in [-1, 1]");
  }
}

double InteractionModel::pair_shift(int rydberg_a, int rydberg_b) const {
  return v_overall * weights(rydberg_a - 4, rydberg_b - 4);
}

void LevinePulse::validate() const {
  if (!(omega >= 0.0) || !(tau >= 0.0) || !std::isfinite(delta) || !std::isfinite(xi)) {
    throw std::invalid_argument("pulse needs Omega >= 0, tau >= 0 and finite Delta, xi");
  }
}

Matrix build_two_atom_hamiltonian(const AtomLevelScheme& scheme, const RydbergDrive& drive,
                                  const InteractionModel& interaction, double t) {
  drive.validate();
  interaction.validate();
  const auto z = scheme.zeeman();
  std::array<double, kAtomLevels> frame{};
  std::array<bool, kAtomLevels> framed{};
  std::vector<double> freq;
  for (const auto& tone : drive.tones) {
    double f = z[tone.rydberg] - z[tone.clock] + tone.delta;
    freq.push_back(f);
    if (!framed[tone.rydberg]) {
      frame[tone.rydberg] = frame[tone.clock] + f;
      framed[tone.rydberg] = true;
    }
  }
  Matrix h = Matrix::Zero(kAtomLevels, kAtomLevels);
  for (int l = 0; l < kAtomLevels; ++l) h(l, l) = z[l] - frame[l];
  for (size_t i = 0; i < drive.tones.size(); ++i) {
    const auto& tone = drive.tones[i];
    double mismatch = freq[i] - (frame[tone.rydberg] - frame[tone.clock]);
    Complex c = 0.5 * tone.omega * std::exp(kI * (tone.phase - mismatch * t));
    h(tone.rydberg, tone.clock) += c;
    h(tone.clock, tone.rydberg) += std::conj(c);
  }
  const Matrix id = Matrix::Identity(kAtomLevels, kAtomLevels);
  Matrix h2 = kron(h, id) + kron(id, h);
  for (int a = 4; a < 8; ++a) {
    for (int b = 4; b < 8; ++b) h2(kAtomLevels * a + b, kAtomLevels * a + b) += interaction.pair_shift(a, b);
  }
  return h2;
}

Vector evolve(const HamiltonianFn& h, const Vector& psi0, double t0, double t1, double rel_tol, double abs_tol) {
  if (std::abs(psi0.norm() - 1.0) > 1e-8) {
    throw std::invalid_argument("evolve: initial state must be normalized");
  }
  using State = std::vector<Complex>;
  namespace odeint = boost::numeric::odeint;
  State x(psi0.data(), psi0.data() + psi0.size());
  auto rhs = [&](const State& in, State& out, double t) {
    Eigen::Map<const Vector> v(in.data(), static_cast<Eigen::Index>(in.size()));
    Vector d = -kI * (h(t) * v);
    out.assign(d.data(), d.data() + d.size());
  };
  if (t1 != t0) {
    auto stepper = odeint::make_controlled(abs_tol, rel_tol, odeint::runge_kutta_dopri5<State>());
    const size_t max_steps = 10'000'000;
    size_t steps = odeint::integrate_adaptive(stepper, rhs, x, t0, t1, (t1 - t0) / 1000.0);
    if (steps >= max_steps) {
      throw std::runtime_error("evolve: step budget exhausted");
    }
  }
  Vector out = Eigen::Map<Vector>(x.data(), static_cast<Eigen::Index>(x.size()));
  if (!out.allFinite()) {
    throw std::runtime_error("evolve: integrator failed to meet tolerance");
  }
  return out;
}

Matrix piecewise_propagator(const std::vector<Segment>& segments) {
  if (segments.empty()) {
    throw std::invalid_argument("piecewise_propagator: no segments");
  }
  Matrix u = Matrix::Identity(segments.front().h.rows(), segments.front().h.cols());
  for (const auto& s : segments) u = expm_hermitian(s.h, s.duration) * u;
  return u;
}

GateResult simulate_gate(GateProtocol protocol, const LevinePulse& pulse, const InteractionModel& interaction,
                         const AtomLevelScheme& scheme, double parasitic_ratio, double leakage_threshold) {
  pulse.validate();
  RydbergDrive drive = RydbergDrive::for_protocol(protocol, pulse.omega, pulse.delta, scheme, parasitic_ratio);
  Matrix u = piecewise_propagator({{build_two_atom_hamiltonian(scheme, drive, interaction, 0.0), pulse.tau},
                                   {build_two_atom_hamiltonian(scheme, drive.with_phase(pulse.xi), interaction, 0.0),
                                    pulse.tau}});
  GateResult r{protocol, Matrix::Zero(16, 16), u, {}, {}, false};
  std::vector<int> idx;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) idx.push_back(kAtomLevels * a + b);
  }
  for (int i = 0; i < 16; ++i) {
    for (int j = 0; j < 16; ++j) r.realized(i, j) = u(idx[i], idx[j]);
  }
  for (int j = 0; j < 16; ++j) {
    r.phases.push_back(std::arg(r.realized(j, j)));
    double leak = 1.0 - r.realized.col(j).squaredNorm();
    r.leakage.push_back(leak);
    r.leakage_flagged = r.leakage_flagged || leak > leakage_threshold;
  }
  return r;
}

GateFidelity gate_fidelity(const Matrix& realized, GateProtocol protocol) {
  if (realized.rows() != 16 || realized.cols() != 16) {
    throw std::invalid_argument("gate_fidelity expects a 16x16 matrix");
  }
  auto f = [&](double phi) {
    Unitary g = protocol == GateProtocol::kCccz ? ideal_cccz(phi) : ideal_cz_o(phi);
    Complex s = 0.0;
    for (int k = 0; k < 16; ++k) s += std::conj(g.matrix()(k, k)) * realized(k, k);
    return std::abs(s) / 16.0;
  };
  auto best = maximize_scan(f, 0.0, kTwoPi, 721);
  double phi = std::remainder(best.x, kTwoPi);
  if (phi < 0.0) phi += kTwoPi;
  return {best.f, phi};
}

Calibration calibrate_pulse(GateProtocol protocol, double omega, double delta_ratio,
                            const InteractionModel& interaction, const AtomLevelScheme& scheme,
                            double parasitic_ratio, double tau_omega_guess, double xi_guess) {
  if (!(omega > 0.0)) {
    throw std::invalid_argument("calibrate_pulse: Omega must be positive");
  }
  auto pulse_of = [&](const std::vector<double>& x) {
    return LevinePulse{omega, delta_ratio * omega, x[0] / omega, x[1]};
  };
  auto cost = [&](const std::vector<double>& x) {
    if (x[0] <= 0.0) return 1.0;
    auto g = simulate_gate(protocol, pulse_of(x), interaction, scheme, parasitic_ratio);
    return 1.0 - gate_fidelity(g.realized, protocol).fidelity;
  };
  auto res = nelder_mead(cost, {tau_omega_guess, xi_guess}, {0.05, 0.05}, 1e-13, 1e-8, 2000);
  LevinePulse p = pulse_of(res.x);
  auto g = simulate_gate(protocol, p, interaction, scheme, parasitic_ratio);
  auto f = gate_fidelity(g.realized, protocol);
  return {p, f.fidelity, f.phi};
}

std::vector<EtaSweepPoint> sweep_eta(const std::vector<double>& etas, const std::vector<double>& v_grid,
                                     double omega, double delta_ratio, const AtomLevelScheme& scheme) {
  std::vector<EtaSweepPoint> out;
  for (double v : v_grid) {
    auto cal = calibrate_pulse(GateProtocol::kCz, omega, delta_ratio, InteractionModel::from_eta(v, 1.0), scheme);
    for (double eta : etas) {
      auto g = simulate_gate(GateProtocol::kCz, cal.pulse, InteractionModel::from_eta(v, eta), scheme);
      out.push_back({v, eta, 1.0 - gate_fidelity(g.realized, GateProtocol::kCz).fidelity});
    }
  }
  return out;
}

double spacing_for_shift(double v_overall, double c6_thz_um6) {
  if (!(v_overall > 0.0) || !(c6_thz_um6 > 0.0)) {
    throw std::invalid_argument("spacing_for_shift needs positive V and C6");
  }
  return std::pow(c6_thz_um6 * 1e12 / (v_overall / kTwoPi), 1.0 / 6.0);
}

}  // namespace ququart
