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

#include "ququart/pulses.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <numbers>
#include <stdexcept>

#include "ququart/optimize.hpp"

namespace ququart {

namespace {

constexpr double kLeakageLimit = 1e-6;

struct Case {
  Vector input;
  Vector target;
};

std::vector<Case> gate_cases(PulseGate gate) {
  const double s = 1.0 / std::sqrt(2.0);
  Vector zero = Vector::Unit(2, 0);
  if (gate == PulseGate::kPi) return {{zero, Vector::Unit(2, 1)}};
  Vector plus(2), plus_i(2), minus_i(2);
  plus << s, s;
  plus_i << s, Complex(0.0, s);
  minus_i << s, Complex(0.0, -s);
  return {{zero, plus}, {plus_i, minus_i}};
}

Matrix annihilation(size_t n) {
  Matrix a = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
  for (size_t k = 1; k < n; ++k) a(static_cast<Eigen::Index>(k - 1), static_cast<Eigen::Index>(k)) = std::sqrt(double(k));
  return a;
}

std::vector<double> thermal_weights(const TrapParams& trap) {
  std::vector<double> w(trap.n_max, 0.0);
  if (trap.nbar_initial <= 0.0) {
    w[0] = 1.0;
    return w;
  }
  const double r = trap.nbar_initial / (1.0 + trap.nbar_initial);
  double total = 0.0;
  for (size_t n = 0; n < trap.n_max; ++n) {
    w[n] = std::pow(r, double(n)) / (1.0 + trap.nbar_initial);
    total += w[n];
  }
  for (auto& x : w) x /= total;
  return w;
}

}  // namespace

void TrapParams::validate() const {
  if (!(omega > 0.0)) throw std::invalid_argument("trap frequency must be positive");
  if (!(eta_ld >= 0.0 && eta_ld < 1.0)) throw std::invalid_argument("Lamb-Dicke parameter must be in [0, 1)");
  if (n_max < 10) throw std::invalid_argument("oscillator truncation must keep at least 10 levels");
  if (!(nbar_initial >= 0.0)) throw std::invalid_argument("initial occupation must be nonnegative");
}

void ClockDrive::validate() const {
  if (!(omega >= 0.0)) throw std::invalid_argument("Rabi frequency must be nonnegative");
  if (!(tau >= 0.0)) throw std::invalid_argument("pulse duration must be nonnegative");
}

PulseGate parse_pulse_gate(const std::string& name) {
  if (name == "pi") return PulseGate::kPi;
  if (name == "hadamard") return PulseGate::kHadamard;
  throw std::invalid_argument("unknown pulse gate: " + name);
}

Matrix spin_motion_hamiltonian(const TrapParams& trap, const ClockDrive& drive) {
  trap.validate();
  drive.validate();
  const auto n = static_cast<Eigen::Index>(trap.n_max);
  Matrix a = annihilation(trap.n_max);
  Matrix x = a + a.adjoint();
  Matrix disp = expm_hermitian(x, -trap.eta_ld);
  Matrix h = Matrix::Zero(2 * n, 2 * n);
  Matrix num = a.adjoint() * a;
  h.topLeftCorner(n, n) = trap.omega * num + 0.5 * drive.delta * Matrix::Identity(n, n);
  h.bottomRightCorner(n, n) = trap.omega * num - 0.5 * drive.delta * Matrix::Identity(n, n);
  h.bottomLeftCorner(n, n) = 0.5 * drive.omega * disp;
  h.topRightCorner(n, n) = 0.5 * drive.omega * disp.adjoint();
  return h;
}

PulseResult simulate_pulse(PulseGate gate, const TrapParams& trap, const ClockDrive& drive,
                           size_t trajectory_points) {
  const Matrix h = spin_motion_hamiltonian(trap, drive);
  const auto n = static_cast<Eigen::Index>(trap.n_max);
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  auto propagate = [&](const Vector& psi, double t) {
    Vector phases = (-kI * es.eigenvalues().cast<Complex>() * t).array().exp();
    return Vector(es.eigenvectors() * phases.asDiagonal() * (es.eigenvectors().adjoint() * psi));
  };
  const Matrix a = annihilation(trap.n_max);
  const std::vector<double> weights = thermal_weights(trap);
  const auto cases = gate_cases(gate);

  PulseResult r;
  double fid = 0.0;
  for (const auto& c : cases) {
    Matrix spin = Matrix::Zero(2, 2);
    double n0 = 0.0;
    double n1 = 0.0;
    for (size_t m = 0; m < trap.n_max; ++m) {
      if (weights[m] < 1e-12) continue;
      Vector psi = kron(c.input, Vector::Unit(n, static_cast<Eigen::Index>(m))).col(0);
      Vector out = propagate(psi, drive.tau);
      Eigen::Map<const Matrix> amp(out.data(), n, 2);  // column = spin
      spin += weights[m] * (amp.transpose() * amp.conjugate());
      for (Eigen::Index k = 0; k < n; ++k) {
        double pop = std::norm(amp(k, 0)) + std::norm(amp(k, 1));
        n1 += weights[m] * pop * double(k);
      }
      n0 += weights[m] * double(m);
      r.leakage = std::max(r.leakage, std::norm(amp(n - 1, 0)) + std::norm(amp(n - 1, 1)));
    }
    fid += (c.target.adjoint() * spin * c.target)(0, 0).real();
    r.delta_nbar += n1 - n0;
    r.spin_outputs.push_back(spin);
  }
  if (r.leakage > kLeakageLimit) {
    throw std::runtime_error("oscillator truncation leakage exceeds 1e-6; increase n_max");
  }
  r.infidelity = 1.0 - fid / double(cases.size());
  r.delta_nbar /= double(cases.size());

  if (trajectory_points > 0) {
    const Matrix xop = kron(pauli::I(), Matrix(a + a.adjoint())) / std::sqrt(2.0);
    const Matrix pop = kron(pauli::I(), Matrix(kI * (a.adjoint() - a))) / std::sqrt(2.0);
    Vector psi0 = kron(cases.front().input, Vector::Unit(n, 0)).col(0);
    for (size_t k = 0; k < trajectory_points; ++k) {
      double t = trajectory_points == 1 ? drive.tau : drive.tau * double(k) / double(trajectory_points - 1);
      Vector psi = propagate(psi0, t);
      r.times.push_back(t);
      r.x.push_back(psi.dot(xop * psi).real());
      r.p.push_back(psi.dot(pop * psi).real());
    }
  }
  return r;
}

PulseResult simulate_clock_pulse(const TrapParams& trap, const ClockDrive& drive, size_t trajectory_points) {
  return simulate_pulse(PulseGate::kPi, trap, drive, trajectory_points);
}

PulseResult simulate_hadamard(const TrapParams& trap, const ClockDrive& drive, size_t trajectory_points) {
  return simulate_pulse(PulseGate::kHadamard, trap, drive, trajectory_points);
}

Matrix two_level_propagator(const ClockDrive& drive) {
  drive.validate();
  const double w = std::hypot(drive.omega, drive.delta);
  if (w == 0.0) return Matrix::Identity(2, 2);
  const double nx = drive.omega / w;
  const double nz = drive.delta / w;
  return pauli::rotation(w * drive.tau, nx, 0.0, nz);
}

std::vector<PulseMapCell> parameter_map(PulseGate gate, const TrapParams& trap, const ClockDrive& base,
                                        const std::vector<double>& omegas, const std::vector<double>& taus,
                                        size_t threads) {
  std::vector<PulseMapCell> cells;
  for (double om : omegas) {
    for (double t : taus) cells.push_back({om, t, 0.0, 0.0});
  }
  threads = std::max<size_t>(1, std::min(threads, cells.size()));
  std::vector<std::future<void>> jobs;
  for (size_t w = 0; w < threads; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (size_t i = w; i < cells.size(); i += threads) {
        ClockDrive d{cells[i].omega, base.delta, cells[i].tau};
        PulseResult r = simulate_pulse(gate, trap, d);
        cells[i].infidelity = r.infidelity;
        cells[i].delta_nbar = r.delta_nbar;
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return cells;
}

ClockDrive find_sweet_spot(PulseGate gate, const TrapParams& trap, const ClockDrive& guess) {
  const double fs = kTwoPi * 1e3;
  const double ts = 1e-6;
  auto unpack = [&](const std::vector<double>& v) {
    if (gate == PulseGate::kPi) return ClockDrive{v[0] * fs, guess.delta, v[1] * ts};
    return ClockDrive{v[0] * fs, v[2] * fs, v[1] * ts};
  };
  auto objective = [&](const std::vector<double>& v) {
    ClockDrive d = unpack(v);
    if (d.omega < 0.0 || d.tau < 0.0) return 1.0;
    return simulate_pulse(gate, trap, d).infidelity;
  };
  std::vector<double> x0 = {guess.omega / fs, guess.tau / ts};
  std::vector<double> step = {1.0, 0.2};
  if (gate == PulseGate::kHadamard) {
    x0.push_back(guess.delta / fs);
    step.push_back(1.0);
  }
  return unpack(nelder_mead(objective, x0, step, 1e-12, 1e-7, 2000).x);
}

void ProbeParams::validate() const {
  if (!(i_over_isat >= 0.0 && gamma > 0.0 && tau >= 0.0 && branching >= 0.0)) {
    throw std::invalid_argument("probe parameters must be nonnegative with positive linewidth");
  }
}

double light_shift(const ProbeParams& probe) {
  probe.validate();
  const double rabi2 = probe.saturation() * probe.gamma * probe.gamma / 2.0;
  return rabi2 / 4.0 * probe.delta / (probe.delta * probe.delta + probe.gamma * probe.gamma / 4.0);
}

double scattering_rate(const ProbeParams& probe) {
  probe.validate();
  const double s = probe.saturation();
  const double g = probe.gamma;
  return g / 2.0 * s / (1.0 + s + 4.0 * probe.delta * probe.delta / (g * g));
}

double scattering_probability(const ProbeParams& probe) { return scattering_rate(probe) * probe.tau; }

double equalize_splittings(const ProbeParams& probe, double target_shift) {
  probe.validate();
  if (!(target_shift > 0.0)) throw std::invalid_argument("target shift must be positive");
  const double q = probe.saturation() * probe.gamma * probe.gamma / 8.0;  // Omega^2 / 4
  const double disc = q * q - target_shift * target_shift * probe.gamma * probe.gamma;
  if (q == 0.0 || disc < 0.0) {
    throw std::invalid_argument("probe intensity too low to reach the target light shift");
  }
  return (q + std::sqrt(disc)) / (2.0 * target_shift);
}

namespace {

Matrix offset_rotation(double d_omega_rel, double d_phi) {
  return pauli::rotation(0.5 * std::numbers::pi * (1.0 + d_omega_rel), std::cos(d_phi), std::sin(d_phi), 0.0);
}

}  // namespace

double raman_mismatch_fidelity(double d_omega_rel, double d_phi) {
  const Matrix ideal = pauli::rotation(0.5 * std::numbers::pi, 1.0, 0.0, 0.0);
  Matrix u = Matrix::Zero(4, 4);
  u.topLeftCorner(2, 2) = offset_rotation(d_omega_rel, d_phi);
  u.bottomRightCorner(2, 2) = ideal;
  return std::norm((kron(pauli::I(), ideal).adjoint() * u).trace()) / 16.0;
}

double single_qubit_rotation_fidelity(double d_omega_rel, double d_phi) {
  const Matrix ideal = pauli::rotation(0.5 * std::numbers::pi, 1.0, 0.0, 0.0);
  return std::norm((ideal.adjoint() * offset_rotation(d_omega_rel, d_phi)).trace()) / 4.0;
}

}  // namespace ququart
