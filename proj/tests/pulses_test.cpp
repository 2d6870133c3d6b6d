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

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "ququart/pulses.hpp"

using namespace ququart;

namespace {

constexpr double kPi = std::numbers::pi;

TrapParams free_spin() {
  TrapParams t;
  t.eta_ld = 0.0;
  t.n_max = 10;
  return t;
}

// R(theta, phi) = cos(theta/2) I - i sin(theta/2) (cos phi X + sin phi Y).
Matrix rotation_oracle(double theta, double phi) {
  const Complex i1(0.0, 1.0);
  Matrix r(2, 2);
  const double c = std::cos(theta / 2);
  const double s = std::sin(theta / 2);
  r << c, -i1 * s * std::exp(-i1 * phi), -i1 * s * std::exp(i1 * phi), c;
  return r;
}

}  // namespace

TEST(pulses, hamiltonian_is_hermitian_with_expected_size) {
  TrapParams trap;
  ClockDrive drive{kTwoPi * 90e3, kTwoPi * 10e3, 10e-6};
  Matrix h = spin_motion_hamiltonian(trap, drive);
  EXPECT_EQ(h.rows(), static_cast<Eigen::Index>(2 * trap.n_max));
  EXPECT_TRUE(is_hermitian(h, 1e-6));
}

TEST(pulses, decoupled_spin_follows_rabi_formula) {
  for (double delta_khz : {0.0, 20.0, 60.0}) {
    for (double tau_us : {3.0, 5.55, 9.0}) {
      ClockDrive d{kTwoPi * 90e3, kTwoPi * delta_khz * 1e3, tau_us * 1e-6};
      Matrix u = two_level_propagator(d);
      const double w = std::hypot(d.omega, d.delta);
      const double p_flip = d.omega * d.omega / (w * w) * std::pow(std::sin(w * d.tau / 2), 2);
      EXPECT_NEAR(std::norm(u(1, 0)), p_flip, 1e-12);
      EXPECT_TRUE(is_unitary(u, 1e-12));
      auto r = simulate_clock_pulse(free_spin(), d);
      EXPECT_NEAR(r.infidelity, 1.0 - p_flip, 1e-9);
      EXPECT_NEAR(r.delta_nbar, 0.0, 1e-12);
    }
  }
}

TEST(pulses, resonant_pi_pulse_without_recoil_is_exact) {
  ClockDrive d{kTwoPi * 90e3, 0.0, kPi / (kTwoPi * 90e3)};
  auto r = simulate_clock_pulse(free_spin(), d);
  EXPECT_NEAR(r.infidelity, 0.0, 1e-12);
  ASSERT_EQ(r.spin_outputs.size(), 1u);
  EXPECT_NEAR(r.spin_outputs[0](1, 1).real(), 1.0, 1e-12);
}

TEST(pulses, hadamard_without_recoil_needs_equal_detuning) {
  // delta = Omega gives the Hadamard axis (X + Z)/sqrt(2); a pi rotation about it.
  const double omega = kTwoPi * 90e3;
  ClockDrive d{omega, omega, kPi / (std::sqrt(2.0) * omega)};
  auto r = simulate_hadamard(free_spin(), d);
  EXPECT_NEAR(r.infidelity, 0.0, 1e-10);
  EXPECT_EQ(r.spin_outputs.size(), 2u);
}

TEST(pulses, recoil_costs_fidelity_and_heats) {
  TrapParams trap;
  const double omega = 3.0 * trap.omega;
  ClockDrive d{omega, 0.0, kPi / omega};
  auto r = simulate_clock_pulse(trap, d, 50);
  EXPECT_GT(r.infidelity, 0.0);
  EXPECT_LT(r.infidelity, 5e-2);
  EXPECT_GT(r.delta_nbar, 0.0);
  EXPECT_LT(r.leakage, 1e-6);
  EXPECT_EQ(r.times.size(), 50u);
  EXPECT_EQ(r.x.size(), 50u);
  EXPECT_NEAR(r.x.front(), 0.0, 1e-12);
}

TEST(pulses, thermal_motion_lowers_fidelity) {
  TrapParams cold;
  TrapParams warm = cold;
  warm.nbar_initial = 0.3;
  const double omega = 3.0 * cold.omega;
  ClockDrive d{omega, 0.0, 3.0 * kPi / omega};
  EXPECT_GT(simulate_clock_pulse(warm, d).infidelity, simulate_clock_pulse(cold, d).infidelity);
}

TEST(pulses, truncation_leakage_is_rejected) {
  TrapParams trap;
  trap.n_max = 10;
  trap.nbar_initial = 3.0;
  ClockDrive d{kTwoPi * 90e3, 0.0, 30e-6};
  EXPECT_THROW(simulate_clock_pulse(trap, d), std::runtime_error);
  trap.n_max = 5;
  EXPECT_THROW(simulate_clock_pulse(trap, d), std::invalid_argument);
}

TEST(pulses, pi_sweet_spot_preserves_motion) {
  TrapParams trap;
  const double omega = 3.0 * trap.omega;
  ClockDrive guess{omega, 0.0, 3.0 * kPi / omega};
  ClockDrive best = find_sweet_spot(PulseGate::kPi, trap, guess);
  auto r = simulate_clock_pulse(trap, best);
  EXPECT_LE(r.infidelity, 2e-3);
  EXPECT_LE(std::abs(r.delta_nbar), 1e-2);
  EXPECT_NEAR(best.omega / trap.omega, 3.0, 0.5);
  EXPECT_NEAR(best.tau * best.omega / kPi, 3.0, 0.5);
}

TEST(pulses, parameter_map_is_thread_independent) {
  TrapParams trap;
  ClockDrive base{0.0, 0.0, 0.0};
  std::vector<double> omegas = {kTwoPi * 80e3, kTwoPi * 90e3};
  std::vector<double> taus = {15e-6, 17e-6};
  auto a = parameter_map(PulseGate::kPi, trap, base, omegas, taus, 1);
  auto b = parameter_map(PulseGate::kPi, trap, base, omegas, taus, 2);
  ASSERT_EQ(a.size(), 4u);
  for (size_t k = 0; k < a.size(); ++k) {
    EXPECT_DOUBLE_EQ(a[k].infidelity, b[k].infidelity);
    EXPECT_DOUBLE_EQ(a[k].delta_nbar, b[k].delta_nbar);
  }
}

TEST(pulses, parses_gate_names) {
  EXPECT_EQ(parse_pulse_gate("pi"), PulseGate::kPi);
  EXPECT_EQ(parse_pulse_gate("hadamard"), PulseGate::kHadamard);
  EXPECT_THROW(parse_pulse_gate("cnot"), std::invalid_argument);
}

TEST(pulses, light_shift_and_scattering_formulas) {
  ProbeParams probe;
  probe.i_over_isat = 2.8e3;
  probe.delta = kTwoPi * 200e6;
  const double g = probe.gamma;
  const double s = 2.8e3;
  const double d = probe.delta;
  EXPECT_NEAR(light_shift(probe), s * g * g / 8.0 * d / (d * d + g * g / 4.0), 1e-9);
  EXPECT_NEAR(scattering_rate(probe), g / 2.0 * s / (1.0 + s + 4.0 * d * d / (g * g)), 1e-9);
  EXPECT_NEAR(scattering_probability(probe), scattering_rate(probe) * 20e-6, 1e-15);
}

TEST(pulses, equalizing_detuning) {
  ProbeParams probe;
  probe.i_over_isat = 2.8e3;
  const double target = kTwoPi * 50e3;
  const double delta = equalize_splittings(probe, target);
  probe.delta = delta;
  EXPECT_NEAR(light_shift(probe) / target, 1.0, 1e-9);
  EXPECT_NEAR(delta / kTwoPi / 1e6, 231.87, 0.01);
  EXPECT_NEAR(delta / (kTwoPi * 240e6), 1.0, 0.2);
  const double p = scattering_probability(probe);
  EXPECT_NEAR(p, 4.93e-3, 1e-5);
  EXPECT_GT(p, 1e-4);
  EXPECT_LT(p, 1e-2);
  probe.i_over_isat = 1e-3;
  EXPECT_THROW(equalize_splittings(probe, target), std::invalid_argument);
}

TEST(pulses, raman_mismatch_matches_rotation_oracle) {
  for (double eps : {0.0, 0.05, 0.1}) {
    for (double dphi : {0.0, kPi / 40, kPi / 20}) {
      Matrix ideal = rotation_oracle(kPi / 2, 0.0);
      Matrix off = rotation_oracle(kPi / 2 * (1.0 + eps), dphi);
      Complex t = (ideal.adjoint() * off).trace();
      EXPECT_NEAR(single_qubit_rotation_fidelity(eps, dphi), std::norm(t) / 4.0, 1e-12);
      EXPECT_NEAR(raman_mismatch_fidelity(eps, dphi), std::norm(2.0 + t) / 16.0, 1e-12);
    }
  }
  EXPECT_NEAR(raman_mismatch_fidelity(0.0, 0.0), 1.0, 1e-14);
  EXPECT_GT(raman_mismatch_fidelity(0.1, kPi / 20), 0.99);
  EXPECT_NEAR(raman_mismatch_fidelity(0.1, kPi / 20), 0.9903, 1e-4);
}
