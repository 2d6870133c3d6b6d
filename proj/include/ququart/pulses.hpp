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

#ifndef QUQUART_PULSES_HPP
#define QUQUART_PULSES_HPP

#include <string>
#include <vector>

#include "ququart/qcore.hpp"

namespace ququart {

inline constexpr double kTwoPi = 6.283185307179586;

// 1D harmonic trap. Frequencies in rad/s.
struct TrapParams {
  double omega = kTwoPi * 30e3;
  double eta_ld = 0.34;
  size_t n_max = 40;         // oscillator levels kept
  double nbar_initial = 0.0;  // thermal occupation of the initial motional state

  void validate() const;
};

// Clock drive on the spin; rad/s and s.
struct ClockDrive {
  double omega = 0.0;
  double delta = 0.0;
  double tau = 0.0;

  void validate() const;
};

enum class PulseGate { kPi, kHadamard };
PulseGate parse_pulse_gate(const std::string& name);

struct PulseResult {
  double infidelity = 0.0;   // averaged over the gate's input states
  double delta_nbar = 0.0;   // n(T) - n(0), averaged over the input states
  double leakage = 0.0;      // population of the highest kept oscillator level
  std::vector<Matrix> spin_outputs;  // motion-traced spin states per input
  std::vector<double> times;         // trajectory of the first input state
  std::vector<double> x;             // <a + a^dag> / sqrt(2)
  std::vector<double> p;             // <i (a^dag - a)> / sqrt(2)
};

// H = w a^dag a + (Omega/2)(e^{i eta (a + a^dag)} |1><0| + h.c.) + (delta/2)(|0><0| - |1><1|).
// Spin index is the most significant; state index = spin * n_max + n.
Matrix spin_motion_hamiltonian(const TrapParams& trap, const ClockDrive& drive);

// Inputs and targets: pi gate {|0>} -> {|1>}; Hadamard {|0>, |+i>} -> {|+>, |-i>}.
// Throws when the final population of the top oscillator level exceeds 1e-6.
PulseResult simulate_pulse(PulseGate gate, const TrapParams& trap, const ClockDrive& drive,
                           size_t trajectory_points = 0);
PulseResult simulate_clock_pulse(const TrapParams& trap, const ClockDrive& drive, size_t trajectory_points = 0);
PulseResult simulate_hadamard(const TrapParams& trap, const ClockDrive& drive, size_t trajectory_points = 0);

// Spin-only propagator exp(-i H tau) of the decoupled two-level problem, closed form.
Matrix two_level_propagator(const ClockDrive& drive);

struct PulseMapCell {
  double omega = 0.0;
  double tau = 0.0;
  double infidelity = 0.0;
  double delta_nbar = 0.0;
};

// Surfaces over (Omega, tau) with the detuning taken from base (Hadamard keeps
// its detuning fixed while Omega varies).
std::vector<PulseMapCell> parameter_map(PulseGate gate, const TrapParams& trap, const ClockDrive& base,
                                        const std::vector<double>& omegas, const std::vector<double>& taus,
                                        size_t threads = 1);

// Local minimization of the infidelity from guess over (Omega, tau), and also
// delta for the Hadamard gate.
ClockDrive find_sweet_spot(PulseGate gate, const TrapParams& trap, const ClockDrive& guess);

// Two-level light shift and scattering of a probe near a narrow line.
// Saturation parameter s = I/I_sat * branching and Rabi frequency Omega^2 = s Gamma^2 / 2.
struct ProbeParams {
  double i_over_isat = 0.0;
  double delta = 0.0;               // rad/s
  double gamma = kTwoPi * 182e3;    // natural linewidth, rad/s
  double tau = 20e-6;               // s
  double branching = 1.0;

  void validate() const;
  double saturation() const { return i_over_isat * branching; }
};

// (Omega^2 / 4) Delta / (Delta^2 + Gamma^2 / 4), rad/s.
double light_shift(const ProbeParams& probe);
// (Gamma / 2) s / (1 + s + 4 Delta^2 / Gamma^2), 1/s.
double scattering_rate(const ProbeParams& probe);
double scattering_probability(const ProbeParams& probe);

// Far-detuned solution of light_shift = target_shift for the probe's intensity.
// Throws when the intensity cannot reach the target at any detuning.
double equalize_splittings(const ProbeParams& probe, double target_shift = kTwoPi * 50e3);

// |Tr(U_ideal^dag U)|^2 / d^2 for the n-qubit R_X(pi/2): the 3P0-sector
// rotation is ideal, the 1S0-sector rotation has Rabi offset d_omega_rel and
// phase offset d_phi.
double raman_mismatch_fidelity(double d_omega_rel, double d_phi);
// The same offsets applied to a single-qubit R_X(pi/2).
double single_qubit_rotation_fidelity(double d_omega_rel, double d_phi);

}  // namespace ququart

#endif  // QUQUART_PULSES_HPP
