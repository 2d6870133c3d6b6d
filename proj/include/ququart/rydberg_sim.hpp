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

#ifndef QUQUART_RYDBERG_SIM_HPP
#define QUQUART_RYDBERG_SIM_HPP

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "ququart/qcore.hpp"

namespace ququart {

// Per-atom level indices. The first four are the ququart levels 00, 01, 10, 11
// (ground mF=-1/2, +1/2, clock mF=-1/2, +1/2); 4..7 are the Rydberg F=3/2
// sublevels mF=-3/2..+3/2.
inline constexpr int kAtomLevels = 8;
inline constexpr int kClockMinus = 2;
inline constexpr int kClockPlus = 3;
inline constexpr int rydberg_level(int two_mf) { return 4 + (two_mf + 3) / 2; }
inline constexpr bool is_rydberg_level(int level) { return level >= 4 && level < 8; }

struct AtomLevelScheme {
  double b_field_gauss = 120.0;
  double mu_b_hz_per_gauss = 1.4e6;
  double rydberg_g = 4.0 / 3.0;
  double ground_g_hz_per_gauss = 0.0;  // nuclear Zeeman shift per unit mF
  double clock_g_hz_per_gauss = 0.0;

  void validate() const;
  // Zeeman shift of each level, rad/s.
  std::array<double, kAtomLevels> zeeman() const;
  // Rydberg shift per unit mF, rad/s.
  double rydberg_step() const;
};

enum class Polarization { kSigmaPlus, kSigmaMinus, kPi };

struct RydbergTone {
  int clock = kClockPlus;
  int rydberg = rydberg_level(3);
  double omega = 0.0;  // rad/s
  double delta = 0.0;  // detuning from this transition, rad/s
  double phase = 0.0;  // rad
  Polarization polarization = Polarization::kSigmaPlus;
};

enum class GateProtocol { kCccz, kCz };

GateProtocol parse_protocol(const std::string& name);
std::string protocol_name(GateProtocol protocol);

struct RydbergDrive {
  std::vector<RydbergTone> tones;

  void validate() const;
  RydbergDrive with_phase(double phase) const;

  // Main tones plus the parasitic couplings of a linearly polarized beam.
  // CCCZ: |11> -> mF=+3/2 and |11> -> mF=-1/2. CZ adds |10> -> mF=-3/2 and
  // |10> -> mF=+1/2. Parasitic tones share the laser frequency of their main
  // tone, so their detuning is offset by the Zeeman splitting.
  static RydbergDrive for_protocol(GateProtocol protocol, double omega, double delta, const AtomLevelScheme& scheme,
                                   double parasitic_ratio = 0.57735026918962573);
};

struct InteractionModel {
  double v_overall = 0.0;  // rad/s
  double eta = 1.0;
  // Pair shift weight on (mF1, mF2), rows/cols mF=-3/2..+3/2.
  Eigen::Matrix4d weights = Eigen::Matrix4d::Ones();

  // Weight eta on (+-3/2, -+3/2), 1 elsewhere.
  static InteractionModel from_eta(double v_overall, double eta);
  void validate() const;
  double pair_shift(int rydberg_a, int rydberg_b) const;
};

struct LevinePulse {
  double omega = 0.0;  // rad/s
  double delta = 0.0;  // rad/s
  double tau = 0.0;    // s, per pulse
  double xi = 0.0;     // rad, phase of the second pulse

  void validate() const;
};

// Two-atom rotating-frame Hamiltonian (64x64, index 8 * a + b). Each Rydberg
// level is referenced to the first tone that addresses it; other tones on the
// same level carry a time-dependent phase.
Matrix build_two_atom_hamiltonian(const AtomLevelScheme& scheme, const RydbergDrive& drive,
                                  const InteractionModel& interaction, double t);

using HamiltonianFn = std::function<Matrix(double)>;

// Adaptive Dormand-Prince integration of i d psi/dt = H(t) psi.
Vector evolve(const HamiltonianFn& h, const Vector& psi0, double t0, double t1, double rel_tol = 1e-10,
              double abs_tol = 1e-12);

struct Segment {
  Matrix h;
  double duration;
};
// Product of exact exponentials of piecewise-constant segments (first applied first).
Matrix piecewise_propagator(const std::vector<Segment>& segments);

struct GateResult {
  GateProtocol protocol;
  Matrix realized;             // 16x16 on the computational two-ququart subspace
  Matrix propagator;           // full 64x64
  std::vector<double> phases;  // arg of the diagonal, per input 4 * j1 + j2
  std::vector<double> leakage; // 1 - subspace population, per input
  bool leakage_flagged = false;
};

GateResult simulate_gate(GateProtocol protocol, const LevinePulse& pulse, const InteractionModel& interaction,
                         const AtomLevelScheme& scheme, double parasitic_ratio = 0.57735026918962573,
                         double leakage_threshold = 1e-2);

struct GateFidelity {
  double fidelity;
  double phi;
};

// max over phi of |tr(G(phi)^dagger realized)| / 16.
GateFidelity gate_fidelity(const Matrix& realized, GateProtocol protocol);

struct Calibration {
  LevinePulse pulse;
  double fidelity;
  double phi;
};

// Nelder-Mead over (tau * Omega, xi) at fixed Omega and Delta.
Calibration calibrate_pulse(GateProtocol protocol, double omega, double delta_ratio,
                            const InteractionModel& interaction, const AtomLevelScheme& scheme,
                            double parasitic_ratio = 0.57735026918962573, double tau_omega_guess = 4.293,
                            double xi_guess = 3.902);

struct EtaSweepPoint {
  double v_overall;
  double eta;
  double infidelity;
};

// CZ infidelity on the eta x V grid; the pulse is calibrated per V at eta = 1.
std::vector<EtaSweepPoint> sweep_eta(const std::vector<double>& etas, const std::vector<double>& v_grid,
                                     double omega, double delta_ratio, const AtomLevelScheme& scheme);

// Interatomic spacing for a given pair shift, r = (C6 / V)^(1/6).
double spacing_for_shift(double v_overall, double c6_thz_um6 = 5.0);

}  // namespace ququart

#endif  // QUQUART_RYDBERG_SIM_HPP
