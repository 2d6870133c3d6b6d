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

#ifndef QUQUART_QUQUART_GATES_HPP
#define QUQUART_QUQUART_GATES_HPP

#include <array>
#include <vector>

#include "ququart/qcore.hpp"

namespace ququart {

// Level j of a ququart is the two-qubit state |o n> with o = j / 2 (clock
// sector) and n = j % 2 (nuclear sector).
inline constexpr int o_bit(int level) { return level / 2; }
inline constexpr int n_bit(int level) { return level % 2; }
inline constexpr int level_of(int o, int n) { return 2 * o + n; }

using Axis = std::array<double, 3>;

// How the swapped block of a two-level pi pulse is phased. kPulse keeps the
// -i of a resonant pi pulse; kCorrected is the plain permutation.
enum class PhaseConvention { kPulse, kCorrected };

Unitary o_rotation(double theta, const Axis& axis);
Unitary n_rotation(double theta, const Axis& axis);

// |01> <-> |10>.
Unitary intra_swap(PhaseConvention convention = PhaseConvention::kCorrected);
// |10> <-> |11> (control o, target n).
Unitary intra_cnot(PhaseConvention convention = PhaseConvention::kCorrected);

// Diagonal two-ququart gates (16x16, index 4 * j1 + j2). The doubly excited
// states pick up 2 phi - pi.
Unitary ideal_cccz(double phi);
Unitary ideal_cz_o(double phi);

// Textbook CNOT between the o-qubits of two ququarts (control first).
Unitary inter_cnot_o();

// diag(exp(i phases[k])): compensating light-shift phases kept as explicit gates.
Unitary diagonal_phase(const std::array<double, 4>& phases);

struct DriveTone {
  int j = 0;
  int k = 1;
  double omega0 = 0.0;  // rad/s
  double q = 0.0;       // drive angular frequency, rad/s
  double phi = 0.0;     // rad
};

struct EffectiveHamiltonian {
  Matrix h;                           // 4x4 Hermitian, rad/s
  std::vector<size_t> off_resonant;   // indices of tones outside the resonance tolerance
};

// Rotating-frame Hamiltonian at time t: sum_k (w_k - v_k)|k><k| + sum over
// tones (Omega0 / 2)(e^{-i theta}|j><k| + h.c.), theta = (q - (v_k - v_j)) t + phi.
Matrix drive_hamiltonian_at(const std::vector<DriveTone>& tones, const std::array<double, 4>& bare,
                            const std::array<double, 4>& frame, double t);

// Time-independent form, valid when every tone is resonant with its frame
// splitting (|q - (v_k - v_j)| < 1e-6 Omega0). Off-resonant tones are still
// included (with theta = phi) and reported.
EffectiveHamiltonian drive_hamiltonian(const std::vector<DriveTone>& tones, const std::array<double, 4>& bare,
                                       const std::array<double, 4>& frame);

}  // namespace ququart

#endif  // QUQUART_QUQUART_GATES_HPP
