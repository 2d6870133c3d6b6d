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

#include "ququart/ququart_gates.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ququart {

namespace {

Matrix axis_rotation(double theta, const Axis& axis) {
  return pauli::rotation(theta, axis[0], axis[1], axis[2]);
}

Unitary pi_exchange(int a, int b, PhaseConvention convention) {
  Matrix m = Matrix::Identity(4, 4);
  Complex amp = convention == PhaseConvention::kPulse ? -kI : Complex(1.0);
  m(a, a) = m(b, b) = 0.0;
  m(a, b) = amp;
  m(b, a) = amp;
  return Unitary(m);
}

}  // namespace

Unitary o_rotation(double theta, const Axis& axis) {
  return Unitary(kron(axis_rotation(theta, axis), pauli::I()));
}

Unitary n_rotation(double theta, const Axis& axis) {
  return Unitary(kron(pauli::I(), axis_rotation(theta, axis)));
}

Unitary intra_swap(PhaseConvention convention) { return pi_exchange(1, 2, convention); }

Unitary intra_cnot(PhaseConvention convention) { return pi_exchange(2, 3, convention); }

Unitary ideal_cccz(double phi) {
  Matrix m = Matrix::Identity(16, 16);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      int excited = (a == 3) + (b == 3);
      double ph = excited == 0 ? 0.0 : excited == 1 ? phi : 2 * phi - std::numbers::pi;
      m(4 * a + b, 4 * a + b) = std::exp(kI * ph);
    }
  }
  return Unitary(m);
}

Unitary ideal_cz_o(double phi) {
  Matrix m = Matrix::Identity(16, 16);
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) {
      int excited = o_bit(a) + o_bit(b);
      double ph = excited == 0 ? 0.0 : excited == 1 ? phi : 2 * phi - std::numbers::pi;
      m(4 * a + b, 4 * a + b) = std::exp(kI * ph);
    }
  }
  return Unitary(m);
}

Unitary inter_cnot_o() {
  Matrix h_target = kron({pauli::I(), pauli::I(), pauli::H(), pauli::I()});
  return Unitary(h_target * ideal_cz_o(0.0).matrix() * h_target);
}

Unitary diagonal_phase(const std::array<double, 4>& phases) {
  Matrix m = Matrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) m(k, k) = std::exp(kI * phases[k]);
  return Unitary(m);
}

Matrix drive_hamiltonian_at(const std::vector<DriveTone>& tones, const std::array<double, 4>& bare,
                            const std::array<double, 4>& frame, double t) {
  Matrix h = Matrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) h(k, k) = bare[k] - frame[k];
  for (const auto& tone : tones) {
    if (tone.j < 0 || tone.j > 3 || tone.k < 0 || tone.k > 3 || tone.j == tone.k) {
      throw std::invalid_argument("drive tone must couple two distinct ququart levels");
    }
    if (tone.omega0 < 0.0) {
      throw std::invalid_argument("drive amplitude must be non-negative");
    }
    double theta = (tone.q - (frame[tone.k] - frame[tone.j])) * t + tone.phi;
    Complex c = 0.5 * tone.omega0 * std::exp(-kI * theta);
    h(tone.j, tone.k) += c;
    h(tone.k, tone.j) += std::conj(c);
  }
  return h;
}

EffectiveHamiltonian drive_hamiltonian(const std::vector<DriveTone>& tones, const std::array<double, 4>& bare,
                                       const std::array<double, 4>& frame) {
  EffectiveHamiltonian out;
  for (size_t i = 0; i < tones.size(); ++i) {
    const auto& tone = tones[i];
    double mismatch = tone.q - (frame[tone.k] - frame[tone.j]);
    if (std::abs(mismatch) > 1e-6 * tone.omega0) out.off_resonant.push_back(i);
  }
  out.h = drive_hamiltonian_at(tones, bare, frame, 0.0);
  return out;
}

}  // namespace ququart
