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

#ifndef QUQUART_ANGULAR_HPP
#define QUQUART_ANGULAR_HPP

#include <string>
#include <vector>

#include "ququart/qcore.hpp"

namespace ququart {

// Wigner symbols take ordinary (half-)integer values. Inputs that are not
// multiples of 1/2 throw; triangle or projection violations give exactly 0.
double wigner3j(double j1, double j2, double j3, double m1, double m2, double m3);
double wigner6j(double j1, double j2, double j3, double j4, double j5, double j6);
// <j1 m1; j2 m2 | j3 m3>
double clebsch_gordan(double j1, double m1, double j2, double m2, double j3, double m3);
Complex spherical_harmonic(int l, int m, double theta, double phi);

// Quantum numbers stored doubled so half-integers stay exact.
struct AngularMomentumState {
  int n = 0;
  int two_l = 0;
  int two_s = 2;
  int two_j = 0;
  int two_i = 1;
  int two_f = 1;
  int two_mf = 1;

  double L() const { return two_l / 2.0; }
  double S() const { return two_s / 2.0; }
  double J() const { return two_j / 2.0; }
  double I() const { return two_i / 2.0; }
  double F() const { return two_f / 2.0; }
  double mF() const { return two_mf / 2.0; }

  void validate() const;
  std::string label() const;
  bool operator==(const AngularMomentumState&) const = default;
};

struct PairState {
  AngularMomentumState a;
  AngularMomentumState b;
  bool operator==(const PairState&) const = default;
};

struct RhoHat {
  double theta = 0.0;
  double phi = 0.0;
};

// All hyperfine sublevels of 3S1 F=3/2, 3P0 F=1/2, 3P1 F=3/2, 3P2 F=5/2,
// 3D1 F=3/2 (S = 1, I = 1/2, F = J + I); 20 states, mF ascending per level.
std::vector<AngularMomentumState> hyperfine_basis(int n = 59);

// The 16 pair states of 3S1 F=3/2 x 3S1 F=3/2, first atom's mF slowest.
std::vector<PairState> stretched_s_pairs(const std::vector<AngularMomentumState>& basis);

// Angular part of the rank-(k1, k2) dipole-dipole matrix element between pair
// states s' and s, for inter-atomic direction rho_hat.
Complex dtilde(int k1, int k2, const PairState& s_prime, const PairState& s, const RhoHat& rho_hat);

struct C6Matrix {
  std::vector<PairState> basis;  // rows/columns
  Matrix matrix;                 // Hermitian
  RhoHat rho_hat;
};

// (C6)_ij = -sum_p D11(s_i, s_p) D11(s_p, s_j), p over all pairs drawn from the
// 20-state basis; i, j over `targets`.
C6Matrix build_c6_matrix(const std::vector<AngularMomentumState>& basis, const std::vector<PairState>& targets,
                         const RhoHat& rho_hat);

struct C6Weights {
  std::vector<PairState> basis;
  std::vector<double> normalized;  // C6~(k) / max |C6~|
  std::vector<double> raw;         // C6~(k)
  std::vector<double> physical;    // THz um^6
};

// Weights sum_j <k|j><j|C6|j><j|k> from the eigendecomposition, rescaled so the
// largest magnitude maps to |c6_prime|.
C6Weights c6_weights(const C6Matrix& c6m, double c6_prime);

// The 4x4 table over (mF1, mF2) for 3S1 F=3/2 pairs, rows/cols mF=-3/2..+3/2.
Eigen::Matrix4d c6_table(const RhoHat& rho_hat = {});

}  // namespace ququart

#endif  // QUQUART_ANGULAR_HPP
