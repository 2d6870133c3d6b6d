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

#ifndef QUQUART_DISTILL_HPP
#define QUQUART_DISTILL_HPP

#include <vector>

#include "ququart/noise.hpp"
#include "ququart/qcore.hpp"

namespace ququart {

// Two ququarts are handled as four qubits (o1, n1, o2, n2); the flat index is
// the same as the 4 x 4 ququart register.
QuditRegister distill_register();

struct DistillConfig {
  ErrorModel entanglement_error{ErrorKind::kPauliX, 0.0, 1};
  double intra_gate_infidelity = 0.0;
  double measurement_error = 0.0;

  void validate() const;
};

struct DistillResult {
  double pre_infidelity = 0.0;
  double post_infidelity = 0.0;
  double yield = 0.0;
  // Probability of reading (o1, o2) = (r1, r2), index 2 * r1 + r2.
  std::vector<double> outcome_probabilities;
  Matrix kept;  // post-selected (n1, n2) state, 4 x 4
};

// |Phi+>_(o1,o2) (x) |Phi+>_(n1,n2).
StateVector ideal_predistilled();
DensityMatrix bell_pair();

// The ideal state with `error` applied to each Bell pair: pauliX or arity-1
// depolarizing acts on the first atom's qubit of each pair, arity-2
// depolarizing on both qubits of the pair.
DensityMatrix prepare_predistilled(const ErrorModel& error);

// Intra-ququart CNOT (o -> n) on both atoms, intra-ququart SWAP on both atoms
// (each followed by two-qubit depolarizing noise), readout of both o-qubits
// with classical flips; success when both read 1 (dark).
DistillResult run_distillation(const DensityMatrix& rho, const DistillConfig& config);

struct DistillPoint {
  double parameter;
  DistillResult result;
};

// Sweep the entanglement error strength (other settings from `base`).
std::vector<DistillPoint> sweep_entanglement_error(const DistillConfig& base, const std::vector<double>& grid);
// Sweep the intra-ququart gate infidelity at fixed entanglement error.
std::vector<DistillPoint> sweep_gate_infidelity(const DistillConfig& base, const std::vector<double>& grid);

}  // namespace ququart

#endif  // QUQUART_DISTILL_HPP
