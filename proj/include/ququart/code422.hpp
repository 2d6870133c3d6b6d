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

#ifndef QUQUART_CODE422_HPP
#define QUQUART_CODE422_HPP

#include <string>
#include <vector>

#include "ququart/pauli.hpp"
#include "ququart/qcore.hpp"

namespace ququart {

// Data qubits 1..4 of the four-qubit code live in (o1, n1, o2, n2) of two
// ququarts; a third ququart holds the syndrome (o) and flag (n) qubits.
// Register: six qubits (o1, n1, o2, n2, o_anc, n_anc).
QuditRegister code422_register();

// "00", "01", "10", "11", "0+", "0-".
StateVector code422_logical_state(const std::string& label);

// |0+-> from |00>|00> by a pi/2 pulse between ququart levels 0 and 3 on each
// data ququart, on the two-ququart (4 x 4) register.
StateVector prepare_zero_pm(bool plus);

struct DetectionResult {
  double accept_probability = 0.0;
  double logical_fidelity = 0.0;  // post-selected data state vs the ideal state
  std::vector<double> syndrome_probabilities;  // P(S_X, S_Z bits), index 2 * sx + sz
  double flag_probability = 0.0;
};

// Prepares `label`, applies `data_error` (4-qubit Pauli), measures S_X then
// S_Z with the flagged ancilla ququart and post-selects on trivial syndrome
// and flag outcomes.
DetectionResult code422_prepare_and_detect(const std::string& label, const PauliOperator& data_error);

}  // namespace ququart

#endif  // QUQUART_CODE422_HPP
