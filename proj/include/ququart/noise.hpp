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

#ifndef QUQUART_NOISE_HPP
#define QUQUART_NOISE_HPP

#include <string>

#include "ququart/qcore.hpp"

namespace ququart {

enum class ErrorKind { kDepolarizing, kPauliX, kMeasurementFlip };

struct ErrorModel {
  ErrorKind kind = ErrorKind::kDepolarizing;
  double p = 0.0;
  int arity = 1;  // number of qubits a depolarizing error acts on

  // "depol:p", "paulix:p", "measflip:p"; an optional "@2" suffix on depol
  // sets the arity.
  static ErrorModel parse(const std::string& text);
  std::string to_string() const;
};

// rho -> (1 - p) rho + p I / dim. Kraus operators are the d^2 clock-and-shift
// operators.
KrausChannel depolarizing(double p, size_t dim);

// rho -> (1 - p) rho + p X rho X.
KrausChannel pauli_x(double p);

// Classical readout flip of a binary outcome.
int measurement_flip(double p, int outcome, Rng& rng);

}  // namespace ququart

#endif  // QUQUART_NOISE_HPP
