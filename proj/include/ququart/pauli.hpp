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

#ifndef QUQUART_PAULI_HPP
#define QUQUART_PAULI_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "ququart/qcore.hpp"

namespace ququart {

// Phase-free Pauli operator on up to 64 qubits in symplectic form.
class PauliOperator {
 public:
  explicit PauliOperator(size_t num_qubits = 0);
  // Characters I, X, Y, Z; character i acts on qubit i.
  static PauliOperator from_string(const std::string& text);
  // Single-qubit Pauli p in {0: I, 1: X, 2: Y, 3: Z} on qubit q.
  static PauliOperator single(size_t num_qubits, size_t q, int p);

  size_t num_qubits() const { return n_; }
  bool x(size_t q) const { return (x_ >> q) & 1U; }
  bool z(size_t q) const { return (z_ >> q) & 1U; }
  uint64_t x_mask() const { return x_; }
  uint64_t z_mask() const { return z_; }
  // 0: I, 1: X, 2: Y, 3: Z.
  int get(size_t q) const;
  void set(size_t q, int p);
  void set_x(size_t q, bool v);
  void set_z(size_t q, bool v);

  size_t weight() const;
  bool is_identity() const { return (x_ | z_) == 0; }
  bool commutes_with(const PauliOperator& other) const;
  // Product up to phase.
  PauliOperator operator*(const PauliOperator& other) const;
  PauliOperator& operator*=(const PauliOperator& other);
  bool operator==(const PauliOperator& other) const = default;

  // Restriction to / embedding from a sub-register.
  PauliOperator restricted(size_t num_qubits) const;
  PauliOperator extended(size_t num_qubits) const;

  std::string to_string() const;
  // Dense 2^n x 2^n matrix (qubit 0 most significant).
  Matrix to_matrix() const;

 private:
  size_t n_;
  uint64_t x_ = 0;
  uint64_t z_ = 0;
};

enum class OpKind { kPrepZ, kPrepX, kCnot, kCz, kH, kMeasureZ, kMeasureX };

struct CircuitOp {
  OpKind kind;
  size_t a = 0;
  size_t b = 0;
  bool is_two_qubit() const { return kind == OpKind::kCnot || kind == OpKind::kCz; }
  bool is_prep() const { return kind == OpKind::kPrepZ || kind == OpKind::kPrepX; }
  bool is_measure() const { return kind == OpKind::kMeasureZ || kind == OpKind::kMeasureX; }
};

using Circuit = std::vector<CircuitOp>;

// Pauli (and/or outcome flip) inserted right after operation `after_op`.
struct Fault {
  size_t after_op = 0;
  PauliOperator pauli;
  bool flip = false;
};

struct FrameResult {
  PauliOperator frame;
  std::vector<int> flips;  // one entry per measurement, in circuit order
};

// Conjugation of the frame by one operation; a measurement appends whether
// its outcome is flipped. Preparations clear the frame on their qubit.
void propagate(PauliOperator& frame, const CircuitOp& op, std::vector<int>* flips = nullptr);

// Frame simulation with an initial frame and injected faults.
FrameResult simulate_frame(const Circuit& circuit, const PauliOperator& initial, const std::vector<Fault>& faults);

// Unitary of a single Clifford gate on an n-qubit register.
Matrix clifford_matrix(const CircuitOp& op, size_t num_qubits);

}  // namespace ququart

#endif  // QUQUART_PAULI_HPP
