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

#include "ququart/pauli.hpp"

#include <bit>
#include <stdexcept>

namespace ququart {

PauliOperator::PauliOperator(size_t num_qubits) : n_(num_qubits) {
  if (num_qubits > 64) {
    throw std::invalid_argument("PauliOperator supports at most 64 qubits");
  }
}

PauliOperator PauliOperator::from_string(const std::string& text) {
  PauliOperator p(text.size());
  for (size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': case '_': p.set(q, 0); break;
      case 'X': p.set(q, 1); break;
      case 'Y': p.set(q, 2); break;
      case 'Z': p.set(q, 3); break;
      default: throw std::invalid_argument("bad Pauli character in '" + text + "'");
    }
  }
  return p;
}

PauliOperator PauliOperator::single(size_t num_qubits, size_t q, int p) {
  PauliOperator op(num_qubits);
  op.set(q, p);
  return op;
}

int PauliOperator::get(size_t q) const {
  bool xb = x(q);
  bool zb = z(q);
  return xb ? (zb ? 2 : 1) : (zb ? 3 : 0);
}

void PauliOperator::set(size_t q, int p) {
  if (p < 0 || p > 3) {
    throw std::invalid_argument("Pauli index must be 0..3");
  }
  set_x(q, p == 1 || p == 2);
  set_z(q, p == 2 || p == 3);
}

void PauliOperator::set_x(size_t q, bool v) {
  if (q >= n_) throw std::out_of_range("Pauli qubit index out of range");
  x_ = (x_ & ~(uint64_t{1} << q)) | (uint64_t{v} << q);
}

void PauliOperator::set_z(size_t q, bool v) {
  if (q >= n_) throw std::out_of_range("Pauli qubit index out of range");
  z_ = (z_ & ~(uint64_t{1} << q)) | (uint64_t{v} << q);
}

size_t PauliOperator::weight() const { return static_cast<size_t>(std::popcount(x_ | z_)); }

bool PauliOperator::commutes_with(const PauliOperator& other) const {
  return (std::popcount((x_ & other.z_) ^ (z_ & other.x_)) & 1) == 0;
}

PauliOperator PauliOperator::operator*(const PauliOperator& other) const {
  PauliOperator r = *this;
  r *= other;
  return r;
}

PauliOperator& PauliOperator::operator*=(const PauliOperator& other) {
  if (other.n_ != n_) {
    throw std::invalid_argument("Pauli product between different sizes");
  }
  x_ ^= other.x_;
  z_ ^= other.z_;
  return *this;
}

PauliOperator PauliOperator::restricted(size_t num_qubits) const {
  PauliOperator r(num_qubits);
  uint64_t mask = num_qubits == 64 ? ~uint64_t{0} : (uint64_t{1} << num_qubits) - 1;
  r.x_ = x_ & mask;
  r.z_ = z_ & mask;
  return r;
}

PauliOperator PauliOperator::extended(size_t num_qubits) const {
  if (num_qubits < n_) {
    throw std::invalid_argument("cannot extend to a smaller register");
  }
  PauliOperator r(num_qubits);
  r.x_ = x_;
  r.z_ = z_;
  return r;
}

std::string PauliOperator::to_string() const {
  std::string s;
  for (size_t q = 0; q < n_; ++q) s += "IXYZ"[get(q)];
  return s;
}

Matrix PauliOperator::to_matrix() const {
  std::vector<Matrix> f;
  for (size_t q = 0; q < n_; ++q) {
    switch (get(q)) {
      case 0: f.push_back(pauli::I()); break;
      case 1: f.push_back(pauli::X()); break;
      case 2: f.push_back(pauli::Y()); break;
      default: f.push_back(pauli::Z()); break;
    }
  }
  return kron(f);
}

void propagate(PauliOperator& frame, const CircuitOp& op, std::vector<int>* flips) {
  switch (op.kind) {
    case OpKind::kPrepZ:
    case OpKind::kPrepX:
      frame.set(op.a, 0);
      break;
    case OpKind::kCnot:
      frame.set_x(op.b, frame.x(op.b) ^ frame.x(op.a));
      frame.set_z(op.a, frame.z(op.a) ^ frame.z(op.b));
      break;
    case OpKind::kCz: {
      bool xa = frame.x(op.a);
      bool xb = frame.x(op.b);
      frame.set_z(op.a, frame.z(op.a) ^ xb);
      frame.set_z(op.b, frame.z(op.b) ^ xa);
      break;
    }
    case OpKind::kH: {
      bool xa = frame.x(op.a);
      frame.set_x(op.a, frame.z(op.a));
      frame.set_z(op.a, xa);
      break;
    }
    case OpKind::kMeasureZ:
      if (flips) flips->push_back(frame.x(op.a));
      break;
    case OpKind::kMeasureX:
      if (flips) flips->push_back(frame.z(op.a));
      break;
  }
}

FrameResult simulate_frame(const Circuit& circuit, const PauliOperator& initial, const std::vector<Fault>& faults) {
  FrameResult r{initial, {}};
  for (size_t i = 0; i < circuit.size(); ++i) {
    propagate(r.frame, circuit[i], &r.flips);
    for (const auto& f : faults) {
      if (f.after_op != i) continue;
      if (f.pauli.num_qubits() == r.frame.num_qubits()) r.frame *= f.pauli;
      if (f.flip) {
        if (!circuit[i].is_measure()) {
          throw std::invalid_argument("outcome flip attached to a non-measurement");
        }
        r.flips.back() ^= 1;
      }
    }
  }
  return r;
}

Matrix clifford_matrix(const CircuitOp& op, size_t num_qubits) {
  QuditRegister reg(std::vector<int>(num_qubits, 2));
  Matrix id = Matrix::Identity(static_cast<Eigen::Index>(reg.total_dim()), static_cast<Eigen::Index>(reg.total_dim()));
  switch (op.kind) {
    case OpKind::kCnot: return apply_left(reg, pauli::cnot(), {op.a, op.b}, id);
    case OpKind::kCz: return apply_left(reg, pauli::cz(), {op.a, op.b}, id);
    case OpKind::kH: return apply_left(reg, pauli::H(), {op.a}, id);
    default: throw std::invalid_argument("clifford_matrix: not a unitary gate");
  }
}

}  // namespace ququart
