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

#include "ququart/code422.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ququart/ftqec.hpp"
#include "ququart/ququart_gates.hpp"

namespace ququart {

namespace {

constexpr size_t kDataQubits = 4;
constexpr double kProbFloor = 1e-15;

struct Branch {
  std::vector<int> outcomes;
  double probability;
  StateVector state;
};

std::vector<Branch> split(const Branch& b, size_t qubit, bool record) {
  const std::vector<Projector> z = {Projector::basis(2, {0}), Projector::basis(2, {1})};
  std::vector<Branch> out;
  for (auto& m : measurement_branches(b.state, z, {qubit})) {
    if (m.probability < kProbFloor) continue;
    Branch nb{b.outcomes, b.probability * m.probability, std::move(m.state)};
    if (record) nb.outcomes.push_back(static_cast<int>(m.outcome));
    if (!record && m.outcome == 1) nb.state.apply(pauli::X(), {qubit});
    out.push_back(std::move(nb));
  }
  return out;
}

std::vector<Branch> run_branches(std::vector<Branch> branches, const Circuit& circuit) {
  for (const auto& op : circuit) {
    std::vector<Branch> next;
    for (auto& b : branches) {
      switch (op.kind) {
        case OpKind::kPrepZ:
        case OpKind::kPrepX:
          for (auto& nb : split(b, op.a, false)) {
            if (op.kind == OpKind::kPrepX) nb.state.apply(pauli::H(), {op.a});
            next.push_back(std::move(nb));
          }
          break;
        case OpKind::kCnot:
        case OpKind::kCz:
        case OpKind::kH:
          if (op.kind == OpKind::kH) {
            b.state.apply(pauli::H(), {op.a});
          } else {
            b.state.apply(op.kind == OpKind::kCnot ? pauli::cnot() : pauli::cz(), {op.a, op.b});
          }
          next.push_back(std::move(b));
          break;
        case OpKind::kMeasureZ:
        case OpKind::kMeasureX:
          if (op.kind == OpKind::kMeasureX) b.state.apply(pauli::H(), {op.a});
          for (auto& nb : split(b, op.a, true)) {
            if (op.kind == OpKind::kMeasureX) nb.state.apply(pauli::H(), {op.a});
            next.push_back(std::move(nb));
          }
          break;
      }
    }
    branches = std::move(next);
  }
  return branches;
}

}  // namespace

QuditRegister code422_register() { return QuditRegister(std::vector<int>(6, 2)); }

StateVector code422_logical_state(const std::string& label) {
  QuditRegister reg(std::vector<int>(kDataQubits, 2));
  Vector v = Vector::Zero(16);
  auto add = [&](const char* bits, double c) { v(std::stoi(bits, nullptr, 2)) += c; };
  const double h = 1.0 / std::sqrt(2.0);
  if (label == "00") {
    add("0000", h); add("1111", h);
  } else if (label == "01") {
    add("0011", h); add("1100", h);
  } else if (label == "10") {
    add("0101", h); add("1010", h);
  } else if (label == "11") {
    add("0110", h); add("1001", h);
  } else if (label == "0+" || label == "0-") {
    double s = label == "0+" ? 1.0 : -1.0;
    add("0000", 0.5); add("0011", 0.5 * s); add("1100", 0.5 * s); add("1111", 0.5);
  } else {
    throw std::invalid_argument("unknown four-qubit code state: " + label);
  }
  return StateVector(reg, v);
}

StateVector prepare_zero_pm(bool plus) {
  const double omega = 1.0;
  DriveTone tone{0, 3, omega, 0.0, plus ? std::numbers::pi / 2 : -std::numbers::pi / 2};
  auto eff = drive_hamiltonian({tone}, {0, 0, 0, 0}, {0, 0, 0, 0});
  Matrix u = expm_hermitian(eff.h, std::numbers::pi / (2.0 * omega));
  StateVector psi = StateVector::basis(QuditRegister({4, 4}), {0, 0});
  psi.apply(u, {0});
  psi.apply(u, {1});
  return psi;
}

DetectionResult code422_prepare_and_detect(const std::string& label, const PauliOperator& data_error) {
  if (data_error.num_qubits() != kDataQubits) {
    throw std::invalid_argument("four-qubit code error must act on 4 qubits");
  }
  StateVector ideal = code422_logical_state(label);
  StateVector data = ideal;
  if (label == "0+" || label == "0-") {
    data = StateVector(QuditRegister(std::vector<int>(kDataQubits, 2)), prepare_zero_pm(label == "0+").amplitudes());
  }
  Vector amps = kron(data.amplitudes(), Vector::Unit(4, 0));
  StateVector psi(code422_register(), amps);
  psi.apply(data_error.to_matrix(), {0, 1, 2, 3});

  StabilizerCode code = StabilizerCode::four_qubit();
  Circuit circuit;
  for (size_t k = 0; k < code.stabilizers.size(); ++k) {
    auto s = make_schedule(code, k, {0, 1, 2, 3}, true);
    circuit.insert(circuit.end(), s.circuit.begin(), s.circuit.end());
  }
  auto branches = run_branches({{{}, 1.0, psi}}, circuit);

  DetectionResult r;
  r.syndrome_probabilities.assign(4, 0.0);
  Matrix kept = Matrix::Zero(16, 16);
  for (const auto& b : branches) {
    // Outcomes: S_X syndrome, S_X flag, S_Z syndrome, S_Z flag.
    int sx = b.outcomes.at(0);
    int sz = b.outcomes.at(2);
    bool flagged = b.outcomes.at(1) || b.outcomes.at(3);
    r.syndrome_probabilities[2 * sx + sz] += b.probability;
    if (flagged) r.flag_probability += b.probability;
    if (sx == 0 && sz == 0 && !flagged) {
      r.accept_probability += b.probability;
      kept += b.probability * partial_trace(b.state, {0, 1, 2, 3}).elements();
    }
  }
  if (r.accept_probability > kProbFloor) {
    DensityMatrix rho(ideal.reg(), kept / r.accept_probability);
    r.logical_fidelity = fidelity(rho, ideal);
  }
  return r;
}

}  // namespace ququart
