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

#include "ququart/distill.hpp"

#include <cmath>
#include <stdexcept>

#include "ququart/ququart_gates.hpp"

namespace ququart {

namespace {

constexpr size_t kO1 = 0;
constexpr size_t kN1 = 1;
constexpr size_t kO2 = 2;
constexpr size_t kN2 = 3;

void check_probability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
  }
}

DensityMatrix apply_intra(const DensityMatrix& rho, const Unitary& u, double infidelity) {
  DensityMatrix out = rho;
  for (std::vector<size_t> atom : {std::vector<size_t>{kO1, kN1}, std::vector<size_t>{kO2, kN2}}) {
    out.apply(u, atom);
    if (infidelity > 0.0) out = apply_channel(out, depolarizing(infidelity, 4), atom);
  }
  return out;
}

}  // namespace

QuditRegister distill_register() { return QuditRegister({2, 2, 2, 2}); }

void DistillConfig::validate() const {
  check_probability(entanglement_error.p, "entanglement error");
  check_probability(intra_gate_infidelity, "intra-ququart gate infidelity");
  check_probability(measurement_error, "measurement error");
  if (entanglement_error.kind == ErrorKind::kMeasurementFlip) {
    throw std::invalid_argument("entanglement error must be a depolarizing or Pauli-X channel");
  }
}

DensityMatrix bell_pair() {
  Vector v = Vector::Zero(4);
  v(0) = v(3) = 1.0 / std::sqrt(2.0);
  return DensityMatrix(StateVector(QuditRegister({2, 2}), v));
}

StateVector ideal_predistilled() {
  StateVector psi = StateVector::basis(distill_register(), {0, 0, 0, 0});
  for (auto [a, b] : {std::pair{kO1, kO2}, std::pair{kN1, kN2}}) {
    psi.apply(pauli::H(), {a});
    psi.apply(pauli::cnot(), {a, b});
  }
  return psi;
}

DensityMatrix prepare_predistilled(const ErrorModel& error) {
  DensityMatrix rho(ideal_predistilled());
  if (error.p == 0.0) return rho;
  check_probability(error.p, "entanglement error");
  for (auto [a, b] : {std::pair{kO1, kO2}, std::pair{kN1, kN2}}) {
    switch (error.kind) {
      case ErrorKind::kPauliX:
        rho = apply_channel(rho, pauli_x(error.p), {a});
        break;
      case ErrorKind::kDepolarizing:
        if (error.arity == 1) {
          rho = apply_channel(rho, depolarizing(error.p, 2), {a});
        } else if (error.arity == 2) {
          rho = apply_channel(rho, depolarizing(error.p, 4), {a, b});
        } else {
          throw std::invalid_argument("entanglement depolarizing arity must be 1 or 2");
        }
        break;
      case ErrorKind::kMeasurementFlip:
        throw std::invalid_argument("entanglement error must be a depolarizing or Pauli-X channel");
    }
  }
  return rho;
}

DistillResult run_distillation(const DensityMatrix& rho, const DistillConfig& config) {
  config.validate();
  if (rho.reg().total_dim() != 16 || rho.reg().num_sites() < 2 || rho.reg().num_sites() > 4) {
    throw std::invalid_argument("distillation needs a two-ququart density matrix");
  }
  DensityMatrix state(distill_register(), rho.elements());
  DistillResult r;
  r.pre_infidelity = 1.0 - fidelity(state, ideal_predistilled());

  state = apply_intra(state, intra_cnot(), config.intra_gate_infidelity);
  state = apply_intra(state, intra_swap(), config.intra_gate_infidelity);

  const std::vector<Projector> z = {Projector::basis(2, {0}), Projector::basis(2, {1})};
  auto first = measurement_branches(state, z, {kO1});
  r.outcome_probabilities.assign(4, 0.0);
  Matrix kept = Matrix::Zero(16, 16);
  const double m = config.measurement_error;
  for (const auto& b1 : first) {
    if (b1.probability <= 0.0) continue;
    for (const auto& b2 : measurement_branches(b1.state, z, {kO2})) {
      const double p_true = b1.probability * b2.probability;
      if (p_true <= 0.0) continue;
      for (int r1 : {0, 1}) {
        for (int r2 : {0, 1}) {
          double p = p_true * (static_cast<int>(b1.outcome) == r1 ? 1.0 - m : m) *
                     (static_cast<int>(b2.outcome) == r2 ? 1.0 - m : m);
          r.outcome_probabilities[2 * r1 + r2] += p;
          if (r1 == 1 && r2 == 1) kept += p * b2.state.elements();
        }
      }
    }
  }
  r.yield = r.outcome_probabilities[3];
  if (r.yield <= 0.0) {
    throw std::runtime_error("distillation success branch has zero probability");
  }
  DensityMatrix post(distill_register(), kept / r.yield);
  DensityMatrix pair = partial_trace(post, {kN1, kN2});
  r.kept = pair.elements();
  r.post_infidelity = 1.0 - fidelity(pair, bell_pair());
  r.post_infidelity = std::max(0.0, r.post_infidelity);
  r.pre_infidelity = std::max(0.0, r.pre_infidelity);
  return r;
}

std::vector<DistillPoint> sweep_entanglement_error(const DistillConfig& base, const std::vector<double>& grid) {
  std::vector<DistillPoint> out;
  for (double p : grid) {
    DistillConfig c = base;
    c.entanglement_error.p = p;
    out.push_back({p, run_distillation(prepare_predistilled(c.entanglement_error), c)});
  }
  return out;
}

std::vector<DistillPoint> sweep_gate_infidelity(const DistillConfig& base, const std::vector<double>& grid) {
  std::vector<DistillPoint> out;
  DensityMatrix rho = prepare_predistilled(base.entanglement_error);
  for (double g : grid) {
    DistillConfig c = base;
    c.intra_gate_infidelity = g;
    out.push_back({g, run_distillation(rho, c)});
  }
  return out;
}

}  // namespace ququart
