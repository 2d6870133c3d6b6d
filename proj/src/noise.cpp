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

#include "ququart/noise.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ququart {

namespace {

void check_probability(double p) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("probability out of range [0, 1]: " + std::to_string(p));
  }
}

}  // namespace

ErrorModel ErrorModel::parse(const std::string& text) {
  auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("error model must look like kind:p, got '" + text + "'");
  }
  std::string kind = text.substr(0, colon);
  std::string rest = text.substr(colon + 1);
  ErrorModel m;
  auto at = rest.find('@');
  if (at != std::string::npos) {
    m.arity = std::stoi(rest.substr(at + 1));
    rest = rest.substr(0, at);
  }
  size_t used = 0;
  m.p = std::stod(rest, &used);
  if (used != rest.size()) {
    throw std::invalid_argument("bad probability in error model '" + text + "'");
  }
  check_probability(m.p);
  if (kind == "depol") {
    m.kind = ErrorKind::kDepolarizing;
  } else if (kind == "paulix") {
    m.kind = ErrorKind::kPauliX;
  } else if (kind == "measflip") {
    m.kind = ErrorKind::kMeasurementFlip;
  } else {
    throw std::invalid_argument("unknown error model kind '" + kind + "'");
  }
  if (m.arity < 1 || (m.kind != ErrorKind::kDepolarizing && m.arity != 1)) {
    throw std::invalid_argument("bad arity in error model '" + text + "'");
  }
  return m;
}

std::string ErrorModel::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case ErrorKind::kDepolarizing:
      out << "depol:" << p;
      if (arity != 1) out << "@" << arity;
      break;
    case ErrorKind::kPauliX:
      out << "paulix:" << p;
      break;
    case ErrorKind::kMeasurementFlip:
      out << "measflip:" << p;
      break;
  }
  return out.str();
}

KrausChannel depolarizing(double p, size_t dim) {
  check_probability(p);
  if (dim < 2) {
    throw std::invalid_argument("depolarizing channel needs dim >= 2");
  }
  const double d2 = static_cast<double>(dim * dim);
  Matrix shift = Matrix::Zero(dim, dim);
  Matrix clock = Matrix::Zero(dim, dim);
  for (size_t k = 0; k < dim; ++k) {
    shift((k + 1) % dim, k) = 1.0;
    clock(k, k) = std::exp(kI * (2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(dim)));
  }
  std::vector<Matrix> ops;
  ops.push_back(std::sqrt(1.0 - p + p / d2) * Matrix::Identity(dim, dim));
  if (p > 0.0) {
    Matrix xa = Matrix::Identity(dim, dim);
    for (size_t a = 0; a < dim; ++a) {
      Matrix zb = Matrix::Identity(dim, dim);
      for (size_t b = 0; b < dim; ++b) {
        if (a != 0 || b != 0) ops.push_back(std::sqrt(p / d2) * xa * zb);
        zb = zb * clock;
      }
      xa = xa * shift;
    }
  }
  return KrausChannel(std::move(ops));
}

KrausChannel pauli_x(double p) {
  check_probability(p);
  return KrausChannel({std::sqrt(1.0 - p) * pauli::I(), std::sqrt(p) * pauli::X()});
}

int measurement_flip(double p, int outcome, Rng& rng) {
  check_probability(p);
  std::bernoulli_distribution flip(p);
  return flip(rng) ? 1 - outcome : outcome;
}

}  // namespace ququart
