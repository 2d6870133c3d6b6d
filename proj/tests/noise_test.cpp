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

#include <gtest/gtest.h>

#include <cmath>

#include "ququart/noise.hpp"

using namespace ququart;

namespace {

Matrix evolve(const KrausChannel& ch, const Matrix& rho) {
  Matrix out = Matrix::Zero(rho.rows(), rho.cols());
  for (const auto& k : ch.operators()) out += k * rho * k.adjoint();
  return out;
}

Matrix random_rho(size_t dim, Rng& rng) {
  return DensityMatrix::random(QuditRegister({static_cast<int>(dim)}), rng).elements();
}

}  // namespace

TEST(noise, depolarizing_is_trace_preserving) {
  for (size_t dim : {2u, 3u, 4u}) {
    for (double p : {0.0, 0.1, 0.5, 1.0}) {
      auto ch = depolarizing(p, dim);
      Matrix sum = Matrix::Zero(dim, dim);
      for (const auto& k : ch.operators()) sum += k.adjoint() * k;
      EXPECT_LT((sum - Matrix::Identity(dim, dim)).norm(), 1e-12);
    }
  }
}

TEST(noise, depolarizing_matches_definition) {
  Rng rng(3);
  for (size_t dim : {2u, 4u}) {
    for (int t = 0; t < 50; ++t) {
      Matrix rho = random_rho(dim, rng);
      double p = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
      Matrix expected = (1.0 - p) * rho + p * Matrix::Identity(dim, dim) / static_cast<double>(dim);
      EXPECT_LT((evolve(depolarizing(p, dim), rho) - expected).norm(), 1e-12);
    }
  }
}

TEST(noise, depolarizing_hand_values) {
  Matrix zero = Matrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  Matrix half = evolve(depolarizing(0.5, 2), zero);
  EXPECT_NEAR(half(0, 0).real(), 0.75, 1e-12);
  EXPECT_NEAR(half(1, 1).real(), 0.25, 1e-12);
  EXPECT_LT((evolve(depolarizing(0.0, 2), zero) - zero).norm(), 1e-14);
  EXPECT_LT((evolve(depolarizing(1.0, 2), zero) - Matrix::Identity(2, 2) / 2.0).norm(), 1e-12);
}

TEST(noise, depolarizing_composes_multiplicatively) {
  Rng rng(4);
  for (int t = 0; t < 100; ++t) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    double p = u(rng);
    double q = u(rng);
    Matrix rho = random_rho(4, rng);
    Matrix two = evolve(depolarizing(q, 4), evolve(depolarizing(p, 4), rho));
    Matrix one = evolve(depolarizing(1.0 - (1.0 - p) * (1.0 - q), 4), rho);
    EXPECT_LT((two - one).norm(), 1e-12);
  }
}

TEST(noise, pauli_x_values) {
  Matrix zero = Matrix::Zero(2, 2);
  zero(0, 0) = 1.0;
  Matrix out = evolve(pauli_x(0.1), zero);
  EXPECT_NEAR(out(0, 0).real(), 0.9, 1e-12);
  EXPECT_NEAR(out(1, 1).real(), 0.1, 1e-12);
  Matrix plus = Matrix::Constant(2, 2, 0.5);
  EXPECT_LT((evolve(pauli_x(0.3), plus) - plus).norm(), 1e-12);
  EXPECT_LT((evolve(pauli_x(0.0), zero) - zero).norm(), 1e-14);
}

TEST(noise, rejects_out_of_range_probabilities) {
  EXPECT_THROW(depolarizing(-0.1, 2), std::invalid_argument);
  EXPECT_THROW(depolarizing(1.1, 2), std::invalid_argument);
  EXPECT_THROW(depolarizing(0.1, 1), std::invalid_argument);
  EXPECT_THROW(pauli_x(2.0), std::invalid_argument);
  Rng rng(1);
  EXPECT_THROW(measurement_flip(-1.0, 0, rng), std::invalid_argument);
}

TEST(noise, measurement_flip_statistics) {
  Rng rng(11);
  const int n = 200000;
  int flips = 0;
  for (int k = 0; k < n; ++k) flips += measurement_flip(0.01, 0, rng);
  const double sigma = std::sqrt(0.01 * 0.99 / n);
  EXPECT_NEAR(static_cast<double>(flips) / n, 0.01, 5.0 * sigma);
  for (int k = 0; k < 100; ++k) {
    EXPECT_EQ(measurement_flip(0.0, 1, rng), 1);
    EXPECT_EQ(measurement_flip(1.0, 1, rng), 0);
  }
}

TEST(noise, error_model_round_trip) {
  for (const std::string text : {"depol:0.03", "depol:0.1@2", "paulix:0.05", "measflip:0.01"}) {
    EXPECT_EQ(ErrorModel::parse(text).to_string(), text);
  }
  auto m = ErrorModel::parse("depol:0.25@2");
  EXPECT_EQ(m.kind, ErrorKind::kDepolarizing);
  EXPECT_DOUBLE_EQ(m.p, 0.25);
  EXPECT_EQ(m.arity, 2);
  EXPECT_THROW(ErrorModel::parse("depol"), std::invalid_argument);
  EXPECT_THROW(ErrorModel::parse("bogus:0.1"), std::invalid_argument);
  EXPECT_THROW(ErrorModel::parse("paulix:0.1x"), std::invalid_argument);
  EXPECT_THROW(ErrorModel::parse("paulix:1.5"), std::invalid_argument);
}
