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

#include "ququart/code422.hpp"
#include "ququart/ftqec.hpp"

using namespace ququart;

namespace {

const std::vector<std::string> kLabels = {"00", "01", "10", "11", "0+", "0-"};

}  // namespace

TEST(code422, logical_states_are_stabilized) {
  auto code = StabilizerCode::four_qubit();
  for (const auto& label : kLabels) {
    Vector v = code422_logical_state(label).amplitudes();
    EXPECT_NEAR(v.norm(), 1.0, 1e-14);
    for (const auto& s : code.stabilizers) EXPECT_LT((s.to_matrix() * v - v).norm(), 1e-14) << label;
  }
  EXPECT_THROW(code422_logical_state("2"), std::invalid_argument);
}

TEST(code422, logical_operators_act_on_labels) {
  auto code = StabilizerCode::four_qubit();
  Vector zero = code422_logical_state("00").amplitudes();
  auto overlap = [](const Vector& a, const Vector& b) { return std::abs(a.dot(b)); };
  EXPECT_NEAR(overlap(code.logical_x[0].to_matrix() * zero, code422_logical_state("10").amplitudes()), 1.0, 1e-14);
  EXPECT_NEAR(overlap(code.logical_x[1].to_matrix() * zero, code422_logical_state("01").amplitudes()), 1.0, 1e-14);
  Vector plus = code422_logical_state("0+").amplitudes();
  EXPECT_NEAR(overlap(code.logical_x[1].to_matrix() * plus, plus), 1.0, 1e-14);
  EXPECT_NEAR(overlap(code.logical_z[0].to_matrix() * plus, plus), 1.0, 1e-14);
}

TEST(code422, zero_plus_minus_from_clock_rotations) {
  for (bool plus : {true, false}) {
    StateVector prepared = prepare_zero_pm(plus);
    EXPECT_EQ(prepared.reg().total_dim(), 16u);
    StateVector ideal = code422_logical_state(plus ? "0+" : "0-");
    EXPECT_NEAR(std::abs(ideal.amplitudes().dot(prepared.amplitudes())), 1.0, 1e-12);
  }
}

TEST(code422, no_error_is_accepted_with_unit_fidelity) {
  for (const auto& label : kLabels) {
    auto r = code422_prepare_and_detect(label, PauliOperator(4));
    EXPECT_NEAR(r.accept_probability, 1.0, 1e-12) << label;
    EXPECT_NEAR(r.logical_fidelity, 1.0, 1e-12) << label;
    EXPECT_NEAR(r.flag_probability, 0.0, 1e-12) << label;
    EXPECT_NEAR(r.syndrome_probabilities[0], 1.0, 1e-12) << label;
  }
}

TEST(code422, every_single_qubit_error_is_detected) {
  for (const auto& label : kLabels) {
    for (size_t q = 0; q < 4; ++q) {
      for (int p = 1; p < 4; ++p) {
        auto e = PauliOperator::single(4, q, p);
        auto r = code422_prepare_and_detect(label, e);
        EXPECT_NEAR(r.accept_probability, 0.0, 1e-12) << label << " " << e.to_string();
        // X anticommutes with ZZZZ (sz), Z with XXXX (sx).
        const int sx = e.z(q) ? 1 : 0;
        const int sz = e.x(q) ? 1 : 0;
        EXPECT_NEAR(r.syndrome_probabilities[2 * sx + sz], 1.0, 1e-12) << label << " " << e.to_string();
      }
    }
  }
}

TEST(code422, logical_errors_pass_undetected) {
  auto r = code422_prepare_and_detect("00", PauliOperator::from_string("XIXI"));
  EXPECT_NEAR(r.accept_probability, 1.0, 1e-12);
  EXPECT_NEAR(r.logical_fidelity, 0.0, 1e-12);
  auto s = code422_prepare_and_detect("00", PauliOperator::from_string("XXXX"));
  EXPECT_NEAR(s.accept_probability, 1.0, 1e-12);
  EXPECT_NEAR(s.logical_fidelity, 1.0, 1e-12);
}

TEST(code422, register_layout) {
  auto reg = code422_register();
  EXPECT_EQ(reg.num_sites(), 6u);
  EXPECT_EQ(reg.total_dim(), 64u);
  EXPECT_THROW(code422_prepare_and_detect("00", PauliOperator(5)), std::invalid_argument);
}
