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

#include "ququart/mipt.hpp"

using namespace ququart;

namespace {

MiptConfig config(size_t length, double p, size_t trajectories, uint64_t seed = 1) {
  MiptConfig c;
  c.length = length;
  c.p = p;
  c.cycles = 8;
  c.trajectories = trajectories;
  c.seed = seed;
  return c;
}

}  // namespace

TEST(mipt, absorbing_unitary_fixes_the_dark_state) {
  Rng rng(1);
  for (int t = 0; t < 100; ++t) {
    Matrix u = absorbing_unitary(rng);
    ASSERT_EQ(u.rows(), 16);
    EXPECT_TRUE(is_unitary(u, 1e-12));
    EXPECT_NEAR(std::abs(u(0, 0) - 1.0), 0.0, 1e-14);
    EXPECT_NEAR(u.row(0).tail(15).norm() + u.col(0).tail(15).norm(), 0.0, 1e-14);
  }
}

TEST(mipt, full_reset_empties_the_chain) {
  auto r = mipt_run(config(5, 1.0, 20));
  for (double d : r.density) EXPECT_DOUBLE_EQ(d, 0.0);
}

TEST(mipt, no_reset_keeps_most_sites_active) {
  auto r = mipt_run(config(4, 0.0, 200));
  ASSERT_EQ(r.density.size(), 8u);
  EXPECT_GT(r.density.back(), 0.5);
  for (double d : r.density) {
    EXPECT_GE(d, 0.0);
    EXPECT_LE(d, 1.0);
  }
}

TEST(mipt, density_decreases_with_reset_probability) {
  double prev = 2.0;
  for (double p : {0.0, 0.1, 0.3, 0.6}) {
    auto r = mipt_run(config(6, p, 150, 4));
    EXPECT_LT(r.density.back(), prev + 2.0 * r.stderr_.back()) << p;
    prev = r.density.back();
  }
}

TEST(mipt, runs_are_reproducible_and_thread_independent) {
  MiptConfig a = config(5, 0.2, 30, 9);
  MiptConfig b = a;
  b.threads = 3;
  auto ra = mipt_run(a);
  auto rb = mipt_run(b);
  EXPECT_EQ(ra.density, rb.density);
  EXPECT_EQ(ra.density, mipt_run(a).density);
}

TEST(mipt, validates_configuration) {
  EXPECT_THROW(config(1, 0.1, 1).validate(), std::invalid_argument);
  EXPECT_THROW(config(13, 0.1, 1).validate(), std::invalid_argument);
  EXPECT_THROW(config(4, 1.5, 1).validate(), std::invalid_argument);
  EXPECT_THROW(mipt_run(config(4, 0.1, 0)), std::invalid_argument);
}
