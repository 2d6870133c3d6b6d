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

#ifndef QUQUART_MIPT_HPP
#define QUQUART_MIPT_HPP

#include <cstdint>
#include <vector>

#include "ququart/qcore.hpp"

namespace ququart {

// Adaptive brickwork circuit on L ququarts with absorbing state |00...0>.
// A site is active when its last QND measurement read dark (not |00>).
struct MiptConfig {
  size_t length = 6;
  double p = 0.0;  // per-site reset probability per cycle
  size_t cycles = 10;
  size_t trajectories = 100;
  uint64_t seed = 1;
  size_t threads = 1;

  void validate() const;
};

// 1 (+) Haar(15) on two ququarts: fixes |00,00> and scrambles the rest.
Matrix absorbing_unitary(Rng& rng);

// Active density after each cycle of one trajectory, starting from |11>^L
// (all sites active).
std::vector<double> mipt_trajectory(const MiptConfig& config, Rng& rng);

struct MiptResult {
  std::vector<double> density;  // mean active density per cycle
  std::vector<double> stderr_;  // standard error per cycle
};

MiptResult mipt_run(const MiptConfig& config);

}  // namespace ququart

#endif  // QUQUART_MIPT_HPP
