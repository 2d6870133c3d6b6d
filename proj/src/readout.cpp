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

#include "ququart/readout.hpp"

#include <numbers>
#include <stdexcept>

#include "ququart/ququart_gates.hpp"

namespace ququart {

void ReadoutImperfections::validate() const {
  for (double v : {fm, pl, pf, fpi}) {
    if (!(v >= 0.0 && v <= 1.0)) {
      throw std::invalid_argument("readout parameters must lie in [0, 1]");
    }
  }
}

ConfusionMatrix two_round_confusion(const ReadoutImperfections& imp) {
  imp.validate();
  ConfusionMatrix m = ConfusionMatrix::Zero();
  for (int level = 0; level < 4; ++level) {
    const int o = o_bit(level);
    const int n = n_bit(level);
    for (int r1 : {0, 1}) {
      const double p1 = r1 == o ? imp.fm : 1.0 - imp.fm;
      // Only atoms in the ground manifold scatter probe light.
      std::vector<std::pair<int, double>> n_after =
          o == 0 ? std::vector<std::pair<int, double>>{{n, 1.0 - imp.pf}, {1 - n, imp.pf}}
                 : std::vector<std::pair<int, double>>{{n, 1.0}};
      for (auto [nn, pflip] : n_after) {
        const double base = p1 * pflip;
        m(level, 2 * r1 + 1) += base * imp.pl;
        const double kept = base * (1.0 - imp.pl);
        for (auto [o2, pswap] : {std::pair{nn, imp.fpi}, std::pair{o, 1.0 - imp.fpi}}) {
          m(level, 2 * r1 + o2) += kept * pswap * imp.fm;
          m(level, 2 * r1 + (1 - o2)) += kept * pswap * (1.0 - imp.fm);
        }
      }
    }
  }
  return m;
}

std::vector<Projector> qnd_projectors() {
  return {Projector::basis(4, {0}), Projector::basis(4, {1, 2, 3})};
}

QndOutcome single_state_qnd(const StateVector& psi, size_t site, Rng& rng) {
  if (psi.reg().dim(site) != 4) {
    throw std::invalid_argument("QND readout acts on a ququart site");
  }
  auto b = measure_projective(psi, qnd_projectors(), {site}, rng);
  return {b.outcome == 0, b.probability, std::move(b.state)};
}

ProbePhase probe_phase(double shift_hz, double tau_s) {
  if (tau_s < 0.0) {
    throw std::invalid_argument("probe duration must be non-negative");
  }
  double phi = 2.0 * std::numbers::pi * shift_hz * tau_s;
  return {phi, diagonal_phase({0.0, phi, 0.0, 0.0}), diagonal_phase({0.0, -phi, 0.0, 0.0})};
}

}  // namespace ququart
