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

#ifndef QUQUART_READOUT_HPP
#define QUQUART_READOUT_HPP

#include <vector>

#include "ququart/qcore.hpp"

namespace ququart {

struct ReadoutImperfections {
  double fm = 1.0;   // single-shot readout fidelity
  double pl = 0.0;   // atom loss after the first imaging round
  double pf = 0.0;   // nuclear-spin flip of a scattering (bright) atom during round 1
  double fpi = 1.0;  // intra-ququart SWAP success probability

  void validate() const;
};

// Row = input level (00, 01, 10, 11); column = outcome pair (BB, BD, DB, DD).
using ConfusionMatrix = Eigen::Matrix4d;

// Two imaging rounds with a SWAP in between, evaluated branch by branch:
//   round 1 reads the o-bit (correct with fm);
//   a bright (ground) atom flips its n-bit with pf while scattering;
//   any atom is lost with pl after round 1 and reads dark from then on;
//   the SWAP exchanges o and n with fpi, otherwise leaves the populations;
//   round 2 reads the new o-bit (correct with fm).
ConfusionMatrix two_round_confusion(const ReadoutImperfections& imp);

// {|00><00|, 1 - |00><00|} on a ququart.
std::vector<Projector> qnd_projectors();

struct QndOutcome {
  bool bright;
  double probability;
  StateVector state;
};

// |00> QND readout of one ququart site.
QndOutcome single_state_qnd(const StateVector& psi, size_t site, Rng& rng);

struct ProbePhase {
  double phi;            // rad, accrued on |01>
  Unitary accrual;       // diag(1, e^{i phi}, 1, 1)
  Unitary compensator;   // diag(1, e^{-i phi}, 1, 1)
};

ProbePhase probe_phase(double shift_hz, double tau_s);

}  // namespace ququart

#endif  // QUQUART_READOUT_HPP
