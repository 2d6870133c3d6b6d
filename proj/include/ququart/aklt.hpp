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

#ifndef QUQUART_AKLT_HPP
#define QUQUART_AKLT_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ququart/qcore.hpp"

namespace ququart {

// Qubit |1> is spin up. Spin-1 basis order m = +1, 0, -1 maps to the ququart
// states |11>, (|01> + |10>)/sqrt(2), |00>; the singlet is (|01> - |10>)/sqrt(2).
namespace spin1 {
Matrix Sx();
Matrix Sy();
Matrix Sz();
// S_i . S_j + (S_i . S_j)^2 / 3 on two spin-1 sites.
Matrix aklt_bond();
// exp(i pi S^alpha), alpha in {'x', 'y', 'z'}.
Matrix string_factor(char alpha);
Matrix component(char alpha);
}  // namespace spin1

Vector singlet_vector();
// 3 x 4 isometry from the ququart triplet sector to spin-1.
RealMatrix triplet_isometry();
// Bell basis on two qubits: {singlet, X(x)I singlet, Y(x)I singlet, Z(x)I singlet}.
std::vector<Vector> bell_basis();
// pi rotation of a ququart's total spin about alpha: (-i sigma) (x) (-i sigma).
Matrix spin_pi_rotation(char alpha);

enum class SiteOutcome { kTriplet, kSinglet };

struct QuquartChain {
  StateVector state;
  std::vector<std::optional<SiteOutcome>> record;  // nullopt: not projected yet

  size_t length() const { return record.size(); }
};

// Singlets between o_i and n_{i+1} from a patterned product state with
// intra-ququart SWAP and inter-ququart CNOT layers. The unpaired n_1 and o_L
// are set to edge_left (default |1>) and edge_right (default |->).
QuquartChain prepare_singlet_chain(size_t length, const Vector& edge_left = Vector(),
                                   const Vector& edge_right = Vector());

// Gate sequence rotating the singlet into |00> (X_n X_o H_o CNOT_{o->n}, inverted).
Matrix singlet_to_zero_rotation();

// Conjugated |00> measurement on one site: rotate, QND-measure |00>, rotate back.
SiteOutcome triplet_projection(QuquartChain& chain, size_t site, Rng& rng, double* probability = nullptr);

// Projects every not-yet-projected site except those in `hold`.
void project_sites(QuquartChain& chain, Rng& rng, const std::vector<size_t>& hold = {});

// Deterministic post-selection of every unprojected site onto the triplet sector.
// Returns the success probability.
double postselect_triplets(QuquartChain& chain);

// Removes the site after checking it is exactly in `local` (norm of the
// contraction equals 1 within 1e-9).
StateVector remove_site(const StateVector& state, size_t site, const Vector& local);

// Drops every singlet-projected site.
QuquartChain rearrange(const QuquartChain& chain);

// Spin-1 state of a chain whose sites are all triplet-projected.
StateVector to_spin1(const QuquartChain& chain);

// <S^a_i exp(i pi sum_{i<l<j} S^a_l) S^a_j> on a spin-1 state.
double string_order(const StateVector& spin1_state, char alpha, size_t i, size_t j);

// <H_AKLT> with open-chain bond sum, and the same divided by the bond count.
double aklt_energy(const StateVector& spin1_state);
double aklt_energy_per_bond(const StateVector& spin1_state);

// Dense open-chain AKLT Hamiltonian on L spin-1 sites.
Matrix aklt_hamiltonian(size_t length);

struct FusionResult {
  QuquartChain chain;
  int bell_outcome = 0;  // 0: singlet, 1: X, 2: Y, 3: Z on the left qubit
  int removed = 0;       // interface sites projected onto the singlet
};

// Bell measurement on (o of a's last site, n of b's first site), the
// spin-1 pi-rotation string on every site of `a` undoing the Pauli outcome,
// triplet projection of the two interface sites, and rearrangement. Both
// interface sites must still be unprojected.
FusionResult fusion(const QuquartChain& a, const QuquartChain& b, Rng& rng);

struct FissionResult {
  QuquartChain chain;
  std::vector<int> labels;  // Pauli index per dropped site, right-most first
};

// Intra-ququart Bell measurement on each of the last `drop` sites, which are
// then removed.
FissionResult fission(const QuquartChain& chain, size_t drop, Rng& rng);

// Singlet chain of `length` sites with every site projected and singlet sites
// removed; sites listed in `hold` stay unprojected.
QuquartChain prepare_aklt(size_t length, Rng& rng, const std::vector<size_t>& hold = {});

struct AkltTrajectory {
  std::vector<SiteOutcome> record;
  size_t retained = 0;
};

struct AkltStatistics {
  size_t length = 0;
  size_t trajectories = 0;
  double singlet_fraction = 0.0;
  double mean_retained = 0.0;
  double std_retained = 0.0;
  std::vector<AkltTrajectory> samples;
};

// Repeated projection of the same prepared singlet chain.
AkltStatistics aklt_statistics(size_t length, size_t trajectories, uint64_t seed);

}  // namespace ququart

#endif  // QUQUART_AKLT_HPP
