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

#include "ququart/aklt.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "ququart/ququart_gates.hpp"
#include "ququart/readout.hpp"

namespace ququart {

namespace {

constexpr double kRemovalTol = 1e-9;

Matrix pauli_by_index(int k) {
  switch (k) {
    case 1: return pauli::X();
    case 2: return pauli::Y();
    case 3: return pauli::Z();
    default: return pauli::I();
  }
}

int axis_index(char alpha) {
  switch (alpha) {
    case 'x': return 1;
    case 'y': return 2;
    case 'z': return 3;
    default: throw std::invalid_argument("spin axis must be x, y or z");
  }
}

// Unitary taking |1> (or |-> when from_minus) to `target`.
Matrix edge_unitary(const Vector& target, bool from_minus) {
  if (target.size() != 2 || std::abs(target.norm() - 1.0) > 1e-9) {
    throw std::invalid_argument("edge state must be a normalized qubit vector");
  }
  Matrix m(2, 2);
  m.col(1) = target;
  m(0, 0) = std::conj(target(1));
  m(1, 0) = -std::conj(target(0));
  m.col(0) = -m.col(0);
  return from_minus ? Matrix(m * pauli::H()) : m;
}

Matrix on_o(const Matrix& u) { return kron(u, pauli::I()); }
Matrix on_n(const Matrix& u) { return kron(pauli::I(), u); }

QuditRegister chain_register(size_t sites, int dim) { return QuditRegister(std::vector<int>(sites, dim)); }

// Replaces a site of dimension reg.dim(site) by one of dimension m.rows().
StateVector map_site(const StateVector& state, size_t site, const Matrix& m) {
  std::vector<int> dims = state.reg().dims();
  if (m.cols() != dims.at(site)) {
    throw std::invalid_argument("site map has the wrong input dimension");
  }
  dims[site] = static_cast<int>(m.rows());
  QuditRegister out_reg(dims);
  SiteSplit in_split = split_sites(state.reg(), {site});
  SiteSplit out_split = split_sites(out_reg, {site});
  Vector out = Vector::Zero(static_cast<Eigen::Index>(out_reg.total_dim()));
  const Complex* in = state.amplitudes().data();
  for (size_t r = 0; r < in_split.rest_offsets.size(); ++r) {
    for (Eigen::Index a = 0; a < m.rows(); ++a) {
      Complex acc = 0.0;
      for (Eigen::Index k = 0; k < m.cols(); ++k) {
        acc += m(a, k) * in[in_split.rest_offsets[r] + in_split.target_offsets[static_cast<size_t>(k)]];
      }
      out(static_cast<Eigen::Index>(out_split.rest_offsets[r] + out_split.target_offsets[static_cast<size_t>(a)])) =
          acc;
    }
  }
  return StateVector(out_reg, out);
}

std::vector<Projector> bell_projectors() {
  std::vector<Projector> out;
  for (const auto& b : bell_basis()) out.push_back(Projector::onto(b));
  return out;
}

}  // namespace

namespace spin1 {

Matrix Sz() {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 0) = 1.0;
  m(2, 2) = -1.0;
  return m;
}

Matrix Sx() {
  Matrix m = Matrix::Zero(3, 3);
  m(0, 1) = m(1, 0) = m(1, 2) = m(2, 1) = 1.0 / std::sqrt(2.0);
  return m;
}

Matrix Sy() {
  Matrix m = Matrix::Zero(3, 3);
  const double s = 1.0 / std::sqrt(2.0);
  m(0, 1) = m(1, 2) = Complex(0.0, -s);
  m(1, 0) = m(2, 1) = Complex(0.0, s);
  return m;
}

Matrix component(char alpha) {
  switch (axis_index(alpha)) {
    case 1: return Sx();
    case 2: return Sy();
    default: return Sz();
  }
}

Matrix aklt_bond() {
  Matrix ss = kron(Sx(), Sx()) + kron(Sy(), Sy()) + kron(Sz(), Sz());
  return ss + ss * ss / 3.0;
}

Matrix string_factor(char alpha) { return expm_hermitian(component(alpha), -std::numbers::pi); }

}  // namespace spin1

Vector singlet_vector() {
  Vector v = Vector::Zero(4);
  v(1) = 1.0 / std::sqrt(2.0);
  v(2) = -1.0 / std::sqrt(2.0);
  return v;
}

RealMatrix triplet_isometry() {
  RealMatrix w = RealMatrix::Zero(3, 4);
  w(0, 3) = 1.0;
  w(1, 1) = w(1, 2) = 1.0 / std::sqrt(2.0);
  w(2, 0) = 1.0;
  return w;
}

std::vector<Vector> bell_basis() {
  std::vector<Vector> out;
  for (int k = 0; k < 4; ++k) out.push_back(on_o(pauli_by_index(k)) * singlet_vector());
  return out;
}

Matrix spin_pi_rotation(char alpha) {
  Matrix s = pauli_by_index(axis_index(alpha));
  return kron(Matrix(-kI * s), Matrix(-kI * s));
}

QuquartChain prepare_singlet_chain(size_t length, const Vector& edge_left, const Vector& edge_right) {
  if (length < 2) {
    throw std::invalid_argument("chain needs at least two sites");
  }
  Vector minus(2);
  minus << 1.0 / std::sqrt(2.0), -1.0 / std::sqrt(2.0);
  Vector one = Vector::Unit(2, 1);
  std::vector<Matrix> sites;
  for (size_t j = 0; j < length; ++j) {
    // Odd sites (counting from 1) start as |-, 1>, even sites as |1, ->.
    sites.push_back(j % 2 == 0 ? kron(minus, one) : kron(one, minus));
  }
  StateVector psi(chain_register(length, 4), kron(sites).col(0));
  const Unitary cnot = inter_cnot_o();
  const Unitary swap = intra_swap(PhaseConvention::kCorrected);
  for (size_t j = 0; j + 1 < length; j += 2) psi.apply(cnot, {j, j + 1});
  for (size_t j = 1; j < length; j += 2) psi.apply(swap, {j});
  for (size_t j = 2; j < length; j += 2) psi.apply(swap, {j});
  for (size_t j = 1; j + 1 < length; j += 2) psi.apply(cnot, {j, j + 1});
  for (size_t j = 2; j < length; j += 2) psi.apply(swap, {j});
  if (edge_left.size() != 0) psi.apply(on_n(edge_unitary(edge_left, false)), {0});
  if (edge_right.size() != 0) psi.apply(on_o(edge_unitary(edge_right, true)), {length - 1});
  return {psi, std::vector<std::optional<SiteOutcome>>(length)};
}

Matrix singlet_to_zero_rotation() {
  Matrix v = pauli::cnot() * on_o(pauli::H()) * on_o(pauli::X()) * on_n(pauli::X());
  return v.adjoint();
}

SiteOutcome triplet_projection(QuquartChain& chain, size_t site, Rng& rng, double* probability) {
  if (site >= chain.length()) {
    throw std::out_of_range("triplet projection site out of range");
  }
  // Rotation, |00> readout and inverse rotation compose into one conjugated measurement.
  static const std::vector<Projector> conjugated = [] {
    const Matrix u = singlet_to_zero_rotation();
    std::vector<Projector> out;
    for (const auto& p : qnd_projectors()) out.emplace_back(u.adjoint() * p.matrix() * u);
    return out;
  }();
  size_t k = measure_in_place(chain.state, conjugated, {site}, rng, probability);
  SiteOutcome out = k == 0 ? SiteOutcome::kSinglet : SiteOutcome::kTriplet;
  chain.record[site] = out;
  return out;
}

void project_sites(QuquartChain& chain, Rng& rng, const std::vector<size_t>& hold) {
  for (size_t s = 0; s < chain.length(); ++s) {
    if (chain.record[s] || std::find(hold.begin(), hold.end(), s) != hold.end()) continue;
    triplet_projection(chain, s, rng);
  }
}

double postselect_triplets(QuquartChain& chain) {
  const Matrix pt = Matrix::Identity(4, 4) - singlet_vector() * singlet_vector().adjoint();
  for (size_t s = 0; s < chain.length(); ++s) {
    if (chain.record[s]) continue;
    chain.state.apply(pt, {s});
    chain.record[s] = SiteOutcome::kTriplet;
  }
  double n = chain.state.norm();
  if (n < 1e-12) {
    throw std::runtime_error("triplet post-selection has zero probability");
  }
  chain.state.normalize();
  return n * n;
}

StateVector remove_site(const StateVector& state, size_t site, const Vector& local) {
  if (state.reg().num_sites() < 2) {
    throw std::invalid_argument("cannot remove the last site");
  }
  if (local.size() != state.reg().dim(site)) {
    throw std::invalid_argument("local state dimension does not match the site");
  }
  SiteSplit split = split_sites(state.reg(), {site});
  const Complex* in = state.amplitudes().data();
  Vector out(static_cast<Eigen::Index>(split.rest_offsets.size()));
  for (size_t r = 0; r < split.rest_offsets.size(); ++r) {
    Complex acc = 0.0;
    for (Eigen::Index k = 0; k < local.size(); ++k) {
      acc += std::conj(local(k)) * in[split.rest_offsets[r] + split.target_offsets[static_cast<size_t>(k)]];
    }
    out(static_cast<Eigen::Index>(r)) = acc;
  }
  if (std::abs(out.norm() - 1.0) > kRemovalTol) {
    throw std::runtime_error("removed site is not disentangled from the chain");
  }
  std::vector<int> dims = state.reg().dims();
  dims.erase(dims.begin() + static_cast<long>(site));
  StateVector result(QuditRegister(dims), out);
  result.normalize();
  return result;
}

QuquartChain rearrange(const QuquartChain& chain) {
  if (std::all_of(chain.record.begin(), chain.record.end(),
                  [](const auto& r) { return r == SiteOutcome::kSinglet; })) {
    throw std::runtime_error("every site was projected onto the singlet; nothing remains");
  }
  QuquartChain out = chain;
  for (size_t s = chain.length(); s-- > 0;) {
    if (chain.record[s] == SiteOutcome::kSinglet) {
      out.state = remove_site(out.state, s, singlet_vector());
      out.record.erase(out.record.begin() + static_cast<long>(s));
    }
  }
  return out;
}

StateVector to_spin1(const QuquartChain& chain) {
  StateVector s = chain.state;
  const Matrix w = triplet_isometry().cast<Complex>();
  for (size_t i = 0; i < chain.length(); ++i) {
    if (chain.record[i] != SiteOutcome::kTriplet) {
      throw std::invalid_argument("every site must be triplet-projected before the spin-1 map");
    }
    s = map_site(s, i, w);
  }
  if (std::abs(s.norm() - 1.0) > 1e-9) {
    throw std::runtime_error("chain has weight outside the triplet sector");
  }
  return s;
}

double string_order(const StateVector& spin1_state, char alpha, size_t i, size_t j) {
  const size_t n = spin1_state.reg().num_sites();
  if (!(i < j) || j >= n) {
    throw std::invalid_argument("string order needs i < j < L");
  }
  StateVector phi = spin1_state;
  const Matrix sa = spin1::component(alpha);
  const Matrix f = spin1::string_factor(alpha);
  phi.apply(sa, {i});
  for (size_t l = i + 1; l < j; ++l) phi.apply(f, {l});
  phi.apply(sa, {j});
  return spin1_state.amplitudes().dot(phi.amplitudes()).real();
}

double aklt_energy(const StateVector& spin1_state) {
  const size_t n = spin1_state.reg().num_sites();
  const Matrix h = spin1::aklt_bond();
  double e = 0.0;
  for (size_t i = 0; i + 1 < n; ++i) {
    StateVector phi = spin1_state;
    phi.apply(h, {i, i + 1});
    e += spin1_state.amplitudes().dot(phi.amplitudes()).real();
  }
  return e;
}

double aklt_energy_per_bond(const StateVector& spin1_state) {
  const size_t n = spin1_state.reg().num_sites();
  if (n < 2) {
    throw std::invalid_argument("energy per bond needs at least two sites");
  }
  return aklt_energy(spin1_state) / static_cast<double>(n - 1);
}

Matrix aklt_hamiltonian(size_t length) {
  if (length < 2) {
    throw std::invalid_argument("AKLT Hamiltonian needs at least two sites");
  }
  QuditRegister reg = chain_register(length, 3);
  const auto dim = static_cast<Eigen::Index>(reg.total_dim());
  Matrix id = Matrix::Identity(dim, dim);
  Matrix h = Matrix::Zero(dim, dim);
  for (size_t i = 0; i + 1 < length; ++i) h += apply_left(reg, spin1::aklt_bond(), {i, i + 1}, id);
  return h;
}

FusionResult fusion(const QuquartChain& a, const QuquartChain& b, Rng& rng) {
  if (a.length() == 0 || b.length() == 0) {
    throw std::invalid_argument("fusion needs two nonempty segments");
  }
  if (a.record.back() || b.record.front()) {
    throw std::invalid_argument("fusion interface sites must not be projected yet");
  }
  const size_t la = a.length();
  std::vector<int> dims(la + b.length(), 4);
  QuquartChain merged{StateVector(QuditRegister(dims), kron(a.state.amplitudes(), b.state.amplitudes()).col(0)),
                      a.record};
  merged.record.insert(merged.record.end(), b.record.begin(), b.record.end());

  // Bell projectors on (o of site la-1, n of site la) as two-ququart operators.
  QuditRegister qubits({2, 2, 2, 2});
  std::vector<Projector> bell;
  for (const auto& p : bell_projectors()) {
    bell.emplace_back(apply_left(qubits, p.matrix(), {0, 3}, Matrix::Identity(16, 16)));
  }
  size_t k = measure_in_place(merged.state, bell, {la - 1, la}, rng);
  if (k != 0) {
    const char alpha = "xyz"[k - 1];
    const Matrix r = spin_pi_rotation(alpha);
    for (size_t s = 0; s < la; ++s) merged.state.apply(r, {s});
  }
  int removed = 0;
  for (size_t s : {la - 1, la}) {
    if (triplet_projection(merged, s, rng) == SiteOutcome::kSinglet) ++removed;
  }
  return {rearrange(merged), static_cast<int>(k), removed};
}

FissionResult fission(const QuquartChain& chain, size_t drop, Rng& rng) {
  if (drop >= chain.length()) {
    throw std::invalid_argument("fission must leave at least one site");
  }
  FissionResult out{chain, {}};
  const auto bell = bell_projectors();
  const auto basis = bell_basis();
  for (size_t n = 0; n < drop; ++n) {
    const size_t s = out.chain.length() - 1;
    if (out.chain.record[s] != SiteOutcome::kTriplet) {
      throw std::invalid_argument("fission drops triplet-projected sites only");
    }
    size_t k = measure_in_place(out.chain.state, bell, {s}, rng);
    out.labels.push_back(static_cast<int>(k));
    out.chain.state = remove_site(out.chain.state, s, basis[k]);
    out.chain.record.pop_back();
  }
  return out;
}

QuquartChain prepare_aklt(size_t length, Rng& rng, const std::vector<size_t>& hold) {
  QuquartChain chain = prepare_singlet_chain(length);
  project_sites(chain, rng, hold);
  return rearrange(chain);
}

AkltStatistics aklt_statistics(size_t length, size_t trajectories, uint64_t seed) {
  if (trajectories == 0) {
    throw std::invalid_argument("need at least one trajectory");
  }
  const QuquartChain prepared = prepare_singlet_chain(length);
  Rng rng(seed);
  AkltStatistics st;
  st.length = length;
  st.trajectories = trajectories;
  size_t singlets = 0;
  double sum = 0.0;
  double sum2 = 0.0;
  for (size_t t = 0; t < trajectories; ++t) {
    QuquartChain chain = prepared;
    project_sites(chain, rng);
    AkltTrajectory tr;
    for (const auto& r : chain.record) {
      tr.record.push_back(*r);
      if (*r == SiteOutcome::kSinglet) {
        ++singlets;
      } else {
        ++tr.retained;
      }
    }
    sum += static_cast<double>(tr.retained);
    sum2 += static_cast<double>(tr.retained * tr.retained);
    st.samples.push_back(std::move(tr));
  }
  const double n = static_cast<double>(trajectories);
  st.singlet_fraction = static_cast<double>(singlets) / (n * static_cast<double>(length));
  st.mean_retained = sum / n;
  st.std_retained = trajectories > 1 ? std::sqrt(std::max(0.0, (sum2 - n * st.mean_retained * st.mean_retained) / (n - 1.0)))
                                     : 0.0;
  return st;
}

}  // namespace ququart
