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

#include "ququart/qcore.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <string>

namespace ququart {

namespace {

constexpr double kStateTol = 1e-6;

void check_targets(const QuditRegister& reg, const std::vector<size_t>& targets) {
  if (targets.empty()) {
    throw std::invalid_argument("empty target list");
  }
  std::vector<bool> seen(reg.num_sites(), false);
  for (size_t t : targets) {
    if (t >= reg.num_sites()) {
      throw std::out_of_range("target site " + std::to_string(t) + " out of range");
    }
    if (seen[t]) {
      throw std::invalid_argument("repeated target site " + std::to_string(t));
    }
    seen[t] = true;
  }
}

void check_operator_dim(const QuditRegister& reg, size_t op_dim, const std::vector<size_t>& targets) {
  check_targets(reg, targets);
  size_t expected = reg.subspace_dim(targets);
  if (op_dim != expected) {
    throw std::invalid_argument("operator dimension " + std::to_string(op_dim) +
                                " does not match target dimension " + std::to_string(expected));
  }
}

void check_projectors(const std::vector<Projector>& projectors) {
  if (projectors.empty()) {
    throw std::invalid_argument("no projectors");
  }
  size_t d = projectors.front().dim();
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& p : projectors) {
    if (p.dim() != d) {
      throw std::invalid_argument("projector dimensions differ");
    }
    sum += p.matrix();
  }
  if ((sum - Matrix::Identity(d, d)).norm() > 1e-9) {
    throw std::invalid_argument("projectors do not sum to the identity");
  }
}

}  // namespace

QuditRegister::QuditRegister(std::vector<int> dims) : dims_(std::move(dims)) {
  if (dims_.empty()) {
    throw std::invalid_argument("register needs at least one site");
  }
  strides_.assign(dims_.size(), 1);
  total_dim_ = 1;
  for (size_t k = dims_.size(); k-- > 0;) {
    if (dims_[k] < 2) {
      throw std::invalid_argument("local dimension must be >= 2");
    }
    strides_[k] = total_dim_;
    total_dim_ *= static_cast<size_t>(dims_[k]);
  }
}

size_t QuditRegister::subspace_dim(const std::vector<size_t>& sites) const {
  size_t d = 1;
  for (size_t s : sites) d *= static_cast<size_t>(dims_.at(s));
  return d;
}

size_t QuditRegister::index_of(const std::vector<int>& digits) const {
  if (digits.size() != dims_.size()) {
    throw std::invalid_argument("digit count does not match register");
  }
  size_t idx = 0;
  for (size_t k = 0; k < dims_.size(); ++k) {
    if (digits[k] < 0 || digits[k] >= dims_[k]) {
      throw std::out_of_range("digit out of range");
    }
    idx += strides_[k] * static_cast<size_t>(digits[k]);
  }
  return idx;
}

std::vector<int> QuditRegister::digits_of(size_t index) const {
  std::vector<int> out(dims_.size());
  for (size_t k = 0; k < dims_.size(); ++k) {
    out[k] = static_cast<int>((index / strides_[k]) % static_cast<size_t>(dims_[k]));
  }
  return out;
}

SiteSplit split_sites(const QuditRegister& reg, const std::vector<size_t>& targets) {
  SiteSplit split;
  split.target_offsets = {0};
  for (size_t t : targets) {
    std::vector<size_t> next;
    next.reserve(split.target_offsets.size() * reg.dim(t));
    for (size_t off : split.target_offsets) {
      for (int d = 0; d < reg.dim(t); ++d) next.push_back(off + d * reg.stride(t));
    }
    split.target_offsets = std::move(next);
  }
  std::vector<bool> is_target(reg.num_sites(), false);
  for (size_t t : targets) is_target[t] = true;
  split.rest_offsets = {0};
  for (size_t s = 0; s < reg.num_sites(); ++s) {
    if (is_target[s]) continue;
    std::vector<size_t> next;
    next.reserve(split.rest_offsets.size() * reg.dim(s));
    for (size_t off : split.rest_offsets) {
      for (int d = 0; d < reg.dim(s); ++d) next.push_back(off + d * reg.stride(s));
    }
    split.rest_offsets = std::move(next);
  }
  return split;
}

bool is_unitary(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m.adjoint() * m - Matrix::Identity(m.rows(), m.cols())).norm() <= tol;
}

bool is_hermitian(const Matrix& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).norm() <= tol;
}

Unitary::Unitary(Matrix m, double tol) : m_(std::move(m)) {
  if (!is_unitary(m_, tol)) {
    throw std::invalid_argument("matrix is not unitary");
  }
}

Unitary Unitary::identity(size_t dim) { return Unitary(Matrix::Identity(dim, dim)); }

Unitary Unitary::adjoint() const { return Unitary(m_.adjoint()); }

Unitary Unitary::operator*(const Unitary& rhs) const {
  if (dim() != rhs.dim()) {
    throw std::invalid_argument("unitary dimensions differ");
  }
  return Unitary(m_ * rhs.m_);
}

KrausChannel::KrausChannel(std::vector<Matrix> ops, double tol) : ops_(std::move(ops)) {
  if (ops_.empty()) {
    throw std::invalid_argument("channel needs at least one Kraus operator");
  }
  size_t d = static_cast<size_t>(ops_.front().rows());
  Matrix sum = Matrix::Zero(d, d);
  for (const auto& k : ops_) {
    if (static_cast<size_t>(k.rows()) != d || static_cast<size_t>(k.cols()) != d) {
      throw std::invalid_argument("Kraus operators must be square with equal dimension");
    }
    sum += k.adjoint() * k;
  }
  if ((sum - Matrix::Identity(d, d)).norm() > tol) {
    throw std::invalid_argument("Kraus operators are not trace preserving");
  }
}

Projector::Projector(Matrix m, double tol) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || !is_hermitian(m_, tol) || (m_ * m_ - m_).norm() > tol) {
    throw std::invalid_argument("matrix is not an orthogonal projector");
  }
}

Projector Projector::onto(const Vector& v) {
  Vector u = v / v.norm();
  return Projector(u * u.adjoint());
}

Projector Projector::basis(size_t dim, const std::vector<size_t>& levels) {
  Matrix p = Matrix::Zero(dim, dim);
  for (size_t l : levels) p(l, l) = 1.0;
  return Projector(p);
}

StateVector::StateVector(QuditRegister reg, Vector amplitudes)
    : reg_(std::move(reg)), amps_(std::move(amplitudes)) {
  if (static_cast<size_t>(amps_.size()) != reg_.total_dim()) {
    throw std::invalid_argument("amplitude count does not match register");
  }
  if (std::abs(amps_.norm() - 1.0) > kStateTol) {
    throw std::invalid_argument("state vector is not normalized");
  }
}

StateVector StateVector::basis(QuditRegister reg, const std::vector<int>& digits) {
  Vector v = Vector::Zero(reg.total_dim());
  v(reg.index_of(digits)) = 1.0;
  return StateVector(std::move(reg), std::move(v));
}

StateVector StateVector::random(QuditRegister reg, Rng& rng) {
  std::normal_distribution<double> g;
  Vector v(reg.total_dim());
  for (auto& a : v) a = Complex(g(rng), g(rng));
  v.normalize();
  return StateVector(std::move(reg), std::move(v));
}

void StateVector::normalize() {
  double n = amps_.norm();
  if (n == 0.0) {
    throw std::domain_error("cannot normalize a zero vector");
  }
  amps_ /= n;
}

void StateVector::apply(const Matrix& u, const std::vector<size_t>& targets) {
  apply_to_vector(reg_, u, targets, amps_);
}

DensityMatrix::DensityMatrix(QuditRegister reg, Matrix elements)
    : reg_(std::move(reg)), rho_(std::move(elements)) {
  size_t n = reg_.total_dim();
  if (static_cast<size_t>(rho_.rows()) != n || static_cast<size_t>(rho_.cols()) != n) {
    throw std::invalid_argument("density matrix size does not match register");
  }
  if (!is_hermitian(rho_, kStateTol)) {
    throw std::invalid_argument("density matrix is not Hermitian");
  }
  if (std::abs(rho_.trace().real() - 1.0) > kStateTol) {
    throw std::invalid_argument("density matrix trace is not 1");
  }
}

DensityMatrix::DensityMatrix(const StateVector& psi)
    : reg_(psi.reg()), rho_(psi.amplitudes() * psi.amplitudes().adjoint()) {}

DensityMatrix DensityMatrix::maximally_mixed(QuditRegister reg) {
  size_t n = reg.total_dim();
  Matrix m = Matrix::Identity(n, n) / static_cast<double>(n);
  return DensityMatrix(std::move(reg), std::move(m));
}

DensityMatrix DensityMatrix::random(QuditRegister reg, Rng& rng, size_t rank) {
  size_t n = reg.total_dim();
  if (rank == 0) rank = n;
  std::normal_distribution<double> g;
  Matrix a(n, rank);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) a(i, j) = Complex(g(rng), g(rng));
  }
  Matrix rho = a * a.adjoint();
  rho /= rho.trace().real();
  return DensityMatrix(std::move(reg), std::move(rho));
}

void DensityMatrix::normalize() {
  double t = trace();
  if (t <= 0.0) {
    throw std::domain_error("cannot normalize a density matrix with zero trace");
  }
  rho_ /= t;
}

double DensityMatrix::purity() const { return (rho_ * rho_).trace().real(); }

void DensityMatrix::conjugate(const Matrix& m, const std::vector<size_t>& targets) {
  Matrix left = apply_left(reg_, m, targets, rho_);
  Matrix both = apply_left(reg_, m, targets, left.adjoint());
  rho_ = both.adjoint();
}

namespace {

// Targets forming an ascending run of adjacent sites: the vector is a stack of
// (inner x block) column-major slabs, one per outer index.
struct Slabs {
  size_t outer = 0;
  size_t block = 0;
  size_t inner = 0;
};

std::optional<Slabs> contiguous_slabs(const QuditRegister& reg, const std::vector<size_t>& targets) {
  for (size_t k = 1; k < targets.size(); ++k) {
    if (targets[k] != targets[k - 1] + 1) return std::nullopt;
  }
  Slabs s;
  s.inner = reg.stride(targets.back());
  s.block = 1;
  for (size_t t : targets) s.block *= static_cast<size_t>(reg.dim(t));
  s.outer = reg.total_dim() / (s.block * s.inner);
  return s;
}

using SlabMap = Eigen::Map<Matrix, Eigen::Unaligned, Eigen::OuterStride<>>;

SlabMap slab(Complex* data, const Slabs& s, size_t o) {
  return SlabMap(data + o * s.block * s.inner, static_cast<Eigen::Index>(s.inner),
                 static_cast<Eigen::Index>(s.block), Eigen::OuterStride<>(static_cast<Eigen::Index>(s.inner)));
}

using PlainMap = Eigen::Map<Matrix>;

// Trailing targets: the whole vector is one (block x outer) matrix.
PlainMap trailing(Complex* data, const Slabs& s) {
  return PlainMap(data, static_cast<Eigen::Index>(s.block), static_cast<Eigen::Index>(s.outer));
}

void apply_slabs(const Slabs& s, const Matrix& m, Complex* data) {
  if (s.inner == 1) {
    PlainMap x = trailing(data, s);
    Matrix tmp = m * x;
    x = tmp;
    return;
  }
  const Matrix mt = m.transpose();
  Matrix tmp(static_cast<Eigen::Index>(s.inner), static_cast<Eigen::Index>(s.block));
  for (size_t o = 0; o < s.outer; ++o) {
    SlabMap x = slab(data, s, o);
    tmp.noalias() = x * mt;
    x = tmp;
  }
}

void apply_split(const SiteSplit& split, const Matrix& m, Complex* data) {
  const auto d = static_cast<Eigen::Index>(split.target_offsets.size());
  const auto rest = static_cast<Eigen::Index>(split.rest_offsets.size());
  Matrix block(d, rest);
  for (Eigen::Index r = 0; r < rest; ++r) {
    const size_t base = split.rest_offsets[static_cast<size_t>(r)];
    for (Eigen::Index t = 0; t < d; ++t) block(t, r) = data[base + split.target_offsets[static_cast<size_t>(t)]];
  }
  block = m * block;
  for (Eigen::Index r = 0; r < rest; ++r) {
    const size_t base = split.rest_offsets[static_cast<size_t>(r)];
    for (Eigen::Index t = 0; t < d; ++t) data[base + split.target_offsets[static_cast<size_t>(t)]] = block(t, r);
  }
}

void apply_targets(const QuditRegister& reg, const Matrix& m, const std::vector<size_t>& targets, Complex* data) {
  if (auto s = contiguous_slabs(reg, targets)) {
    apply_slabs(*s, m, data);
  } else {
    apply_split(split_sites(reg, targets), m, data);
  }
}

}  // namespace

void apply_to_vector(const QuditRegister& reg, const Matrix& m, const std::vector<size_t>& targets,
                     Vector& v) {
  check_operator_dim(reg, static_cast<size_t>(m.rows()), targets);
  if (m.cols() != m.rows()) {
    throw std::invalid_argument("operator must be square");
  }
  apply_targets(reg, m, targets, v.data());
}

Matrix apply_left(const QuditRegister& reg, const Matrix& m, const std::vector<size_t>& targets,
                  const Matrix& x) {
  check_operator_dim(reg, static_cast<size_t>(m.rows()), targets);
  if (m.cols() != m.rows()) {
    throw std::invalid_argument("operator must be square");
  }
  Matrix result = x;
  if (auto s = contiguous_slabs(reg, targets)) {
    for (Eigen::Index c = 0; c < result.cols(); ++c) apply_slabs(*s, m, result.col(c).data());
    return result;
  }
  SiteSplit split = split_sites(reg, targets);
  for (Eigen::Index c = 0; c < result.cols(); ++c) apply_split(split, m, result.col(c).data());
  return result;
}

StateVector apply_unitary(StateVector psi, const Unitary& u, const std::vector<size_t>& targets) {
  psi.apply(u, targets);
  return psi;
}

DensityMatrix apply_unitary(DensityMatrix rho, const Unitary& u, const std::vector<size_t>& targets) {
  rho.apply(u, targets);
  return rho;
}

DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                            const std::vector<size_t>& targets) {
  check_operator_dim(rho.reg(), ch.dim(), targets);
  Matrix acc = Matrix::Zero(rho.elements().rows(), rho.elements().cols());
  for (const auto& k : ch.operators()) {
    DensityMatrix term = rho;
    term.conjugate(k, targets);
    acc += term.elements();
  }
  return DensityMatrix(rho.reg(), std::move(acc));
}

std::vector<MeasurementBranch<StateVector>> measurement_branches(
    const StateVector& psi, const std::vector<Projector>& projectors, const std::vector<size_t>& targets) {
  check_projectors(projectors);
  check_operator_dim(psi.reg(), projectors.front().dim(), targets);
  std::vector<MeasurementBranch<StateVector>> out;
  out.reserve(projectors.size());
  for (size_t k = 0; k < projectors.size(); ++k) {
    Vector v = psi.amplitudes();
    apply_to_vector(psi.reg(), projectors[k].matrix(), targets, v);
    double p = v.squaredNorm();
    if (p > 0.0) {
      v /= std::sqrt(p);
    } else {
      v = psi.amplitudes();
    }
    out.push_back({k, p, StateVector(psi.reg(), std::move(v))});
  }
  return out;
}

std::vector<MeasurementBranch<DensityMatrix>> measurement_branches(
    const DensityMatrix& rho, const std::vector<Projector>& projectors, const std::vector<size_t>& targets) {
  check_projectors(projectors);
  check_operator_dim(rho.reg(), projectors.front().dim(), targets);
  std::vector<MeasurementBranch<DensityMatrix>> out;
  out.reserve(projectors.size());
  for (size_t k = 0; k < projectors.size(); ++k) {
    Matrix left = apply_left(rho.reg(), projectors[k].matrix(), targets, rho.elements());
    Matrix m = apply_left(rho.reg(), projectors[k].matrix(), targets, left.adjoint()).adjoint();
    double p = std::max(0.0, m.trace().real());
    if (p > 0.0) {
      m /= p;
      m = 0.5 * (m + m.adjoint()).eval();
    } else {
      m = rho.elements();
    }
    out.push_back({k, p, DensityMatrix(rho.reg(), std::move(m))});
  }
  return out;
}

namespace {

template <typename State>
MeasurementBranch<State> sample_branch(std::vector<MeasurementBranch<State>> branches, Rng& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double r = u(rng);
  double acc = 0.0;
  for (auto& b : branches) {
    acc += b.probability;
    if (r < acc) return std::move(b);
  }
  // Rounding: fall back to the last branch with nonzero probability.
  for (size_t k = branches.size(); k-- > 0;) {
    if (branches[k].probability > 0.0) return std::move(branches[k]);
  }
  throw std::logic_error("no branch with nonzero probability");
}

}  // namespace

MeasurementBranch<StateVector> measure_projective(const StateVector& psi, const std::vector<Projector>& projectors,
                                                  const std::vector<size_t>& targets, Rng& rng) {
  return sample_branch(measurement_branches(psi, projectors, targets), rng);
}

MeasurementBranch<DensityMatrix> measure_projective(const DensityMatrix& rho,
                                                    const std::vector<Projector>& projectors,
                                                    const std::vector<size_t>& targets, Rng& rng) {
  return sample_branch(measurement_branches(rho, projectors, targets), rng);
}

size_t measure_in_place(StateVector& psi, const std::vector<Projector>& projectors,
                        const std::vector<size_t>& targets, Rng& rng, double* probability) {
  check_projectors(projectors);
  check_operator_dim(psi.reg(), projectors.front().dim(), targets);
  // Reduced density matrix on the targets gives every Born probability in one pass.
  Matrix red;
  if (auto s = contiguous_slabs(psi.reg(), targets)) {
    red = Matrix::Zero(static_cast<Eigen::Index>(s->block), static_cast<Eigen::Index>(s->block));
    Complex* data = psi.mutable_amplitudes().data();
    if (s->inner == 1) {
      PlainMap x = trailing(data, *s);
      red.noalias() = x * x.adjoint();
    } else {
      for (size_t o = 0; o < s->outer; ++o) {
        SlabMap x = slab(data, *s, o);
        red.noalias() += x.adjoint() * x;
      }
      red = red.conjugate().eval();
    }
  } else {
    SiteSplit split = split_sites(psi.reg(), targets);
    const size_t d = split.target_offsets.size();
    red = Matrix::Zero(d, d);
    const Complex* data = psi.amplitudes().data();
    for (size_t base : split.rest_offsets) {
      for (size_t a = 0; a < d; ++a) {
        Complex va = data[base + split.target_offsets[a]];
        if (va == Complex(0.0)) continue;
        for (size_t b = 0; b < d; ++b) {
          red(a, b) += va * std::conj(data[base + split.target_offsets[b]]);
        }
      }
    }
  }
  std::vector<double> probs(projectors.size());
  for (size_t k = 0; k < projectors.size(); ++k) {
    probs[k] = std::max(0.0, (projectors[k].matrix() * red).trace().real());
  }
  std::discrete_distribution<size_t> dist(probs.begin(), probs.end());
  size_t k = dist(rng);
  apply_to_vector(psi.reg(), projectors[k].matrix() / std::sqrt(probs[k]), targets, psi.mutable_amplitudes());
  if (probability != nullptr) *probability = probs[k];
  return k;
}

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<size_t>& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("partial trace needs at least one kept site");
  }
  check_targets(rho.reg(), keep);
  std::vector<int> dims;
  for (size_t s : keep) dims.push_back(rho.reg().dim(s));
  SiteSplit split = split_sites(rho.reg(), keep);
  const size_t d = split.target_offsets.size();
  Matrix red = Matrix::Zero(d, d);
  const Matrix& m = rho.elements();
  for (size_t a = 0; a < d; ++a) {
    for (size_t b = 0; b < d; ++b) {
      Complex acc = 0.0;
      for (size_t r : split.rest_offsets) acc += m(split.target_offsets[a] + r, split.target_offsets[b] + r);
      red(a, b) = acc;
    }
  }
  return DensityMatrix(QuditRegister(dims), std::move(red));
}

DensityMatrix partial_trace(const StateVector& psi, const std::vector<size_t>& keep) {
  if (keep.empty()) {
    throw std::invalid_argument("partial trace needs at least one kept site");
  }
  check_targets(psi.reg(), keep);
  std::vector<int> dims;
  for (size_t s : keep) dims.push_back(psi.reg().dim(s));
  SiteSplit split = split_sites(psi.reg(), keep);
  const size_t d = split.target_offsets.size();
  Matrix amps(d, split.rest_offsets.size());
  const Vector& v = psi.amplitudes();
  for (size_t a = 0; a < d; ++a) {
    for (size_t r = 0; r < split.rest_offsets.size(); ++r) {
      amps(a, r) = v(split.target_offsets[a] + split.rest_offsets[r]);
    }
  }
  Matrix red = amps * amps.adjoint();
  return DensityMatrix(QuditRegister(dims), std::move(red));
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.reg() != b.reg()) {
    throw std::invalid_argument("fidelity between different registers");
  }
  return std::norm(a.amplitudes().dot(b.amplitudes()));
}

double fidelity(const DensityMatrix& rho, const StateVector& psi) {
  if (rho.reg() != psi.reg()) {
    throw std::invalid_argument("fidelity between different registers");
  }
  const Vector& v = psi.amplitudes();
  return std::clamp((v.adjoint() * rho.elements() * v)(0, 0).real(), 0.0, 1.0);
}

double fidelity(const StateVector& psi, const DensityMatrix& rho) { return fidelity(rho, psi); }

double fidelity(const DensityMatrix& a, const DensityMatrix& b) {
  if (a.reg() != b.reg()) {
    throw std::invalid_argument("fidelity between different registers");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(a.elements());
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
  Matrix sqrt_a = es.eigenvectors() * ev.asDiagonal() * es.eigenvectors().adjoint();
  Matrix inner = sqrt_a * b.elements() * sqrt_a;
  Eigen::SelfAdjointEigenSolver<Matrix> es2(0.5 * (inner + inner.adjoint()));
  double s = es2.eigenvalues().cwiseMax(0.0).cwiseSqrt().sum();
  return std::clamp(s * s, 0.0, 1.0);
}

double von_neumann_entropy(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho.elements());
  double s = 0.0;
  for (double l : es.eigenvalues()) {
    if (l > 1e-15) s -= l * std::log2(l);
  }
  return s;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
    }
  }
  return out;
}

Matrix kron(const std::vector<Matrix>& factors) {
  if (factors.empty()) {
    throw std::invalid_argument("kron of an empty list");
  }
  Matrix out = factors.front();
  for (size_t k = 1; k < factors.size(); ++k) out = kron(out, factors[k]);
  return out;
}

Matrix haar_unitary(size_t dim, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix z(dim, dim);
  for (size_t i = 0; i < dim; ++i) {
    for (size_t j = 0; j < dim; ++j) z(i, j) = Complex(g(rng), g(rng)) / std::sqrt(2.0);
  }
  Eigen::HouseholderQR<Matrix> qr(z);
  Matrix q = qr.householderQ();
  Matrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (size_t j = 0; j < dim; ++j) {
    Complex d = r(j, j);
    q.col(j) *= d / std::abs(d);
  }
  return q;
}

Matrix expm_hermitian(const Matrix& h, double t) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (h + h.adjoint()));
  Vector phases(es.eigenvalues().size());
  for (Eigen::Index k = 0; k < phases.size(); ++k) phases(k) = std::exp(-kI * es.eigenvalues()(k) * t);
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

namespace pauli {

Matrix I() { return Matrix::Identity(2, 2); }

Matrix X() {
  Matrix m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

Matrix Y() {
  Matrix m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

Matrix Z() {
  Matrix m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

Matrix H() { return (X() + Z()) / std::sqrt(2.0); }

Matrix cnot() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1.0;
  return m;
}

Matrix cz() {
  Matrix m = Matrix::Identity(4, 4);
  m(3, 3) = -1.0;
  return m;
}

Matrix swap() {
  Matrix m = Matrix::Zero(4, 4);
  m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1.0;
  return m;
}

Matrix rotation(double theta, double nx, double ny, double nz) {
  double n = std::sqrt(nx * nx + ny * ny + nz * nz);
  if (std::abs(n - 1.0) > 1e-9) {
    throw std::invalid_argument("rotation axis must be a unit vector");
  }
  Matrix gen = nx * X() + ny * Y() + nz * Z();
  return std::cos(theta / 2) * I() - kI * std::sin(theta / 2) * gen;
}

}  // namespace pauli

}  // namespace ququart
