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

#ifndef QUQUART_QCORE_HPP
#define QUQUART_QCORE_HPP

#include <Eigen/Dense>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

namespace ququart {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using Rng = std::mt19937_64;

inline constexpr Complex kI{0.0, 1.0};

// Ordered list of local dimensions. Site 0 is the most significant digit of
// the flattened index.
class QuditRegister {
 public:
  explicit QuditRegister(std::vector<int> dims);

  const std::vector<int>& dims() const { return dims_; }
  size_t num_sites() const { return dims_.size(); }
  size_t total_dim() const { return total_dim_; }
  size_t stride(size_t site) const { return strides_.at(site); }
  int dim(size_t site) const { return dims_.at(site); }

  // Product of the local dimensions of `sites`.
  size_t subspace_dim(const std::vector<size_t>& sites) const;

  // Flattened index <-> per-site digits.
  size_t index_of(const std::vector<int>& digits) const;
  std::vector<int> digits_of(size_t index) const;

  bool operator==(const QuditRegister& other) const { return dims_ == other.dims_; }
  bool operator!=(const QuditRegister& other) const { return !(*this == other); }

 private:
  std::vector<int> dims_;
  std::vector<size_t> strides_;
  size_t total_dim_;
};

// Offsets used to address a subset of sites. `target_offsets[t]` is the flat
// offset of local configuration t on the targets (targets in the given order,
// first target most significant); `rest_offsets[r]` enumerates every
// configuration of the other sites.
struct SiteSplit {
  std::vector<size_t> target_offsets;
  std::vector<size_t> rest_offsets;
};
SiteSplit split_sites(const QuditRegister& reg, const std::vector<size_t>& targets);

class Unitary {
 public:
  explicit Unitary(Matrix m, double tol = 1e-9);
  static Unitary identity(size_t dim);

  size_t dim() const { return static_cast<size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }
  Unitary adjoint() const;
  Unitary operator*(const Unitary& rhs) const;

 private:
  Matrix m_;
};

class KrausChannel {
 public:
  explicit KrausChannel(std::vector<Matrix> ops, double tol = 1e-9);

  size_t dim() const { return static_cast<size_t>(ops_.front().rows()); }
  const std::vector<Matrix>& operators() const { return ops_; }

 private:
  std::vector<Matrix> ops_;
};

class Projector {
 public:
  explicit Projector(Matrix m, double tol = 1e-9);
  static Projector onto(const Vector& v);
  static Projector basis(size_t dim, const std::vector<size_t>& levels);

  size_t dim() const { return static_cast<size_t>(m_.rows()); }
  const Matrix& matrix() const { return m_; }

 private:
  Matrix m_;
};

class StateVector {
 public:
  StateVector(QuditRegister reg, Vector amplitudes);
  static StateVector basis(QuditRegister reg, const std::vector<int>& digits);
  static StateVector random(QuditRegister reg, Rng& rng);

  const QuditRegister& reg() const { return reg_; }
  const Vector& amplitudes() const { return amps_; }
  Vector& mutable_amplitudes() { return amps_; }
  Complex amplitude(const std::vector<int>& digits) const { return amps_(reg_.index_of(digits)); }

  double norm() const { return amps_.norm(); }
  void normalize();

  // In-place U on targets (identity elsewhere).
  void apply(const Matrix& u, const std::vector<size_t>& targets);
  void apply(const Unitary& u, const std::vector<size_t>& targets) { apply(u.matrix(), targets); }

 private:
  QuditRegister reg_;
  Vector amps_;
};

class DensityMatrix {
 public:
  DensityMatrix(QuditRegister reg, Matrix elements);
  explicit DensityMatrix(const StateVector& psi);
  static DensityMatrix maximally_mixed(QuditRegister reg);
  static DensityMatrix random(QuditRegister reg, Rng& rng, size_t rank = 0);

  const QuditRegister& reg() const { return reg_; }
  const Matrix& elements() const { return rho_; }
  Matrix& mutable_elements() { return rho_; }

  double trace() const { return rho_.trace().real(); }
  void normalize();
  double purity() const;

  // rho -> (M on targets) rho (M on targets)^dagger, in place.
  void conjugate(const Matrix& m, const std::vector<size_t>& targets);
  void apply(const Unitary& u, const std::vector<size_t>& targets) { conjugate(u.matrix(), targets); }

 private:
  QuditRegister reg_;
  Matrix rho_;
};

// (M on targets) X, for X with rows indexed by `reg`.
Matrix apply_left(const QuditRegister& reg, const Matrix& m, const std::vector<size_t>& targets,
                  const Matrix& x);
// Vector version of apply_left.
void apply_to_vector(const QuditRegister& reg, const Matrix& m, const std::vector<size_t>& targets,
                     Vector& v);

StateVector apply_unitary(StateVector psi, const Unitary& u, const std::vector<size_t>& targets);
DensityMatrix apply_unitary(DensityMatrix rho, const Unitary& u, const std::vector<size_t>& targets);
DensityMatrix apply_channel(const DensityMatrix& rho, const KrausChannel& ch,
                            const std::vector<size_t>& targets);

template <typename State>
struct MeasurementBranch {
  size_t outcome;
  double probability;
  State state;  // normalized; meaningless if probability == 0
};

// All outcomes with their Born probabilities.
std::vector<MeasurementBranch<StateVector>> measurement_branches(
    const StateVector& psi, const std::vector<Projector>& projectors, const std::vector<size_t>& targets);
std::vector<MeasurementBranch<DensityMatrix>> measurement_branches(
    const DensityMatrix& rho, const std::vector<Projector>& projectors, const std::vector<size_t>& targets);

// Samples one outcome.
MeasurementBranch<StateVector> measure_projective(const StateVector& psi, const std::vector<Projector>& projectors,
                                                  const std::vector<size_t>& targets, Rng& rng);
MeasurementBranch<DensityMatrix> measure_projective(const DensityMatrix& rho,
                                                    const std::vector<Projector>& projectors,
                                                    const std::vector<size_t>& targets, Rng& rng);

// In-place variant for large vectors: projects `psi` onto the sampled outcome.
size_t measure_in_place(StateVector& psi, const std::vector<Projector>& projectors,
                        const std::vector<size_t>& targets, Rng& rng, double* probability = nullptr);

DensityMatrix partial_trace(const DensityMatrix& rho, const std::vector<size_t>& keep);
DensityMatrix partial_trace(const StateVector& psi, const std::vector<size_t>& keep);

double fidelity(const StateVector& a, const StateVector& b);
double fidelity(const DensityMatrix& rho, const StateVector& psi);
double fidelity(const StateVector& psi, const DensityMatrix& rho);
double fidelity(const DensityMatrix& a, const DensityMatrix& b);

double von_neumann_entropy(const DensityMatrix& rho);

Matrix kron(const Matrix& a, const Matrix& b);
Matrix kron(const std::vector<Matrix>& factors);

// Haar-random unitary (QR of a complex Ginibre matrix with phase fix).
Matrix haar_unitary(size_t dim, Rng& rng);

// Matrix exponential of -i H t for Hermitian H.
Matrix expm_hermitian(const Matrix& h, double t);

bool is_unitary(const Matrix& m, double tol);
bool is_hermitian(const Matrix& m, double tol);

namespace pauli {
Matrix I();
Matrix X();
Matrix Y();
Matrix Z();
Matrix H();
Matrix cnot();
Matrix cz();
Matrix swap();
// exp(-i theta (n . sigma) / 2)
Matrix rotation(double theta, double nx, double ny, double nz);
}  // namespace pauli

}  // namespace ququart

#endif  // QUQUART_QCORE_HPP
