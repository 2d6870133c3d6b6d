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

#include "ququart/tomography.hpp"

#include <cctype>
#include <cmath>
#include <numbers>
#include <random>
#include <stdexcept>

namespace ququart {

namespace {

constexpr double kRowTol = 1e-9;

Matrix half_pi(const Matrix& sigma) { return expm_hermitian(sigma, std::numbers::pi / 4.0); }

void check_record(const TomographyRecord& p, size_t settings) {
  if (static_cast<size_t>(p.rows()) != settings || p.cols() != 4) {
    throw std::invalid_argument("tomography record has the wrong shape");
  }
  for (Eigen::Index s = 0; s < p.rows(); ++s) {
    if (std::abs(p.row(s).sum() - 1.0) > kRowTol || (p.row(s).array() < -kRowTol).any()) {
      throw std::invalid_argument("tomography record rows must be probability distributions");
    }
  }
}

QstResult finish(Matrix rho) {
  rho = 0.5 * (rho + rho.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
  QstResult r{DensityMatrix(QuditRegister({4}), rho), es.eigenvalues().minCoeff(), true};
  r.physical = r.min_eigenvalue >= -1e-12;
  return r;
}

}  // namespace

std::vector<MeasurementSetting> pauli_settings() {
  const std::vector<std::pair<char, Matrix>> r = {
      {'0', pauli::I()}, {'x', half_pi(pauli::X())}, {'y', half_pi(pauli::Y())}};
  std::vector<MeasurementSetting> out;
  for (const auto& a : r) {
    for (const auto& b : r) out.push_back({std::string{a.first, b.first}, kron(a.second, b.second)});
  }
  return out;
}

Matrix ladder_pulse(char axis, int j, int k) {
  if (j < 0 || k < 0 || j > 3 || k > 3 || j == k) {
    throw std::invalid_argument("ladder pulse levels must be distinct and in [0, 3]");
  }
  Matrix g = Matrix::Zero(4, 4);
  if (axis == 'x') {
    g(j, k) = g(k, j) = 1.0;
  } else if (axis == 'y') {
    g(j, k) = -kI;
    g(k, j) = kI;
  } else {
    throw std::invalid_argument("ladder pulse axis must be x or y");
  }
  return expm_hermitian(g, -std::numbers::pi / 4.0);
}

std::vector<MeasurementSetting> ladder_settings() {
  auto seq = [](const std::string& name) {
    Matrix u = Matrix::Identity(4, 4);
    for (size_t i = 0; i + 2 < name.size() + 1; i += 3) {
      u = u * ladder_pulse(static_cast<char>(std::tolower(name[i])), name[i + 1] - '0', name[i + 2] - '0');
    }
    return MeasurementSetting{name, u};
  };
  std::vector<MeasurementSetting> out = {{"populations", Matrix::Identity(4, 4)}};
  for (const char* n : {"X01", "Y01", "X12", "Y12", "X23", "Y23", "X12X01", "Y12X01", "X23X12", "Y23X12",
                        "Y23Y12Y01", "X23X12X01"}) {
    out.push_back(seq(n));
  }
  return out;
}

TomographyRecord forward_probabilities(const DensityMatrix& rho, const std::vector<MeasurementSetting>& settings) {
  if (rho.elements().rows() != 4) {
    throw std::invalid_argument("tomography acts on a four-level state");
  }
  TomographyRecord p(static_cast<Eigen::Index>(settings.size()), 4);
  for (size_t s = 0; s < settings.size(); ++s) {
    Matrix m = settings[s].rotation * rho.elements() * settings[s].rotation.adjoint();
    for (Eigen::Index k = 0; k < 4; ++k) p(static_cast<Eigen::Index>(s), k) = m(k, k).real();
  }
  return p;
}

QstMethod parse_qst_method(const std::string& name) {
  if (name == "pauli") return QstMethod::kPauli;
  if (name == "ladder") return QstMethod::kLadder;
  throw std::invalid_argument("unknown tomography method: " + name);
}

std::vector<MeasurementSetting> settings_for(QstMethod method) {
  return method == QstMethod::kPauli ? pauli_settings() : ladder_settings();
}

QstResult pauli_qst(const TomographyRecord& probabilities) {
  const auto settings = pauli_settings();
  check_record(probabilities, settings.size());
  const std::vector<Matrix> sig = {pauli::I(), pauli::X(), pauli::Y(), pauli::Z()};
  std::vector<Matrix> basis;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) basis.push_back(kron(sig[a], sig[b]));
  }
  const Eigen::Index rows = static_cast<Eigen::Index>(settings.size()) * 4;
  RealMatrix a = RealMatrix::Zero(rows, 15);
  Eigen::VectorXd rhs(rows);
  for (size_t s = 0; s < settings.size(); ++s) {
    const Matrix& u = settings[s].rotation;
    for (Eigen::Index k = 0; k < 4; ++k) {
      const Eigen::Index row = static_cast<Eigen::Index>(s) * 4 + k;
      Matrix e = u.adjoint().col(k) * u.row(k);  // U^dag |k><k| U
      rhs(row) = probabilities(static_cast<Eigen::Index>(s), k) - 0.25 * e.trace().real();
      for (int c = 1; c < 16; ++c) a(row, c - 1) = (e * basis[c]).trace().real();
    }
  }
  Eigen::VectorXd alpha = a.colPivHouseholderQr().solve(rhs);
  Matrix rho = 0.25 * basis[0];
  for (int c = 1; c < 16; ++c) rho += alpha(c - 1) * basis[c];
  return finish(rho);
}

QstResult ladder_qst(const TomographyRecord& probabilities) {
  const auto settings = ladder_settings();
  check_record(probabilities, settings.size());
  auto r = [&](const std::string& name, int level) {
    for (size_t s = 0; s < settings.size(); ++s) {
      if (settings[s].name == name) return probabilities(static_cast<Eigen::Index>(s), level);
    }
    throw std::logic_error("missing ladder setting " + name);
  };
  const double s2 = std::sqrt(2.0);
  Matrix rho = Matrix::Zero(4, 4);
  for (int k = 0; k < 4; ++k) rho(k, k) = r("populations", k);
  const double re01 = (r("Y01", 0) - r("Y01", 1)) / 2.0;
  const double im01 = (r("X01", 0) - r("X01", 1)) / 2.0;
  const double re12 = (r("Y12", 1) - r("Y12", 2)) / 2.0;
  const double im12 = (r("X12", 1) - r("X12", 2)) / 2.0;
  const double re23 = (r("Y23", 2) - r("Y23", 3)) / 2.0;
  const double im23 = (r("X23", 2) - r("X23", 3)) / 2.0;
  const double re02 = (r("X12X01", 1) - r("X12X01", 2) - s2 * im12) / s2;
  const double im02 = (r("Y12X01", 2) - r("Y12X01", 1) + s2 * re12) / s2;
  const double re13 = (r("X23X12", 2) - r("X23X12", 3) - s2 * im23) / s2;
  const double im13 = (r("Y23X12", 3) - r("Y23X12", 2) + s2 * re23) / s2;
  const double re03 = r("Y23Y12Y01", 2) - r("Y23Y12Y01", 3) - s2 * re23 + re13;
  const double im03 = r("X23X12X01", 3) - r("X23X12X01", 2) + s2 * im23 + re13;
  const double re[4][4] = {{0, re01, re02, re03}, {0, 0, re12, re13}, {0, 0, 0, re23}, {0, 0, 0, 0}};
  const double im[4][4] = {{0, im01, im02, im03}, {0, 0, im12, im13}, {0, 0, 0, im23}, {0, 0, 0, 0}};
  for (int j = 0; j < 4; ++j) {
    for (int k = j + 1; k < 4; ++k) {
      rho(j, k) = Complex(re[j][k], im[j][k]);
      rho(k, j) = std::conj(rho(j, k));
    }
  }
  return finish(rho);
}

QstResult reconstruct(QstMethod method, const TomographyRecord& probabilities) {
  return method == QstMethod::kPauli ? pauli_qst(probabilities) : ladder_qst(probabilities);
}

DensityMatrix clip_to_psd(const DensityMatrix& rho) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (rho.elements() + rho.elements().adjoint()));
  Eigen::VectorXd ev = es.eigenvalues().cwiseMax(0.0);
  if (ev.sum() <= 0.0) {
    throw std::runtime_error("reconstruction has no positive weight");
  }
  ev /= ev.sum();
  Matrix m = es.eigenvectors() * ev.cast<Complex>().asDiagonal() * es.eigenvectors().adjoint();
  return DensityMatrix(rho.reg(), m);
}

SampledQst sample_and_reconstruct(const DensityMatrix& truth, size_t shots, QstMethod method, Rng& rng) {
  if (shots == 0) {
    throw std::invalid_argument("need at least one shot");
  }
  TomographyRecord p = forward_probabilities(truth, settings_for(method));
  TomographyRecord f = TomographyRecord::Zero(p.rows(), p.cols());
  for (Eigen::Index s = 0; s < p.rows(); ++s) {
    std::discrete_distribution<int> d({std::max(0.0, p(s, 0)), std::max(0.0, p(s, 1)), std::max(0.0, p(s, 2)),
                                       std::max(0.0, p(s, 3))});
    for (size_t n = 0; n < shots; ++n) f(s, d(rng)) += 1.0;
    f.row(s) /= static_cast<double>(shots);
  }
  SampledQst out{reconstruct(method, f), 0.0, 0.0};
  out.frobenius_error = (out.estimate.rho.elements() - truth.elements()).norm();
  out.infidelity = 1.0 - fidelity(clip_to_psd(out.estimate.rho), truth);
  return out;
}

}  // namespace ququart
