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

#include "ququart/angular.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <boost/math/special_functions/spherical_harmonic.hpp>
#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace ququart {

namespace {

constexpr int kMaxFactorial = 200;

const std::array<double, kMaxFactorial + 1>& log_factorials() {
  static const auto table = [] {
    std::array<double, kMaxFactorial + 1> t{};
    t[0] = 0.0;
    for (int k = 1; k <= kMaxFactorial; ++k) t[k] = t[k - 1] + std::log(static_cast<double>(k));
    return t;
  }();
  return table;
}

double log_fact(int n) {
  if (n < 0 || n > kMaxFactorial) {
    throw std::out_of_range("factorial argument out of table range");
  }
  return log_factorials()[n];
}

int doubled(double x) {
  double y = 2.0 * x;
  double r = std::round(y);
  if (std::abs(y - r) > 1e-9) {
    throw std::invalid_argument("angular momentum value is not a multiple of 1/2");
  }
  return static_cast<int>(r);
}

bool triangle(int a, int b, int c) {
  return c >= std::abs(a - b) && c <= a + b && ((a + b + c) % 2 == 0);
}

// log of sqrt(Delta(a b c)) in doubled arguments.
double log_delta(int a, int b, int c) {
  return 0.5 * (log_fact((a + b - c) / 2) + log_fact((a - b + c) / 2) + log_fact((-a + b + c) / 2) -
                log_fact((a + b + c) / 2 + 1));
}

double sign_of(int exponent) { return (exponent % 2 == 0) ? 1.0 : -1.0; }

double wigner3j_doubled(int j1, int j2, int j3, int m1, int m2, int m3) {
  if (m1 + m2 + m3 != 0) return 0.0;
  if (!triangle(j1, j2, j3)) return 0.0;
  if (std::abs(m1) > j1 || std::abs(m2) > j2 || std::abs(m3) > j3) return 0.0;
  if ((j1 + m1) % 2 != 0 || (j2 + m2) % 2 != 0 || (j3 + m3) % 2 != 0) return 0.0;
  const int a = (j1 + j2 - j3) / 2;
  const int b = (j1 - m1) / 2;
  const int c = (j2 + m2) / 2;
  const int d = (j3 - j2 + m1) / 2;
  const int e = (j3 - j1 - m2) / 2;
  const int kmin = std::max({0, -d, -e});
  const int kmax = std::min({a, b, c});
  if (kmin > kmax) return 0.0;
  const double pre = log_delta(j1, j2, j3) +
                     0.5 * (log_fact((j1 + m1) / 2) + log_fact((j1 - m1) / 2) + log_fact((j2 + m2) / 2) +
                            log_fact((j2 - m2) / 2) + log_fact((j3 + m3) / 2) + log_fact((j3 - m3) / 2));
  double sum = 0.0;
  for (int k = kmin; k <= kmax; ++k) {
    double lg = pre - (log_fact(k) + log_fact(a - k) + log_fact(b - k) + log_fact(c - k) + log_fact(d + k) +
                       log_fact(e + k));
    sum += sign_of(k) * std::exp(lg);
  }
  return sign_of((j1 - j2 - m3) / 2) * sum;
}

double wigner6j_doubled(int j1, int j2, int j3, int j4, int j5, int j6) {
  if (!triangle(j1, j2, j3) || !triangle(j1, j5, j6) || !triangle(j4, j2, j6) || !triangle(j4, j5, j3)) {
    return 0.0;
  }
  const int a1 = (j1 + j2 + j3) / 2;
  const int a2 = (j1 + j5 + j6) / 2;
  const int a3 = (j4 + j2 + j6) / 2;
  const int a4 = (j4 + j5 + j3) / 2;
  const int b1 = (j1 + j2 + j4 + j5) / 2;
  const int b2 = (j2 + j3 + j5 + j6) / 2;
  const int b3 = (j3 + j1 + j6 + j4) / 2;
  const int tmin = std::max({a1, a2, a3, a4});
  const int tmax = std::min({b1, b2, b3});
  const double pre = log_delta(j1, j2, j3) + log_delta(j1, j5, j6) + log_delta(j4, j2, j6) + log_delta(j4, j5, j3);
  double sum = 0.0;
  for (int t = tmin; t <= tmax; ++t) {
    double lg = pre + log_fact(t + 1) -
                (log_fact(t - a1) + log_fact(t - a2) + log_fact(t - a3) + log_fact(t - a4) + log_fact(b1 - t) +
                 log_fact(b2 - t) + log_fact(b3 - t));
    sum += sign_of(t) * std::exp(lg);
  }
  return sum;
}

AngularMomentumState make_state(int n, int two_l, int two_j, int two_mf) {
  AngularMomentumState s;
  s.n = n;
  s.two_l = two_l;
  s.two_s = 2;
  s.two_j = two_j;
  s.two_i = 1;
  s.two_f = two_j + 1;
  s.two_mf = two_mf;
  return s;
}

}  // namespace

double wigner3j(double j1, double j2, double j3, double m1, double m2, double m3) {
  return wigner3j_doubled(doubled(j1), doubled(j2), doubled(j3), doubled(m1), doubled(m2), doubled(m3));
}

double wigner6j(double j1, double j2, double j3, double j4, double j5, double j6) {
  return wigner6j_doubled(doubled(j1), doubled(j2), doubled(j3), doubled(j4), doubled(j5), doubled(j6));
}

double clebsch_gordan(double j1, double m1, double j2, double m2, double j3, double m3) {
  int tj1 = doubled(j1), tj2 = doubled(j2), tj3 = doubled(j3);
  int tm1 = doubled(m1), tm2 = doubled(m2), tm3 = doubled(m3);
  double w = wigner3j_doubled(tj1, tj2, tj3, tm1, tm2, -tm3);
  if (w == 0.0) return 0.0;
  return sign_of((tj1 - tj2 + tm3) / 2) * std::sqrt(tj3 + 1.0) * w;
}

Complex spherical_harmonic(int l, int m, double theta, double phi) {
  if (l < 0) {
    throw std::invalid_argument("spherical harmonic degree must be non-negative");
  }
  if (std::abs(m) > l) return 0.0;
  return boost::math::spherical_harmonic(static_cast<unsigned>(l), m, theta, phi);
}

void AngularMomentumState::validate() const {
  auto tri = [](int a, int b, int c) { return c >= std::abs(a - b) && c <= a + b && (a + b + c) % 2 == 0; };
  if (!tri(two_l, two_s, two_j) || !tri(two_j, two_i, two_f) || std::abs(two_mf) > two_f ||
      (two_f + two_mf) % 2 != 0) {
    throw std::invalid_argument("inconsistent angular momentum quantum numbers");
  }
}

std::string AngularMomentumState::label() const {
  static const char* kL = "SPDFG";
  std::ostringstream out;
  out << (two_s + 1) << (two_l / 2 < 5 ? kL[two_l / 2] : '?') << two_j / 2 << " F=" << two_f << "/2 mF=" << two_mf
      << "/2";
  return out.str();
}

std::vector<AngularMomentumState> hyperfine_basis(int n) {
  // (2L, 2J) for 3S1, 3P0, 3P1, 3P2, 3D1.
  const std::array<std::pair<int, int>, 5> levels = {{{0, 2}, {2, 0}, {2, 2}, {2, 4}, {4, 2}}};
  std::vector<AngularMomentumState> out;
  for (auto [two_l, two_j] : levels) {
    int two_f = two_j + 1;
    for (int two_mf = -two_f; two_mf <= two_f; two_mf += 2) {
      auto s = make_state(n, two_l, two_j, two_mf);
      s.validate();
      out.push_back(s);
    }
  }
  return out;
}

std::vector<PairState> stretched_s_pairs(const std::vector<AngularMomentumState>& basis) {
  std::vector<AngularMomentumState> s_states;
  for (const auto& s : basis) {
    if (s.two_l == 0 && s.two_j == 2 && s.two_f == 3) s_states.push_back(s);
  }
  std::sort(s_states.begin(), s_states.end(),
            [](const auto& x, const auto& y) { return x.two_mf < y.two_mf; });
  std::vector<PairState> out;
  for (const auto& a : s_states) {
    for (const auto& b : s_states) out.push_back({a, b});
  }
  return out;
}

Complex dtilde(int k1, int k2, const PairState& s_prime, const PairState& s, const RhoHat& rho_hat) {
  const auto& a1p = s_prime.a;
  const auto& a2p = s_prime.b;
  const auto& a1 = s.a;
  const auto& a2 = s.b;
  const int tk1 = 2 * k1;
  const int tk2 = 2 * k2;

  // Parity selection first: it rejects most pairs cheaply.
  double three_l = wigner3j_doubled(a1p.two_l, tk1, a1.two_l, 0, 0, 0) *
                   wigner3j_doubled(a2p.two_l, tk2, a2.two_l, 0, 0, 0);
  if (three_l == 0.0) return 0.0;

  // The second atom's fine-structure 6j couples its own primed J.
  double six_j = wigner6j_doubled(a1p.two_j, a1p.two_f, a1p.two_i, a1.two_f, a1.two_j, tk1) *
                 wigner6j_doubled(a2p.two_j, a2p.two_f, a2p.two_i, a2.two_f, a2.two_j, tk2) *
                 wigner6j_doubled(a1p.two_l, a1p.two_j, a1p.two_s, a1.two_j, a1.two_l, tk1) *
                 wigner6j_doubled(a2p.two_l, a2p.two_j, a2p.two_s, a2.two_j, a2.two_l, tk2);
  if (six_j == 0.0) return 0.0;

  Complex angular = 0.0;
  const int K = k1 + k2;
  for (int q1 = -k1; q1 <= k1; ++q1) {
    double w1 = wigner3j_doubled(a1p.two_f, tk1, a1.two_f, -a1p.two_mf, 2 * q1, a1.two_mf);
    if (w1 == 0.0) continue;
    for (int q2 = -k2; q2 <= k2; ++q2) {
      double w2 = wigner3j_doubled(a2p.two_f, tk2, a2.two_f, -a2p.two_mf, 2 * q2, a2.two_mf);
      if (w2 == 0.0) continue;
      int q = q1 + q2;
      double cg = clebsch_gordan(k1, q1, k2, q2, K, q);
      if (cg == 0.0) continue;
      angular += w1 * w2 * cg * spherical_harmonic(K, q, rho_hat.theta, rho_hat.phi);
    }
  }
  if (angular == Complex(0.0)) return 0.0;

  // Doubled phase exponent: -F1 + k1 - mF1' - F2 + k2 - mF2' + J1' + J2' - L1 - L2 + 2I + 2S + k1 + k2.
  int two_exp = -a1.two_f + tk1 - a1p.two_mf - a2.two_f + tk2 - a2p.two_mf + a1p.two_j + a2p.two_j - a1.two_l -
                a2.two_l + 2 * a1.two_i + 2 * a1.two_s + tk1 + tk2;
  if (two_exp % 2 != 0) {
    throw std::logic_error("non-integer phase exponent in dipole matrix element");
  }
  double phase = sign_of(std::abs(two_exp / 2)) * sign_of(k2);
  double pre = std::sqrt(4.0 * std::numbers::pi / (2 * K + 1) *
                         std::exp(log_fact(2 * K) - log_fact(2 * k1) - log_fact(2 * k2)));
  double dims = std::sqrt(static_cast<double>(a1p.two_f + 1) * (a2p.two_f + 1) * (a1p.two_j + 1) * (a2p.two_j + 1) *
                          (a1p.two_l + 1) * (a2p.two_l + 1) * (a1.two_f + 1) * (a2.two_f + 1) * (a1.two_j + 1) *
                          (a2.two_j + 1) * (a1.two_l + 1) * (a2.two_l + 1));
  return phase * pre * dims * six_j * three_l * angular;
}

C6Matrix build_c6_matrix(const std::vector<AngularMomentumState>& basis, const std::vector<PairState>& targets,
                         const RhoHat& rho_hat) {
  if (basis.size() != 20) {
    throw std::invalid_argument("C6 calculation expects the 20-state hyperfine basis");
  }
  for (const auto& s : basis) s.validate();
  std::vector<PairState> pairs;
  pairs.reserve(basis.size() * basis.size());
  for (const auto& a : basis) {
    for (const auto& b : basis) pairs.push_back({a, b});
  }
  const Eigen::Index nt = static_cast<Eigen::Index>(targets.size());
  const Eigen::Index np = static_cast<Eigen::Index>(pairs.size());
  Matrix left(nt, np), right(np, nt);
  for (Eigen::Index i = 0; i < nt; ++i) {
    for (Eigen::Index p = 0; p < np; ++p) {
      left(i, p) = dtilde(1, 1, targets[i], pairs[p], rho_hat);
      right(p, i) = dtilde(1, 1, pairs[p], targets[i], rho_hat);
    }
  }
  C6Matrix out;
  out.basis = targets;
  out.matrix = -(left * right);
  out.rho_hat = rho_hat;
  return out;
}

C6Weights c6_weights(const C6Matrix& c6m, double c6_prime) {
  if (!is_hermitian(c6m.matrix, 1e-9 * std::max(1.0, c6m.matrix.norm()))) {
    throw std::invalid_argument("C6 matrix is not Hermitian");
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(c6m.matrix);
  const Matrix& vecs = es.eigenvectors();
  const Eigen::Index n = c6m.matrix.rows();
  C6Weights w;
  w.basis = c6m.basis;
  std::vector<double> lambda(n);
  for (Eigen::Index j = 0; j < n; ++j) {
    lambda[j] = (vecs.col(j).adjoint() * c6m.matrix * vecs.col(j))(0, 0).real();
  }
  w.raw.assign(n, 0.0);
  for (Eigen::Index k = 0; k < n; ++k) {
    // sum_j <k|j><j|C6|j><j|k> with |j> the j-th eigenvector.
    for (Eigen::Index j = 0; j < n; ++j) w.raw[k] += std::norm(vecs(k, j)) * lambda[j];
  }
  double max_abs = 0.0;
  for (double v : w.raw) max_abs = std::max(max_abs, std::abs(v));
  if (max_abs == 0.0) {
    throw std::domain_error("C6 weights vanish identically");
  }
  for (double v : w.raw) {
    w.normalized.push_back(v / max_abs);
    w.physical.push_back(std::abs(c6_prime) * v / max_abs);
  }
  return w;
}

Eigen::Matrix4d c6_table(const RhoHat& rho_hat) {
  auto basis = hyperfine_basis();
  auto targets = stretched_s_pairs(basis);
  auto w = c6_weights(build_c6_matrix(basis, targets, rho_hat), 1.0);
  Eigen::Matrix4d t;
  for (int a = 0; a < 4; ++a) {
    for (int b = 0; b < 4; ++b) t(a, b) = w.normalized[4 * a + b];
  }
  return t;
}

}  // namespace ququart
