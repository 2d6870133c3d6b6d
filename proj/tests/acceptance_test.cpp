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

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "ququart/aklt.hpp"
#include "ququart/angular.hpp"
#include "ququart/code422.hpp"
#include "ququart/distill.hpp"
#include "ququart/ftqec.hpp"
#include "ququart/noise.hpp"
#include "ququart/pulses.hpp"
#include "ququart/qcore.hpp"
#include "ququart/ququart_gates.hpp"
#include "ququart/readout.hpp"
#include "ququart/rydberg_sim.hpp"
#include "ququart/tomography.hpp"

using namespace ququart;

namespace {

constexpr double kPi = std::numbers::pi;

struct Check {
  bool ok = true;
  std::ostringstream detail;

  void require(bool condition, const std::string& what) {
    if (!condition) {
      ok = false;
      detail << " [failed: " << what << "]";
    }
  }
};

// ---------------------------------------------------------------- 1. C6 table

void c6_table_check(Check& c) {
  Eigen::Matrix4d published;
  published << -0.989, -0.980, -0.984, -1.000,
               -0.980, -0.969, -0.970, -0.984,
               -0.984, -0.970, -0.969, -0.980,
               -1.000, -0.984, -0.980, -0.989;
  const Eigen::Matrix4d t = c6_table();
  const double dev = (t - published).cwiseAbs().maxCoeff();
  double asym = 0.0;
  double reflect = 0.0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      asym = std::max(asym, std::abs(t(i, j) - t(j, i)));
      reflect = std::max(reflect, std::abs(t(i, j) - t(3 - i, 3 - j)));
    }
  }
  c.detail << "max |dev| " << dev << " (tol 1e-3), symmetry " << asym << ", mF reflection " << reflect;
  c.require(dev <= 1e-3, "entries within 1e-3");
  c.require(asym <= 1e-9 && reflect <= 1e-9, "symmetry and reflection within 1e-9");
  c.require(std::abs(t.cwiseAbs().maxCoeff() - 1.0) <= 1e-12, "normalized to unit maximum");
}

// ----------------------------------------------------------- 2. Rydberg gates

void rydberg_check(Check& c) {
  const double omega = 2.0 * kPi * 3e6;
  const double v = 2.0 * kPi * 2e9;
  AtomLevelScheme scheme;
  scheme.b_field_gauss = 120.0;
  const InteractionModel im = InteractionModel::from_eta(v, 0.989);
  const Calibration cccz = calibrate_pulse(GateProtocol::kCccz, omega, 0.375, im, scheme);
  const Calibration cz = calibrate_pulse(GateProtocol::kCz, omega, 0.375, im, scheme);
  c.detail << "F_CCCZ " << cccz.fidelity << ", F_CZ " << cz.fidelity << " (tol >= 0.999)";
  c.require(cccz.fidelity >= 0.999, "F_CCCZ >= 0.999");
  c.require(cz.fidelity >= 0.999, "F_CZ >= 0.999");

  // Sensitivity: infidelity added by eta < 1 on top of the eta = 1 calibration.
  const std::vector<double> etas = {0.5, 0.9, 1.0};
  const std::vector<double> vs = {2.0 * kPi * 0.5e9, 2.0 * kPi * 1e9, v};
  const auto pts = sweep_eta(etas, vs, omega, 0.375, scheme);
  auto excess = [&](size_t iv, size_t ie) { return pts[3 * iv + ie].infidelity - pts[3 * iv + 2].infidelity; };
  for (size_t ie = 0; ie < 2; ++ie) {
    c.detail << "; excess 1-F at eta=" << etas[ie] << " for V/2pi = 0.5, 1, 2 GHz:";
    for (size_t iv = 0; iv < vs.size(); ++iv) c.detail << " " << excess(iv, ie);
    for (size_t iv = 1; iv < vs.size(); ++iv) {
      c.require(excess(iv, ie) < excess(iv - 1, ie), "robustness to eta grows with V");
    }
  }
}

// ------------------------------------------------------------- 3. Readout

double round3(double x) { return std::round(x * 1000.0) / 1000.0; }

void readout_check(Check& c) {
  const ConfusionMatrix m = two_round_confusion({0.999, 0.01, 0.001, 0.999});
  const double target[4] = {0.987, 0.996, 0.987, 0.998};
  c.detail << "diagonal";
  for (int k = 0; k < 4; ++k) {
    c.detail << " " << m(k, k);
    c.require(std::abs(round3(m(k, k)) - target[k]) < 1e-12, "three significant figures of entry " + std::to_string(k));
  }
  c.detail << " (targets 0.987 0.996 0.987 0.998 to 3 s.f.)";
  for (int k = 0; k < 4; ++k) c.require(std::abs(m.row(k).sum() - 1.0) < 1e-12, "row sums");
}

// -------------------------------------------------------------- 4. Distillation

DistillResult distill(ErrorKind kind, double q, double measurement = 0.0) {
  DistillConfig cfg;
  cfg.entanglement_error = {kind, q, 1};
  cfg.measurement_error = measurement;
  return run_distillation(prepare_predistilled(cfg.entanglement_error), cfg);
}

// Infidelity of one input pair (the n-qubit pair) before distillation.
double input_pair_infidelity(ErrorKind kind, double q) {
  const DensityMatrix rho = prepare_predistilled({kind, q, 1});
  return 1.0 - fidelity(partial_trace(rho, {1, 3}), bell_pair());
}

void distill_check(Check& c) {
  const double y0 = distill(ErrorKind::kPauliX, 0.0).yield;
  const double y1 = distill(ErrorKind::kPauliX, 0.0, 0.01).yield;
  c.detail << "yield " << y0 << " -> " << y1 << " at 1% readout error";
  c.require(std::abs(y0 - 0.5) < 1e-12, "zero-error yield 0.5");
  c.require(y1 < 0.5, "measurement error lowers the yield");

  double worst = 0.0;
  for (int k = 1; k <= 40; ++k) {
    const double q = 0.0125 * k;
    const double closed = q * q / ((1 - q) * (1 - q) + q * q);
    worst = std::max(worst, std::abs(distill(ErrorKind::kPauliX, q).post_infidelity - closed));
  }
  c.detail << "; |post - q^2/((1-q)^2+q^2)| max " << worst << " (tol 1e-10)";
  c.require(worst < 1e-10, "closed form");

  size_t improved = 0;
  size_t ordered = 0;
  for (int k = 1; k <= 20; ++k) {
    const double q = 0.01 * k;
    const double gain_x = input_pair_infidelity(ErrorKind::kPauliX, q) - distill(ErrorKind::kPauliX, q).post_infidelity;
    const double gain_d =
        input_pair_infidelity(ErrorKind::kDepolarizing, q) - distill(ErrorKind::kDepolarizing, q).post_infidelity;
    if (gain_x > 0.0) {
      ++improved;
      if (gain_d < gain_x) ++ordered;
    }
  }
  c.detail << "; X noise improves at " << improved << "/20 q values, depolarizing gains less at " << ordered;
  c.require(improved > 0, "nonempty improvement range");
  c.require(ordered == improved, "depolarizing improvement is smaller");
}

// -------------------------------------------------------------- 5. Flag QEC

void qec_check(Check& c) {
  const std::vector<double> grid = {5e-4, 1e-3, 2e-3, 3e-3, 4e-3, 5e-3, 7e-3, 1e-2};
  const size_t trials = 100000;
  for (const char* name : {"513", "713"}) {
    const FlagProtocol protocol = FlagProtocol::build(StabilizerCode::by_name(name));
    const auto normal = threshold_curve(protocol, FlagMode::kNormal, grid, trials, 2026);
    const auto quq = threshold_curve(protocol, FlagMode::kQuquart, grid, trials, 2026);
    c.detail << name << " failures normal/ququart:";
    for (size_t k = 0; k < grid.size(); ++k) c.detail << " " << normal[k].failures << "/" << quq[k].failures;
    c.detail << "; ";
    for (size_t k = 0; k < grid.size(); ++k) {
      c.require(quq[k].failures <= normal[k].failures,
                std::string(name) + " ququart <= normal at p=" + std::to_string(grid[k]));
    }
    const auto pn = pseudo_threshold(normal);
    const auto pq = pseudo_threshold(quq);
    c.detail << name << ": p_th normal " << (pn ? *pn : -1.0) << ", ququart " << (pq ? *pq : -1.0) << "; ";
    c.require(pn.has_value() && pq.has_value(), std::string(name) + " crossings exist");
    if (pn && pq) c.require(*pq > *pn, std::string(name) + " ququart crossing larger");
  }
  c.detail << "1e5 trials per point";
}

// ------------------------------------------------------------ 6. [[4,2,2]]

void code422_check(Check& c) {
  size_t detected = 0;
  size_t total = 0;
  for (const char* label : {"00", "01", "10", "11", "0+", "0-"}) {
    const auto clean = code422_prepare_and_detect(label, PauliOperator(4));
    c.require(std::abs(clean.accept_probability - 1.0) < 1e-12 && std::abs(clean.logical_fidelity - 1.0) < 1e-12,
              std::string("noiseless acceptance for ") + label);
    for (size_t q = 0; q < 4; ++q) {
      for (int p = 1; p <= 3; ++p) {
        const auto r = code422_prepare_and_detect(label, PauliOperator::single(4, q, p));
        ++total;
        if (r.accept_probability < 1e-12) ++detected;
      }
    }
  }
  double worst = 1.0;
  for (bool plus : {true, false}) {
    const StateVector prepared(QuditRegister(std::vector<int>(4, 2)), prepare_zero_pm(plus).amplitudes());
    worst = std::min(worst, fidelity(prepared, code422_logical_state(plus ? "0+" : "0-")));
  }
  c.detail << "detected " << detected << "/" << total << " single Paulis; clock-prepared |0+-> fidelity " << worst;
  c.require(detected == total, "100% detection");
  c.require(std::abs(worst - 1.0) < 1e-12, "fidelity 1");
}

// --------------------------------------------------------------- 7. AKLT

Matrix spin_oracle(char alpha) {
  const double r = 1.0 / std::sqrt(2.0);
  Matrix s = Matrix::Zero(3, 3);
  if (alpha == 'z') {
    s(0, 0) = 1.0;
    s(2, 2) = -1.0;
  } else if (alpha == 'x') {
    s(0, 1) = s(1, 0) = s(1, 2) = s(2, 1) = r;
  } else {
    s(0, 1) = s(1, 2) = Complex(0, -r);
    s(1, 0) = s(2, 1) = Complex(0, r);
  }
  return s;
}

double ed_ground_energy(size_t length) {
  const auto dim = static_cast<Eigen::Index>(std::pow(3, length));
  Matrix h = Matrix::Zero(dim, dim);
  for (size_t i = 0; i + 1 < length; ++i) {
    Matrix ss = Matrix::Zero(dim, dim);
    for (char a : {'x', 'y', 'z'}) {
      std::vector<Matrix> left(length, Matrix::Identity(3, 3));
      left[i] = spin_oracle(a);
      left[i + 1] = spin_oracle(a);
      ss += kron(left);
    }
    h += ss + ss * ss / 3.0;
  }
  return Eigen::SelfAdjointEigenSolver<Matrix>(h).eigenvalues()(0);
}

// Bulk string order from the AKLT matrix-product transfer matrices.
double transfer_matrix_string_order(char alpha, int separation) {
  const double a = std::sqrt(2.0 / 3.0);
  const double b = std::sqrt(1.0 / 3.0);
  std::vector<Matrix> mps(3, Matrix::Zero(2, 2));
  mps[0](0, 1) = a;
  mps[1](0, 0) = -b;
  mps[1](1, 1) = b;
  mps[2](1, 0) = -a;
  auto transfer = [&](const Matrix& op) {
    Matrix e = Matrix::Zero(4, 4);
    for (int s = 0; s < 3; ++s) {
      for (int t = 0; t < 3; ++t) {
        if (op(s, t) != Complex(0.0)) e += op(s, t) * kron(Matrix(mps[s].conjugate()), mps[t]);
      }
    }
    return e;
  };
  const Matrix s = spin_oracle(alpha);
  const Matrix phase = expm_hermitian(s, kPi);
  const Matrix e1 = transfer(Matrix::Identity(3, 3));
  Eigen::ComplexEigenSolver<Matrix> right(e1);
  Eigen::ComplexEigenSolver<Matrix> left(Matrix(e1.transpose()));
  Eigen::Index ir = 0;
  Eigen::Index il = 0;
  right.eigenvalues().cwiseAbs().maxCoeff(&ir);
  left.eigenvalues().cwiseAbs().maxCoeff(&il);
  const Vector r = right.eigenvectors().col(ir);
  const Vector l = left.eigenvectors().col(il);
  Matrix chain = transfer(s);
  const Matrix str = transfer(phase);
  for (int k = 0; k < separation - 1; ++k) chain = chain * str;
  chain = chain * transfer(s);
  return (l.transpose() * chain * r)(0).real() / (l.transpose() * r)(0).real();
}

void aklt_check(Check& c) {
  const double oracle_string = transfer_matrix_string_order('z', 20);
  const double oracle_energy = ed_ground_energy(6) / 5.0;
  c.detail << "oracles: string " << oracle_string << ", ED energy/bond " << oracle_energy << "; ";
  c.require(std::abs(oracle_string + 4.0 / 9.0) < 1e-10, "transfer-matrix oracle");
  c.require(std::abs(oracle_energy + 2.0 / 3.0) < 1e-10, "ED oracle");

  const size_t trajectories = 1000;
  const double n = static_cast<double>(trajectories);
  Rng rng(2026);
  double worst_energy = 0.0;
  double worst_string = 0.0;
  for (size_t length = 6; length <= 10; ++length) {
    const double len = static_cast<double>(length);
    const QuquartChain prepared = prepare_singlet_chain(length);
    size_t singlets = 0;
    double sum = 0.0;
    double sum2 = 0.0;
    for (size_t t = 0; t < trajectories; ++t) {
      QuquartChain chain = prepared;
      project_sites(chain, rng);
      size_t retained = 0;
      for (const auto& r : chain.record) {
        if (*r == SiteOutcome::kSinglet) {
          ++singlets;
        } else {
          ++retained;
        }
      }
      sum += static_cast<double>(retained);
      sum2 += static_cast<double>(retained * retained);
      if (t % 100 == 0 && retained >= 3 && retained < length) {
        const StateVector s = to_spin1(rearrange(chain));
        worst_energy = std::max(worst_energy, std::abs(aklt_energy_per_bond(s) - oracle_energy));
        worst_string = std::max(worst_string, std::abs(string_order(s, 'z', 0, retained - 1) - oracle_string));
      }
    }
    const double fraction = static_cast<double>(singlets) / (n * len);
    const double mean = sum / n;
    const double sd = std::sqrt((sum2 - n * mean * mean) / (n - 1.0));
    const double sigma_f = std::sqrt(0.25 * 0.75 / (n * len));
    const double sd_exact = std::sqrt(3.0 * len) / 4.0;
    c.detail << "L=" << length << " P(s) " << fraction << " mean " << mean << " sd " << sd << "; ";
    c.require(std::abs(fraction - 0.25) <= 3.0 * sigma_f, "singlet probability L=" + std::to_string(length));
    c.require(std::abs(mean - 0.75 * len) <= 3.0 * sd_exact / std::sqrt(n), "mean retained L=" + std::to_string(length));
    c.require(std::abs(sd - sd_exact) <= 3.0 * sd_exact / std::sqrt(2.0 * (n - 1.0)),
              "std retained L=" + std::to_string(length));

    QuquartChain all = prepared;
    postselect_triplets(all);
    const StateVector s = to_spin1(all);
    worst_energy = std::max(worst_energy, std::abs(aklt_energy_per_bond(s) - oracle_energy));
    worst_string = std::max(worst_string, std::abs(string_order(s, 'z', 1, length - 2) - oracle_string));
  }
  c.detail << "max |E/bond - ED| " << worst_energy << ", max |string - oracle| " << worst_string << " (tol 1e-8); ";
  c.require(worst_energy <= 1e-8, "energy per bond");
  c.require(worst_string <= 1e-8, "string order");

  std::vector<double> counts(3, 0.0);
  double fusion_energy = 0.0;
  for (int t = 0; t < 2000; ++t) {
    const QuquartChain a = prepare_aklt(4, rng, {3});
    const QuquartChain b = prepare_aklt(4, rng, {0});
    if (a.length() < 2 || b.length() < 2) continue;
    const FusionResult r = fusion(a, b, rng);
    counts.at(static_cast<size_t>(r.removed)) += 1.0;
    if (t % 100 == 0 && r.chain.length() >= 2) {
      fusion_energy = std::max(fusion_energy, std::abs(aklt_energy_per_bond(to_spin1(r.chain)) + 2.0 / 3.0));
    }
  }
  const double total = counts[0] + counts[1] + counts[2];
  const double expected[3] = {9.0 / 16.0, 6.0 / 16.0, 1.0 / 16.0};
  c.detail << "fusion removed (0,1,2) " << counts[0] / total << " " << counts[1] / total << " " << counts[2] / total;
  for (int m = 0; m < 3; ++m) {
    const double sigma = std::sqrt(expected[m] * (1.0 - expected[m]) / total);
    c.require(std::abs(counts[m] / total - expected[m]) <= 3.0 * sigma, "fusion fraction " + std::to_string(m));
  }
  c.require(fusion_energy <= 1e-8, "fused chains are AKLT");

  QuquartChain base = prepare_singlet_chain(6);
  postselect_triplets(base);
  double fission_energy = 0.0;
  for (size_t drop = 1; drop <= 4; ++drop) {
    for (int t = 0; t < 25; ++t) {
      const FissionResult r = fission(base, drop, rng);
      fission_energy = std::max(fission_energy, std::abs(aklt_energy_per_bond(to_spin1(r.chain)) + 2.0 / 3.0));
    }
  }
  c.detail << "; fission max |E/bond + 2/3| " << fission_energy;
  c.require(fission_energy <= 1e-8, "fission keeps AKLT energy");
}

// ---------------------------------------------------------------- 8. Pulses

void pulses_check(Check& c) {
  const TrapParams trap;
  const double w = trap.omega;
  const ClockDrive pi_guess{3.0 * w, 0.0, 3.0 * kPi / (3.0 * w)};
  const ClockDrive pi_best = find_sweet_spot(PulseGate::kPi, trap, pi_guess);
  const PulseResult pi_r = simulate_clock_pulse(trap, pi_best);
  c.detail << "pi: 1-F " << pi_r.infidelity << " dn " << pi_r.delta_nbar << " at Omega/w " << pi_best.omega / w
           << " tau*Omega/pi " << pi_best.tau * pi_best.omega / kPi << "; ";
  c.require(pi_r.infidelity <= 2e-3 && std::abs(pi_r.delta_nbar) <= 1e-2, "pi sweet spot");
  c.require(std::abs(pi_best.omega / w - 3.0) <= 0.5 && std::abs(pi_best.tau * pi_best.omega / kPi - 3.0) <= 0.5,
            "pi sweet spot location");

  const double om = 3.4 * w;
  const ClockDrive h_guess{om, om, 3.0 * kPi / om};
  const ClockDrive h_best = find_sweet_spot(PulseGate::kHadamard, trap, h_guess);
  const PulseResult h_r = simulate_hadamard(trap, h_best);
  c.detail << "H: 1-F " << h_r.infidelity << " dn " << h_r.delta_nbar << " at Omega/w " << h_best.omega / w
           << " delta/w " << h_best.delta / w << " tau*Omega/pi " << h_best.tau * h_best.omega / kPi << "; ";
  c.require(h_r.infidelity <= 2e-3 && std::abs(h_r.delta_nbar) <= 1e-2, "Hadamard sweet spot");
  c.require(std::abs(h_best.omega / w - 3.4) <= 0.5 && std::abs(h_best.delta / w - 3.4) <= 0.5 &&
                std::abs(h_best.tau * h_best.omega / kPi - 3.0) <= 1.0,
            "Hadamard sweet spot location");

  ProbeParams probe;
  probe.i_over_isat = 2.8e3;
  probe.delta = equalize_splittings(probe);
  const double shift_mhz = probe.delta / (2.0 * kPi) / 1e6;
  const double p_sc = scattering_probability(probe);
  c.detail << "probe detuning " << shift_mhz << " MHz, P_sc(20 us) " << p_sc << "; ";
  c.require(std::abs(shift_mhz / 240.0 - 1.0) <= 0.2, "detuning within 20% of 240 MHz");
  c.require(p_sc >= 1e-4 && p_sc <= 1e-2, "scattering within an order of magnitude of 1e-3");

  double worst = 1.0;
  for (int i = -10; i <= 10; ++i) {
    for (int j = -10; j <= 10; ++j) {
      worst = std::min(worst, raman_mismatch_fidelity(0.1 * i / 10.0, kPi / 20.0 * j / 10.0));
    }
  }
  c.detail << "Raman window min F " << worst;
  c.require(worst > 0.99, "Raman window fidelity > 0.99");
}

// ------------------------------------------------------- 9. Property suites

struct DenseOutcome {
  std::vector<int> outcomes;
  Vector data;
};

DenseOutcome simulate_dense(const ExtractionSchedule& schedule, size_t n, const Vector& data, const Fault& fault) {
  const size_t extra = schedule.num_qubits - n;
  QuditRegister reg(std::vector<int>(schedule.num_qubits, 2));
  Vector anc = Vector::Zero(1 << extra);
  anc(0) = 1.0;
  StateVector psi(reg, kron(data, anc));
  std::vector<size_t> all(schedule.num_qubits);
  for (size_t q = 0; q < all.size(); ++q) all[q] = q;
  std::vector<std::pair<size_t, bool>> measured;
  for (size_t i = 0; i < schedule.circuit.size(); ++i) {
    const auto& op = schedule.circuit[i];
    switch (op.kind) {
      case OpKind::kPrepZ: break;
      case OpKind::kPrepX: psi.apply(pauli::H(), {op.a}); break;
      case OpKind::kH: psi.apply(pauli::H(), {op.a}); break;
      case OpKind::kCnot: psi.apply(pauli::cnot(), {op.a, op.b}); break;
      case OpKind::kCz: psi.apply(pauli::cz(), {op.a, op.b}); break;
      case OpKind::kMeasureX: psi.apply(pauli::H(), {op.a}); [[fallthrough]];
      case OpKind::kMeasureZ: measured.push_back({op.a, false}); break;
    }
    if (fault.after_op == i) {
      psi.apply(fault.pauli.to_matrix(), all);
      if (fault.flip) measured.back().second = true;
    }
  }
  DenseOutcome out;
  std::vector<int> digits(schedule.num_qubits, 0);
  const Vector& amps = psi.amplitudes();
  for (auto [q, flip] : measured) {
    double p1 = 0.0;
    for (size_t idx = 0; idx < reg.total_dim(); ++idx) {
      if (reg.digits_of(idx)[q] == 1) p1 += std::norm(amps(static_cast<Eigen::Index>(idx)));
    }
    const int bit = p1 > 0.5 ? 1 : 0;
    out.outcomes.push_back(bit ^ (flip ? 1 : 0));
    digits[q] = bit;
  }
  out.data = Vector::Zero(1 << n);
  for (size_t idx = 0; idx < reg.total_dim(); ++idx) {
    const auto dg = reg.digits_of(idx);
    bool match = true;
    for (size_t q = n; q < schedule.num_qubits; ++q) match = match && dg[q] == digits[q];
    if (match) out.data(static_cast<Eigen::Index>(idx >> extra)) = amps(static_cast<Eigen::Index>(idx));
  }
  return out;
}

Vector random_code_state(const StabilizerCode& code, Rng& rng) {
  Vector v = StateVector::random(QuditRegister(std::vector<int>(code.n, 2)), rng).amplitudes();
  for (const auto& s : code.stabilizers) v = 0.5 * (v + s.to_matrix() * v);
  return v.normalized();
}

QuditRegister random_register(Rng& rng) {
  std::uniform_int_distribution<int> sites(1, 3);
  std::uniform_int_distribution<int> dim(2, 4);
  std::vector<int> dims(static_cast<size_t>(sites(rng)));
  for (int& d : dims) d = dim(rng);
  return QuditRegister(dims);
}

std::vector<size_t> random_targets(const QuditRegister& reg, Rng& rng) {
  std::vector<size_t> sites(reg.num_sites());
  for (size_t s = 0; s < sites.size(); ++s) sites[s] = s;
  std::shuffle(sites.begin(), sites.end(), rng);
  std::uniform_int_distribution<size_t> count(1, sites.size());
  sites.resize(count(rng));
  return sites;
}

Axis random_axis(Rng& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Vector3d v(g(rng), g(rng), g(rng));
  v.normalize();
  return {v(0), v(1), v(2)};
}

void property_check(Check& c) {
  Rng rng(2026);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  const size_t cases = 1000;

  double unitarity = 0.0;
  for (size_t t = 0; t < cases; ++t) {
    const QuditRegister reg = random_register(rng);
    const auto targets = random_targets(reg, rng);
    const Matrix g = haar_unitary(reg.subspace_dim(targets), rng);
    StateVector psi = StateVector::random(reg, rng);
    psi.apply(g, targets);
    unitarity = std::max(unitarity, std::abs(psi.norm() - 1.0));
    unitarity = std::max(unitarity, (g.adjoint() * g - Matrix::Identity(g.rows(), g.cols())).norm());
    const Matrix r = o_rotation(2 * kPi * u(rng), random_axis(rng)).matrix() *
                     n_rotation(2 * kPi * u(rng), random_axis(rng)).matrix() *
                     ideal_cccz(2 * kPi * u(rng)).matrix().topLeftCorner(4, 4);
    unitarity = std::max(unitarity, (r.adjoint() * r - Matrix::Identity(4, 4)).norm());
  }

  double cptp = 0.0;
  for (size_t t = 0; t < cases; ++t) {
    const QuditRegister reg = random_register(rng);
    const auto targets = random_targets(reg, rng);
    const size_t dim = reg.subspace_dim(targets);
    const KrausChannel ch = depolarizing(u(rng), dim);
    Matrix sum = Matrix::Zero(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(dim));
    for (const auto& k : ch.operators()) sum += k.adjoint() * k;
    cptp = std::max(cptp, (sum - Matrix::Identity(sum.rows(), sum.cols())).norm());
    const DensityMatrix out = apply_channel(DensityMatrix::random(reg, rng), ch, targets);
    cptp = std::max(cptp, std::abs(out.trace() - 1.0));
    cptp = std::max(cptp, (out.elements() - out.elements().adjoint()).norm());
    cptp = std::max(cptp, -std::min(0.0, Eigen::SelfAdjointEigenSolver<Matrix>(out.elements()).eigenvalues()(0)));
  }

  double normalization = 0.0;
  for (size_t t = 0; t < cases; ++t) {
    const QuditRegister reg = random_register(rng);
    const auto targets = random_targets(reg, rng);
    const size_t dim = reg.subspace_dim(targets);
    const Matrix basis = haar_unitary(dim, rng);
    std::vector<Projector> projectors;
    for (size_t k = 0; k < dim; ++k) projectors.push_back(Projector::onto(basis.col(static_cast<Eigen::Index>(k))));
    double total = 0.0;
    for (const auto& b : measurement_branches(StateVector::random(reg, rng), projectors, targets)) {
      total += b.probability;
      if (b.probability > 1e-12) normalization = std::max(normalization, std::abs(b.state.norm() - 1.0));
    }
    normalization = std::max(normalization, std::abs(total - 1.0));
  }
  c.detail << cases << " cases each: unitarity " << unitarity << ", CPTP " << cptp << ", normalization "
           << normalization << " (tol 1e-10); ";
  c.require(unitarity < 1e-10, "unitarity");
  c.require(cptp < 1e-10, "CPTP");
  c.require(normalization < 1e-10, "normalization");

  size_t faults = 0;
  size_t mismatches = 0;
  for (const char* name : {"513", "713", "422"}) {
    const StabilizerCode code = StabilizerCode::by_name(name);
    std::vector<ExtractionSchedule> schedules;
    if (code.d >= 3) {
      const FlagProtocol protocol = FlagProtocol::build(code);
      schedules = protocol.flagged;
      schedules.insert(schedules.end(), protocol.unflagged.begin(), protocol.unflagged.end());
    } else {
      for (size_t k = 0; k < code.stabilizers.size(); ++k) {
        schedules.push_back(make_schedule(code, k, {0, 1, 2, 3}, true));
      }
    }
    const Vector logical = random_code_state(code, rng);
    for (const auto& s : schedules) {
      for (const auto& f : enumerate_single_faults(s)) {
        ++faults;
        const auto frame = run_extraction(code, s, PauliOperator(code.n), {f});
        const auto dense = simulate_dense(s, code.n, logical, f);
        bool same = (dense.outcomes.at(0) != 0) == frame.syndrome;
        if (s.flagged) same = same && (dense.outcomes.at(1) != 0) == frame.flag;
        const Vector expected = frame.data.to_matrix() * logical;
        same = same && std::abs(std::abs(expected.dot(dense.data)) - 1.0) < 1e-9;
        if (!same) ++mismatches;
      }
    }
  }
  c.detail << "frame vs state vector: " << mismatches << " mismatches over " << faults << " single faults; ";
  c.require(faults > 0 && mismatches == 0, "Pauli frame equivalence");

  double qst = 0.0;
  const QuditRegister site({4});
  for (auto method : {QstMethod::kPauli, QstMethod::kLadder}) {
    for (int t = 0; t < 100; ++t) {
      const DensityMatrix truth = t % 2 == 0 ? DensityMatrix(StateVector::random(site, rng))
                                             : DensityMatrix::random(site, rng);
      const auto est = reconstruct(method, forward_probabilities(truth, settings_for(method)));
      qst = std::max(qst, (est.rho.elements() - truth.elements()).norm());
    }
  }
  c.detail << "tomography round trip max error " << qst << " (tol 1e-10)";
  c.require(qst < 1e-10, "tomography round trip");
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<void(Check&)> run;
    double budget_s;
  };
  const std::vector<Criterion> criteria = {
      {"C6 weighting table", c6_table_check, 1.0},
      {"Rydberg gate fidelities", rydberg_check, 600.0},
      {"Readout confusion matrix", readout_check, 1.0},
      {"Distillation", distill_check, 1.0},
      {"Flag QEC", qec_check, 600.0},
      {"[[4,2,2]] detection", code422_check, 1.0},
      {"AKLT protocol", aklt_check, 600.0},
      {"Pulse maps", pulses_check, 300.0},
      {"Property suites", property_check, 120.0},
  };
  int failures = 0;
  for (size_t k = 0; k < criteria.size(); ++k) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[k].run(c);
    } catch (const std::exception& e) {
      c.ok = false;
      c.detail << " [exception: " << e.what() << "]";
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > criteria[k].budget_s) c.require(false, "runtime budget " + std::to_string(criteria[k].budget_s) + " s");
    if (!c.ok) ++failures;
    std::printf("%s %zu. %s: %s (%.2f s)\n", c.ok ? "PASS" : "FAIL", k + 1, criteria[k].name, c.detail.str().c_str(), s);
    std::fflush(stdout);
  }
  std::printf("%d of %zu criteria failed\n", failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
