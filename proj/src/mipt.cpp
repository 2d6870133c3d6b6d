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

#include "ququart/mipt.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <random>
#include <stdexcept>

#include "ququart/ftqec.hpp"
#include "ququart/readout.hpp"

namespace ququart {

namespace {

void reset_site(StateVector& psi, size_t site, Rng& rng) {
  static const std::vector<Projector> z = {Projector::basis(4, {0}), Projector::basis(4, {1}),
                                           Projector::basis(4, {2}), Projector::basis(4, {3})};
  size_t k = measure_in_place(psi, z, {site}, rng);
  if (k == 0) return;
  Matrix move = Matrix::Identity(4, 4);
  move.col(0).swap(move.col(static_cast<Eigen::Index>(k)));
  psi.apply(move, {site});
}

}  // namespace

void MiptConfig::validate() const {
  if (length < 2 || length > 12) {
    throw std::invalid_argument("adaptive circuit length must be in [2, 12]");
  }
  if (!(p >= 0.0 && p <= 1.0)) {
    throw std::invalid_argument("reset probability must be in [0, 1]");
  }
  if (trajectories == 0) {
    throw std::invalid_argument("need at least one trajectory");
  }
}

Matrix absorbing_unitary(Rng& rng) {
  Matrix u = Matrix::Zero(16, 16);
  u(0, 0) = 1.0;
  u.bottomRightCorner(15, 15) = haar_unitary(15, rng);
  return u;
}

std::vector<double> mipt_trajectory(const MiptConfig& config, Rng& rng) {
  config.validate();
  const size_t n = config.length;
  StateVector psi = StateVector::basis(QuditRegister(std::vector<int>(n, 4)), std::vector<int>(n, 3));
  std::vector<bool> active(n, true);
  const auto qnd = qnd_projectors();
  std::bernoulli_distribution reset(config.p);
  std::vector<double> density;
  for (size_t c = 0; c < config.cycles; ++c) {
    for (size_t parity = 0; parity < 2; ++parity) {
      for (size_t i = parity; i + 1 < n; i += 2) {
        if (!active[i] && !active[i + 1]) continue;
        psi.apply(absorbing_unitary(rng), {i, i + 1});
      }
    }
    size_t count = 0;
    for (size_t i = 0; i < n; ++i) {
      active[i] = measure_in_place(psi, qnd, {i}, rng) == 1;
      if (reset(rng)) {
        if (active[i]) reset_site(psi, i, rng);
        active[i] = false;
      }
      count += active[i] ? 1 : 0;
    }
    density.push_back(static_cast<double>(count) / static_cast<double>(n));
  }
  return density;
}

MiptResult mipt_run(const MiptConfig& config) {
  config.validate();
  const size_t threads = std::max<size_t>(1, std::min(config.threads, config.trajectories));
  std::vector<std::vector<double>> runs(config.trajectories);
  std::vector<std::future<void>> jobs;
  for (size_t w = 0; w < threads; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (size_t t = w; t < config.trajectories; t += threads) {
        Rng rng(splitmix64(config.seed ^ splitmix64(t + 1)));
        runs[t] = mipt_trajectory(config, rng);
      }
    }));
  }
  for (auto& j : jobs) j.get();
  MiptResult r;
  r.density.assign(config.cycles, 0.0);
  r.stderr_.assign(config.cycles, 0.0);
  const double m = static_cast<double>(config.trajectories);
  for (size_t c = 0; c < config.cycles; ++c) {
    double s = 0.0;
    double s2 = 0.0;
    for (const auto& run : runs) {
      s += run[c];
      s2 += run[c] * run[c];
    }
    r.density[c] = s / m;
    r.stderr_[c] = m > 1 ? std::sqrt(std::max(0.0, (s2 - m * r.density[c] * r.density[c]) / (m - 1.0)) / m) : 0.0;
  }
  return r;
}

}  // namespace ququart
