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

#include "ququart/optimize.hpp"

#include <algorithm>
#include <boost/math/tools/minima.hpp>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace ququart {

MinimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                           const std::vector<double>& step, double ftol, double xtol, int max_iterations) {
  const size_t n = x0.size();
  if (n == 0 || step.size() != n) {
    throw std::invalid_argument("nelder_mead: bad dimensions");
  }
  std::vector<std::vector<double>> simplex(n + 1, x0);
  for (size_t i = 0; i < n; ++i) simplex[i + 1][i] += step[i];
  std::vector<double> values(n + 1);
  for (size_t i = 0; i <= n; ++i) values[i] = f(simplex[i]);

  std::vector<size_t> order(n + 1);
  int it = 0;
  for (; it < max_iterations; ++it) {
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) { return values[a] < values[b]; });
    const size_t best = order.front();
    const size_t worst = order.back();
    const size_t second = order[n - 1];

    double spread = 0.0;
    for (size_t i = 0; i <= n; ++i) {
      for (size_t k = 0; k < n; ++k) spread = std::max(spread, std::abs(simplex[i][k] - simplex[best][k]));
    }
    if (std::abs(values[worst] - values[best]) <= ftol && spread <= xtol) break;

    std::vector<double> centroid(n, 0.0);
    for (size_t i = 0; i <= n; ++i) {
      if (i == worst) continue;
      for (size_t k = 0; k < n; ++k) centroid[k] += simplex[i][k] / static_cast<double>(n);
    }
    auto along = [&](double t) {
      std::vector<double> x(n);
      for (size_t k = 0; k < n; ++k) x[k] = centroid[k] + t * (simplex[worst][k] - centroid[k]);
      return x;
    };
    auto xr = along(-1.0);
    double fr = f(xr);
    if (fr < values[best]) {
      auto xe = along(-2.0);
      double fe = f(xe);
      if (fe < fr) {
        simplex[worst] = xe;
        values[worst] = fe;
      } else {
        simplex[worst] = xr;
        values[worst] = fr;
      }
      continue;
    }
    if (fr < values[second]) {
      simplex[worst] = xr;
      values[worst] = fr;
      continue;
    }
    bool outside = fr < values[worst];
    auto xc = along(outside ? -0.5 : 0.5);
    double fc = f(xc);
    if (fc < (outside ? fr : values[worst])) {
      simplex[worst] = xc;
      values[worst] = fc;
      continue;
    }
    for (size_t i = 0; i <= n; ++i) {
      if (i == best) continue;
      for (size_t k = 0; k < n; ++k) simplex[i][k] = simplex[best][k] + 0.5 * (simplex[i][k] - simplex[best][k]);
      values[i] = f(simplex[i]);
    }
  }
  size_t best = static_cast<size_t>(std::min_element(values.begin(), values.end()) - values.begin());
  return {simplex[best], values[best], it};
}

ScalarMax maximize_scan(const std::function<double(double)>& f, double lo, double hi, int points) {
  if (points < 3 || !(hi > lo)) {
    throw std::invalid_argument("maximize_scan: need at least 3 points on a nonempty interval");
  }
  const double h = (hi - lo) / (points - 1);
  double best_x = lo;
  double best_f = f(lo);
  for (int i = 1; i < points; ++i) {
    double x = lo + i * h;
    double v = f(x);
    if (v > best_f) {
      best_f = v;
      best_x = x;
    }
  }
  auto neg = [&](double x) { return -f(x); };
  auto [x, fneg] = boost::math::tools::brent_find_minima(neg, best_x - h, best_x + h, 52);
  if (-fneg > best_f) return {x, -fneg};
  return {best_x, best_f};
}

}  // namespace ququart
