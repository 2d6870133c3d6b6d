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

#ifndef QUQUART_OPTIMIZE_HPP
#define QUQUART_OPTIMIZE_HPP

#include <functional>
#include <vector>

namespace ququart {

struct MinimizeResult {
  std::vector<double> x;
  double f = 0.0;
  int iterations = 0;
};

// Derivative-free simplex minimization.
MinimizeResult nelder_mead(const std::function<double(const std::vector<double>&)>& f, std::vector<double> x0,
                           const std::vector<double>& step, double ftol = 1e-13, double xtol = 1e-10,
                           int max_iterations = 5000);

struct ScalarMax {
  double x = 0.0;
  double f = 0.0;
};

// Grid scan over [lo, hi] followed by Brent refinement around the best cell.
ScalarMax maximize_scan(const std::function<double(double)>& f, double lo, double hi, int points);

}  // namespace ququart

#endif  // QUQUART_OPTIMIZE_HPP
