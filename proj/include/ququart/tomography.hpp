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

#ifndef QUQUART_TOMOGRAPHY_HPP
#define QUQUART_TOMOGRAPHY_HPP

#include <string>
#include <vector>

#include "ququart/qcore.hpp"

namespace ququart {

// One pre-rotation followed by a measurement of the four basis projectors.
struct MeasurementSetting {
  std::string name;
  Matrix rotation;  // 4 x 4
};

// Outcome probabilities per setting: row = setting, column = basis outcome.
using TomographyRecord = Eigen::MatrixXd;

// R_a (x) R_b with R_0 = I, R_x = exp(-i pi/4 X), R_y = exp(-i pi/4 Y); a, b in {0, x, y}.
std::vector<MeasurementSetting> pauli_settings();

// pi/2 pulse exp(i pi/4 G) on levels (j, k) with G_x = |j><k| + |k><j| and
// G_y = -i|j><k| + i|k><j|.
Matrix ladder_pulse(char axis, int j, int k);

// Populations, single pulses X/Y on (0,1), (1,2), (2,3), and the composite
// sequences X12 X01, Y12 X01, X23 X12, Y23 X12, Y23 Y12 Y01, X23 X12 X01
// (operator products: the right-most pulse acts first).
std::vector<MeasurementSetting> ladder_settings();

TomographyRecord forward_probabilities(const DensityMatrix& rho, const std::vector<MeasurementSetting>& settings);

struct QstResult {
  DensityMatrix rho;
  double min_eigenvalue = 0.0;
  bool physical = true;  // min eigenvalue >= -1e-12
};

enum class QstMethod { kPauli, kLadder };
QstMethod parse_qst_method(const std::string& name);
std::vector<MeasurementSetting> settings_for(QstMethod method);

// Linear inversion of the nine-setting record for the 15 Pauli coefficients
// with the identity coefficient fixed to 1/4.
QstResult pauli_qst(const TomographyRecord& probabilities);

// Closed-form coherences from the ladder record.
QstResult ladder_qst(const TomographyRecord& probabilities);

QstResult reconstruct(QstMethod method, const TomographyRecord& probabilities);

// Eigenvalue clipping onto the PSD cone followed by trace renormalization.
DensityMatrix clip_to_psd(const DensityMatrix& rho);

struct SampledQst {
  QstResult estimate;
  double frobenius_error = 0.0;
  double infidelity = 0.0;  // 1 - F(clipped estimate, truth)
};

// Multinomial sampling of `shots` outcomes per setting followed by reconstruction.
SampledQst sample_and_reconstruct(const DensityMatrix& truth, size_t shots, QstMethod method, Rng& rng);

}  // namespace ququart

#endif  // QUQUART_TOMOGRAPHY_HPP
