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

#ifndef QUQUART_FTQEC_HPP
#define QUQUART_FTQEC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ququart/pauli.hpp"

namespace ququart {

struct StabilizerCode {
  std::string name;
  size_t n = 0;
  size_t k = 0;
  size_t d = 0;
  std::vector<PauliOperator> stabilizers;
  std::vector<PauliOperator> logical_x;
  std::vector<PauliOperator> logical_z;

  static StabilizerCode five_qubit();
  static StabilizerCode steane();
  static StabilizerCode four_qubit();
  // "513", "713" or "422".
  static StabilizerCode by_name(const std::string& name);

  // Throws unless stabilizers commute, logicals commute with stabilizers and
  // X_L(i), Z_L(j) anticommute exactly when i == j.
  void validate() const;
  // Bit i set when `error` anticommutes with stabilizer i.
  uint64_t syndrome(const PauliOperator& error) const;
  // True when `error` anticommutes with some logical operator.
  bool is_logical_error(const PauliOperator& error) const;
  // True when a and b differ by an element of the stabilizer group.
  bool equivalent(const PauliOperator& a, const PauliOperator& b) const;
};

enum class FlagMode { kNormal, kQuquart };

FlagMode parse_flag_mode(const std::string& name);

// Measurement circuit of one stabilizer on n data qubits plus a syndrome
// qubit (index n) and, when flagged, a flag qubit (index n + 1). The
// syndrome qubit controls a CNOT (X) or CZ (Z) onto each data qubit in
// `order`; the flag is coupled after the first and before the last data gate.
struct ExtractionSchedule {
  size_t stabilizer = 0;
  std::vector<size_t> order;
  bool flagged = false;
  size_t num_qubits = 0;
  Circuit circuit;
  std::vector<bool> syndrome_flag_gate;  // per op
};

ExtractionSchedule make_schedule(const StabilizerCode& code, size_t stabilizer, const std::vector<size_t>& order,
                                 bool flagged);

struct ExtractionOutcome {
  bool syndrome = false;
  bool flag = false;
  PauliOperator data;  // data-qubit frame after the circuit
};

ExtractionOutcome run_extraction(const StabilizerCode& code, const ExtractionSchedule& schedule,
                                 const PauliOperator& data_error, const std::vector<Fault>& faults);

// Every single fault of the schedule: a Pauli after each preparation (3
// choices), a two-qubit Pauli after each two-qubit gate (15 choices), and a
// flip of each measurement.
std::vector<Fault> enumerate_single_faults(const ExtractionSchedule& schedule);

class Decoder {
 public:
  Decoder() = default;
  explicit Decoder(const StabilizerCode& code);

  // Lowest-weight Pauli with the given syndrome.
  PauliOperator min_weight(uint64_t syndrome) const;
  // Flag-conditioned table for flagged circuit `circuit`; falls back to
  // min_weight when the syndrome is not in the table.
  PauliOperator flagged(size_t circuit, uint64_t syndrome) const;
  void set_flag_table(size_t circuit, std::map<uint64_t, PauliOperator> table);
  bool has_flag_table(size_t circuit) const { return flag_tables_.count(circuit) > 0; }

 private:
  size_t n_ = 0;
  std::map<uint64_t, PauliOperator> min_weight_;
  std::map<size_t, std::map<uint64_t, PauliOperator>> flag_tables_;
};

// Flag table for one schedule, or nullopt if two flagged single faults give
// the same syndrome but inequivalent data errors.
std::optional<std::map<uint64_t, PauliOperator>> build_flag_table(const StabilizerCode& code,
                                                                   const ExtractionSchedule& schedule);

// Flagged and unflagged schedules for every stabilizer with a decoder. The
// data-qubit order of each flagged circuit is the first permutation of its
// support whose flag table is consistent.
struct FlagProtocol {
  StabilizerCode code;
  std::vector<ExtractionSchedule> flagged;
  std::vector<ExtractionSchedule> unflagged;
  Decoder decoder;

  static FlagProtocol build(const StabilizerCode& code);
};

struct TrialConfig {
  double p = 0.0;
  FlagMode flag_mode = FlagMode::kNormal;
  size_t trials = 10000;
  uint64_t seed = 1;
  // Keep syndrome<->flag gate faults even in ququart mode.
  bool flag_gate_faults = false;
};

// SplitMix64 finalizer; counter-based randomness keyed by trial and location.
uint64_t splitmix64(uint64_t x);
double hashed_uniform(uint64_t seed, uint64_t trial, uint64_t location, uint64_t draw);

// One trial: noisy data preparation post-selected on a trivial syndrome, one
// adaptive round of flagged extraction (followed on a flag or nontrivial
// syndrome by a full unflagged round and decoding), then a perfect round.
// Returns true on a logical failure.
bool run_trial(const FlagProtocol& protocol, const TrialConfig& config, uint64_t trial);

struct LogicalErrorRate {
  double p;
  double p_logical;
  double stderr_;
  size_t failures;
  size_t trials;
};

LogicalErrorRate logical_error_rate(const FlagProtocol& protocol, const TrialConfig& config);

std::vector<LogicalErrorRate> threshold_curve(const FlagProtocol& protocol, FlagMode mode,
                                              const std::vector<double>& grid, size_t trials, uint64_t seed,
                                              size_t threads = 1);

// Crossing of p_L(p) with p_L = p by log-log interpolation of the first sign
// change of p_L - p (from below to above).
std::optional<double> pseudo_threshold(const std::vector<LogicalErrorRate>& curve);

}  // namespace ququart

#endif  // QUQUART_FTQEC_HPP
