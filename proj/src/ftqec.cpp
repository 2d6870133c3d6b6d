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

#include "ququart/ftqec.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <stdexcept>

namespace ququart {

namespace {

StabilizerCode make_code(std::string name, size_t k, size_t d, const std::vector<std::string>& stabilizers,
                         const std::vector<std::string>& lx, const std::vector<std::string>& lz) {
  StabilizerCode c;
  c.name = std::move(name);
  c.n = stabilizers.front().size();
  c.k = k;
  c.d = d;
  for (const auto& s : stabilizers) c.stabilizers.push_back(PauliOperator::from_string(s));
  for (const auto& s : lx) c.logical_x.push_back(PauliOperator::from_string(s));
  for (const auto& s : lz) c.logical_z.push_back(PauliOperator::from_string(s));
  c.validate();
  return c;
}

uint64_t location_key(uint64_t stage, uint64_t circuit, uint64_t op) { return (stage << 48) | (circuit << 24) | op; }

constexpr uint64_t kStagePrep = 1;
constexpr uint64_t kStageFlagged = 2;
constexpr uint64_t kStageFull = 3;

std::vector<Fault> sample_faults(const ExtractionSchedule& s, double p, bool quiet_flag_gates, uint64_t seed,
                                 uint64_t trial, uint64_t stage, uint64_t circuit) {
  std::vector<Fault> faults;
  if (p <= 0.0) return faults;
  for (size_t i = 0; i < s.circuit.size(); ++i) {
    const auto& op = s.circuit[i];
    const uint64_t loc = location_key(stage, circuit, i);
    double rate = (quiet_flag_gates && s.syndrome_flag_gate[i]) ? 0.0 : p;
    if (hashed_uniform(seed, trial, loc, 0) >= rate) continue;
    Fault f{i, PauliOperator(s.num_qubits), false};
    if (op.is_prep()) {
      int which = std::min(3, static_cast<int>(4.0 * hashed_uniform(seed, trial, loc, 1)));
      f.pauli.set(op.a, which);
    } else if (op.is_two_qubit()) {
      int which = std::min(15, static_cast<int>(16.0 * hashed_uniform(seed, trial, loc, 1)));
      f.pauli.set(op.a, which / 4);
      f.pauli.set(op.b, which % 4);
    } else if (op.is_measure()) {
      f.flip = true;
    }
    faults.push_back(f);
  }
  return faults;
}

}  // namespace

StabilizerCode StabilizerCode::five_qubit() {
  return make_code("513", 1, 3, {"XZZXI", "IXZZX", "XIXZZ", "ZXIXZ"}, {"XXXXX"}, {"ZZZZZ"});
}

StabilizerCode StabilizerCode::steane() {
  return make_code("713", 1, 3, {"XXXXIII", "IXXIXXI", "IIXXIXX", "ZZZZIII", "IZZIZZI", "IIZZIZZ"}, {"XXXXXXX"},
                   {"ZZZZZZZ"});
}

StabilizerCode StabilizerCode::four_qubit() {
  return make_code("422", 2, 2, {"XXXX", "ZZZZ"}, {"XIXI", "XXII"}, {"ZZII", "ZIZI"});
}

StabilizerCode StabilizerCode::by_name(const std::string& name) {
  if (name == "513") return five_qubit();
  if (name == "713") return steane();
  if (name == "422") return four_qubit();
  throw std::invalid_argument("unknown code: " + name + " (expected 513, 713 or 422)");
}

void StabilizerCode::validate() const {
  if (stabilizers.size() + k != n || logical_x.size() != k || logical_z.size() != k) {
    throw std::invalid_argument("stabilizer code has inconsistent counts");
  }
  for (const auto& s : stabilizers) {
    if (s.num_qubits() != n) throw std::invalid_argument("stabilizer size mismatch");
    for (const auto& t : stabilizers) {
      if (!s.commutes_with(t)) throw std::invalid_argument("stabilizers do not commute");
    }
    for (const auto& l : logical_x) {
      if (!s.commutes_with(l)) throw std::invalid_argument("logical X does not commute with stabilizers");
    }
    for (const auto& l : logical_z) {
      if (!s.commutes_with(l)) throw std::invalid_argument("logical Z does not commute with stabilizers");
    }
  }
  for (size_t i = 0; i < k; ++i) {
    for (size_t j = 0; j < k; ++j) {
      if (logical_x[i].commutes_with(logical_z[j]) == (i == j)) {
        throw std::invalid_argument("logical operators have the wrong commutation");
      }
      if (!logical_x[i].commutes_with(logical_x[j]) || !logical_z[i].commutes_with(logical_z[j])) {
        throw std::invalid_argument("logical operators of the same type must commute");
      }
    }
  }
}

uint64_t StabilizerCode::syndrome(const PauliOperator& error) const {
  uint64_t s = 0;
  for (size_t i = 0; i < stabilizers.size(); ++i) {
    if (!error.commutes_with(stabilizers[i])) s |= uint64_t{1} << i;
  }
  return s;
}

bool StabilizerCode::is_logical_error(const PauliOperator& error) const {
  for (const auto& l : logical_x) {
    if (!error.commutes_with(l)) return true;
  }
  for (const auto& l : logical_z) {
    if (!error.commutes_with(l)) return true;
  }
  return false;
}

bool StabilizerCode::equivalent(const PauliOperator& a, const PauliOperator& b) const {
  PauliOperator d = a * b;
  return syndrome(d) == 0 && !is_logical_error(d);
}

FlagMode parse_flag_mode(const std::string& name) {
  if (name == "normal") return FlagMode::kNormal;
  if (name == "ququart") return FlagMode::kQuquart;
  throw std::invalid_argument("unknown flag mode: " + name + " (expected normal or ququart)");
}

ExtractionSchedule make_schedule(const StabilizerCode& code, size_t stabilizer, const std::vector<size_t>& order,
                                 bool flagged) {
  const PauliOperator& s = code.stabilizers.at(stabilizer);
  std::vector<size_t> support;
  for (size_t q = 0; q < code.n; ++q) {
    if (s.get(q) != 0) support.push_back(q);
  }
  std::vector<size_t> sorted = order;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != support) {
    throw std::invalid_argument("schedule order must be a permutation of the stabilizer support");
  }
  if (flagged && order.size() < 2) {
    throw std::invalid_argument("flagged schedule needs a stabilizer of weight >= 2");
  }
  ExtractionSchedule r;
  r.stabilizer = stabilizer;
  r.order = order;
  r.flagged = flagged;
  const size_t anc = code.n;
  const size_t flag = code.n + 1;
  r.num_qubits = code.n + (flagged ? 2 : 1);
  auto push = [&](CircuitOp op, bool syndrome_flag) {
    r.circuit.push_back(op);
    r.syndrome_flag_gate.push_back(syndrome_flag);
  };
  push({OpKind::kPrepX, anc, 0}, false);
  if (flagged) push({OpKind::kPrepZ, flag, 0}, false);
  for (size_t i = 0; i < order.size(); ++i) {
    if (flagged && i + 1 == order.size()) push({OpKind::kCnot, anc, flag}, true);
    size_t q = order[i];
    switch (s.get(q)) {
      case 1: push({OpKind::kCnot, anc, q}, false); break;
      case 3: push({OpKind::kCz, anc, q}, false); break;
      default: throw std::invalid_argument("stabilizer factors must be X or Z");
    }
    if (flagged && i == 0) push({OpKind::kCnot, anc, flag}, true);
  }
  push({OpKind::kMeasureX, anc, 0}, false);
  if (flagged) push({OpKind::kMeasureZ, flag, 0}, false);
  return r;
}

ExtractionOutcome run_extraction(const StabilizerCode& code, const ExtractionSchedule& schedule,
                                 const PauliOperator& data_error, const std::vector<Fault>& faults) {
  if (data_error.num_qubits() != code.n) {
    throw std::invalid_argument("data error size does not match the code");
  }
  FrameResult fr = simulate_frame(schedule.circuit, data_error.extended(schedule.num_qubits), faults);
  ExtractionOutcome out;
  out.syndrome = fr.flips.at(0) != 0;
  out.flag = schedule.flagged && fr.flips.at(1) != 0;
  out.data = fr.frame.restricted(code.n);
  return out;
}

std::vector<Fault> enumerate_single_faults(const ExtractionSchedule& schedule) {
  std::vector<Fault> out;
  for (size_t i = 0; i < schedule.circuit.size(); ++i) {
    const auto& op = schedule.circuit[i];
    if (op.is_prep()) {
      for (int p = 1; p < 4; ++p) out.push_back({i, PauliOperator::single(schedule.num_qubits, op.a, p), false});
    } else if (op.is_two_qubit()) {
      for (int p = 1; p < 16; ++p) {
        PauliOperator f(schedule.num_qubits);
        f.set(op.a, p / 4);
        f.set(op.b, p % 4);
        out.push_back({i, f, false});
      }
    } else if (op.is_measure()) {
      out.push_back({i, PauliOperator(schedule.num_qubits), true});
    }
  }
  return out;
}

Decoder::Decoder(const StabilizerCode& code) : n_(code.n) {
  const size_t target = size_t{1} << code.stabilizers.size();
  for (size_t w = 0; w <= code.n && min_weight_.size() < target; ++w) {
    std::vector<bool> mask(code.n, false);
    std::fill(mask.begin(), mask.begin() + static_cast<long>(w), true);
    do {
      std::vector<size_t> qubits;
      for (size_t q = 0; q < code.n; ++q) {
        if (mask[q]) qubits.push_back(q);
      }
      size_t combos = 1;
      for (size_t i = 0; i < w; ++i) combos *= 3;
      for (size_t c = 0; c < combos; ++c) {
        PauliOperator e(code.n);
        size_t rest = c;
        for (size_t q : qubits) {
          e.set(q, static_cast<int>(rest % 3) + 1);
          rest /= 3;
        }
        min_weight_.emplace(code.syndrome(e), e);
      }
    } while (std::prev_permutation(mask.begin(), mask.end()));
  }
}

PauliOperator Decoder::min_weight(uint64_t syndrome) const {
  auto it = min_weight_.find(syndrome);
  if (it == min_weight_.end()) {
    throw std::invalid_argument("syndrome outside the code's syndrome space");
  }
  return it->second;
}

PauliOperator Decoder::flagged(size_t circuit, uint64_t syndrome) const {
  auto t = flag_tables_.find(circuit);
  if (t != flag_tables_.end()) {
    auto it = t->second.find(syndrome);
    if (it != t->second.end()) return it->second;
  }
  return min_weight(syndrome);
}

void Decoder::set_flag_table(size_t circuit, std::map<uint64_t, PauliOperator> table) {
  flag_tables_[circuit] = std::move(table);
}

std::optional<std::map<uint64_t, PauliOperator>> build_flag_table(const StabilizerCode& code,
                                                                   const ExtractionSchedule& schedule) {
  std::map<uint64_t, PauliOperator> table;
  table.emplace(0, PauliOperator(code.n));
  const PauliOperator clean(code.n);
  for (const auto& f : enumerate_single_faults(schedule)) {
    auto out = run_extraction(code, schedule, clean, {f});
    if (!out.flag) continue;
    uint64_t s = code.syndrome(out.data);
    auto it = table.find(s);
    if (it == table.end()) {
      table.emplace(s, out.data);
    } else if (!code.equivalent(it->second, out.data)) {
      return std::nullopt;
    } else if (out.data.weight() < it->second.weight()) {
      it->second = out.data;
    }
  }
  return table;
}

FlagProtocol FlagProtocol::build(const StabilizerCode& code) {
  FlagProtocol fp;
  fp.code = code;
  fp.decoder = Decoder(code);
  for (size_t k = 0; k < code.stabilizers.size(); ++k) {
    std::vector<size_t> support;
    for (size_t q = 0; q < code.n; ++q) {
      if (code.stabilizers[k].get(q) != 0) support.push_back(q);
    }
    fp.unflagged.push_back(make_schedule(code, k, support, false));
    std::vector<size_t> order = support;
    bool found = false;
    do {
      auto s = make_schedule(code, k, order, true);
      if (auto table = build_flag_table(code, s)) {
        fp.flagged.push_back(s);
        fp.decoder.set_flag_table(k, *table);
        found = true;
        break;
      }
    } while (std::next_permutation(order.begin(), order.end()));
    if (!found) {
      throw std::runtime_error("no data-qubit order gives distinguishable flagged faults for stabilizer " +
                               std::to_string(k));
    }
  }
  return fp;
}

uint64_t splitmix64(uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

double hashed_uniform(uint64_t seed, uint64_t trial, uint64_t location, uint64_t draw) {
  uint64_t h = splitmix64(seed);
  h = splitmix64(h ^ trial);
  h = splitmix64(h ^ location);
  h = splitmix64(h ^ draw);
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

bool run_trial(const FlagProtocol& protocol, const TrialConfig& config, uint64_t trial) {
  const StabilizerCode& code = protocol.code;
  const double p = config.p;
  const bool quiet = config.flag_mode == FlagMode::kQuquart && !config.flag_gate_faults;

  PauliOperator data(code.n);
  const int kMaxAttempts = 100000;
  for (int attempt = 0;; ++attempt) {
    if (attempt == kMaxAttempts) {
      throw std::runtime_error("data preparation post-selection did not succeed");
    }
    data = PauliOperator(code.n);
    if (p > 0.0) {
      for (size_t q = 0; q < code.n; ++q) {
        const uint64_t loc = location_key(kStagePrep, 0, q);
        if (hashed_uniform(config.seed, trial, loc, 2 * attempt) < p) {
          int which = std::min(3, static_cast<int>(4.0 * hashed_uniform(config.seed, trial, loc, 2 * attempt + 1)));
          data.set(q, which);
        }
      }
    }
    if (code.syndrome(data) == 0) break;
  }

  std::optional<size_t> triggered;
  bool flag = false;
  for (size_t k = 0; k < protocol.flagged.size(); ++k) {
    auto faults = sample_faults(protocol.flagged[k], p, quiet, config.seed, trial, kStageFlagged, k);
    auto out = run_extraction(code, protocol.flagged[k], data, faults);
    data = out.data;
    if (out.flag || out.syndrome) {
      triggered = k;
      flag = out.flag;
      break;
    }
  }
  if (triggered) {
    uint64_t s = 0;
    for (size_t j = 0; j < protocol.unflagged.size(); ++j) {
      auto faults = sample_faults(protocol.unflagged[j], p, quiet, config.seed, trial, kStageFull, j);
      auto out = run_extraction(code, protocol.unflagged[j], data, faults);
      data = out.data;
      if (out.syndrome) s |= uint64_t{1} << j;
    }
    data *= flag ? protocol.decoder.flagged(*triggered, s) : protocol.decoder.min_weight(s);
  }
  data *= protocol.decoder.min_weight(code.syndrome(data));
  return code.is_logical_error(data);
}

LogicalErrorRate logical_error_rate(const FlagProtocol& protocol, const TrialConfig& config) {
  if (!(config.p >= 0.0 && config.p <= 1.0)) {
    throw std::invalid_argument("physical error rate must lie in [0, 1]");
  }
  if (config.trials == 0) {
    throw std::invalid_argument("need at least one trial");
  }
  size_t failures = 0;
  for (uint64_t t = 0; t < config.trials; ++t) failures += run_trial(protocol, config, t) ? 1 : 0;
  double pl = static_cast<double>(failures) / static_cast<double>(config.trials);
  return {config.p, pl, std::sqrt(pl * (1.0 - pl) / static_cast<double>(config.trials)), failures, config.trials};
}

std::vector<LogicalErrorRate> threshold_curve(const FlagProtocol& protocol, FlagMode mode,
                                              const std::vector<double>& grid, size_t trials, uint64_t seed,
                                              size_t threads) {
  std::vector<LogicalErrorRate> out(grid.size());
  threads = std::max<size_t>(1, std::min(threads, grid.size()));
  std::vector<std::future<void>> jobs;
  for (size_t w = 0; w < threads; ++w) {
    jobs.push_back(std::async(std::launch::async, [&, w] {
      for (size_t i = w; i < grid.size(); i += threads) {
        out[i] = logical_error_rate(protocol, {grid[i], mode, trials, seed, false});
      }
    }));
  }
  for (auto& j : jobs) j.get();
  return out;
}

std::optional<double> pseudo_threshold(const std::vector<LogicalErrorRate>& curve) {
  for (size_t i = 0; i + 1 < curve.size(); ++i) {
    const auto& a = curve[i];
    const auto& b = curve[i + 1];
    if (!(a.p > 0.0) || !(b.p > a.p)) continue;
    if (a.p_logical < a.p && b.p_logical >= b.p) {
      if (a.p_logical <= 0.0) {
        double ga = a.p_logical - a.p;
        double gb = b.p_logical - b.p;
        return a.p + (b.p - a.p) * (-ga) / (gb - ga);
      }
      double ga = std::log(a.p_logical / a.p);
      double gb = std::log(b.p_logical / b.p);
      double t = -ga / (gb - ga);
      return std::exp(std::log(a.p) + t * (std::log(b.p) - std::log(a.p)));
    }
  }
  return std::nullopt;
}

}  // namespace ququart
