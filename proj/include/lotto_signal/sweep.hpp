// Copyright 2026 The Lotto Signal Authors
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

#ifndef LOTTO_SIGNAL_SWEEP_HPP_
#define LOTTO_SIGNAL_SWEEP_HPP_

// (cost, prior) grid sweeps of the equilibrium solution and their CSV
// serialization. Rows are c-major, then p, and contain no timestamps, so a
// sweep file is a pure function of its SweepSpec.

#include <algorithm>
#include <cstddef>
#include <cstdio>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "lotto_signal/core_model.hpp"
#include "lotto_signal/signaling.hpp"

namespace lotto_signal {

struct SweepSpec {
  double a_high = 1.2;
  double a_low = 0.5;
  double phi = 1.0;
  double c_min = 0.3;
  double c_max = 1.1;
  std::size_t c_steps = 200;
  double p_min = 0.01;
  double p_max = 0.99;
  std::size_t p_steps = 200;
  std::string output;          // empty: stdout
  std::string format = "csv";  // csv | json

  void validate() const {
    using internal::Require;
    Require(c_min < c_max, "c_min < c_max");
    Require(p_min < p_max, "p_min < p_max");
    Require(c_steps >= 2 && p_steps >= 2, "steps >= 2");
    Require(p_min >= 0.0 && p_max <= 1.0, "0 <= p_min, p_max <= 1");
    Require(c_min > 0.0, "c_min > 0");
    Require(format == "csv" || format == "json", "format in {csv, json}");
    // Budgets and phi are checked by constructing one config.
    GameConfig(BudgetPrior(a_high, a_low, p_min), c_min, phi);
  }

  double c_at(std::size_t i) const {
    if (i + 1 == c_steps) return c_max;
    return c_min + (c_max - c_min) * static_cast<double>(i) /
                       static_cast<double>(c_steps - 1);
  }
  double p_at(std::size_t j) const {
    if (j + 1 == p_steps) return p_max;
    return p_min + (p_max - p_min) * static_cast<double>(j) /
                       static_cast<double>(p_steps - 1);
  }
};

struct SweepCell {
  double c = 0.0;
  double p = 0.0;
  Region region = Region::kNoBenefitConditionFails;
  double q_star = 1.0;
  double pi_ns = 0.0;
  double pi_star = 0.0;
  double improvement_pct = 0.0;
};

inline SweepCell solve_cell(const SweepSpec& spec, double c, double p) {
  const GameConfig cfg(BudgetPrior(spec.a_high, spec.a_low, p), c, spec.phi);
  const SpeSolution s = spe_solve(cfg);
  return {c, p, s.region.tag, s.q_star, s.pi_ns, s.pi_star, s.improvement_pct};
}

/// Solves every grid cell. Rows of the cost axis are distributed over
/// `threads` workers (0: hardware concurrency); output order is fixed.
inline std::vector<SweepCell> run_sweep(const SweepSpec& spec,
                                        std::size_t threads = 0) {
  spec.validate();
  std::vector<SweepCell> cells(spec.c_steps * spec.p_steps);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, spec.c_steps);
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < spec.c_steps; i += threads) {
          for (std::size_t j = 0; j < spec.p_steps; ++j) {
            cells[i * spec.p_steps + j] = solve_cell(spec, spec.c_at(i), spec.p_at(j));
          }
        }
      });
    }
  }
  return cells;
}

// 12 significant digits.
inline std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.12g", x);
  return buf;
}

inline constexpr const char* kCsvHeader =
    "c,p,region,q_star,pi_ns,pi_star,improvement_pct";

inline void write_csv(std::ostream& out, const std::vector<SweepCell>& cells) {
  out << kCsvHeader << '\n';
  for (const SweepCell& cell : cells) {
    out << format_number(cell.c) << ',' << format_number(cell.p) << ','
        << to_string(cell.region) << ',' << format_number(cell.q_star) << ','
        << format_number(cell.pi_ns) << ',' << format_number(cell.pi_star)
        << ',' << format_number(cell.improvement_pct) << '\n';
  }
}

/// Parses the output of write_csv(). Throws InvariantViolation on a
/// malformed header or row.
inline std::vector<SweepCell> read_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kCsvHeader) {
    throw InvariantViolation("sweep csv: unexpected header");
  }
  std::vector<SweepCell> cells;
  std::size_t row = 1;
  while (std::getline(in, line)) {
    ++row;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    const auto region = fields.size() == 7 ? parse_region(fields[2]) : std::nullopt;
    if (!region) {
      throw InvariantViolation("sweep csv: malformed row " + std::to_string(row));
    }
    try {
      cells.push_back({std::stod(fields[0]), std::stod(fields[1]), *region,
                       std::stod(fields[3]), std::stod(fields[4]),
                       std::stod(fields[5]), std::stod(fields[6])});
    } catch (const std::logic_error&) {
      throw InvariantViolation("sweep csv: malformed row " + std::to_string(row));
    }
  }
  return cells;
}

}  // namespace lotto_signal

#endif  // LOTTO_SIGNAL_SWEEP_HPP_
