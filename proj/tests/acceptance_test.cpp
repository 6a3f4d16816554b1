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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any criterion fails. Tolerances and time limits are fixed here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "lotto_signal/lotto_signal.hpp"

namespace lotto_signal {
namespace {

struct Outcome {
  bool ok = false;
  std::string detail;
};

std::string Fmt(const char* f, double a = 0, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

// Runs `body`, checks it against `limit_ms`, and prints the result line.
bool Criterion(const char* id, const char* name, double limit_ms,
               const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double ms = std::chrono::duration<double, std::milli>(
                        std::chrono::steady_clock::now() - start)
                        .count();
  const bool in_time = ms < limit_ms;
  const bool pass = o.ok && in_time;
  std::printf("%s %s  %s  [%s] (%.3f ms, limit %.0f ms)\n", id,
              pass ? "PASS" : "FAIL", name, o.detail.c_str(), ms, limit_ms);
  if (o.ok && !in_time) std::printf("%s   time limit exceeded\n", id);
  return pass;
}

Outcome TwoFold() {
  const GameConfig cfg(BudgetPrior(1.2, 0.5, 0.999), 1.0 / 2.4, 1.0);
  const SpeSolution s = spe_solve(cfg);
  const double ratio = s.pi_star / s.pi_ns;
  return {ratio >= 1.99 && ratio <= 2.00,
          Fmt("pi_star/pi_ns = %.10f, want [1.99, 2.00]", ratio)};
}

Outcome SweepBounds() {
  SweepSpec spec;  // 1.2 / 0.5, c in [0.3, 1.1], p in [0.01, 0.99], 200 x 200
  const std::vector<SweepCell> cells = run_sweep(spec);
  const double step = (spec.c_max - spec.c_min) / static_cast<double>(spec.c_steps - 1);
  const BudgetPrior base(spec.a_high, spec.a_low, 0.5);
  const double p_hat = type_threshold(base);
  std::size_t beneficial = 0;
  std::size_t bad = 0;
  for (const SweepCell& cell : cells) {
    if (!is_beneficial(cell.region)) continue;
    ++beneficial;
    const double abar = cell.p * spec.a_high + (1.0 - cell.p) * spec.a_low;
    if (cell.c < spec.phi / (2.0 * spec.a_high) - step) ++bad;
    if (cell.p >= p_hat && cell.c >= spec.phi / (2.0 * abar) + step) ++bad;
    if (cell.p < p_hat &&
        cell.c >= (1.0 - cell.p) * spec.phi / (2.0 * spec.a_low) + step) {
      ++bad;
    }
  }
  return {beneficial > 0 && bad == 0,
          Fmt("%.0f cells, %.0f beneficial, %.0f outside bounds",
              static_cast<double>(cells.size()), static_cast<double>(beneficial),
              static_cast<double>(bad))};
}

// Neighbours in a c-major grid.
bool HasNeighbour(const std::vector<SweepCell>& cells, const SweepSpec& spec,
                  std::size_t idx, Region want) {
  const std::size_t i = idx / spec.p_steps;
  const std::size_t j = idx % spec.p_steps;
  auto at = [&](std::size_t a, std::size_t b) {
    return cells[a * spec.p_steps + b].region == want;
  };
  return (i > 0 && at(i - 1, j)) || (i + 1 < spec.c_steps && at(i + 1, j)) ||
         (j > 0 && at(i, j - 1)) || (j + 1 < spec.p_steps && at(i, j + 1));
}

Outcome ConditionBoundary() {
  SweepSpec spec;
  spec.a_low = 0.2;
  spec.c_min = 0.4;
  spec.c_max = 0.55;
  const std::vector<SweepCell> cells = run_sweep(spec);
  std::size_t r2 = 0;
  std::size_t interior = 0;
  for (std::size_t k = 0; k < cells.size(); ++k) {
    if (cells[k].region != Region::kRegion2) continue;
    ++r2;
    // A Region2 cell next to a condition failure, with both cells inside
    // the intermediate-cost case, sits on the condition's boundary.
    if (!HasNeighbour(cells, spec, k, Region::kNoBenefitConditionFails)) continue;
    const GameConfig cfg(BudgetPrior(spec.a_high, spec.a_low, cells[k].p),
                         cells[k].c, spec.phi);
    if (proof_case(cfg) == ProofCase::kCase2) ++interior;
  }
  return {r2 > 0 && interior > 0,
          Fmt("R2 cells %.0f, on condition boundary %.0f",
              static_cast<double>(r2), static_cast<double>(interior))};
}

Outcome HighCostNoBenefit() {
  SweepSpec spec;
  spec.a_low = 0.06;
  const std::vector<SweepCell> cells = run_sweep(spec);
  std::size_t in_band = 0;
  std::size_t no_benefit = 0;
  for (const SweepCell& cell : cells) {
    const GameConfig cfg(BudgetPrior(spec.a_high, spec.a_low, cell.p), cell.c,
                         spec.phi);
    if (proof_case(cfg) != ProofCase::kCase3) continue;
    ++in_band;
    if (cell.region == Region::kNoBenefitConditionFails) ++no_benefit;
  }
  return {no_benefit > 0,
          Fmt("case-3 band cells %.0f, tagged NB_COND %.0f",
              static_cast<double>(in_band), static_cast<double>(no_benefit))};
}

Outcome OracleAgreement() {
  constexpr std::size_t kGrid = 10001;
  constexpr double kQTol = 1e-4;
  constexpr double kPiTol = 1e-9;
  const std::vector<GameConfig> configs = sample_configs(1000, 42);
  std::set<Region> tags;
  std::size_t fails = 0;
  double worst_q = 0.0;
  for (const GameConfig& cfg : configs) {
    const OracleReport r = grid_argmax(cfg, kGrid, kPiTol);
    tags.insert(r.tag);
    const double dq = std::abs(r.q_grid_argmax - r.q_closed);
    worst_q = std::max(worst_q, dq);
    if (dq > kQTol || r.pi_closed < r.pi_grid_max - kPiTol * cfg.phi()) ++fails;
  }
  return {fails == 0 && tags.size() == kAllRegions.size(),
          Fmt("disagreements %.0f / 1000, tags seen %.0f / 6, worst |dq| %.3g",
              static_cast<double>(fails), static_cast<double>(tags.size()),
              worst_q)};
}

Outcome Identities() {
  constexpr double kTol = 1e-12;
  double worst = 0.0;
  auto note = [&](const Finding& f) {
    if (f.applicable) worst = std::max(worst, f.amount);
  };
  for (const GameConfig& cfg : sample_configs(1000, 42)) {
    const auto& pr = cfg.prior();
    note(check_trivial_policy_identity(cfg));
    note(check_recomposition(cfg));
    note(check_lambda_at_threshold(pr, cfg.phi()));
    note(check_lambda_min(pr, cfg.phi()));
    note(check_lambda_max(pr, cfg.phi()));
    note(check_ci_payoff_sum(pr.a_high(), pr.a_low(), cfg.phi()));
    note(check_ci_payoff_sum(pr.a_low(), pr.a_high(), cfg.phi()));
    note(check_ci_payoff_sum(pr.a_high(), cfg.cost(), cfg.phi()));
  }
  return {worst <= kTol, Fmt("worst relative gap %.3g, tol 1e-12", worst)};
}

Outcome Monotonicity() {
  constexpr std::size_t kPoints = 100;
  std::size_t violations = 0;
  for (const GameConfig& cfg : sample_configs(200, 42)) {
    if (check_lambda_monotone(cfg.prior(), cfg.phi(), kPoints).failed) ++violations;
    if (check_belief_monotonicity(cfg, kPoints).failed) ++violations;
  }
  return {violations == 0,
          Fmt("violations %.0f over 200 configs x 100 beliefs",
              static_cast<double>(violations))};
}

Outcome TailAudit() {
  constexpr std::size_t kGrid = 10001;
  constexpr double kTol = 1e-9;
  std::size_t audited = 0;
  std::size_t fails = 0;
  double worst = 0.0;
  for (const GameConfig& cfg : sample_configs(5000, 42)) {
    const Finding f = check_tail_inequality(cfg, kGrid, kTol);
    if (!f.applicable) continue;
    ++audited;
    worst = std::max(worst, f.amount);
    if (f.failed) ++fails;
  }
  return {audited > 0 && fails == 0,
          Fmt("R2/R3 configs %.0f, failures %.0f, worst excess %.3g phi",
              static_cast<double>(audited), static_cast<double>(fails), worst)};
}

}  // namespace
}  // namespace lotto_signal

int main() {
  using namespace lotto_signal;
  bool ok = true;
  ok &= Criterion("AC1", "two-fold improvement", 1.0, TwoFold);
  ok &= Criterion("AC2", "cost/prior sweep bounds", 5000.0, SweepBounds);
  ok &= Criterion("AC3a", "intermediate-cost region and condition boundary",
                  5000.0, ConditionBoundary);
  ok &= Criterion("AC3b", "no-benefit cells in the high-cost band", 5000.0,
                  HighCostNoBenefit);
  ok &= Criterion("AC4", "grid oracle agreement", 60000.0, OracleAgreement);
  ok &= Criterion("AC5", "identities", 5000.0, Identities);
  ok &= Criterion("AC6", "monotonicity", 5000.0, Monotonicity);
  ok &= Criterion("AC7", "tail inequality audit", 10000.0, TailAudit);
  std::printf("%s\n", ok ? "ALL PASS" : "SOME CRITERIA FAILED");
  return ok ? 0 : 1;
}
