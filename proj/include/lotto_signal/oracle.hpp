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

#ifndef LOTTO_SIGNAL_ORACLE_HPP_
#define LOTTO_SIGNAL_ORACLE_HPP_

// Brute-force verification of the closed forms.
//
// grid_argmax() maximizes the signaler's objective over a uniform grid of
// policies; the objective is discontinuous wherever the receiver switches to
// zero investment, so no local search is used. The closed-form policy from
// classify() is only consulted afterwards, for comparison.
//
// claim_audit() draws random games and runs every per-game check below.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lotto_signal/core_model.hpp"
#include "lotto_signal/equilibrium.hpp"
#include "lotto_signal/signaling.hpp"

namespace lotto_signal {

inline constexpr double kPayoffTolerance = 1e-9;   // times phi
inline constexpr double kIdentityTolerance = 1e-12;  // relative

struct OracleReport {
  double q_grid_argmax = 1.0;
  double pi_grid_max = 0.0;
  double q_closed = 1.0;
  double pi_closed = 0.0;
  double grid_step = 0.0;
  bool agree = false;
  double max_violation = 0.0;  // max(0, pi_grid_max - pi_closed)
  Region tag = Region::kNoBenefitConditionFails;
};

/// Exhaustive maximization of objective() over {0, 1/(n-1), ..., 1} plus the
/// closed-form policy when classify() reports a beneficial region. Among
/// near-equal maxima (within 1e-12 phi) the largest q is reported, which
/// makes the trivial policy the answer when the objective is flat.
inline OracleReport grid_argmax(const GameConfig& cfg, std::size_t n_points,
                                double tol = kPayoffTolerance) {
  if (n_points < 101) {
    throw PreconditionViolation("grid_argmax: requires n_points >= 101");
  }
  const RegionClass rc = classify(cfg);

  std::vector<double> qs(n_points);
  for (std::size_t i = 0; i < n_points; ++i) {
    qs[i] = static_cast<double>(i) / static_cast<double>(n_points - 1);
  }
  qs.back() = 1.0;
  if (rc.q_star) qs.push_back(*rc.q_star);

  std::vector<double> values(qs.size());
  double best = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < qs.size(); ++i) {
    values[i] = objective(cfg, SignalPolicy(qs[i]));
    best = std::max(best, values[i]);
  }
  const double tie = 1e-12 * cfg.phi();
  double arg = 0.0;
  for (std::size_t i = 0; i < qs.size(); ++i) {
    if (values[i] >= best - tie) arg = std::max(arg, qs[i]);
  }

  OracleReport r;
  r.tag = rc.tag;
  r.q_grid_argmax = arg;
  r.pi_grid_max = best;
  r.q_closed = rc.q_star.value_or(1.0);
  r.pi_closed = objective(cfg, SignalPolicy(r.q_closed));
  r.grid_step = 1.0 / static_cast<double>(n_points - 1);
  r.max_violation = std::max(0.0, r.pi_grid_max - r.pi_closed);
  r.agree = std::abs(r.q_grid_argmax - r.q_closed) <= r.grid_step &&
            r.pi_closed >= r.pi_grid_max - tol * cfg.phi();
  return r;
}

// ---------------------------------------------------------------------------
// Region boundary scan.

enum class ScanAxis { kCost, kPrior };

struct BoundaryMatch {
  std::string name;
  double value = 0.0;  // location of the analytic boundary on the scan axis
};

struct Transition {
  double lo = 0.0;  // last sample with tag `from`
  double hi = 0.0;  // first sample with tag `to`
  Region from = Region::kNoBenefitConditionFails;
  Region to = Region::kNoBenefitConditionFails;
  std::optional<BoundaryMatch> boundary;

  double at() const { return lo + (hi - lo) / 2.0; }
};

namespace internal {

// A curve in (c, p) space given as the zero set of a signed gap. When the
// curve is c = cost(p) the closed form is used directly on the cost axis.
struct BoundaryCurve {
  std::string name;
  std::function<std::optional<double>(const GameConfig&)> gap;
  std::function<std::optional<double>(const GameConfig&)> cost;
};

inline std::vector<BoundaryCurve> BoundaryCurves() {
  using Opt = std::optional<double>;
  auto cost_curve = [](std::string name, std::function<Opt(const GameConfig&)> v) {
    BoundaryCurve b;
    b.name = std::move(name);
    b.cost = v;
    b.gap = [v](const GameConfig& cfg) -> Opt {
      const Opt x = v(cfg);
      if (!x) return std::nullopt;
      return cfg.cost() - *x;
    };
    return b;
  };
  auto below = [](const BudgetPrior& pr) {
    return pr.a_high() != pr.a_low() && pr.p() < type_threshold(pr);
  };

  std::vector<BoundaryCurve> out;
  out.push_back(cost_curve("phi/(2A_h)", [](const GameConfig& g) -> Opt {
    return g.phi() / (2.0 * g.prior().a_high());
  }));
  out.push_back(cost_curve("lambda(p)", [](const GameConfig& g) -> Opt {
    return lambda_threshold(g.prior(), Belief(g.prior().p()), g.phi());
  }));
  out.push_back(cost_curve("phi/(2Abar(p))", [](const GameConfig& g) -> Opt {
    return half_value_over(g.phi(),
                           expected_budget(g.prior(), Belief(g.prior().p())));
  }));
  out.push_back(cost_curve("phi/(2(A_h-A_l))", [](const GameConfig& g) -> Opt {
    const auto& pr = g.prior();
    if (pr.a_high() == pr.a_low()) return std::nullopt;
    return g.phi() / (2.0 * (pr.a_high() - pr.a_low()));
  }));
  out.push_back(cost_curve("case3_lower_cost", [below](const GameConfig& g) -> Opt {
    const auto& pr = g.prior();
    if (!(pr.a_low() > 0.0 && pr.p() > 0.0 && below(pr))) return std::nullopt;
    return case3_lower_cost(g);
  }));
  out.push_back(cost_curve("(1-p)phi/(2A_l)", [](const GameConfig& g) -> Opt {
    if (g.prior().a_low() == 0.0) return std::nullopt;
    return hedge_ceiling(g.prior(), Belief(g.prior().p()), g.phi());
  }));

  BoundaryCurve threshold;
  threshold.name = "type_threshold";
  threshold.gap = [](const GameConfig& g) -> Opt {
    const auto& pr = g.prior();
    if (pr.a_high() == pr.a_low()) return std::nullopt;
    return pr.p() - type_threshold(pr);
  };
  out.push_back(threshold);

  BoundaryCurve cond;
  cond.name = "case2_condition";
  cond.gap = [](const GameConfig& g) -> Opt {
    const auto& pr = g.prior();
    const double c = g.cost();
    const double phi = g.phi();
    if (!(2.0 * c * pr.a_high() > phi) || !(pr.p() > 0.0 && pr.p() < 1.0)) {
      return std::nullopt;
    }
    const double k = std::sqrt(c * phi * pr.a_low() / 2.0);
    return f_p(pr.p()) - (phi - 2.0 * c * pr.a_low()) /
                             (2.0 * c * pr.a_high() - phi) * k / (phi - k);
  };
  out.push_back(cond);
  return out;
}

inline GameConfig AtAxis(const GameConfig& tmpl, ScanAxis axis, double x) {
  return axis == ScanAxis::kCost ? tmpl.with_cost(x) : tmpl.with_p(x);
}

inline std::optional<BoundaryMatch> MatchBoundary(const GameConfig& tmpl,
                                                  ScanAxis axis, double lo,
                                                  double hi) {
  std::optional<BoundaryMatch> best;
  const double mid = lo + (hi - lo) / 2.0;
  for (const BoundaryCurve& curve : BoundaryCurves()) {
    double root;
    if (axis == ScanAxis::kCost && curve.cost) {
      const auto v = curve.cost(tmpl);
      if (!v || *v < lo || *v > hi) continue;
      root = *v;
    } else {
      auto g_lo = curve.gap(AtAxis(tmpl, axis, lo));
      const auto g_hi = curve.gap(AtAxis(tmpl, axis, hi));
      if (!g_lo || !g_hi || ((*g_lo < 0.0) == (*g_hi < 0.0))) continue;
      double a = lo;
      double b = hi;
      const bool lo_negative = *g_lo < 0.0;
      for (int i = 0; i < 200; ++i) {
        const double m = a + (b - a) / 2.0;
        if (m <= a || m >= b) break;
        const auto g = curve.gap(AtAxis(tmpl, axis, m));
        if (!g) break;
        if ((*g < 0.0) == lo_negative) {
          a = m;
        } else {
          b = m;
        }
      }
      root = a + (b - a) / 2.0;
    }
    if (!best || std::abs(root - mid) < std::abs(best->value - mid)) {
      best = BoundaryMatch{curve.name, root};
    }
  }
  return best;
}

}  // namespace internal

/// Samples classify() at n + 1 evenly spaced points of [lo, hi] along one
/// axis, the other parameters taken from `tmpl`, and reports every change of
/// tag. Each bracket is (hi - lo) / n wide and paired with the analytic
/// boundary inside it that lies closest to its midpoint.
inline std::vector<Transition> boundary_scan(const GameConfig& tmpl,
                                             ScanAxis axis, double lo,
                                             double hi, std::size_t n) {
  if (!(lo < hi)) throw PreconditionViolation("boundary_scan: requires lo < hi");
  if (n < 3) throw PreconditionViolation("boundary_scan: requires n >= 3");

  std::vector<Transition> out;
  const double step = (hi - lo) / static_cast<double>(n);
  double prev_x = lo;
  Region prev = classify(internal::AtAxis(tmpl, axis, lo)).tag;
  for (std::size_t i = 1; i <= n; ++i) {
    const double x = i == n ? hi : lo + step * static_cast<double>(i);
    const Region tag = classify(internal::AtAxis(tmpl, axis, x)).tag;
    if (tag != prev) {
      Transition t;
      t.lo = prev_x;
      t.hi = x;
      t.from = prev;
      t.to = tag;
      t.boundary = internal::MatchBoundary(tmpl, axis, prev_x, x);
      out.push_back(std::move(t));
    }
    prev = tag;
    prev_x = x;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Per-game checks used by claim_audit(). Each returns the size of the worst
// discrepancy it saw and whether that exceeds the check's tolerance.

struct Finding {
  bool applicable = false;
  double amount = 0.0;
  bool failed = false;
};

namespace internal {

inline double RelativeGap(double a, double b) {
  const double scale = std::max({std::abs(a), std::abs(b),
                                 std::numeric_limits<double>::min()});
  return std::abs(a - b) / scale;
}

inline Finding Identity(double a, double b, double tol = kIdentityTolerance) {
  const double gap = RelativeGap(a, b);
  return {true, gap, gap > tol};
}

// Fold `next` into `acc`, keeping the worst amount.
inline void Merge(Finding& acc, const Finding& next) {
  if (!next.applicable) return;
  acc.applicable = true;
  acc.amount = std::max(acc.amount, next.amount);
  acc.failed = acc.failed || next.failed;
}

}  // namespace internal

/// objective at the trivial policy equals the no-signal payoff.
inline Finding check_trivial_policy_identity(const GameConfig& cfg) {
  return internal::Identity(objective(cfg, SignalPolicy::trivial()),
                            no_signal_payoff(cfg));
}

/// No-signal payoff equals the prior-weighted ex-interim payoffs at mu = p.
inline Finding check_recomposition(const GameConfig& cfg) {
  const double p = cfg.prior().p();
  const Belief mu(p);
  const double composed = p * interim_payoff_a(cfg, mu, BudgetType::kHigh) +
                          (1.0 - p) * interim_payoff_a(cfg, mu, BudgetType::kLow);
  return internal::Identity(no_signal_payoff(cfg), composed);
}

/// lambda at the type threshold equals phi / (2 (a_high - a_low)).
/// Applies when the threshold is a belief, i.e. a_high >= 2 a_low.
inline Finding check_lambda_at_threshold(const BudgetPrior& prior, double phi) {
  if (prior.a_high() == prior.a_low()) return {};
  const double t = type_threshold(prior);
  if (!(t >= 0.0 && t <= 1.0)) return {};
  return internal::Identity(lambda_threshold(prior, Belief(t), phi),
                            phi / (2.0 * (prior.a_high() - prior.a_low())));
}

/// min{phi/(2 Abar(p)), lambda(p)} is lambda below the threshold and
/// phi/(2 Abar(p)) at or above it.
inline Finding check_lambda_min(const BudgetPrior& prior, double phi) {
  if (prior.a_high() == prior.a_low()) return {};
  const Belief p(prior.p());
  const double lam = lambda_threshold(prior, p, phi);
  const double cap = half_value_over(phi, expected_budget(prior, p));
  const double expected = prior.p() < type_threshold(prior) ? lam : cap;
  return internal::Identity(std::min(cap, lam), expected);
}

/// Below the threshold, the hedge ceiling dominates both other cost
/// thresholds.
inline Finding check_lambda_max(const BudgetPrior& prior, double phi) {
  if (prior.a_high() == prior.a_low() || prior.a_low() == 0.0) return {};
  if (!(prior.p() < type_threshold(prior))) return {};
  const Belief p(prior.p());
  const double ceiling = hedge_ceiling(prior, p, phi);
  const double m = std::max({half_value_over(phi, expected_budget(prior, p)),
                             lambda_threshold(prior, p, phi), ceiling});
  return internal::Identity(m, ceiling);
}

/// lambda is increasing below the type threshold and decreasing above it,
/// checked on `points` evenly spaced beliefs. Steps that straddle the
/// threshold are skipped.
inline Finding check_lambda_monotone(const BudgetPrior& prior, double phi,
                                     std::size_t points = 100) {
  Finding f;
  f.applicable = true;
  const double t = prior.a_high() == prior.a_low()
                       ? 0.0
                       : type_threshold(prior);
  double prev_mu = 0.0;
  double prev = lambda_threshold(prior, Belief(0.0), phi);
  for (std::size_t i = 1; i < points; ++i) {
    const double mu = static_cast<double>(i) / static_cast<double>(points - 1);
    const double cur = lambda_threshold(prior, Belief(mu), phi);
    double drop = 0.0;
    if (mu < t) {
      drop = (prev - cur) / prev;  // should be negative
    } else if (prev_mu > t) {
      drop = (cur - prev) / prev;
    }
    f.amount = std::max(f.amount, drop);
    if (drop > kIdentityTolerance) f.failed = true;
    prev_mu = mu;
    prev = cur;
  }
  return f;
}

/// Within a single investment regime along a belief grid: the full
/// investment rises with mu, the hedge investment falls, and the signaler's
/// payoff against full investment falls for both types.
inline Finding check_belief_monotonicity(const GameConfig& cfg,
                                         std::size_t points = 100) {
  Finding f;
  f.applicable = true;
  auto note = [&f](double rel_violation) {
    f.amount = std::max(f.amount, rel_violation);
    if (rel_violation > kIdentityTolerance) f.failed = true;
  };
  auto rel = [](double a, double b) {
    return (a - b) / std::max({std::abs(a), std::abs(b),
                               std::numeric_limits<double>::min()});
  };
  std::optional<InvestmentDecision> prev;
  double prev_h = 0.0;
  double prev_l = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const Belief mu(static_cast<double>(i) / static_cast<double>(points - 1));
    const InvestmentDecision d = invest_best_response(cfg, mu);
    const double h = interim_payoff_a(cfg, mu, BudgetType::kHigh);
    const double l = interim_payoff_a(cfg, mu, BudgetType::kLow);
    if (prev && prev->regime == d.regime) {
      if (d.regime == InvestRegime::kInvestFull) {
        note(rel(prev->amount, d.amount));  // nondecreasing
        note(rel(h, prev_h));               // nonincreasing
        note(rel(l, prev_l));
      } else if (d.regime == InvestRegime::kInvestHedge) {
        note(rel(d.amount, prev->amount));  // nonincreasing
      }
    }
    prev = d;
    prev_h = h;
    prev_l = l;
  }
  return f;
}

/// Complete-information payoffs sum to phi and stay in [0, phi].
inline Finding check_ci_payoff_sum(double a, double b, double phi) {
  const double pa = ci_payoff_a(a, b, phi);
  const double pb = ci_payoff_b(a, b, phi);
  Finding f = internal::Identity(pa + pb, phi);
  if (pa < 0.0 || pa > phi) f.failed = true;
  return f;
}

/// For the intermediate- and high-cost regions: on the grid points of
/// (q*, 1) the objective never exceeds the no-signal payoff by more than
/// tol * phi, and it is strictly below it at q = 1 - 1e-6.
inline Finding check_tail_inequality(const GameConfig& cfg,
                                     std::size_t grid_points,
                                     double tol = kPayoffTolerance) {
  const RegionClass rc = classify(cfg);
  if (rc.tag != Region::kRegion2 && rc.tag != Region::kRegion3) return {};
  const double q_star = *rc.q_star;
  const double ns = no_signal_payoff(cfg);
  Finding f;
  f.applicable = true;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i + 1 < grid_points; ++i) {
    const double q = static_cast<double>(i) / static_cast<double>(grid_points - 1);
    if (q <= q_star) continue;
    worst = std::max(worst, objective(cfg, SignalPolicy(q)) - ns);
  }
  f.amount = std::max(0.0, worst) / cfg.phi();
  f.failed = worst > tol * cfg.phi();
  if (!(objective(cfg, SignalPolicy(1.0 - 1e-6)) < ns)) f.failed = true;
  return f;
}

/// grid_argmax() agrees with the closed-form policy.
inline Finding check_grid_agreement(const GameConfig& cfg,
                                    std::size_t grid_points,
                                    double tol = kPayoffTolerance) {
  const OracleReport r = grid_argmax(cfg, grid_points, tol);
  const double q_gap = std::abs(r.q_grid_argmax - r.q_closed);
  return {true, std::max(q_gap, r.max_violation / cfg.phi()), !r.agree};
}

// ---------------------------------------------------------------------------
// Random audit.

/// Draws a game with a_high in [0.1, 5], a_low in [0.01, a_high],
/// p in [0.01, 0.99], phi = 1 half the time and in [0.5, 2] otherwise, and
/// c in (0, 1.5 (1 - p) phi / (2 a_low)] capped at 1e3.
inline GameConfig sample_config(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u01(0.0, 1.0);
  auto uniform = [&](double lo, double hi) { return lo + (hi - lo) * u01(rng); };
  const double a_high = uniform(0.1, 5.0);
  const double a_low = uniform(0.01, a_high);
  const double p = uniform(0.01, 0.99);
  const double phi = u01(rng) < 0.5 ? 1.0 : uniform(0.5, 2.0);
  const double cap = std::min(1.5 * (1.0 - p) * phi / (2.0 * a_low), 1e3);
  const double c = cap * (1.0 - u01(rng));
  return GameConfig(BudgetPrior(a_high, a_low, p), c, phi);
}

/// `n` draws from sample_config() seeded with `seed`.
inline std::vector<GameConfig> sample_configs(std::size_t n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<GameConfig> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_config(rng));
  return out;
}

struct AuditOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 42;
  std::size_t grid_points = 10001;
  double tol = kPayoffTolerance;
  std::size_t threads = 0;  // 0: hardware concurrency
};

struct CheckStats {
  std::string name;
  std::size_t checked = 0;
  std::size_t violations = 0;
  double worst = 0.0;
  std::optional<GameConfig> worst_config;
};

struct AuditSummary {
  std::size_t samples = 0;
  std::map<Region, std::size_t> tag_counts;
  std::vector<CheckStats> checks;

  std::size_t violations() const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.violations;
    return n;
  }

  // The failing check with the largest discrepancy, else the largest
  // discrepancy overall.
  const CheckStats* worst_case() const {
    const CheckStats* out = nullptr;
    for (const auto& c : checks) {
      if (!c.checked) continue;
      const bool better =
          !out || (c.violations > 0) > (out->violations > 0) ||
          ((c.violations > 0) == (out->violations > 0) && c.worst > out->worst);
      if (better) out = &c;
    }
    return out;
  }
};

inline const std::vector<std::string>& audit_check_names() {
  static const std::vector<std::string> names = {
      "trivial_policy_identity", "recomposition",   "lambda_at_threshold",
      "lambda_min",              "lambda_max",      "lambda_monotone",
      "belief_monotonicity",     "ci_payoff_sum",   "tail_inequality",
      "classifier_vs_grid",
  };
  return names;
}

/// Runs every check on one game, in the order of audit_check_names().
inline std::vector<Finding> audit_one(const GameConfig& cfg,
                                      std::size_t grid_points, double tol) {
  const auto& pr = cfg.prior();
  Finding ci;
  internal::Merge(ci, check_ci_payoff_sum(pr.a_high(), pr.a_low(), cfg.phi()));
  internal::Merge(ci, check_ci_payoff_sum(pr.a_low(), pr.a_high(), cfg.phi()));
  internal::Merge(ci, check_ci_payoff_sum(pr.a_high(), cfg.cost(), cfg.phi()));
  return {
      check_trivial_policy_identity(cfg),
      check_recomposition(cfg),
      check_lambda_at_threshold(pr, cfg.phi()),
      check_lambda_min(pr, cfg.phi()),
      check_lambda_max(pr, cfg.phi()),
      check_lambda_monotone(pr, cfg.phi()),
      check_belief_monotonicity(cfg),
      ci,
      check_tail_inequality(cfg, grid_points, tol),
      check_grid_agreement(cfg, grid_points, tol),
  };
}

/// Audits `samples` random games. Games are drawn sequentially from the
/// seed and checked in parallel; the summary does not depend on the thread
/// count.
inline AuditSummary claim_audit(const AuditOptions& opt) {
  if (opt.samples < 1) {
    throw PreconditionViolation("claim_audit: requires samples >= 1");
  }
  const std::vector<GameConfig> configs = sample_configs(opt.samples, opt.seed);
  std::vector<std::vector<Finding>> findings(configs.size());
  std::vector<Region> tags(configs.size());

  std::size_t threads = opt.threads ? opt.threads
                                    : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, configs.size());
  {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) {
      pool.emplace_back([&, t] {
        for (std::size_t i = t; i < configs.size(); i += threads) {
          findings[i] = audit_one(configs[i], opt.grid_points, opt.tol);
          tags[i] = classify(configs[i]).tag;
        }
      });
    }
  }

  AuditSummary s;
  s.samples = configs.size();
  for (const auto& name : audit_check_names()) {
    s.checks.push_back({name, 0, 0, 0.0, std::nullopt});
  }
  for (std::size_t i = 0; i < configs.size(); ++i) {
    ++s.tag_counts[tags[i]];
    for (std::size_t k = 0; k < s.checks.size(); ++k) {
      const Finding& f = findings[i][k];
      if (!f.applicable) continue;
      CheckStats& c = s.checks[k];
      ++c.checked;
      if (f.failed) ++c.violations;
      if (!c.worst_config || f.amount > c.worst) {
        c.worst = f.amount;
        c.worst_config = configs[i];
      }
    }
  }
  return s;
}

}  // namespace lotto_signal

#endif  // LOTTO_SIGNAL_ORACLE_HPP_
