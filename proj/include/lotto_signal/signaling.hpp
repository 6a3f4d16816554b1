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

#ifndef LOTTO_SIGNAL_SIGNALING_HPP_
#define LOTTO_SIGNAL_SIGNALING_HPP_

// Stage-1 problem: the signaler's expected payoff as a function of its
// policy q, the classification of (cost, prior) into the regions where
// signaling strictly beats staying silent, and the subgame-perfect
// equilibrium policy.

#include <algorithm>
#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <string_view>

#include "lotto_signal/core_model.hpp"
#include "lotto_signal/equilibrium.hpp"

namespace lotto_signal {

// (c, p) lies in none of the regions covered by the piecewise closed forms.
class OutOfCase : public DomainError {
 public:
  using DomainError::DomainError;
};

enum class Region {
  kRegion1,
  kRegion2,
  kRegion3,
  kNoBenefitCheapCost,
  kNoBenefitAlreadyWinning,
  kNoBenefitConditionFails,
};

inline constexpr std::array<Region, 6> kAllRegions = {
    Region::kRegion1,
    Region::kRegion2,
    Region::kRegion3,
    Region::kNoBenefitCheapCost,
    Region::kNoBenefitAlreadyWinning,
    Region::kNoBenefitConditionFails,
};

// Short tag used in CSV and JSON output.
inline std::string_view to_string(Region r) {
  switch (r) {
    case Region::kRegion1: return "R1";
    case Region::kRegion2: return "R2";
    case Region::kRegion3: return "R3";
    case Region::kNoBenefitCheapCost: return "NB_CHEAP";
    case Region::kNoBenefitAlreadyWinning: return "NB_WIN";
    case Region::kNoBenefitConditionFails: return "NB_COND";
  }
  return "?";
}

inline std::string_view long_name(Region r) {
  switch (r) {
    case Region::kRegion1: return "Region1";
    case Region::kRegion2: return "Region2";
    case Region::kRegion3: return "Region3";
    case Region::kNoBenefitCheapCost: return "NoBenefitCheapCost";
    case Region::kNoBenefitAlreadyWinning: return "NoBenefitAlreadyWinning";
    case Region::kNoBenefitConditionFails: return "NoBenefitConditionFails";
  }
  return "?";
}

inline std::optional<Region> parse_region(std::string_view s) {
  for (Region r : kAllRegions) {
    if (s == to_string(r) || s == long_name(r)) return r;
  }
  return std::nullopt;
}

inline bool is_beneficial(Region r) {
  return r == Region::kRegion1 || r == Region::kRegion2 ||
         r == Region::kRegion3;
}

struct RegionClass {
  Region tag = Region::kNoBenefitConditionFails;
  std::optional<double> q_star;  // present iff tag is beneficial

  bool beneficial() const { return is_beneficial(tag); }
};

struct SpeSolution {
  RegionClass region;
  double q_star = 1.0;
  Belief mu_h{0.0};
  InvestmentDecision invest_after_h;
  InvestmentDecision invest_after_l;
  double pi_star = 0.0;
  double pi_ns = 0.0;
  double improvement_pct = 0.0;
};

/// Largest q at which a "high" signal leaves the receiver deterred while
/// the receiver still contests the full expected budget otherwise:
/// p/(1-p) * (2 c a_high - phi) / (phi - 2 c a_low).
inline double deterrence_policy_full(const GameConfig& cfg) {
  const auto& pr = cfg.prior();
  const double p = pr.p();
  const double c = cfg.cost();
  const double phi = cfg.phi();
  return p / (1.0 - p) * (2.0 * c * pr.a_high() - phi) /
         (phi - 2.0 * c * pr.a_low());
}

/// Same, for the hedging regime: p/(1-p) * 2 c a_low / (phi - 2 c a_low).
inline double deterrence_policy_hedge(const GameConfig& cfg) {
  const auto& pr = cfg.prior();
  const double p = pr.p();
  const double c = cfg.cost();
  const double phi = cfg.phi();
  return p / (1.0 - p) * (2.0 * c * pr.a_low()) /
         (phi - 2.0 * c * pr.a_low());
}

/// Moves a closed-form deterrence boundary q to the largest double at which
/// the receiver is deterred at the rounded posterior. The set of deterring
/// policies is the closed interval [0, q*]; rounding in the Bayes update can
/// put the formula value on the wrong side of it, by many ulps when q* is
/// small. Returns q unchanged if the edge is not within a relative 1e-8.
inline double snap_to_deterrence(const GameConfig& cfg, double q) {
  q = std::clamp(q, 0.0, 1.0);
  const double p = cfg.prior().p();
  auto deterred = [&](double x) {
    return investment_regime(cfg, posterior_high(p, SignalPolicy(x))) ==
           InvestRegime::kDeterred;
  };
  const double reach = std::max(q, 1e-300) * 1e-8;
  const bool inside = deterred(q);
  if (inside && q == 1.0) return q;
  if (!inside && q == 0.0) return q;
  // Bracket [lo, hi] with lo deterred and hi not, by doubling steps.
  double lo = q;
  double hi = q;
  double step = inside ? std::nextafter(q, 2.0) - q : q - std::nextafter(q, -1.0);
  while (true) {
    if (inside) {
      hi = std::min(lo + step, 1.0);
      if (!deterred(hi)) break;
      if (hi == 1.0) return 1.0;
      lo = hi;
    } else {
      lo = std::max(hi - step, 0.0);
      if (deterred(lo)) break;
      if (lo == 0.0) return q;
      hi = lo;
    }
    if (std::abs(lo - q) > reach || std::abs(hi - q) > reach) return q;
    step *= 2.0;
  }
  while (true) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) return lo;
    if (deterred(mid)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
}

/// Benefit condition for the intermediate-cost region:
///   f_p > (phi - 2 c a_low)/(2 c a_high - phi)
///         * sqrt(c phi a_low / 2) / (phi - sqrt(c phi a_low / 2)).
/// Requires 2 c a_high > phi and 0 < p < 1.
inline bool case2_condition(const GameConfig& cfg) {
  const auto& pr = cfg.prior();
  const double c = cfg.cost();
  const double phi = cfg.phi();
  if (!(2.0 * c * pr.a_high() > phi)) {
    throw PreconditionViolation("case2_condition: requires 2 c a_high > phi");
  }
  if (!(pr.p() > 0.0 && pr.p() < 1.0)) {
    throw PreconditionViolation("case2_condition: requires 0 < p < 1");
  }
  const double k = std::sqrt(c * phi * pr.a_low() / 2.0);
  const double rhs = (phi - 2.0 * c * pr.a_low()) /
                     (2.0 * c * pr.a_high() - phi) * k / (phi - k);
  return f_p(pr.p()) > rhs;
}

/// Lower cost bound of the high-cost benefit region as a function of f_p:
///   (phi / (2 a_low)) * ((f - sqrt(f^2 - f + 1)) / (f - 1))^2.
/// Near f = 1 the underlying quadratic in sqrt(c) is linear and the bound
/// is phi / (8 a_low f^2).
inline double case3_lower_cost(double f, double a_low, double phi) {
  if (!(a_low > 0.0)) {
    throw PreconditionViolation("case3_lower_cost: requires a_low > 0");
  }
  if (std::abs(f - 1.0) < 1e-9) return phi / (8.0 * a_low * f * f);
  const double r = (f - std::sqrt(f * f - f + 1.0)) / (f - 1.0);
  return phi / (2.0 * a_low) * r * r;
}

/// Square of the larger root of the same quadratic. Always above
/// phi / (2 a_low) for f > 1.
inline double case3_upper_root_sq(double f, double a_low, double phi) {
  const double r = phi / ((f - 1.0) * std::sqrt(2.0 * phi * a_low)) *
                   (f + std::sqrt(f * f - f + 1.0));
  return r * r;
}

inline double case3_lower_cost(const GameConfig& cfg) {
  const auto& pr = cfg.prior();
  const double p = pr.p();
  const bool below = pr.a_high() != pr.a_low() && p < type_threshold(pr);
  if (!(p > 0.0 && below)) {
    throw PreconditionViolation(
        "case3_lower_cost: requires 0 < p < type threshold");
  }
  return case3_lower_cost(f_p(p), pr.a_low(), cfg.phi());
}

/// Signaler's expected payoff when it commits to `policy` and the receiver
/// best-responds to each signal.
inline double objective(const GameConfig& cfg, SignalPolicy policy) {
  const double p = cfg.prior().p();
  const double q = policy.q();
  double total = 0.0;
  if (p + q * (1.0 - p) > 0.0) {
    const Belief mu_h = posterior_high(p, policy);
    total += p * interim_payoff_a(cfg, mu_h, BudgetType::kHigh) +
             (1.0 - p) * q * interim_payoff_a(cfg, mu_h, BudgetType::kLow);
  }
  total += (1.0 - p) * (1.0 - q) *
           interim_payoff_a(cfg, posterior_low(), BudgetType::kLow);
  return total;
}

// Parameter regions in which objective() has an explicit piecewise form.
enum class ProofCase { kCheapCost, kCase1, kCase2, kCase3 };

inline std::optional<ProofCase> proof_case(const GameConfig& cfg) {
  const auto& pr = cfg.prior();
  const double p = pr.p();
  if (!(p > 0.0 && p < 1.0)) return std::nullopt;
  const double c = cfg.cost();
  const double phi = cfg.phi();
  const double lower = phi / (2.0 * pr.a_high());
  const double lam = lambda_threshold(pr, Belief(p), phi);
  const double mean_cap = half_value_over(phi, expected_budget(pr, Belief(p)));
  const bool below = pr.a_high() != pr.a_low() && p < type_threshold(pr);

  if (c < lower && (!below || c < lam)) return ProofCase::kCheapCost;
  if (lower <= c && c < std::min(mean_cap, lam)) return ProofCase::kCase1;
  if (!below) return std::nullopt;
  const double gap_cap = phi / (2.0 * (pr.a_high() - pr.a_low()));
  if (std::max(lam, lower) <= c && c < gap_cap) return ProofCase::kCase2;
  if (pr.a_low() > 0.0 && gap_cap <= c &&
      c < hedge_ceiling(pr, Belief(p), phi)) {
    return ProofCase::kCase3;
  }
  return std::nullopt;
}

namespace internal {

// Smallest belief in [lo, hi] with lambda(mu) > c, assuming
// lambda(lo) <= c < lambda(hi) and lambda increasing on [lo, hi].
inline double LambdaCrossing(const BudgetPrior& prior, double phi, double c,
                             double lo, double hi) {
  while (true) {
    const double mid = lo + (hi - lo) / 2.0;
    if (mid <= lo || mid >= hi) return hi;
    if (lambda_threshold(prior, Belief(mid), phi) > c) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
}

}  // namespace internal

/// objective() recomputed from the explicit per-case expressions. Used only
/// to cross-check objective(). Throws OutOfCase outside those regions.
inline double objective_piecewise(const GameConfig& cfg, SignalPolicy policy) {
  const std::optional<ProofCase> pc = proof_case(cfg);
  if (!pc) {
    throw OutOfCase("objective_piecewise: (c, p) outside every case region");
  }
  const auto& pr = cfg.prior();
  const double p = pr.p();
  const double q = policy.q();
  const double c = cfg.cost();
  const double phi = cfg.phi();
  const double low_alone = (1.0 - p) * (1.0 - q) *
                           std::sqrt(c * phi * pr.a_low() / 2.0);

  const auto deterred = [&] { return phi * (p + (1.0 - p) * q) + low_alone; };
  const auto full = [&] {
    const double mu = posterior_high(p, policy).mu();
    const double mean = mu * pr.a_high() + (1.0 - mu) * pr.a_low();
    return std::sqrt(c * phi / (2.0 * mean)) *
               (p * pr.a_high() + (1.0 - p) * q * pr.a_low()) +
           low_alone;
  };
  const auto hedge = [&] {
    const double mu = posterior_high(p, policy).mu();
    return p * phi +
           (1.0 - p) * q *
               std::sqrt(c * phi * pr.a_low() / (2.0 * (1.0 - mu))) +
           low_alone;
  };

  switch (*pc) {
    case ProofCase::kCheapCost:
      return full();
    case ProofCase::kCase1:
      return q <= snap_to_deterrence(cfg, deterrence_policy_full(cfg))
                 ? deterred()
                 : full();
    case ProofCase::kCase2: {
      if (q <= snap_to_deterrence(cfg, deterrence_policy_full(cfg))) {
        return deterred();
      }
      const double threshold = type_threshold(pr);
      const double mu = posterior_high(p, policy).mu();
      if (mu >= threshold) return full();
      const double crossing = internal::LambdaCrossing(pr, phi, c, p, threshold);
      return mu >= crossing ? full() : hedge();
    }
    case ProofCase::kCase3:
      return q <= snap_to_deterrence(cfg, deterrence_policy_hedge(cfg))
                 ? deterred()
                 : hedge();
  }
  throw OutOfCase("objective_piecewise: unreachable");
}

/// Classifies (c, p) into the regions where some non-trivial policy strictly
/// beats the trivial one, and returns that policy. Items are tested in order
/// (1, 2, 3) with their inequalities exactly as stated; everything else gets
/// a no-benefit reason.
inline RegionClass classify(const GameConfig& cfg) {
  const auto& pr = cfg.prior();
  const double p = pr.p();
  if (!(p > 0.0 && p < 1.0)) return {Region::kNoBenefitConditionFails, {}};

  const double c = cfg.cost();
  const double phi = cfg.phi();
  const double lower = phi / (2.0 * pr.a_high());
  const double lam = lambda_threshold(pr, Belief(p), phi);
  const double mean_cap = half_value_over(phi, expected_budget(pr, Belief(p)));

  if (lower <= c && c < std::min(mean_cap, lam)) {
    return {Region::kRegion1,
            snap_to_deterrence(cfg, deterrence_policy_full(cfg))};
  }

  const bool below = pr.a_high() != pr.a_low() && p < type_threshold(pr);
  if (below) {
    const double gap_cap = phi / (2.0 * (pr.a_high() - pr.a_low()));
    if (std::max(lam, lower) <= c && c < gap_cap &&
        2.0 * c * pr.a_high() > phi && case2_condition(cfg)) {
      return {Region::kRegion2,
              snap_to_deterrence(cfg, deterrence_policy_full(cfg))};
    }
    if (pr.a_low() > 0.0) {
      const double lo = std::max(gap_cap, case3_lower_cost(cfg));
      if (lo <= c && c < hedge_ceiling(pr, Belief(p), phi)) {
        return {Region::kRegion3,
                snap_to_deterrence(cfg, deterrence_policy_hedge(cfg))};
      }
    }
  }

  if (c < lower) return {Region::kNoBenefitCheapCost, {}};
  if (no_signal_payoff(cfg) == phi) {
    return {Region::kNoBenefitAlreadyWinning, {}};
  }
  return {Region::kNoBenefitConditionFails, {}};
}

/// Subgame-perfect equilibrium of the signaling game: the optimal policy
/// (trivial when no region applies), the receiver's investments after each
/// signal, and the resulting payoffs.
inline SpeSolution spe_solve(const GameConfig& cfg) {
  SpeSolution s;
  s.region = classify(cfg);
  s.q_star = s.region.q_star.value_or(1.0);
  const SignalPolicy policy(s.q_star);
  const double p = cfg.prior().p();
  s.mu_h = (p == 0.0 && s.q_star == 0.0) ? Belief(0.0)
                                         : posterior_high(p, policy);
  s.invest_after_h = invest_best_response(cfg, s.mu_h);
  s.invest_after_l = invest_best_response(cfg, posterior_low());
  s.pi_star = objective(cfg, policy);
  s.pi_ns = no_signal_payoff(cfg);
  s.improvement_pct = 100.0 * (s.pi_star / s.pi_ns - 1.0);
  return s;
}

}  // namespace lotto_signal

#endif  // LOTTO_SIGNAL_SIGNALING_HPP_
