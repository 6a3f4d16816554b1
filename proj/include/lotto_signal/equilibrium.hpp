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

#ifndef LOTTO_SIGNAL_EQUILIBRIUM_HPP_
#define LOTTO_SIGNAL_EQUILIBRIUM_HPP_

// Stage-2 and Stage-3 equilibrium quantities: the receiver's optimal
// investment given a belief, the signaler's ex-interim payoff against that
// investment, and the no-signal benchmark payoff.

#include <cmath>
#include <string_view>

#include "lotto_signal/core_model.hpp"

namespace lotto_signal {

// Which piece of the receiver's best response is active.
//   kInvestFull:  invest against the expected budget.
//   kInvestHedge: invest only enough to contest the low type, conceding
//                 everything to the high type.
//   kDeterred:    invest nothing and concede phi.
enum class InvestRegime { kInvestFull, kInvestHedge, kDeterred };

inline std::string_view to_string(InvestRegime r) {
  switch (r) {
    case InvestRegime::kInvestFull: return "InvestFull";
    case InvestRegime::kInvestHedge: return "InvestHedge";
    case InvestRegime::kDeterred: return "Deterred";
  }
  return "?";
}

struct InvestmentDecision {
  double amount = 0.0;
  InvestRegime regime = InvestRegime::kDeterred;
};

// Branch selection shared by invest_best_response() and interim_payoff_a().
// Strict inequality for investing, weak for the next regime.
inline InvestRegime investment_regime(const GameConfig& cfg, Belief mu) {
  const BudgetPrior& prior = cfg.prior();
  const double c = cfg.cost();
  if (mu.mu() >= clamped_type_threshold(prior)) {
    return c < half_value_over(cfg.phi(), expected_budget(prior, mu))
               ? InvestRegime::kInvestFull
               : InvestRegime::kDeterred;
  }
  if (c < lambda_threshold(prior, mu, cfg.phi())) {
    return InvestRegime::kInvestFull;
  }
  if (c < hedge_ceiling(prior, mu, cfg.phi())) {
    return InvestRegime::kInvestHedge;
  }
  return InvestRegime::kDeterred;
}

/// Receiver's subgame-perfect investment when it believes the signaler is
/// high with probability mu.
inline InvestmentDecision invest_best_response(const GameConfig& cfg,
                                               Belief mu) {
  const InvestRegime regime = investment_regime(cfg, mu);
  const double scale = cfg.phi() / (2.0 * cfg.cost());
  switch (regime) {
    case InvestRegime::kInvestFull:
      return {std::sqrt(expected_budget(cfg.prior(), mu) * scale), regime};
    case InvestRegime::kInvestHedge:
      return {std::sqrt((1.0 - mu.mu()) * cfg.prior().a_low() * scale),
              regime};
    case InvestRegime::kDeterred:
      break;
  }
  return {0.0, InvestRegime::kDeterred};
}

/// Signaler's ex-interim equilibrium payoff for budget type t when the
/// receiver holds belief mu and invests its best response.
inline double interim_payoff_a(const GameConfig& cfg, Belief mu,
                               BudgetType t) {
  const double c = cfg.cost();
  const double phi = cfg.phi();
  switch (investment_regime(cfg, mu)) {
    case InvestRegime::kInvestFull: {
      const double a_t = cfg.prior().budget(t);
      return a_t * std::sqrt(c * phi / (2.0 * expected_budget(cfg.prior(), mu)));
    }
    case InvestRegime::kInvestHedge:
      if (t == BudgetType::kHigh) return phi;
      return std::sqrt(c * phi * cfg.prior().a_low() / (2.0 * (1.0 - mu.mu())));
    case InvestRegime::kDeterred:
      break;
  }
  return phi;
}

/// Signaler's payoff under the trivial policy, i.e. without signaling.
///
/// Evaluated from its own closed form rather than by composing
/// interim_payoff_a() at the prior, so the two can be checked against each
/// other.
inline double no_signal_payoff(const GameConfig& cfg) {
  const BudgetPrior& prior = cfg.prior();
  const double p = prior.p();
  const double c = cfg.cost();
  const double phi = cfg.phi();
  const double mean = expected_budget(prior, Belief(p));

  if (p >= clamped_type_threshold(prior)) {
    if (c < half_value_over(phi, mean)) return std::sqrt(c * phi * mean / 2.0);
    return phi;
  }
  if (c < lambda_threshold(prior, Belief(p), phi)) {
    return std::sqrt(c * phi * mean / 2.0);
  }
  if (c < hedge_ceiling(prior, Belief(p), phi)) {
    return p * phi + std::sqrt(c * phi * (1.0 - p) * prior.a_low() / 2.0);
  }
  return phi;
}

}  // namespace lotto_signal

#endif  // LOTTO_SIGNAL_EQUILIBRIUM_HPP_
