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

#ifndef LOTTO_SIGNAL_CORE_MODEL_HPP_
#define LOTTO_SIGNAL_CORE_MODEL_HPP_

// Domain types and elementary closed-form quantities of the signaling
// General Lotto game: a signaler (player A) whose budget is either high or
// low, and a receiver (player B) who buys resources at a per-unit cost
// after observing a binary signal.
//
// All functions are pure and thread-safe.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace lotto_signal {

// A value object was constructed with fields that break its invariants.
class InvariantViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// An operation was called outside its documented precondition.
class PreconditionViolation : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// The requested quantity is undefined at these arguments.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// type_threshold() on a prior whose two budgets coincide.
class DegeneratePrior : public DomainError {
 public:
  using DomainError::DomainError;
};

// Bayes update conditioned on a signal that is never sent.
class ZeroProbabilityEvent : public DomainError {
 public:
  using DomainError::DomainError;
};

namespace internal {

inline void Require(bool ok, const char* what) {
  if (!ok) throw InvariantViolation(std::string(what) + " violated");
}

inline bool IsProbability(double x) { return x >= 0.0 && x <= 1.0; }

}  // namespace internal

enum class BudgetType { kHigh, kLow };

// Bernoulli budget distribution of the signaler: budget a_high with
// probability p, a_low otherwise.
class BudgetPrior {
 public:
  BudgetPrior(double a_high, double a_low, double p)
      : a_high_(a_high), a_low_(a_low), p_(p) {
    internal::Require(std::isfinite(a_high) && std::isfinite(a_low),
                      "finite budgets");
    internal::Require(a_high >= a_low, "a_high >= a_low");
    internal::Require(a_low >= 0.0, "a_low >= 0");
    internal::Require(a_high > 0.0, "a_high > 0");
    internal::Require(internal::IsProbability(p), "0 <= p <= 1");
  }

  double a_high() const { return a_high_; }
  double a_low() const { return a_low_; }
  double p() const { return p_; }

  // Budget of the given type.
  double budget(BudgetType t) const {
    return t == BudgetType::kHigh ? a_high_ : a_low_;
  }

  // Same budgets, different probability of the high type.
  BudgetPrior with_p(double p) const { return {a_high_, a_low_, p}; }

  friend bool operator==(const BudgetPrior&, const BudgetPrior&) = default;

 private:
  double a_high_;
  double a_low_;
  double p_;
};

// An instance of the signaling game together with the total battlefield
// value phi. Payoffs depend on the battlefields only through phi.
class GameConfig {
 public:
  GameConfig(BudgetPrior prior, double unit_cost, double phi = 1.0)
      : prior_(prior), unit_cost_(unit_cost), phi_(phi) {
    internal::Require(std::isfinite(unit_cost) && unit_cost > 0.0,
                      "unit_cost > 0");
    internal::Require(std::isfinite(phi) && phi > 0.0, "phi > 0");
  }

  const BudgetPrior& prior() const { return prior_; }
  double cost() const { return unit_cost_; }
  double phi() const { return phi_; }

  GameConfig with_cost(double c) const { return {prior_, c, phi_}; }
  GameConfig with_p(double p) const { return {prior_.with_p(p), unit_cost_, phi_}; }

  friend bool operator==(const GameConfig&, const GameConfig&) = default;

 private:
  BudgetPrior prior_;
  double unit_cost_;
  double phi_;
};

// Receiver's probability that the signaler holds the high budget.
class Belief {
 public:
  explicit Belief(double mu) : mu_(mu) {
    internal::Require(internal::IsProbability(mu), "0 <= mu <= 1");
  }
  double mu() const { return mu_; }
  friend bool operator==(const Belief&, const Belief&) = default;

 private:
  double mu_;
};

// A signaling policy that always reports "high" truthfully. It is fully
// described by q, the probability of also reporting "high" when the budget
// is low. q = 1 is the trivial policy (no information revealed).
class SignalPolicy {
 public:
  explicit SignalPolicy(double q) : q_(q) {
    internal::Require(internal::IsProbability(q), "0 <= q <= 1");
  }
  double q() const { return q_; }

  static SignalPolicy trivial() { return SignalPolicy(1.0); }
  static SignalPolicy full_revelation() { return SignalPolicy(0.0); }

  friend bool operator==(const SignalPolicy&, const SignalPolicy&) = default;

 private:
  double q_;
};

/// Expected budget of the signaler under belief mu.
inline double expected_budget(const BudgetPrior& prior, Belief mu) {
  return mu.mu() * prior.a_high() + (1.0 - mu.mu()) * prior.a_low();
}

/// Belief threshold (a_high - 2 a_low) / (a_high - a_low) that separates the
/// two branch families of the receiver's best response. May be negative.
/// Throws DegeneratePrior when a_high == a_low.
inline double type_threshold(const BudgetPrior& prior) {
  if (prior.a_high() == prior.a_low()) {
    throw DegeneratePrior("type_threshold: a_high == a_low leaves a single "
                          "effective budget type");
  }
  return (prior.a_high() - 2.0 * prior.a_low()) /
         (prior.a_high() - prior.a_low());
}

/// max{type_threshold, 0}, with the single-type prior mapped to 0.
inline double clamped_type_threshold(const BudgetPrior& prior) {
  if (prior.a_high() == prior.a_low()) return 0.0;
  return std::max(type_threshold(prior), 0.0);
}

/// Cost threshold between the receiver's full-strength and hedging
/// investment regimes, evaluated at belief mu.
inline double lambda_threshold(const BudgetPrior& prior, Belief mu,
                               double phi) {
  const double m = mu.mu();
  const double root_low = std::sqrt((1.0 - m) * prior.a_low());
  const double root_mean =
      std::sqrt(m * prior.a_high() + (1.0 - m) * prior.a_low());
  const double s = root_low + root_mean;
  return phi / (2.0 * prior.a_high() * prior.a_high()) * s * s;
}

/// phi / (2 x), read as +infinity when x == 0.
inline double half_value_over(double phi, double x) {
  if (x == 0.0) return std::numeric_limits<double>::infinity();
  return phi / (2.0 * x);
}

/// Cost at or above which a receiver holding belief mu (below the type
/// threshold) stops hedging against the low type: (1 - mu) phi / (2 a_low).
/// +infinity when a_low == 0.
inline double hedge_ceiling(const BudgetPrior& prior, Belief mu, double phi) {
  if (prior.a_low() == 0.0) return std::numeric_limits<double>::infinity();
  return (1.0 - mu.mu()) * phi / (2.0 * prior.a_low());
}

/// Receiver's posterior on the high type after observing signal "high".
/// The posterior after signal "low" is always 0.
inline Belief posterior_high(double p, SignalPolicy policy) {
  internal::Require(internal::IsProbability(p), "0 <= p <= 1");
  const double q = policy.q();
  if (p == 0.0 && q == 0.0) {
    throw ZeroProbabilityEvent(
        "posterior_high: signal h is never sent when p = 0 and q = 0");
  }
  const double mu = p / (p + q * (1.0 - p));
  return Belief(std::min(mu, 1.0));
}

inline Belief posterior_low() { return Belief(0.0); }

/// p / (sqrt(1 - p) - (1 - p)) on the open interval 0 < p < 1.
inline double f_p(double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError("f_p: requires 0 < p < 1");
  }
  return p / (std::sqrt(1.0 - p) - (1.0 - p));
}

/// f_p extended by continuity to p = 0, where the limit is 2.
inline double f_p_with_limit(double p) {
  if (p == 0.0) return 2.0;
  return f_p(p);
}

/// Equilibrium payoff of A in the complete-information General Lotto game
/// with budgets (a, b). Ties go to A, so b == 0 yields phi.
inline double ci_payoff_a(double a, double b, double phi) {
  internal::Require(a >= 0.0 && b >= 0.0, "non-negative budgets");
  if (b == 0.0) return phi;
  if (a <= b) return phi * a / (2.0 * b);
  return phi * (1.0 - b / (2.0 * a));
}

inline double ci_payoff_b(double a, double b, double phi) {
  return phi - ci_payoff_a(a, b, phi);
}

}  // namespace lotto_signal

#endif  // LOTTO_SIGNAL_CORE_MODEL_HPP_
