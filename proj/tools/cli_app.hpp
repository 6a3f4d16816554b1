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

#ifndef LOTTO_SIGNAL_TOOLS_CLI_APP_HPP_
#define LOTTO_SIGNAL_TOOLS_CLI_APP_HPP_

// Command-line front end. Kept in a header so tests can drive it in-process.
//
//   lotto_signal solve  --a-high A --a-low A --p P --cost C [--phi F]
//   lotto_signal sweep  [--a-high ..] [--c-min ..] ... [--out FILE]
//   lotto_signal verify [--samples N] [--grid M] [--seed S] [--tol T]
//   lotto_signal payoff --a A --b B [--phi F]
//
// Every subcommand accepts --config FILE (JSON); flags win on conflict.
// Exit codes: 0 ok, 1 verification failure, 2 bad arguments, 3 I/O error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "lotto_signal/lotto_signal.hpp"

namespace lotto_signal::cli {

enum ExitCode : int {
  kOk = 0,
  kVerificationFailed = 1,
  kBadArguments = 2,
  kIoError = 3,
};

namespace detail {

using nlohmann::json;

struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rounds to the 12 significant digits used in all output.
inline double Round12(double x) {
  if (!std::isfinite(x)) return x;
  return std::stod(format_number(x));
}

inline json LoadConfig(const std::string& path) {
  if (path.empty()) return json::object();
  std::ifstream in(path);
  if (!in) throw IoError("cannot read config file '" + path + "'");
  try {
    json j = json::parse(in);
    if (!j.is_object()) throw InvariantViolation("config: top level must be an object");
    return j;
  } catch (const json::exception& e) {
    throw InvariantViolation(std::string("config: ") + e.what());
  }
}

// A flag value if given, else the config value, else the fallback.
template <typename T>
T Resolve(const CLI::Option* flag, const T& flag_value, const json& cfg,
          const char* key, std::optional<T> fallback, const char* flag_name) {
  if (flag->count() > 0) return flag_value;
  if (cfg.contains(key)) {
    try {
      return cfg.at(key).get<T>();
    } catch (const json::exception&) {
      throw InvariantViolation(std::string("config: bad value for '") + key + "'");
    }
  }
  if (fallback) return *fallback;
  throw InvariantViolation(std::string("missing ") + flag_name);
}

inline json DecisionJson(const InvestmentDecision& d) {
  return {{"amount", Round12(d.amount)}, {"regime", std::string(to_string(d.regime))}};
}

inline json ConfigJson(const GameConfig& cfg) {
  return {{"a_high", Round12(cfg.prior().a_high())},
          {"a_low", Round12(cfg.prior().a_low())},
          {"p", Round12(cfg.prior().p())},
          {"cost", Round12(cfg.cost())},
          {"phi", Round12(cfg.phi())}};
}

inline json SolutionJson(const GameConfig& cfg, const SpeSolution& s) {
  json j = ConfigJson(cfg);
  j["region"] = std::string(to_string(s.region.tag));
  j["region_name"] = std::string(long_name(s.region.tag));
  j["beneficial"] = s.region.beneficial();
  j["q_star"] = Round12(s.q_star);
  j["mu_h"] = Round12(s.mu_h.mu());
  j["invest_after_h"] = DecisionJson(s.invest_after_h);
  j["invest_after_l"] = DecisionJson(s.invest_after_l);
  j["pi_star"] = Round12(s.pi_star);
  j["pi_ns"] = Round12(s.pi_ns);
  j["improvement_pct"] = Round12(s.improvement_pct);
  return j;
}

inline void PrintSolution(std::ostream& out, const SpeSolution& s) {
  auto line = [&out](const char* k, const std::string& v) {
    out << k << std::string(18 - std::string(k).size(), ' ') << v << '\n';
  };
  auto decision = [](const InvestmentDecision& d) {
    return format_number(d.amount) + " (" + std::string(to_string(d.regime)) + ")";
  };
  line("region", std::string(long_name(s.region.tag)) + " (" +
                     std::string(to_string(s.region.tag)) + ")");
  line("q_star", format_number(s.q_star));
  line("mu_h", format_number(s.mu_h.mu()));
  line("invest_after_h", decision(s.invest_after_h));
  line("invest_after_l", decision(s.invest_after_l));
  line("pi_star", format_number(s.pi_star));
  line("pi_ns", format_number(s.pi_ns));
  line("improvement_pct", format_number(s.improvement_pct));
}

inline json AuditJson(const AuditSummary& s) {
  json checks = json::array();
  for (const auto& c : s.checks) {
    checks.push_back({{"name", c.name},
                      {"checked", c.checked},
                      {"violations", c.violations},
                      {"worst", Round12(c.worst)}});
  }
  json tags = json::object();
  for (Region r : kAllRegions) {
    const auto it = s.tag_counts.find(r);
    tags[std::string(to_string(r))] = it == s.tag_counts.end() ? 0 : it->second;
  }
  json worst = nullptr;
  if (const CheckStats* w = s.worst_case()) {
    worst = {{"check", w->name}, {"amount", Round12(w->worst)}, {"failed", w->violations > 0}};
    if (w->worst_config) worst["config"] = ConfigJson(*w->worst_config);
  }
  return {{"samples", s.samples},
          {"violations", s.violations()},
          {"worst_case", worst},
          {"checks", checks},
          {"tags", tags}};
}

inline void PrintAudit(std::ostream& out, const AuditSummary& s) {
  out << "samples " << s.samples << ", violations " << s.violations() << '\n';
  for (const auto& c : s.checks) {
    out << "  " << c.name << std::string(26 - c.name.size(), ' ') << "checked "
        << c.checked << "  violations " << c.violations << "  worst "
        << format_number(c.worst) << '\n';
  }
  out << "  tags:";
  for (Region r : kAllRegions) {
    const auto it = s.tag_counts.find(r);
    out << ' ' << to_string(r) << '=' << (it == s.tag_counts.end() ? 0 : it->second);
  }
  out << '\n';
}

inline json SweepJson(const SweepSpec& spec, const std::vector<SweepCell>& cells) {
  json rows = json::array();
  for (const auto& c : cells) {
    rows.push_back({{"c", Round12(c.c)},
                    {"p", Round12(c.p)},
                    {"region", std::string(to_string(c.region))},
                    {"q_star", Round12(c.q_star)},
                    {"pi_ns", Round12(c.pi_ns)},
                    {"pi_star", Round12(c.pi_star)},
                    {"improvement_pct", Round12(c.improvement_pct)}});
  }
  return {{"a_high", Round12(spec.a_high)},
          {"a_low", Round12(spec.a_low)},
          {"phi", Round12(spec.phi)},
          {"cells", rows}};
}

}  // namespace detail

/// Runs the CLI on argv and returns the process exit code.
inline int run_cli(int argc, const char* const* argv, std::ostream& out,
                   std::ostream& err) {
  using detail::json;
  using detail::Resolve;

  CLI::App app{"Equilibrium solver for the signaling General Lotto game",
               "lotto_signal"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one game instance");
  double a_high = 0, a_low = 0, p = 0, cost = 0, phi = 1.0;
  std::string format = "text", config_path;
  auto* o_ah = solve->add_option("--a-high", a_high, "High budget");
  auto* o_al = solve->add_option("--a-low", a_low, "Low budget");
  auto* o_p = solve->add_option("--p", p, "Probability of the high budget");
  auto* o_c = solve->add_option("--cost", cost, "Receiver's per-unit cost");
  auto* o_phi = solve->add_option("--phi", phi, "Total battlefield value");
  solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
  solve->add_option("--config", config_path, "JSON configuration file");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Sweep a (cost, prior) grid");
  SweepSpec spec;
  std::string sweep_config;
  auto* s_ah = sweep->add_option("--a-high", spec.a_high);
  auto* s_al = sweep->add_option("--a-low", spec.a_low);
  auto* s_phi = sweep->add_option("--phi", spec.phi);
  auto* s_cmin = sweep->add_option("--c-min", spec.c_min);
  auto* s_cmax = sweep->add_option("--c-max", spec.c_max);
  auto* s_cst = sweep->add_option("--c-steps", spec.c_steps);
  auto* s_pmin = sweep->add_option("--p-min", spec.p_min);
  auto* s_pmax = sweep->add_option("--p-max", spec.p_max);
  auto* s_pst = sweep->add_option("--p-steps", spec.p_steps);
  auto* s_out = sweep->add_option("--out", spec.output, "Output file (default stdout)");
  auto* s_fmt = sweep->add_option("--format", spec.format)
                    ->check(CLI::IsMember({"csv", "json"}));
  sweep->add_option("--config", sweep_config, "JSON configuration file");

  // verify
  auto* verify = app.add_subcommand("verify", "Audit closed forms against brute force");
  long long samples = 1000;
  long long grid = 10001;
  std::uint64_t seed = 42;
  double tol = kPayoffTolerance;
  std::size_t threads = 0;
  std::string verify_format = "text", verify_config;
  auto* v_samples = verify->add_option("--samples", samples);
  auto* v_grid = verify->add_option("--grid", grid);
  auto* v_seed = verify->add_option("--seed", seed);
  auto* v_tol = verify->add_option("--tol", tol);
  verify->add_option("--threads", threads);
  verify->add_option("--format", verify_format)->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--config", verify_config, "JSON configuration file");

  // payoff
  auto* payoff = app.add_subcommand("payoff", "Complete-information Lotto payoffs");
  double a = 0, b = 0, payoff_phi = 1.0;
  std::string payoff_format = "text";
  payoff->add_option("--a", a, "Budget of A")->required();
  payoff->add_option("--b", b, "Budget of B")->required();
  payoff->add_option("--phi", payoff_phi);
  payoff->add_option("--format", payoff_format)->check(CLI::IsMember({"text", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }

  try {
    if (solve->parsed()) {
      const json c = detail::LoadConfig(config_path);
      const GameConfig cfg(
          BudgetPrior(Resolve<double>(o_ah, a_high, c, "a_high", {}, "--a-high"),
                      Resolve<double>(o_al, a_low, c, "a_low", {}, "--a-low"),
                      Resolve<double>(o_p, p, c, "p", {}, "--p")),
          Resolve<double>(o_c, cost, c, "cost", {}, "--cost"),
          Resolve<double>(o_phi, phi, c, "phi", 1.0, "--phi"));
      const SpeSolution s = spe_solve(cfg);
      if (format == "json") {
        out << detail::SolutionJson(cfg, s).dump(2) << '\n';
      } else {
        detail::PrintSolution(out, s);
      }
      return kOk;
    }

    if (sweep->parsed()) {
      const json c = detail::LoadConfig(sweep_config);
      const json sc = c.contains("sweep") ? c.at("sweep") : json::object();
      const SweepSpec d;
      spec.a_high = Resolve<double>(s_ah, spec.a_high, c, "a_high", d.a_high, "");
      spec.a_low = Resolve<double>(s_al, spec.a_low, c, "a_low", d.a_low, "");
      spec.phi = Resolve<double>(s_phi, spec.phi, c, "phi", d.phi, "");
      spec.c_min = Resolve<double>(s_cmin, spec.c_min, sc, "c_min", d.c_min, "");
      spec.c_max = Resolve<double>(s_cmax, spec.c_max, sc, "c_max", d.c_max, "");
      spec.c_steps = Resolve<std::size_t>(s_cst, spec.c_steps, sc, "c_steps", d.c_steps, "");
      spec.p_min = Resolve<double>(s_pmin, spec.p_min, sc, "p_min", d.p_min, "");
      spec.p_max = Resolve<double>(s_pmax, spec.p_max, sc, "p_max", d.p_max, "");
      spec.p_steps = Resolve<std::size_t>(s_pst, spec.p_steps, sc, "p_steps", d.p_steps, "");
      spec.output = Resolve<std::string>(s_out, spec.output, sc, "out", d.output, "");
      spec.format = Resolve<std::string>(s_fmt, spec.format, sc, "format", d.format, "");
      spec.validate();

      const std::vector<SweepCell> cells = run_sweep(spec);
      std::ostringstream buf;
      if (spec.format == "json") {
        buf << detail::SweepJson(spec, cells).dump() << '\n';
      } else {
        write_csv(buf, cells);
      }
      if (spec.output.empty()) {
        out << buf.str();
      } else {
        std::ofstream f(spec.output, std::ios::binary | std::ios::trunc);
        if (!f || !(f << buf.str()) || !f.flush()) {
          throw detail::IoError("cannot write '" + spec.output + "'");
        }
        out << "wrote " << cells.size() << " cells to " << spec.output << '\n';
      }
      return kOk;
    }

    if (verify->parsed()) {
      const json c = detail::LoadConfig(verify_config);
      const json vc = c.contains("verify") ? c.at("verify") : json::object();
      samples = Resolve<long long>(v_samples, samples, vc, "samples", 1000, "");
      grid = Resolve<long long>(v_grid, grid, vc, "grid", 10001, "");
      seed = Resolve<std::uint64_t>(v_seed, seed, vc, "seed", 42, "");
      tol = Resolve<double>(v_tol, tol, vc, "tol", kPayoffTolerance, "");
      internal::Require(samples >= 1, "samples >= 1");
      internal::Require(grid >= 101, "grid >= 101");
      internal::Require(tol >= 0.0, "tol >= 0");

      AuditOptions opt;
      opt.samples = static_cast<std::size_t>(samples);
      opt.grid_points = static_cast<std::size_t>(grid);
      opt.seed = seed;
      opt.tol = tol;
      opt.threads = threads;
      const AuditSummary summary = claim_audit(opt);
      if (verify_format == "json") {
        out << detail::AuditJson(summary).dump(2) << '\n';
      } else {
        detail::PrintAudit(out, summary);
      }
      return summary.violations() == 0 ? kOk : kVerificationFailed;
    }

    if (payoff->parsed()) {
      internal::Require(payoff_phi > 0.0, "phi > 0");
      const double pa = ci_payoff_a(a, b, payoff_phi);
      const double pb = ci_payoff_b(a, b, payoff_phi);
      if (payoff_format == "json") {
        out << json{{"a", a}, {"b", b}, {"phi", payoff_phi},
                    {"pi_a", detail::Round12(pa)}, {"pi_b", detail::Round12(pb)}}
                   .dump(2)
            << '\n';
      } else {
        out << "pi_a " << format_number(pa) << '\n'
            << "pi_b " << format_number(pb) << '\n';
      }
      return kOk;
    }
  } catch (const detail::IoError& e) {
    err << "error: " << e.what() << '\n';
    return kIoError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kBadArguments;
  }
  return kBadArguments;
}

}  // namespace lotto_signal::cli

#endif  // LOTTO_SIGNAL_TOOLS_CLI_APP_HPP_
