// Copyright 2026 The ionsynth Authors
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

#include "ionsynth/report.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>

namespace ionsynth {
namespace {

template <typename Fn>
auto at_stage(Stage stage, Fn&& fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const StageError&) {
    throw;
  } catch (const Error& e) {
    throw StageError(stage, e);
  }
}

std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

}  // namespace

SynthesisReport synthesize(const TargetSpec& target, const TrapConfig& trap,
                           const RunOptions& options) {
  at_stage(Stage::Input, [&] {
    trap.validate();
    if (options.tiers.empty()) throw Error(ErrorKind::InvalidInput, "no simulation tier selected");
  });
  const double min_gap = options.min_gap > 0.0 ? options.min_gap : default_min_gap(trap);

  SynthesisReport report{
      .target = target,
      .trap = trap,
      .sequence = at_stage(Stage::Plan, [&] { return plan(target, trap, options.plan); }),
      .results = {},
      .comparison = scheme_comparison(target.M(), target.N()),
      .spectrum = at_stage(Stage::Input, [&] {
        return check_separation(trap, target.M(), target.N(), min_gap, options.spectrum_margin);
      }),
      .total_duration = 0.0,
      .duration_budget = options.duration_budget,
      .over_budget = {},
  };
  report.total_duration = report.sequence.total_duration();
  if (options.duration_budget > 0.0) {
    for (std::size_t i = 0; i < report.sequence.pulses.size(); ++i) {
      if (report.sequence.pulses[i].duration > options.duration_budget) {
        report.over_budget.push_back(i);
      }
    }
  }
  for (const SimTier tier : options.tiers) {
    report.results.push_back(at_stage(Stage::Simulate, [&] {
      return run_sequence(report.sequence, target, trap, tier, options.integrator);
    }));
  }
  return report;
}

Json to_json(const SynthesisReport& r) {
  Json skipped = Json::array();
  for (const auto& s : r.sequence.skipped) skipped.push_back(Json::array({s.m, s.n}));

  Json longest = nullptr;
  for (std::size_t i = 0; i < r.sequence.pulses.size(); ++i) {
    const Pulse& p = r.sequence.pulses[i];
    if (longest.is_null() || p.duration > longest["duration"].get<double>()) {
      longest = Json{{"index", i}, {"m", p.m}, {"n", p.n}, {"duration", p.duration}};
    }
  }

  Json tiers = Json::array();
  for (const auto& res : r.results) tiers.push_back(to_json(res));

  return Json{
      {"target", to_json(r.target)},
      {"trap", to_json(r.trap)},
      {"pulse_count", r.sequence.pulses.size()},
      {"pulse_bound", r.comparison.this_work},
      {"sequence", to_json(r.sequence)},
      {"skipped", std::move(skipped)},
      {"total_duration", r.total_duration},
      {"longest_pulse", std::move(longest)},
      {"duration_budget", r.duration_budget},
      {"over_budget", r.over_budget},
      {"tiers", std::move(tiers)},
      {"comparison", to_json(r.comparison)},
      {"spectrum", to_json(r.spectrum)},
  };
}

std::string summary_table(const SynthesisReport& r) {
  std::ostringstream out;
  out << "target            M=" << r.target.M() << " N=" << r.target.N() << "\n";
  const auto zeros = std::count_if(r.sequence.skipped.begin(), r.sequence.skipped.end(),
                                   [&](ModeIndex s) { return s.m <= r.target.M() && s.n <= r.target.N(); });
  out << "pulses            " << r.sequence.pulses.size() << " (bound (M+1)(N+1) = "
      << r.comparison.this_work << ", zero coefficients " << zeros << ")\n";
  out << "total duration    " << fmt("%.6g", r.total_duration) << "\n";
  std::size_t longest = 0;
  for (std::size_t i = 1; i < r.sequence.pulses.size(); ++i) {
    if (r.sequence.pulses[i].duration > r.sequence.pulses[longest].duration) longest = i;
  }
  if (!r.sequence.pulses.empty()) {
    const Pulse& p = r.sequence.pulses[longest];
    out << "longest pulse     #" << longest << " (" << p.m << "," << p.n
        << ") t=" << fmt("%.6g", p.duration) << "\n";
  }
  if (!r.over_budget.empty()) {
    out << "over budget       " << r.over_budget.size() << " pulse(s) exceed t="
        << fmt("%.6g", r.duration_budget) << "\n";
  }
  out << "ratio nu_x/nu_y   " << fmt("%.6g", r.spectrum.ratio) << " (needs > "
      << r.spectrum.ratio_bound << ": " << (r.spectrum.ratio_condition ? "ok" : "NO") << ")\n";
  out << "worst line gap    "
      << (std::isfinite(r.spectrum.min_gap) ? fmt("%.6g", r.spectrum.min_gap) : "n/a")
      << " (threshold " << fmt("%.6g", r.spectrum.min_gap_threshold) << ", "
      << r.spectrum.collisions.size() << " collision(s))\n";
  out << "tier       fidelity            infidelity\n";
  for (const auto& res : r.results) {
    char line[128];
    std::snprintf(line, sizeof line, "%-10s %-19.16f %.3e\n", tier_name(res.tier), res.fidelity,
                  1.0 - res.fidelity);
    out << line;
  }
  return out.str();
}

TargetSpec random_target(int M, int N, std::uint64_t seed) {
  if (M < 0 || N < 0) throw Error(ErrorKind::InvalidInput, "M, N must be >= 0");
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Complex> c(static_cast<std::size_t>(M + 1) * static_cast<std::size_t>(N + 1));
  double sum = 0.0;
  for (auto& v : c) {
    const double re = gauss(rng);
    const double im = gauss(rng);
    v = {re, im};
    sum += std::norm(v);
  }
  const double nrm = std::sqrt(sum);
  for (auto& v : c) v /= nrm;
  return TargetSpec(M, N, std::move(c));
}

SelftestSummary selftest(const SelftestOptions& options) {
  if (options.M < 0 || options.N < 0 || options.M > options.max_cap ||
      options.N > options.max_cap) {
    throw Error(ErrorKind::InvalidInput,
                "selftest needs 0 <= M, N <= " + std::to_string(options.max_cap));
  }
  if (options.trials < 1) throw Error(ErrorKind::InvalidInput, "trials must be >= 1");

  SelftestSummary summary;
  const auto bound = static_cast<std::size_t>(options.M + 1) * static_cast<std::size_t>(options.N + 1);
  for (int i = 0; i < options.trials; ++i) {
    SelftestTrial trial;
    trial.index = i;
    try {
      // Trial seeds are split off the base seed so each trial is reproducible alone.
      std::seed_seq seq{static_cast<std::uint32_t>(options.seed),
                        static_cast<std::uint32_t>(options.seed >> 32),
                        static_cast<std::uint32_t>(i)};
      std::array<std::uint32_t, 2> parts{};
      seq.generate(parts.begin(), parts.end());
      const TargetSpec target = random_target(
          options.M, options.N, (static_cast<std::uint64_t>(parts[0]) << 32) | parts[1]);
      const PulseSequence seq_plan = plan(target, options.trap);
      trial.pulses = seq_plan.pulses.size();
      trial.ideal_fidelity = run_sequence(seq_plan, target, options.trap, SimTier::Ideal).fidelity;
      trial.resonant_fidelity =
          run_sequence(seq_plan, target, options.trap, SimTier::Resonant).fidelity;
      if (options.include_full) {
        trial.full_fidelity = run_sequence(seq_plan, target, options.trap, SimTier::Full).fidelity;
      }
      std::ostringstream why;
      if (trial.pulses > bound) why << "pulse count " << trial.pulses << " > " << bound << "; ";
      if (std::abs(trial.ideal_fidelity - 1.0) > options.ideal_tol) {
        why << "ideal fidelity " << fmt("%.17g", trial.ideal_fidelity) << "; ";
      }
      if (std::abs(trial.resonant_fidelity - trial.ideal_fidelity) > options.agreement_tol) {
        why << "resonant/ideal mismatch "
            << fmt("%.3e", std::abs(trial.resonant_fidelity - trial.ideal_fidelity)) << "; ";
      }
      trial.failure = why.str();
    } catch (const Error& e) {
      trial.failure = e.what();
    }
    trial.passed = trial.failure.empty();
    if (!trial.passed) ++summary.failures;
    summary.trials.push_back(std::move(trial));
  }
  return summary;
}

Json to_json(const SelftestSummary& s) {
  Json trials = Json::array();
  for (const auto& t : s.trials) {
    Json jt{{"trial", t.index},
            {"pulses", t.pulses},
            {"ideal_fidelity", t.ideal_fidelity},
            {"resonant_fidelity", t.resonant_fidelity}};
    if (t.full_fidelity >= 0.0) jt["full_fidelity"] = t.full_fidelity;
    jt["passed"] = t.passed;
    if (!t.passed) jt["failure"] = t.failure;
    trials.push_back(std::move(jt));
  }
  return Json{{"trials", s.trials.size()},
              {"failures", s.failures},
              {"passed", s.failures == 0},
              {"results", std::move(trials)}};
}

}  // namespace ionsynth
