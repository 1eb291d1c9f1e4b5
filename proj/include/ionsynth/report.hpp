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

#pragma once

// End-to-end synthesis: plan a target, simulate it at the requested tiers and
// gather everything into one report. Also hosts the random-target self test.

#include <cstdint>
#include <string>
#include <vector>

#include "ionsynth/error.hpp"
#include "ionsynth/planner.hpp"
#include "ionsynth/serialize.hpp"
#include "ionsynth/simulator.hpp"
#include "ionsynth/spectrum.hpp"

namespace ionsynth {

enum class Stage { Input, Plan, Simulate };

// Error tagged with the pipeline stage it came from.
class StageError : public Error {
 public:
  StageError(Stage stage, const Error& cause) : Error(cause.kind(), cause.detail()), stage_(stage) {}
  Stage stage() const noexcept { return stage_; }

 private:
  Stage stage_;
};

struct RunOptions {
  std::vector<SimTier> tiers{SimTier::Ideal};
  PlanOptions plan;
  double min_gap = 0.0;  // <= 0 selects default_min_gap(trap)
  int spectrum_margin = 2;
  IntegratorOptions integrator;
  double duration_budget = 0.0;  // per-pulse; <= 0 disables the check
};

struct SynthesisReport {
  TargetSpec target;
  TrapConfig trap;
  PulseSequence sequence;
  std::vector<SimResult> results;
  SchemeComparison comparison;
  SeparationReport spectrum;
  double total_duration = 0.0;
  double duration_budget = 0.0;
  std::vector<std::size_t> over_budget;  // pulse indices
};

SynthesisReport synthesize(const TargetSpec& target, const TrapConfig& trap,
                           const RunOptions& options);

Json to_json(const SynthesisReport& report);

// Fixed-width text table for terminals.
std::string summary_table(const SynthesisReport& report);

// Standard complex Gaussian entries, l2-normalized. Deterministic in seed.
TargetSpec random_target(int M, int N, std::uint64_t seed);

struct SelftestOptions {
  int M = 2;
  int N = 2;
  int trials = 50;
  std::uint64_t seed = 1;
  bool include_full = false;
  TrapConfig trap = default_trap();
  double ideal_tol = 1e-12;
  double agreement_tol = 1e-10;
  int max_cap = 4;
};

struct SelftestTrial {
  int index = 0;
  std::size_t pulses = 0;
  double ideal_fidelity = 0.0;
  double resonant_fidelity = 0.0;
  double full_fidelity = -1.0;  // -1 when not run
  bool passed = false;
  std::string failure;
};

struct SelftestSummary {
  std::vector<SelftestTrial> trials;  // ordered by trial index
  int failures = 0;
};

SelftestSummary selftest(const SelftestOptions& options);
Json to_json(const SelftestSummary& summary);

}  // namespace ionsynth
