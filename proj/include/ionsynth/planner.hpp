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

#include <cstddef>
#include <string>
#include <vector>

#include "ionsynth/coupling.hpp"
#include "ionsynth/fock.hpp"

namespace ionsynth {

struct Pulse {
  int m = 0;
  int n = 0;
  double detuning = 0.0;     // -m nu_x - n nu_y
  double laser_phase = 0.0;  // (-pi, pi]
  double duration = 0.0;
  Complex target_coeff;      // amplitude this pulse deposits on |g1,m,n>

  friend bool operator==(const Pulse&, const Pulse&) = default;
};

struct PulseSequence {
  std::vector<Pulse> pulses;
  std::vector<ModeIndex> skipped;  // zero coefficients and positions outside (M, N)

  double total_duration() const noexcept;
};

struct PlanOptions {
  double zero_tol = 1e-12;
};

// All (m, n) with m + n <= total: anti-diagonals of increasing m + n, increasing
// m within a diagonal. (m, n) lands at 1-based position (m+n)(m+n+1)/2 + m + 1.
std::vector<ModeIndex> diagonal_order(int total);
std::size_t diagonal_position(ModeIndex idx) noexcept;

// Laser detuning that puts the (m, n) sideband on resonance.
double resonant_detuning(int m, int n, const TrapConfig& cfg) noexcept;

// Laser phase whose transferred amplitude -i e^{-i phi_{m,n}} points along coeff.
double deposit_phase(int m, int n, Complex coeff) noexcept;

PulseSequence plan(const TargetSpec& spec, const TrapConfig& cfg, PlanOptions options = {});

// One plan step, exposed for diagnostics: residual before and after the pulse.
struct PlanTraceEntry {
  ModeIndex index;
  double residual_before = 0.0;
  double residual_after = 0.0;
  bool skipped = false;
};
std::vector<PlanTraceEntry> plan_trace(const TargetSpec& spec, const TrapConfig& cfg,
                                       PlanOptions options = {});

struct SchemeComparison {
  std::string gardiner = "exponential";
  long long kneer_law = 0;  // (2M+1)(N+1) + 2N
  long long drobny = 0;     // 2(M+N)^2
  long long zheng = 0;      // (M+2)(N+1)
  long long this_work = 0;  // (M+1)(N+1)
};

SchemeComparison scheme_comparison(int M, int N);

}  // namespace ionsynth
