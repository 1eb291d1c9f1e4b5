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

#include <vector>

#include "ionsynth/coupling.hpp"
#include "ionsynth/fock.hpp"

namespace ionsynth {

struct SidebandLine {
  int m = 0;
  int n = 0;
  double frequency = 0.0;  // required omega_x - omega_y = omega_0 - m nu_x - n nu_y
};

// Every line with m <= M + margin, n <= N + margin, sorted by frequency.
std::vector<SidebandLine> enumerate_lines(const TrapConfig& cfg, int M, int N, int margin = 2);

struct LineCollision {
  SidebandLine a;
  SidebandLine b;
  double gap = 0.0;
};

struct SeparationReport {
  double ratio = 0.0;           // nu_x / nu_y
  int ratio_bound = 0;          // M + 2N
  bool ratio_condition = false; // ratio > M + 2N
  double min_gap = 0.0;         // over lines with m <= M, n <= N
  double min_gap_with_margin = 0.0;
  double min_gap_threshold = 0.0;
  int margin = 0;
  std::vector<LineCollision> collisions;  // planner lines closer than the threshold
};

// min_gap is the smallest acceptable spacing between lines, a proxy for the
// laser bandwidth. The default of 10 |Omega| is applied by default_min_gap().
SeparationReport check_separation(const TrapConfig& cfg, int M, int N, double min_gap,
                                  int margin = 2);

inline double default_min_gap(const TrapConfig& cfg) noexcept { return 10.0 * cfg.omega_base; }

}  // namespace ionsynth
