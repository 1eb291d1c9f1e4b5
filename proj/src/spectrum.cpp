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

#include "ionsynth/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "ionsynth/error.hpp"
#include "ionsynth/planner.hpp"

namespace ionsynth {
namespace {

double smallest_gap(const std::vector<SidebandLine>& sorted) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 1; i < sorted.size(); ++i) {
    gap = std::min(gap, sorted[i].frequency - sorted[i - 1].frequency);
  }
  return gap;
}

}  // namespace

std::vector<SidebandLine> enumerate_lines(const TrapConfig& cfg, int M, int N, int margin) {
  if (M < 0 || N < 0 || margin < 0) {
    throw Error(ErrorKind::InvalidInput, "M, N and margin must be >= 0");
  }
  std::vector<SidebandLine> lines;
  for (int m = 0; m <= M + margin; ++m) {
    for (int n = 0; n <= N + margin; ++n) {
      lines.push_back({m, n, cfg.omega_0 + resonant_detuning(m, n, cfg)});
    }
  }
  std::stable_sort(lines.begin(), lines.end(), [](const SidebandLine& a, const SidebandLine& b) {
    return a.frequency < b.frequency;
  });
  return lines;
}

SeparationReport check_separation(const TrapConfig& cfg, int M, int N, double min_gap,
                                  int margin) {
  cfg.validate();
  if (!(min_gap > 0.0)) throw Error(ErrorKind::InvalidInput, "min_gap must be > 0");

  SeparationReport report;
  report.ratio = cfg.nu_x / cfg.nu_y;
  report.ratio_bound = M + 2 * N;
  report.ratio_condition = report.ratio > static_cast<double>(report.ratio_bound);
  report.min_gap_threshold = min_gap;
  report.margin = margin;

  const auto planner_lines = enumerate_lines(cfg, M, N, 0);
  report.min_gap = smallest_gap(planner_lines);
  report.min_gap_with_margin = smallest_gap(enumerate_lines(cfg, M, N, margin));

  // Pairwise, not just neighbours: a cluster of three close lines yields three pairs.
  for (std::size_t i = 0; i < planner_lines.size(); ++i) {
    for (std::size_t j = i + 1; j < planner_lines.size(); ++j) {
      const double gap = planner_lines[j].frequency - planner_lines[i].frequency;
      if (gap >= min_gap) break;
      report.collisions.push_back({planner_lines[i], planner_lines[j], gap});
    }
  }
  return report;
}

}  // namespace ionsynth
