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

#include "ionsynth/planner.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <cstdio>
#include <numbers>

#include "ionsynth/error.hpp"

namespace ionsynth {
namespace {

// Absolute slack on |c|^2 against the remaining weight; matches the target's normalization tolerance.
constexpr double kResidualSlack = 1e-9;

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

std::string describe(ModeIndex idx) {
  return "(" + std::to_string(idx.m) + "," + std::to_string(idx.n) + ")";
}

// Shared walk behind plan() and plan_trace().
template <typename OnStep>
void walk(const TargetSpec& spec, const TrapConfig& cfg, PlanOptions options, OnStep&& on_step) {
  cfg.validate();
  double residual_sq = 1.0;
  for (const ModeIndex idx : diagonal_order(spec.M() + spec.N())) {
    const double before = std::sqrt(std::max(residual_sq, 0.0));
    const Complex c = spec.coeff(idx.m, idx.n);
    const double mag = std::abs(c);
    if (idx.m > spec.M() || idx.n > spec.N() || mag <= options.zero_tol) {
      on_step(idx, before, before, nullptr);
      continue;
    }
    if (mag * mag > residual_sq + kResidualSlack) {
      throw Error(ErrorKind::UnnormalizedResidual,
                  "coefficient " + describe(idx) + " has |c| = " + fmt(mag) + " but only " +
                      fmt(before) + " residual amplitude remains");
    }
    const double rabi = rabi_exact(idx.m, idx.n, 0, 0, cfg, 0.0).magnitude;
    if (!(rabi > std::numeric_limits<double>::min())) {
      throw Error(ErrorKind::ZeroCoupling, "sideband " + describe(idx) + " has vanishing coupling");
    }
    Pulse p;
    p.m = idx.m;
    p.n = idx.n;
    p.detuning = resonant_detuning(idx.m, idx.n, cfg);
    p.laser_phase = deposit_phase(idx.m, idx.n, c);
    p.duration = std::asin(std::min(mag / before, 1.0)) / rabi;
    p.target_coeff = c;
    residual_sq -= mag * mag;
    on_step(idx, before, std::sqrt(std::max(residual_sq, 0.0)), &p);
  }
}

}  // namespace

double PulseSequence::total_duration() const noexcept {
  double total = 0.0;
  for (const auto& p : pulses) total += p.duration;
  return total;
}

std::vector<ModeIndex> diagonal_order(int total) {
  std::vector<ModeIndex> order;
  if (total < 0) return order;
  order.reserve(static_cast<std::size_t>(total + 1) * static_cast<std::size_t>(total + 2) / 2);
  for (int d = 0; d <= total; ++d) {
    for (int m = 0; m <= d; ++m) order.push_back({m, d - m});
  }
  return order;
}

std::size_t diagonal_position(ModeIndex idx) noexcept {
  const auto d = static_cast<std::size_t>(idx.m + idx.n);
  return d * (d + 1) / 2 + static_cast<std::size_t>(idx.m) + 1;
}

double resonant_detuning(int m, int n, const TrapConfig& cfg) noexcept {
  return -m * cfg.nu_x - n * cfg.nu_y;
}

double deposit_phase(int m, int n, Complex coeff) noexcept {
  return wrap_phase(-std::arg(coeff) - std::numbers::pi / 2.0 - (m + n) * std::numbers::pi / 2.0);
}

PulseSequence plan(const TargetSpec& spec, const TrapConfig& cfg, PlanOptions options) {
  PulseSequence seq;
  walk(spec, cfg, options, [&](ModeIndex idx, double, double, const Pulse* p) {
    if (p) {
      seq.pulses.push_back(*p);
    } else {
      seq.skipped.push_back(idx);
    }
  });
  return seq;
}

std::vector<PlanTraceEntry> plan_trace(const TargetSpec& spec, const TrapConfig& cfg,
                                       PlanOptions options) {
  std::vector<PlanTraceEntry> trace;
  walk(spec, cfg, options, [&](ModeIndex idx, double before, double after, const Pulse* p) {
    trace.push_back({idx, before, after, p == nullptr});
  });
  return trace;
}

SchemeComparison scheme_comparison(int M, int N) {
  if (M < 0 || N < 0) throw Error(ErrorKind::InvalidInput, "M, N must be >= 0");
  const long long m = M, n = N;
  SchemeComparison out;
  out.kneer_law = (2 * m + 1) * (n + 1) + 2 * n;
  out.drobny = 2 * (m + n) * (m + n);
  out.zheng = (m + 2) * (n + 1);
  out.this_work = (m + 1) * (n + 1);
  return out;
}

}  // namespace ionsynth
