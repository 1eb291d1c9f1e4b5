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
#include <optional>
#include <string>
#include <vector>

#include "ionsynth/coupling.hpp"
#include "ionsynth/fock.hpp"
#include "ionsynth/planner.hpp"

namespace ionsynth {

enum class SimTier { Ideal, Resonant, Full };

const char* tier_name(SimTier tier) noexcept;
std::optional<SimTier> parse_tier(std::string_view name) noexcept;

// |<a|b>|^2. Throws ErrorKind::CapMismatch when caps differ.
double fidelity(const StateVector& a, const StateVector& b);

// Population of |g2> outside |0,0>. Zero whenever the protocol invariant holds.
double g2_leak(const StateVector& state) noexcept;

// Analytic two-level rotation of the {|g2,0,0>, |g1,m,n>} pair. Requires all
// |g2> population in |0,0>.
StateVector apply_ideal(const StateVector& state, const Pulse& pulse, const TrapConfig& cfg);

// exp(-i H_{m,n} t) applied as exact 2x2 rotations over every coupled pair.
// Pairs whose g1 partner lies outside the caps are left alone; if such a
// g2 state carries amplitude the leak is reported through `leak`.
StateVector apply_resonant(const StateVector& state, const Pulse& pulse, const TrapConfig& cfg,
                           double* leak = nullptr);

struct IntegratorOptions {
  double accept_tol = 1e-8;      // max fidelity change between h and h/2
  double initial_phase_step = 1.0;  // h0 * max_frequency
  double min_step = 1e-9;
  double renorm_tol = 1e-8;
  double diverge_tol = 1e-6;
  double gap = 0.0;              // idle time between pulses
  double max_steps = 1e9;        // per pulse at the coarse step; beyond it the pulse is refused
};

struct IntegratorStats {
  long long steps = 0;
  double max_error_estimate = 0.0;
  double min_step_used = 0.0;
  double max_norm_drift = 0.0;
};

// Integrates i d(psi)/dt = H(t) psi for one pulse with the full interaction
// picture generator, starting at absolute time t_start, by classical RK4 with
// step halving until successive results agree to accept_tol in fidelity.
StateVector apply_full(const StateVector& state, const Pulse& pulse, const TrapConfig& cfg,
                       const IntegratorOptions& options, double t_start = 0.0,
                       IntegratorStats* stats = nullptr);

struct TraceEntry {
  std::size_t pulse = 0;
  double norm = 0.0;
  double overlap = 0.0;  // fidelity with the target after this pulse
  double g2_leak = 0.0;
};

struct SimResult {
  SimTier tier = SimTier::Ideal;
  StateVector final_state{Caps{}};
  double fidelity = 0.0;
  std::vector<TraceEntry> trace;
  std::optional<IntegratorStats> integrator;
  std::vector<std::string> warnings;
};

// Simulation caps per tier: (M, N) for the idealized tiers, padded by
// cfg.cap_margin for the full model.
Caps tier_caps(SimTier tier, const TargetSpec& target, const TrapConfig& cfg) noexcept;

// Starts from |g2,0,0>, applies every pulse at the given tier and scores against
// target (x) |g1>. Errors carry the failing pulse index.
SimResult run_sequence(const PulseSequence& seq, const TargetSpec& target, const TrapConfig& cfg,
                       SimTier tier, const IntegratorOptions& options = {});

}  // namespace ionsynth
