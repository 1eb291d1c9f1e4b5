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

#include "ionsynth/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ionsynth/error.hpp"

namespace ionsynth {
namespace {

constexpr double kProtocolTol = 1e-24;

void require_in_caps(const StateVector& state, const Pulse& pulse) {
  if (!state.contains(pulse.m, pulse.n)) {
    throw Error(ErrorKind::TruncationExceeded,
                "sideband (" + std::to_string(pulse.m) + "," + std::to_string(pulse.n) +
                    ") exceeds simulation caps");
  }
}

void rk4_step(const FullInteraction& h, double t, double dt, std::vector<Complex>& psi,
              std::vector<Complex> (&k)[4], std::vector<Complex>& tmp,
              FullInteraction::Workspace& ws) {
  const std::size_t dim = psi.size();
  const Complex minus_i{0.0, -1.0};
  auto deriv = [&](double time, const std::vector<Complex>& in, std::vector<Complex>& out) {
    h.apply(time, in, out, ws);
    for (auto& v : out) v *= minus_i;
  };
  deriv(t, psi, k[0]);
  for (std::size_t i = 0; i < dim; ++i) tmp[i] = psi[i] + 0.5 * dt * k[0][i];
  deriv(t + 0.5 * dt, tmp, k[1]);
  for (std::size_t i = 0; i < dim; ++i) tmp[i] = psi[i] + 0.5 * dt * k[1][i];
  deriv(t + 0.5 * dt, tmp, k[2]);
  for (std::size_t i = 0; i < dim; ++i) tmp[i] = psi[i] + dt * k[2][i];
  deriv(t + dt, tmp, k[3]);
  for (std::size_t i = 0; i < dim; ++i) {
    psi[i] += dt / 6.0 * (k[0][i] + 2.0 * k[1][i] + 2.0 * k[2][i] + k[3][i]);
  }
}

std::vector<Complex> integrate(const FullInteraction& h, std::span<const Complex> psi0,
                               double t_start, double duration, long long steps) {
  std::vector<Complex> psi(psi0.begin(), psi0.end());
  std::vector<Complex> k[4];
  for (auto& v : k) v.resize(psi.size());
  std::vector<Complex> tmp(psi.size());
  FullInteraction::Workspace ws;
  const double dt = duration / static_cast<double>(steps);
  for (long long s = 0; s < steps; ++s) {
    rk4_step(h, t_start + static_cast<double>(s) * dt, dt, psi, k, tmp, ws);
  }
  return psi;
}

double squared_norm(std::span<const Complex> v) {
  double s = 0.0;
  for (const auto& a : v) s += std::norm(a);
  return s;
}

}  // namespace

const char* tier_name(SimTier tier) noexcept {
  switch (tier) {
    case SimTier::Ideal: return "ideal";
    case SimTier::Resonant: return "resonant";
    case SimTier::Full: return "full";
  }
  return "unknown";
}

std::optional<SimTier> parse_tier(std::string_view name) noexcept {
  if (name == "ideal") return SimTier::Ideal;
  if (name == "resonant") return SimTier::Resonant;
  if (name == "full") return SimTier::Full;
  return std::nullopt;
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (!(a.caps() == b.caps())) {
    throw Error(ErrorKind::CapMismatch, "fidelity between states with different caps");
  }
  Complex overlap{};
  const auto aa = a.amplitudes();
  const auto bb = b.amplitudes();
  for (std::size_t i = 0; i < aa.size(); ++i) overlap += std::conj(aa[i]) * bb[i];
  return std::norm(overlap);
}

double g2_leak(const StateVector& state) noexcept {
  return state.population(ElectronicLevel::G2) - std::norm(state.at(ElectronicLevel::G2, 0, 0));
}

StateVector apply_ideal(const StateVector& state, const Pulse& pulse, const TrapConfig& cfg) {
  require_in_caps(state, pulse);
  const double leak = g2_leak(state);
  if (leak > kProtocolTol) {
    throw Error(ErrorKind::ProtocolViolation,
                "|g2> population " + std::to_string(leak) + " outside |0,0>");
  }
  const SidebandCoupling c = rabi_exact(pulse.m, pulse.n, 0, 0, cfg, pulse.laser_phase);
  const double angle = c.magnitude * pulse.duration;
  const double cs = std::cos(angle);
  const Complex transfer = Complex{0.0, -1.0} * std::sin(angle);

  StateVector out = state;
  const Complex a2 = state.at(ElectronicLevel::G2, 0, 0);
  const Complex a1 = state.at(ElectronicLevel::G1, pulse.m, pulse.n);
  out.at(ElectronicLevel::G1, pulse.m, pulse.n) =
      cs * a1 + transfer * std::polar(1.0, -c.phase) * a2;
  out.at(ElectronicLevel::G2, 0, 0) = cs * a2 + transfer * std::polar(1.0, c.phase) * a1;
  return out;
}

StateVector apply_resonant(const StateVector& state, const Pulse& pulse, const TrapConfig& cfg,
                           double* leak) {
  require_in_caps(state, pulse);
  const Caps caps = state.caps();
  StateVector out = state;
  double leaked = 0.0;
  for (int k = 0; k <= caps.x; ++k) {
    for (int l = 0; l <= caps.y; ++l) {
      const Complex a2 = state.at(ElectronicLevel::G2, k, l);
      if (!state.contains(k + pulse.m, l + pulse.n)) {
        leaked += std::norm(a2);
        continue;
      }
      const Complex a1 = state.at(ElectronicLevel::G1, k + pulse.m, l + pulse.n);
      const SidebandCoupling c = rabi_exact(pulse.m, pulse.n, k, l, cfg, pulse.laser_phase);
      const double angle = c.magnitude * pulse.duration;
      const double cs = std::cos(angle);
      const Complex transfer = Complex{0.0, -1.0} * std::sin(angle);
      out.at(ElectronicLevel::G2, k, l) = cs * a2 + transfer * std::polar(1.0, c.phase) * a1;
      out.at(ElectronicLevel::G1, k + pulse.m, l + pulse.n) =
          cs * a1 + transfer * std::polar(1.0, -c.phase) * a2;
    }
  }
  if (leak) *leak = leaked;
  return out;
}

StateVector apply_full(const StateVector& state, const Pulse& pulse, const TrapConfig& cfg,
                       const IntegratorOptions& options, double t_start, IntegratorStats* stats) {
  require_in_caps(state, pulse);
  if (pulse.duration == 0.0) return state;

  const FullInteraction h(cfg, pulse.detuning, pulse.laser_phase, state.caps());
  const double rate = std::max(h.max_frequency(), cfg.omega_base);
  const double h0 = options.initial_phase_step / rate;
  const double wanted = std::ceil(pulse.duration / h0);
  if (!(wanted <= options.max_steps)) {
    throw Error(ErrorKind::StepFloor, "pulse of duration " + std::to_string(pulse.duration) +
                                          " needs more than " + std::to_string(options.max_steps) +
                                          " steps");
  }
  long long steps = std::max(1LL, static_cast<long long>(wanted));

  const double norm0 = squared_norm(state.amplitudes());
  std::vector<Complex> coarse = integrate(h, state.amplitudes(), t_start, pulse.duration, steps);
  long long total_steps = steps;
  for (;;) {
    const double step = pulse.duration / static_cast<double>(2 * steps);
    if (step < options.min_step) {
      throw Error(ErrorKind::StepFloor, "required step below " + std::to_string(options.min_step));
    }
    std::vector<Complex> fine =
        integrate(h, state.amplitudes(), t_start, pulse.duration, 2 * steps);
    total_steps += 2 * steps;

    Complex overlap{};
    double diff_sq = 0.0;
    for (std::size_t i = 0; i < fine.size(); ++i) {
      overlap += std::conj(coarse[i]) * fine[i];
      diff_sq += std::norm(fine[i] - coarse[i]);
    }
    const double n_coarse = squared_norm(coarse);
    const double n_fine = squared_norm(fine);
    const double delta = 1.0 - std::norm(overlap) / (n_coarse * n_fine);
    const double drift = std::abs(std::sqrt(n_fine / norm0) - 1.0);

    if (delta < options.accept_tol && drift <= options.renorm_tol) {
      if (stats) {
        stats->steps += total_steps;
        stats->max_error_estimate =
            std::max(stats->max_error_estimate, std::sqrt(diff_sq) / 15.0);
        stats->min_step_used =
            stats->min_step_used == 0.0 ? step : std::min(stats->min_step_used, step);
        stats->max_norm_drift = std::max(stats->max_norm_drift, drift);
      }
      StateVector out(state.caps());
      const double renorm = std::sqrt(norm0 / n_fine);
      auto amps = out.amplitudes();
      for (std::size_t i = 0; i < fine.size(); ++i) amps[i] = fine[i] * renorm;
      return out;
    }
    if (drift > options.diverge_tol && delta < options.accept_tol) {
      throw Error(ErrorKind::IntegratorDiverged,
                  "norm drift " + std::to_string(drift) + " at converged step");
    }
    coarse = std::move(fine);
    steps *= 2;
  }
}

Caps tier_caps(SimTier tier, const TargetSpec& target, const TrapConfig& cfg) noexcept {
  if (tier == SimTier::Full) return {target.M() + cfg.cap_margin, target.N() + cfg.cap_margin};
  return {target.M(), target.N()};
}

SimResult run_sequence(const PulseSequence& seq, const TargetSpec& target, const TrapConfig& cfg,
                       SimTier tier, const IntegratorOptions& options) {
  cfg.validate();
  const Caps caps = tier_caps(tier, target, cfg);
  const StateVector goal = target.embed(caps);

  SimResult result;
  result.tier = tier;
  result.final_state = basis_state(ElectronicLevel::G2, {0, 0}, caps);
  if (tier == SimTier::Full) result.integrator = IntegratorStats{};

  double clock = 0.0;
  for (std::size_t i = 0; i < seq.pulses.size(); ++i) {
    const Pulse& pulse = seq.pulses[i];
    try {
      switch (tier) {
        case SimTier::Ideal:
          result.final_state = apply_ideal(result.final_state, pulse, cfg);
          break;
        case SimTier::Resonant: {
          double leak = 0.0;
          result.final_state = apply_resonant(result.final_state, pulse, cfg, &leak);
          if (leak > 0.0) {
            result.warnings.push_back("pulse " + std::to_string(i) +
                                      ": truncation leak, population " + std::to_string(leak));
          }
          break;
        }
        case SimTier::Full:
          result.final_state =
              apply_full(result.final_state, pulse, cfg, options, clock, &*result.integrator);
          clock += pulse.duration + options.gap;
          break;
      }
      TraceEntry entry;
      entry.pulse = i;
      entry.norm = result.final_state.norm();
      entry.overlap = fidelity(goal, result.final_state);
      entry.g2_leak = g2_leak(result.final_state);
      if (tier != SimTier::Full && entry.g2_leak > kProtocolTol) {
        throw Error(ErrorKind::ProtocolViolation,
                    "|g2> population " + std::to_string(entry.g2_leak) + " outside |0,0>");
      }
      result.trace.push_back(entry);
    } catch (const Error& e) {
      throw Error(e.kind(), "pulse " + std::to_string(i) + " (" + std::to_string(pulse.m) + "," +
                                std::to_string(pulse.n) + "): " + e.detail());
    }
  }
  result.fidelity = std::clamp(fidelity(goal, result.final_state), 0.0, 1.0);
  return result;
}

}  // namespace ionsynth
