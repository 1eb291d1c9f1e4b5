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

#include "ionsynth/ionsynth.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <optional>
#include <string>

#include "ionsynth/report.hpp"

struct is_target {
  ionsynth::TargetSpec spec;
};
struct is_trap {
  ionsynth::TrapConfig cfg;
};
struct is_sequence {
  ionsynth::PulseSequence seq;
};
struct is_result {
  ionsynth::SimResult result;
};

namespace {

using ionsynth::Error;
using ionsynth::ErrorKind;

thread_local std::string g_last_error;

is_status fail(is_status status, const std::string& msg) {
  g_last_error = msg;
  return status;
}

// Runs fn, translating exceptions. Errors not tagged with a stage map to
// `fallback` unless they are plain input errors.
template <typename Fn>
is_status guarded(is_status fallback, Fn&& fn) {
  g_last_error.clear();
  try {
    return fn();
  } catch (const ionsynth::StageError& e) {
    switch (e.stage()) {
      case ionsynth::Stage::Input: return fail(IS_ERR_INVALID_INPUT, e.what());
      case ionsynth::Stage::Plan: return fail(IS_ERR_PLANNER, e.what());
      case ionsynth::Stage::Simulate: return fail(IS_ERR_SIMULATOR, e.what());
    }
    return fail(IS_ERR_INTERNAL, e.what());
  } catch (const Error& e) {
    return fail(e.kind() == ErrorKind::InvalidInput ? IS_ERR_INVALID_INPUT : fallback, e.what());
  } catch (const std::bad_alloc&) {
    return fail(IS_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IS_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

std::optional<ionsynth::SimTier> to_tier(is_tier tier) {
  switch (tier) {
    case IS_TIER_IDEAL: return ionsynth::SimTier::Ideal;
    case IS_TIER_RESONANT: return ionsynth::SimTier::Resonant;
    case IS_TIER_FULL: return ionsynth::SimTier::Full;
  }
  return std::nullopt;
}

#define IS_REQUIRE(ptr)                                                 \
  do {                                                                  \
    if ((ptr) == nullptr) return fail(IS_ERR_NULL_ARGUMENT, #ptr " is NULL"); \
  } while (0)

}  // namespace

extern "C" {

void is_run_options_init(is_run_options* options) {
  if (!options) return;
  options->tiers = IS_TIER_IDEAL;
  options->zero_tol = ionsynth::PlanOptions{}.zero_tol;
  options->min_gap = 0.0;
  options->spectrum_margin = 2;
  options->duration_budget = 0.0;
  options->gap = 0.0;
}

const char* is_version(void) { return "0.1.0"; }

const char* is_status_name(is_status status) {
  switch (status) {
    case IS_OK: return "ok";
    case IS_ERR_FAILED: return "failed";
    case IS_ERR_INVALID_INPUT: return "invalid input";
    case IS_ERR_PLANNER: return "planner error";
    case IS_ERR_SIMULATOR: return "simulator error";
    case IS_ERR_NULL_ARGUMENT: return "null argument";
    case IS_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* is_last_error(void) { return g_last_error.c_str(); }

void is_string_free(char* str) { std::free(str); }

is_status is_target_parse(const char* json, is_target** out) {
  IS_REQUIRE(json);
  IS_REQUIRE(out);
  return guarded(IS_ERR_INVALID_INPUT, [&] {
    *out = new is_target{ionsynth::target_from_json(ionsynth::parse_json(json))};
    return IS_OK;
  });
}

is_status is_target_load(const char* path, is_target** out) {
  IS_REQUIRE(path);
  IS_REQUIRE(out);
  return guarded(IS_ERR_INVALID_INPUT, [&] {
    *out = new is_target{ionsynth::target_from_json(ionsynth::load_json_file(path))};
    return IS_OK;
  });
}

is_status is_target_random(int M, int N, uint64_t seed, is_target** out) {
  IS_REQUIRE(out);
  return guarded(IS_ERR_INVALID_INPUT, [&] {
    *out = new is_target{ionsynth::random_target(M, N, seed)};
    return IS_OK;
  });
}

is_status is_target_dims(const is_target* target, int* M, int* N) {
  IS_REQUIRE(target);
  IS_REQUIRE(M);
  IS_REQUIRE(N);
  *M = target->spec.M();
  *N = target->spec.N();
  return IS_OK;
}

is_status is_target_to_json(const is_target* target, char** out) {
  IS_REQUIRE(target);
  IS_REQUIRE(out);
  return guarded(IS_ERR_INTERNAL, [&] {
    *out = copy_string(ionsynth::to_json(target->spec).dump());
    return IS_OK;
  });
}

void is_target_free(is_target* target) { delete target; }

is_status is_trap_default(is_trap** out) {
  IS_REQUIRE(out);
  return guarded(IS_ERR_INTERNAL, [&] {
    *out = new is_trap{ionsynth::default_trap()};
    return IS_OK;
  });
}

is_status is_trap_parse(const char* json, is_trap** out) {
  IS_REQUIRE(json);
  IS_REQUIRE(out);
  return guarded(IS_ERR_INVALID_INPUT, [&] {
    *out = new is_trap{ionsynth::trap_from_json(ionsynth::parse_json(json))};
    return IS_OK;
  });
}

is_status is_trap_load(const char* path, is_trap** out) {
  IS_REQUIRE(path);
  IS_REQUIRE(out);
  return guarded(IS_ERR_INVALID_INPUT, [&] {
    *out = new is_trap{ionsynth::trap_from_json(ionsynth::load_json_file(path))};
    return IS_OK;
  });
}

is_status is_trap_to_json(const is_trap* trap, char** out) {
  IS_REQUIRE(trap);
  IS_REQUIRE(out);
  return guarded(IS_ERR_INTERNAL, [&] {
    *out = copy_string(ionsynth::to_json(trap->cfg).dump());
    return IS_OK;
  });
}

void is_trap_free(is_trap* trap) { delete trap; }

is_status is_plan(const is_target* target, const is_trap* trap, double zero_tol,
                  is_sequence** out) {
  IS_REQUIRE(target);
  IS_REQUIRE(trap);
  IS_REQUIRE(out);
  return guarded(IS_ERR_PLANNER, [&] {
    if (!(zero_tol >= 0.0)) throw Error(ErrorKind::InvalidInput, "zero_tol must be >= 0");
    *out = new is_sequence{ionsynth::plan(target->spec, trap->cfg, {zero_tol})};
    return IS_OK;
  });
}

is_status is_sequence_parse(const char* json, is_sequence** out) {
  IS_REQUIRE(json);
  IS_REQUIRE(out);
  return guarded(IS_ERR_INVALID_INPUT, [&] {
    *out = new is_sequence{ionsynth::sequence_from_json(ionsynth::parse_json(json))};
    return IS_OK;
  });
}

size_t is_sequence_size(const is_sequence* seq) { return seq ? seq->seq.pulses.size() : 0; }

is_status is_sequence_pulse(const is_sequence* seq, size_t index, is_pulse* out) {
  IS_REQUIRE(seq);
  IS_REQUIRE(out);
  if (index >= seq->seq.pulses.size()) {
    return fail(IS_ERR_INVALID_INPUT, "pulse index " + std::to_string(index) + " out of range");
  }
  const ionsynth::Pulse& p = seq->seq.pulses[index];
  *out = is_pulse{p.m,        p.n, p.detuning, p.laser_phase, p.duration, p.target_coeff.real(),
                  p.target_coeff.imag()};
  return IS_OK;
}

is_status is_sequence_total_duration(const is_sequence* seq, double* out) {
  IS_REQUIRE(seq);
  IS_REQUIRE(out);
  *out = seq->seq.total_duration();
  return IS_OK;
}

is_status is_sequence_to_json(const is_sequence* seq, char** out) {
  IS_REQUIRE(seq);
  IS_REQUIRE(out);
  return guarded(IS_ERR_INTERNAL, [&] {
    *out = copy_string(ionsynth::to_json(seq->seq).dump());
    return IS_OK;
  });
}

void is_sequence_free(is_sequence* seq) { delete seq; }

is_status is_simulate(const is_sequence* seq, const is_target* target, const is_trap* trap,
                      is_tier tier, is_result** out) {
  IS_REQUIRE(seq);
  IS_REQUIRE(target);
  IS_REQUIRE(trap);
  IS_REQUIRE(out);
  const auto t = to_tier(tier);
  if (!t) return fail(IS_ERR_INVALID_INPUT, "unknown tier " + std::to_string(tier));
  return guarded(IS_ERR_SIMULATOR, [&] {
    *out = new is_result{ionsynth::run_sequence(seq->seq, target->spec, trap->cfg, *t)};
    return IS_OK;
  });
}

is_status is_result_fidelity(const is_result* result, double* out) {
  IS_REQUIRE(result);
  IS_REQUIRE(out);
  *out = result->result.fidelity;
  return IS_OK;
}

is_status is_result_to_json(const is_result* result, char** out) {
  IS_REQUIRE(result);
  IS_REQUIRE(out);
  return guarded(IS_ERR_INTERNAL, [&] {
    *out = copy_string(ionsynth::to_json(result->result).dump());
    return IS_OK;
  });
}

void is_result_free(is_result* result) { delete result; }

is_status is_synthesize(const is_target* target, const is_trap* trap,
                        const is_run_options* options, char** report_json, char** summary_text) {
  IS_REQUIRE(target);
  IS_REQUIRE(trap);
  IS_REQUIRE(options);
  return guarded(IS_ERR_INTERNAL, [&] {
    ionsynth::RunOptions run;
    run.tiers.clear();
    if (options->tiers & IS_TIER_IDEAL) run.tiers.push_back(ionsynth::SimTier::Ideal);
    if (options->tiers & IS_TIER_RESONANT) run.tiers.push_back(ionsynth::SimTier::Resonant);
    if (options->tiers & IS_TIER_FULL) run.tiers.push_back(ionsynth::SimTier::Full);
    if (!(options->zero_tol >= 0.0)) throw Error(ErrorKind::InvalidInput, "zero_tol must be >= 0");
    if (options->spectrum_margin < 0) {
      throw Error(ErrorKind::InvalidInput, "spectrum margin must be >= 0");
    }
    if (!(options->gap >= 0.0)) throw Error(ErrorKind::InvalidInput, "gap must be >= 0");
    run.plan.zero_tol = options->zero_tol;
    run.min_gap = options->min_gap;
    run.spectrum_margin = options->spectrum_margin;
    run.duration_budget = options->duration_budget;
    run.integrator.gap = options->gap;

    const auto report = ionsynth::synthesize(target->spec, trap->cfg, run);
    char* json = report_json ? copy_string(ionsynth::to_json(report).dump(2)) : nullptr;
    char* text = nullptr;
    try {
      text = summary_text ? copy_string(ionsynth::summary_table(report)) : nullptr;
    } catch (...) {
      std::free(json);
      throw;
    }
    if (report_json) *report_json = json;
    if (summary_text) *summary_text = text;
    return IS_OK;
  });
}

is_status is_spectrum(const is_trap* trap, int M, int N, double min_gap, int margin, char** out) {
  IS_REQUIRE(trap);
  IS_REQUIRE(out);
  return guarded(IS_ERR_INVALID_INPUT, [&] {
    const double gap = min_gap > 0.0 ? min_gap : ionsynth::default_min_gap(trap->cfg);
    const auto report = ionsynth::check_separation(trap->cfg, M, N, gap, margin);
    ionsynth::Json lines = ionsynth::Json::array();
    for (const auto& l : ionsynth::enumerate_lines(trap->cfg, M, N, margin)) {
      lines.push_back({{"m", l.m}, {"n", l.n}, {"frequency", l.frequency}});
    }
    ionsynth::Json j = ionsynth::to_json(report);
    j["lines"] = std::move(lines);
    *out = copy_string(j.dump(2));
    return IS_OK;
  });
}

is_status is_compare(int M, int N, char** out) {
  IS_REQUIRE(out);
  return guarded(IS_ERR_INVALID_INPUT, [&] {
    ionsynth::Json j{{"M", M}, {"N", N}};
    j.update(ionsynth::to_json(ionsynth::scheme_comparison(M, N)));
    *out = copy_string(j.dump(2));
    return IS_OK;
  });
}

is_status is_selftest(int M, int N, int trials, uint64_t seed, int include_full,
                      const is_trap* trap, char** out) {
  IS_REQUIRE(out);
  return guarded(IS_ERR_INVALID_INPUT, [&] {
    ionsynth::SelftestOptions opts;
    opts.M = M;
    opts.N = N;
    opts.trials = trials;
    opts.seed = seed;
    opts.include_full = include_full != 0;
    if (trap) opts.trap = trap->cfg;
    const auto summary = ionsynth::selftest(opts);
    *out = copy_string(ionsynth::to_json(summary).dump(2));
    if (summary.failures > 0) {
      return fail(IS_ERR_FAILED, std::to_string(summary.failures) + " of " +
                                     std::to_string(trials) + " trials failed");
    }
    return IS_OK;
  });
}

}  // extern "C"
