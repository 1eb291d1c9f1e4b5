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

// ionsynth command line: plan pulse sequences for two-mode motional states and
// simulate them. Exit codes: 0 ok, 1 selftest failure or internal error,
// 2 invalid input, 3 planner error, 4 simulator error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "ionsynth/ionsynth.h"

namespace {

struct Options {
  std::string target_path;
  std::string trap_path;
  std::vector<std::string> tiers;
  double zero_tol = 1e-12;
  double min_gap = 0.0;
  std::string out_path;
  std::uint64_t seed = 1;
  int trials = 50;
  int M = -1;
  int N = -1;
  int margin = 2;
  bool full = false;
  double budget = 0.0;
  double gap = 0.0;
};

struct TargetDeleter {
  void operator()(is_target* p) const { is_target_free(p); }
};
struct TrapDeleter {
  void operator()(is_trap* p) const { is_trap_free(p); }
};
struct SequenceDeleter {
  void operator()(is_sequence* p) const { is_sequence_free(p); }
};
struct StringDeleter {
  void operator()(char* p) const { is_string_free(p); }
};
using TargetPtr = std::unique_ptr<is_target, TargetDeleter>;
using TrapPtr = std::unique_ptr<is_trap, TrapDeleter>;
using SequencePtr = std::unique_ptr<is_sequence, SequenceDeleter>;
using StringPtr = std::unique_ptr<char, StringDeleter>;

int exit_code(is_status status) {
  switch (status) {
    case IS_OK: return 0;
    case IS_ERR_INVALID_INPUT: return 2;
    case IS_ERR_PLANNER: return 3;
    case IS_ERR_SIMULATOR: return 4;
    default: return 1;
  }
}

int report_failure(is_status status) {
  std::cerr << "ionsynth: " << is_status_name(status) << ": " << is_last_error() << "\n";
  return exit_code(status);
}

bool write_file(const std::string& path, const char* text) {
  std::ofstream out(path);
  out << text << "\n";
  if (!out) {
    std::cerr << "ionsynth: invalid input: cannot write " << path << "\n";
    return false;
  }
  return true;
}

is_status load_trap(const Options& o, TrapPtr& trap) {
  is_trap* raw = nullptr;
  const is_status st = o.trap_path.empty() ? is_trap_default(&raw)
                                           : is_trap_load(o.trap_path.c_str(), &raw);
  trap.reset(raw);
  return st;
}

is_status load_target(const Options& o, TargetPtr& target) {
  is_target* raw = nullptr;
  const is_status st = is_target_load(o.target_path.c_str(), &raw);
  target.reset(raw);
  return st;
}

int cmd_plan(const Options& o) {
  TrapPtr trap;
  TargetPtr target;
  if (auto st = load_trap(o, trap); st != IS_OK) return report_failure(st);
  if (auto st = load_target(o, target); st != IS_OK) return report_failure(st);
  is_sequence* raw = nullptr;
  if (auto st = is_plan(target.get(), trap.get(), o.zero_tol, &raw); st != IS_OK) {
    return report_failure(st);
  }
  SequencePtr seq(raw);

  int M = 0, N = 0;
  is_target_dims(target.get(), &M, &N);
  const std::size_t count = is_sequence_size(seq.get());
  double total = 0.0;
  is_sequence_total_duration(seq.get(), &total);
  std::printf("%-4s %-7s %-14s %-12s %-12s\n", "#", "(m,n)", "detuning", "phase", "duration");
  for (std::size_t i = 0; i < count; ++i) {
    is_pulse p{};
    is_sequence_pulse(seq.get(), i, &p);
    char label[32];
    std::snprintf(label, sizeof label, "(%d,%d)", p.m, p.n);
    std::printf("%-4zu %-7s %-14.6g %-12.6f %-12.6g\n", i, label, p.detuning, p.laser_phase,
                p.duration);
  }
  std::printf("pulses %zu of bound %d, total duration %.6g\n", count, (M + 1) * (N + 1), total);

  if (!o.out_path.empty()) {
    char* json = nullptr;
    if (auto st = is_sequence_to_json(seq.get(), &json); st != IS_OK) return report_failure(st);
    StringPtr holder(json);
    if (!write_file(o.out_path, json)) return 2;
  }
  return 0;
}

int cmd_simulate(const Options& o) {
  is_run_options run;
  is_run_options_init(&run);
  run.tiers = 0;
  for (const auto& t : o.tiers) {
    if (t == "ideal") run.tiers |= IS_TIER_IDEAL;
    if (t == "resonant") run.tiers |= IS_TIER_RESONANT;
    if (t == "full") run.tiers |= IS_TIER_FULL;
  }
  if (run.tiers == 0) run.tiers = IS_TIER_IDEAL;
  run.zero_tol = o.zero_tol;
  run.min_gap = o.min_gap;
  run.spectrum_margin = o.margin;
  run.duration_budget = o.budget;
  run.gap = o.gap;

  TrapPtr trap;
  TargetPtr target;
  if (auto st = load_trap(o, trap); st != IS_OK) return report_failure(st);
  if (auto st = load_target(o, target); st != IS_OK) return report_failure(st);
  char* json = nullptr;
  char* text = nullptr;
  if (auto st = is_synthesize(target.get(), trap.get(), &run, &json, &text); st != IS_OK) {
    return report_failure(st);
  }
  StringPtr json_holder(json), text_holder(text);
  std::fputs(text, stdout);
  if (!o.out_path.empty() && !write_file(o.out_path, json)) return 2;
  return 0;
}

int cmd_selftest(const Options& o) {
  TrapPtr trap;
  if (auto st = load_trap(o, trap); st != IS_OK) return report_failure(st);
  const int M = o.M < 0 ? 2 : o.M;
  const int N = o.N < 0 ? 2 : o.N;
  char* json = nullptr;
  const is_status st = is_selftest(M, N, o.trials, o.seed, o.full ? 1 : 0, trap.get(), &json);
  StringPtr holder(json);
  if (st != IS_OK && st != IS_ERR_FAILED) return report_failure(st);
  if (!o.out_path.empty() && !write_file(o.out_path, json)) return 2;
  std::printf("selftest M=%d N=%d trials=%d seed=%llu: %s\n", M, N, o.trials,
              static_cast<unsigned long long>(o.seed), st == IS_OK ? "all passed" : "FAILED");
  if (st == IS_ERR_FAILED) {
    std::cerr << "ionsynth: " << is_last_error() << "\n" << json << "\n";
    return 1;
  }
  return 0;
}

// Caps come from --M/--N, or from the target file when given.
is_status resolve_caps(const Options& o, int& M, int& N) {
  M = o.M;
  N = o.N;
  if (!o.target_path.empty()) {
    TargetPtr target;
    if (auto st = load_target(o, target); st != IS_OK) return st;
    is_target_dims(target.get(), &M, &N);
  }
  return IS_OK;
}

int cmd_spectrum(const Options& o) {
  TrapPtr trap;
  if (auto st = load_trap(o, trap); st != IS_OK) return report_failure(st);
  int M = 0, N = 0;
  if (auto st = resolve_caps(o, M, N); st != IS_OK) return report_failure(st);
  if (M < 0 || N < 0) {
    std::cerr << "ionsynth: invalid input: spectrum needs --M and --N or --target\n";
    return 2;
  }
  char* json = nullptr;
  if (auto st = is_spectrum(trap.get(), M, N, o.min_gap, o.margin, &json); st != IS_OK) {
    return report_failure(st);
  }
  StringPtr holder(json);
  std::puts(json);
  if (!o.out_path.empty() && !write_file(o.out_path, json)) return 2;
  return 0;
}

int cmd_compare(const Options& o) {
  int M = 0, N = 0;
  if (auto st = resolve_caps(o, M, N); st != IS_OK) return report_failure(st);
  if (M < 0 || N < 0) {
    std::cerr << "ionsynth: invalid input: compare needs --M and --N or --target\n";
    return 2;
  }
  char* json = nullptr;
  if (auto st = is_compare(M, N, &json); st != IS_OK) return report_failure(st);
  StringPtr holder(json);
  std::puts(json);
  if (!o.out_path.empty() && !write_file(o.out_path, json)) return 2;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Pulse-sequence compiler and simulator for two-mode trapped-ion motional states"};
  app.require_subcommand(1);
  app.set_version_flag("--version", is_version());
  Options o;

  auto add_trap = [&](CLI::App* cmd) {
    cmd->add_option("--trap", o.trap_path, "Trap config JSON (default trap if omitted)")
        ->check(CLI::ExistingFile);
  };
  auto add_out = [&](CLI::App* cmd) { cmd->add_option("--out", o.out_path, "Write JSON here"); };
  auto add_caps = [&](CLI::App* cmd) {
    cmd->add_option("--M", o.M, "Phonon cap along x")->check(CLI::NonNegativeNumber);
    cmd->add_option("--N", o.N, "Phonon cap along y")->check(CLI::NonNegativeNumber);
  };

  auto* plan = app.add_subcommand("plan", "Compile a target state into a pulse sequence");
  plan->add_option("--target", o.target_path, "Target state JSON")->required();
  add_trap(plan);
  plan->add_option("--zero-tol", o.zero_tol, "Skip coefficients with |c| <= tol");
  add_out(plan);

  auto* sim = app.add_subcommand("simulate", "Plan and simulate, writing a full report");
  sim->add_option("--target", o.target_path, "Target state JSON")->required();
  add_trap(sim);
  sim->add_option("--tier", o.tiers, "ideal | resonant | full (repeatable)")
      ->check(CLI::IsMember({"ideal", "resonant", "full"}));
  sim->add_option("--zero-tol", o.zero_tol, "Skip coefficients with |c| <= tol");
  sim->add_option("--min-gap", o.min_gap, "Minimum sideband line spacing (default 10*omega)");
  sim->add_option("--margin", o.margin, "Extra sideband orders in the spectral check");
  sim->add_option("--budget", o.budget, "Flag pulses longer than this duration");
  sim->add_option("--gap", o.gap, "Idle time between pulses (full tier)");
  add_out(sim);

  auto* self = app.add_subcommand("selftest", "Random-target exactness check");
  add_caps(self);
  add_trap(self);
  self->add_option("--trials", o.trials, "Number of random targets")->check(CLI::PositiveNumber);
  self->add_option("--seed", o.seed, "Base seed");
  self->add_flag("--full", o.full, "Also run the full time-dependent tier");
  add_out(self);

  auto* spec = app.add_subcommand("spectrum", "Sideband line separation check");
  add_caps(spec);
  add_trap(spec);
  spec->add_option("--target", o.target_path, "Take M, N from this target");
  spec->add_option("--min-gap", o.min_gap, "Minimum line spacing (default 10*omega)");
  spec->add_option("--margin", o.margin, "Extra sideband orders");
  add_out(spec);

  auto* cmp = app.add_subcommand("compare", "Operation counts of competing schemes");
  add_caps(cmp);
  cmp->add_option("--target", o.target_path, "Take M, N from this target");
  add_out(cmp);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  if (*plan) return cmd_plan(o);
  if (*sim) return cmd_simulate(o);
  if (*self) return cmd_selftest(o);
  if (*spec) return cmd_spectrum(o);
  return cmd_compare(o);
}
