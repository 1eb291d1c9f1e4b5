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

// JSON encodings of the public value types. Doubles are written in shortest
// round-trip form, so parse(dump(x)) reproduces every bit.

#include <string>

#include "json.hpp"

#include "ionsynth/coupling.hpp"
#include "ionsynth/fock.hpp"
#include "ionsynth/planner.hpp"
#include "ionsynth/simulator.hpp"
#include "ionsynth/spectrum.hpp"

namespace ionsynth {

using Json = nlohmann::ordered_json;

// { "M": int, "N": int, "coeffs": [ { "m", "n", "re", "im" } ] }; absent entries are zero.
TargetSpec target_from_json(const Json& j);
Json to_json(const TargetSpec& spec);

// Keys: nu_x, nu_y, eta_x, eta_y, omega, omega_0, cap_margin. Missing keys keep
// the default_trap() value; unknown keys are rejected.
TrapConfig trap_from_json(const Json& j);
Json to_json(const TrapConfig& cfg);

// Ordered array of { m, n, detuning, laser_phase, duration, coeff_re, coeff_im }.
Json to_json(const PulseSequence& seq);
PulseSequence sequence_from_json(const Json& j);

Json to_json(const StateVector& state);
StateVector state_from_json(const Json& j);

Json to_json(const SchemeComparison& cmp);
Json to_json(const SeparationReport& report);
Json to_json(const IntegratorStats& stats);
Json to_json(const SimResult& result);

// Parses text, mapping syntax errors to ErrorKind::InvalidInput.
Json parse_json(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace ionsynth
