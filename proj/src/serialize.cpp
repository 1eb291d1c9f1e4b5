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

#include "ionsynth/serialize.hpp"

#include <cmath>
#include <fstream>
#include <set>
#include <sstream>

#include "ionsynth/error.hpp"

namespace ionsynth {
namespace {

[[noreturn]] void bad(const std::string& msg) { throw Error(ErrorKind::InvalidInput, msg); }

const Json& field(const Json& obj, const char* name, const std::string& where) {
  if (!obj.is_object()) bad(where + " must be a JSON object");
  auto it = obj.find(name);
  if (it == obj.end()) bad(where + ": missing field \"" + name + "\"");
  return *it;
}

int int_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_number_integer()) bad(where + ": field \"" + name + "\" must be an integer");
  return v.get<int>();
}

double number_field(const Json& obj, const char* name, const std::string& where) {
  const Json& v = field(obj, name, where);
  if (!v.is_number()) bad(where + ": field \"" + name + "\" must be a number");
  return v.get<double>();
}

// Infinite gaps (a single line) have no JSON number; they become null.
Json finite_or_null(double v) { return std::isfinite(v) ? Json(v) : Json(nullptr); }

Json line_json(const SidebandLine& line) {
  return Json{{"m", line.m}, {"n", line.n}, {"frequency", line.frequency}};
}

}  // namespace

TargetSpec target_from_json(const Json& j) {
  const std::string where = "target";
  const int M = int_field(j, "M", where);
  const int N = int_field(j, "N", where);
  if (M < 0 || N < 0) bad(where + ": \"M\" and \"N\" must be >= 0");
  const Json& list = field(j, "coeffs", where);
  if (!list.is_array()) bad(where + ": field \"coeffs\" must be an array");

  std::vector<Complex> table(static_cast<std::size_t>(M + 1) * static_cast<std::size_t>(N + 1));
  std::set<std::pair<int, int>> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string at = where + ".coeffs[" + std::to_string(i) + "]";
    const int m = int_field(list[i], "m", at);
    const int n = int_field(list[i], "n", at);
    if (m < 0 || n < 0 || m > M || n > N) {
      bad(at + ": (m, n) = (" + std::to_string(m) + ", " + std::to_string(n) +
          ") outside 0..M, 0..N");
    }
    if (!seen.insert({m, n}).second) bad(at + ": duplicate entry");
    table[static_cast<std::size_t>(m) * static_cast<std::size_t>(N + 1) +
          static_cast<std::size_t>(n)] = {number_field(list[i], "re", at),
                                          number_field(list[i], "im", at)};
  }
  return TargetSpec(M, N, std::move(table));
}

Json to_json(const TargetSpec& spec) {
  Json coeffs = Json::array();
  for (int m = 0; m <= spec.M(); ++m) {
    for (int n = 0; n <= spec.N(); ++n) {
      const Complex c = spec.coeff(m, n);
      if (c == Complex{}) continue;
      coeffs.push_back({{"m", m}, {"n", n}, {"re", c.real()}, {"im", c.imag()}});
    }
  }
  return Json{{"M", spec.M()}, {"N", spec.N()}, {"coeffs", std::move(coeffs)}};
}

TrapConfig trap_from_json(const Json& j) {
  const std::string where = "trap";
  if (!j.is_object()) bad(where + " must be a JSON object");
  static const std::set<std::string> known = {"nu_x",  "nu_y",    "eta_x",     "eta_y",
                                              "omega", "omega_0", "cap_margin"};
  for (const auto& [key, value] : j.items()) {
    if (!known.count(key)) bad(where + ": unknown field \"" + key + "\"");
  }
  TrapConfig cfg = default_trap();
  auto num = [&](const char* name, double& slot) {
    if (j.contains(name)) slot = number_field(j, name, where);
  };
  num("nu_x", cfg.nu_x);
  num("nu_y", cfg.nu_y);
  num("eta_x", cfg.eta_x);
  num("eta_y", cfg.eta_y);
  num("omega", cfg.omega_base);
  num("omega_0", cfg.omega_0);
  if (j.contains("cap_margin")) cfg.cap_margin = int_field(j, "cap_margin", where);
  cfg.validate();
  return cfg;
}

Json to_json(const TrapConfig& cfg) {
  return Json{{"nu_x", cfg.nu_x},   {"nu_y", cfg.nu_y},       {"eta_x", cfg.eta_x},
              {"eta_y", cfg.eta_y}, {"omega", cfg.omega_base}, {"omega_0", cfg.omega_0},
              {"cap_margin", cfg.cap_margin}};
}

Json to_json(const PulseSequence& seq) {
  Json out = Json::array();
  for (const auto& p : seq.pulses) {
    out.push_back({{"m", p.m},
                   {"n", p.n},
                   {"detuning", p.detuning},
                   {"laser_phase", p.laser_phase},
                   {"duration", p.duration},
                   {"coeff_re", p.target_coeff.real()},
                   {"coeff_im", p.target_coeff.imag()}});
  }
  return out;
}

PulseSequence sequence_from_json(const Json& j) {
  if (!j.is_array()) bad("pulse sequence must be a JSON array");
  PulseSequence seq;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string at = "pulses[" + std::to_string(i) + "]";
    Pulse p;
    p.m = int_field(j[i], "m", at);
    p.n = int_field(j[i], "n", at);
    p.detuning = number_field(j[i], "detuning", at);
    p.laser_phase = number_field(j[i], "laser_phase", at);
    p.duration = number_field(j[i], "duration", at);
    p.target_coeff = {number_field(j[i], "coeff_re", at), number_field(j[i], "coeff_im", at)};
    if (p.m < 0 || p.n < 0) bad(at + ": sideband order must be >= 0");
    if (!(p.duration >= 0.0)) bad(at + ": duration must be >= 0");
    seq.pulses.push_back(p);
  }
  return seq;
}

Json to_json(const StateVector& state) {
  Json amps = Json::array();
  for (const auto& a : state.amplitudes()) amps.push_back(Json::array({a.real(), a.imag()}));
  return Json{{"cap_x", state.caps().x}, {"cap_y", state.caps().y}, {"amplitudes", amps}};
}

StateVector state_from_json(const Json& j) {
  const std::string where = "state";
  StateVector s(Caps{int_field(j, "cap_x", where), int_field(j, "cap_y", where)});
  const Json& amps = field(j, "amplitudes", where);
  if (!amps.is_array() || amps.size() != s.size()) bad(where + ": amplitude count mismatch");
  auto out = s.amplitudes();
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const Json& a = amps[i];
    if (!a.is_array() || a.size() != 2 || !a[0].is_number() || !a[1].is_number()) {
      bad(where + ": amplitude " + std::to_string(i) + " must be [re, im]");
    }
    out[i] = {a[0].get<double>(), a[1].get<double>()};
  }
  return s;
}

Json to_json(const SchemeComparison& cmp) {
  return Json{{"gardiner", cmp.gardiner},
              {"kneer_law", cmp.kneer_law},
              {"drobny", cmp.drobny},
              {"zheng", cmp.zheng},
              {"this_work", cmp.this_work}};
}

Json to_json(const SeparationReport& r) {
  Json collisions = Json::array();
  for (const auto& c : r.collisions) {
    collisions.push_back({{"a", line_json(c.a)}, {"b", line_json(c.b)}, {"gap", c.gap}});
  }
  return Json{{"ratio", r.ratio},
              {"ratio_bound", r.ratio_bound},
              {"ratio_condition", r.ratio_condition},
              {"min_gap", finite_or_null(r.min_gap)},
              {"min_gap_with_margin", finite_or_null(r.min_gap_with_margin)},
              {"min_gap_threshold", r.min_gap_threshold},
              {"margin", r.margin},
              {"collisions", std::move(collisions)}};
}

Json to_json(const IntegratorStats& s) {
  return Json{{"steps", s.steps},
              {"max_error_estimate", s.max_error_estimate},
              {"min_step", s.min_step_used},
              {"max_norm_drift", s.max_norm_drift}};
}

Json to_json(const SimResult& r) {
  Json trace = Json::array();
  for (const auto& t : r.trace) {
    trace.push_back(
        {{"pulse", t.pulse}, {"norm", t.norm}, {"overlap", t.overlap}, {"g2_leak", t.g2_leak}});
  }
  Json out{{"tier", tier_name(r.tier)}, {"fidelity", r.fidelity}, {"trace", std::move(trace)}};
  if (r.integrator) out["integrator"] = to_json(*r.integrator);
  out["warnings"] = r.warnings;
  out["final_state"] = to_json(r.final_state);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) bad("cannot read " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json(buf.str());
}

}  // namespace ionsynth
