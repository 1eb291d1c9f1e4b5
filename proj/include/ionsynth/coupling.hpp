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

// Sideband couplings and Hamiltonians for a single ion in a 2D trap driven by
// a Raman pair. Units: hbar = 1, frequencies in units of the base Rabi rate
// by default (omega_base = 1).

#include <vector>

#include <Eigen/Dense>

#include "ionsynth/fock.hpp"

namespace ionsynth {

struct TrapConfig {
  double nu_x = 0.0;
  double nu_y = 0.0;
  double eta_x = 0.0;
  double eta_y = 0.0;
  double omega_base = 1.0;  // |Omega|
  double omega_0 = 0.0;     // g1/g2 splitting
  int cap_margin = 4;       // extra Fock levels per mode for the full model

  // Throws ErrorKind::InvalidInput when a physical parameter is out of range.
  void validate() const;
};

// Anisotropic default: nu_x / nu_y = 6 * golden ratio, incommensurate and
// above M + 2N for every M, N <= 3.
TrapConfig default_trap();

struct SidebandCoupling {
  int m = 0;
  int n = 0;
  double magnitude = 0.0;
  double phase = 0.0;  // (-pi, pi]

  Complex value() const { return std::polar(magnitude, phase); }
};

// Wraps an angle to (-pi, pi].
double wrap_phase(double angle) noexcept;

// <row| exp(i eta (a + a^dagger)) |col> from the normal-ordered series.
Complex displacement_element(double eta, int row, int col);

// Textbook closed form of the (m, n) Raman coupling:
//   Omega e^{-(eta_x^2+eta_y^2)/2} (i eta_x)^m (i eta_y)^n / (m! n!).
// Omits the Fock matrix element of a^m b^n; diagnostic only.
SidebandCoupling rabi_paper(int m, int n, const TrapConfig& cfg, double laser_phase);

// <g2,k,l| H_{m,n} |g1,k+m,l+n> for the resonant (m, n) sideband. For k = l = 0
// the magnitude is Omega e^{-(eta_x^2+eta_y^2)/2} eta_x^m eta_y^n / sqrt(m! n!).
SidebandCoupling rabi_exact(int m, int n, int k, int l, const TrapConfig& cfg,
                            double laser_phase);

// Dense resonant Hamiltonian on the 2 (cap_x+1)(cap_y+1) space, in the flat
// layout of StateVector. Only |g2,k,l> <-> |g1,k+m,l+n> blocks are nonzero.
Eigen::MatrixXcd build_resonant_hamiltonian(int m, int n, const TrapConfig& cfg,
                                            double laser_phase, Caps caps);

// Interaction-picture generator of the full single-field drive:
//   <g1,k',l'| H(t) |g2,k,l> = conj(Omega e^{i phi} D_x[k,k'] D_y[l,l'])
//                              * exp(i((k'-k) nu_x + (l'-l) nu_y + detuning) t)
// plus its Hermitian conjugate. detuning = (omega_x - omega_y) - omega_0, so the
// (m, n) sideband is stationary at detuning = -m nu_x - n nu_y.
class FullInteraction {
 public:
  FullInteraction(const TrapConfig& cfg, double detuning, double laser_phase, Caps caps);

  Caps caps() const noexcept { return caps_; }
  std::size_t dimension() const noexcept {
    return 2 * static_cast<std::size_t>(caps_.x + 1) * static_cast<std::size_t>(caps_.y + 1);
  }
  // Largest |frequency| carried by any entry.
  double max_frequency() const noexcept;

  Complex entry(std::size_t row, std::size_t col, double t) const;
  Eigen::MatrixXcd dense(double t) const;

  struct Workspace {
    std::vector<Complex> a;
    std::vector<Complex> b;
    std::vector<Complex> px;
    std::vector<Complex> py;
  };

  // out = H(t) * in over flat StateVector amplitudes.
  void apply(double t, std::span<const Complex> in, std::span<Complex> out, Workspace& ws) const;

 private:
  Caps caps_;
  double nu_x_;
  double nu_y_;
  double detuning_;
  Complex drive_;        // Omega e^{i phi}
  Eigen::MatrixXcd dx_;  // symmetric displacement matrices
  Eigen::MatrixXcd dy_;
  std::vector<Complex> dx_flat_;  // row-major copies for apply()
  std::vector<Complex> dy_flat_;
  std::vector<Complex> dx_conj_;
  std::vector<Complex> dy_conj_;
};

FullInteraction build_full_interaction(const TrapConfig& cfg, double detuning, double laser_phase,
                                       Caps caps);

}  // namespace ionsynth
