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

#include "ionsynth/coupling.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "ionsynth/error.hpp"

namespace ionsynth {
namespace {

// i^p for integer p >= 0.
Complex i_power(int p) {
  switch (p % 4) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

Eigen::MatrixXcd displacement_matrix(double eta, int cap) {
  Eigen::MatrixXcd d(cap + 1, cap + 1);
  for (int r = 0; r <= cap; ++r) {
    for (int c = r; c <= cap; ++c) {
      const Complex v = displacement_element(eta, r, c);
      d(r, c) = v;
      d(c, r) = v;
    }
  }
  return d;
}

}  // namespace

void TrapConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw Error(ErrorKind::InvalidInput, std::string(name) + " must be finite and > 0");
    }
  };
  positive(nu_x, "nu_x");
  positive(nu_y, "nu_y");
  positive(eta_x, "eta_x");
  positive(eta_y, "eta_y");
  positive(omega_base, "omega");
  if (!std::isfinite(omega_0)) throw Error(ErrorKind::InvalidInput, "omega_0 must be finite");
  if (cap_margin < 0) throw Error(ErrorKind::InvalidInput, "cap_margin must be >= 0");
}

TrapConfig default_trap() {
  TrapConfig cfg;
  cfg.nu_y = 100.0;
  cfg.nu_x = 6.0 * std::numbers::phi * cfg.nu_y;
  cfg.eta_x = 0.1;
  cfg.eta_y = 0.1;
  cfg.omega_base = 1.0;
  cfg.omega_0 = 1.0e5;
  cfg.cap_margin = 4;
  return cfg;
}

double wrap_phase(double angle) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double a = std::fmod(angle, two_pi);
  if (a <= -std::numbers::pi) a += two_pi;
  if (a > std::numbers::pi) a -= two_pi;
  return a;
}

Complex displacement_element(double eta, int row, int col) {
  const int lower = std::min(row, col);
  const int diff = std::abs(row - col);
  const double eta2 = eta * eta;

  // Terms of e^{-eta^2/2} sum_k (i eta)^{2k+diff} a^{dagger k} a^{k+diff} / (k! (k+diff)!)
  // on |lower+diff>; the series stops at k = lower on a Fock state.
  double term = std::exp(0.5 * (std::lgamma(lower + diff + 1.0) - std::lgamma(lower + 1.0)) -
                         std::lgamma(diff + 1.0)) *
                std::pow(eta, diff);
  double sum = term;
  int small_terms = 0;
  for (int k = 0; k < lower; ++k) {
    term *= -eta2 * static_cast<double>(lower - k) /
            (static_cast<double>(k + 1) * static_cast<double>(k + 1 + diff));
    sum += term;
    if (std::abs(term) < 1e-16 * std::abs(sum)) {
      if (++small_terms == 3) break;
    } else {
      small_terms = 0;
    }
  }
  return std::exp(-0.5 * eta2) * sum * i_power(diff);
}

SidebandCoupling rabi_paper(int m, int n, const TrapConfig& cfg, double laser_phase) {
  const double mag = cfg.omega_base *
                     std::exp(-0.5 * (cfg.eta_x * cfg.eta_x + cfg.eta_y * cfg.eta_y)) *
                     std::pow(cfg.eta_x, m) * std::pow(cfg.eta_y, n) /
                     std::exp(std::lgamma(m + 1.0) + std::lgamma(n + 1.0));
  return {m, n, mag, wrap_phase(laser_phase + (m + n) * std::numbers::pi / 2.0)};
}

SidebandCoupling rabi_exact(int m, int n, int k, int l, const TrapConfig& cfg,
                            double laser_phase) {
  if (m < 0 || n < 0 || k < 0 || l < 0) {
    throw Error(ErrorKind::InvalidInput, "sideband and Fock indices must be >= 0");
  }
  const Complex v = cfg.omega_base * std::polar(1.0, laser_phase) *
                    displacement_element(cfg.eta_x, k, k + m) *
                    displacement_element(cfg.eta_y, l, l + n);
  return {m, n, std::abs(v), wrap_phase(std::arg(v))};
}

Eigen::MatrixXcd build_resonant_hamiltonian(int m, int n, const TrapConfig& cfg,
                                            double laser_phase, Caps caps) {
  if (m > caps.x || n > caps.y) {
    throw Error(ErrorKind::TruncationExceeded, "sideband order exceeds caps");
  }
  StateVector layout(caps);
  Eigen::MatrixXcd h = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(layout.size()),
                                              static_cast<Eigen::Index>(layout.size()));
  for (int k = 0; k + m <= caps.x; ++k) {
    for (int l = 0; l + n <= caps.y; ++l) {
      const auto lo = static_cast<Eigen::Index>(layout.flat_index(ElectronicLevel::G2, k, l));
      const auto hi =
          static_cast<Eigen::Index>(layout.flat_index(ElectronicLevel::G1, k + m, l + n));
      const Complex c = rabi_exact(m, n, k, l, cfg, laser_phase).value();
      h(lo, hi) = c;
      h(hi, lo) = std::conj(c);
    }
  }
  return h;
}

FullInteraction::FullInteraction(const TrapConfig& cfg, double detuning, double laser_phase,
                                 Caps caps)
    : caps_(caps),
      nu_x_(cfg.nu_x),
      nu_y_(cfg.nu_y),
      detuning_(detuning),
      drive_(cfg.omega_base * std::polar(1.0, laser_phase)),
      dx_(displacement_matrix(cfg.eta_x, caps.x)),
      dy_(displacement_matrix(cfg.eta_y, caps.y)) {
  auto flatten = [](const Eigen::MatrixXcd& m) {
    std::vector<Complex> flat(static_cast<std::size_t>(m.size()));
    for (Eigen::Index r = 0; r < m.rows(); ++r) {
      for (Eigen::Index c = 0; c < m.cols(); ++c) {
        flat[static_cast<std::size_t>(r * m.cols() + c)] = m(r, c);
      }
    }
    return flat;
  };
  dx_flat_ = flatten(dx_);
  dy_flat_ = flatten(dy_);
  dx_conj_ = flatten(dx_.conjugate());
  dy_conj_ = flatten(dy_.conjugate());
}

double FullInteraction::max_frequency() const noexcept {
  const double span = caps_.x * nu_x_ + caps_.y * nu_y_;
  return std::max(std::abs(span + detuning_), std::abs(-span + detuning_));
}

Complex FullInteraction::entry(std::size_t row, std::size_t col, double t) const {
  const std::size_t block = dimension() / 2;
  const bool row_g2 = row >= block;
  const bool col_g2 = col >= block;
  if (row_g2 == col_g2) return {};
  // Express as <g1,k',l'| H |g2,k,l>, conjugate if the request is the other way.
  const std::size_t g1 = row_g2 ? col : row;
  const std::size_t g2 = (row_g2 ? row : col) - block;
  const int ky = caps_.y + 1;
  const int kp = static_cast<int>(g1) / ky, lp = static_cast<int>(g1) % ky;
  const int k = static_cast<int>(g2) / ky, l = static_cast<int>(g2) % ky;
  const double freq = (kp - k) * nu_x_ + (lp - l) * nu_y_ + detuning_;
  const Complex v = std::conj(drive_ * dx_(k, kp) * dy_(l, lp)) * std::polar(1.0, freq * t);
  return row_g2 ? std::conj(v) : v;
}

Eigen::MatrixXcd FullInteraction::dense(double t) const {
  const auto dim = static_cast<Eigen::Index>(dimension());
  Eigen::MatrixXcd h(dim, dim);
  for (Eigen::Index r = 0; r < dim; ++r) {
    for (Eigen::Index c = 0; c < dim; ++c) {
      h(r, c) = entry(static_cast<std::size_t>(r), static_cast<std::size_t>(c), t);
    }
  }
  return h;
}

void FullInteraction::apply(double t, std::span<const Complex> in, std::span<Complex> out,
                            Workspace& ws) const {
  const std::size_t nx = static_cast<std::size_t>(caps_.x) + 1;
  const std::size_t ny = static_cast<std::size_t>(caps_.y) + 1;
  const std::size_t block = nx * ny;
  ws.px.resize(nx);
  ws.py.resize(ny);
  ws.a.resize(block);
  ws.b.resize(block);
  auto powers = [](std::vector<Complex>& p, double phase) {
    const Complex step = std::polar(1.0, phase);
    Complex acc{1.0, 0.0};
    for (auto& v : p) {
      v = acc;
      acc *= step;
    }
  };
  powers(ws.px, nu_x_ * t);
  powers(ws.py, nu_y_ * t);
  const Complex carrier = std::polar(1.0, detuning_ * t);

  // dst = diag(px) D' diag(conj px) src diag(conj py) D'' diag(py), with D' = Dx or
  // conj(Dx) and likewise for y (both symmetric).
  auto sandwich = [&](const Complex* src, Complex* dst, const std::vector<Complex>& mx,
                      const std::vector<Complex>& my, Complex scale) {
    for (std::size_t k = 0; k < nx; ++k) {
      for (std::size_t l = 0; l < ny; ++l) {
        ws.a[k * ny + l] = std::conj(ws.px[k] * ws.py[l]) * src[k * ny + l];
      }
    }
    for (std::size_t k = 0; k < nx; ++k) {
      for (std::size_t l = 0; l < ny; ++l) {
        Complex acc{};
        for (std::size_t j = 0; j < nx; ++j) {
          acc += mx[k * nx + j] * ws.a[j * ny + l];
        }
        ws.b[k * ny + l] = acc;
      }
    }
    for (std::size_t k = 0; k < nx; ++k) {
      for (std::size_t l = 0; l < ny; ++l) {
        Complex acc{};
        for (std::size_t j = 0; j < ny; ++j) {
          acc += ws.b[k * ny + j] * my[j * ny + l];
        }
        dst[k * ny + l] = scale * ws.px[k] * ws.py[l] * acc;
      }
    }
  };
  sandwich(in.data() + block, out.data(), dx_conj_, dy_conj_, std::conj(drive_) * carrier);
  sandwich(in.data(), out.data() + block, dx_flat_, dy_flat_, drive_ * std::conj(carrier));
}

FullInteraction build_full_interaction(const TrapConfig& cfg, double detuning, double laser_phase,
                                       Caps caps) {
  return FullInteraction(cfg, detuning, laser_phase, caps);
}

}  // namespace ionsynth
