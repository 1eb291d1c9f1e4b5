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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>
#include <random>

#include "ionsynth/coupling.hpp"
#include "ionsynth/error.hpp"
#include "oracles/oracles.hpp"

using namespace ionsynth;
using std::numbers::pi;

namespace {

TrapConfig trap(double eta_x, double eta_y) {
  TrapConfig cfg = default_trap();
  cfg.eta_x = eta_x;
  cfg.eta_y = eta_y;
  return cfg;
}

double max_abs(const Eigen::MatrixXcd& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("rabi_paper closed form") {
  SUBCASE("carrier") {
    const auto c = rabi_paper(0, 0, trap(0.2, 0.2), 0.0);
    CHECK(c.magnitude == doctest::Approx(std::exp(-0.04)).epsilon(1e-15));
    CHECK(c.phase == 0.0);
  }
  SUBCASE("first y sideband") {
    const auto c = rabi_paper(0, 1, trap(0.1, 0.1), 0.0);
    CHECK(c.magnitude == doctest::Approx(0.1 * std::exp(-0.01)).epsilon(1e-15));
    CHECK(c.phase == doctest::Approx(pi / 2));
  }
  SUBCASE("second x sideband flips the sign") {
    for (double phi : {0.0, 0.3, -2.0, 3.0}) {
      const auto c = rabi_paper(2, 0, trap(0.1, 0.1), phi);
      CHECK(std::abs(std::polar(1.0, c.phase) - std::polar(1.0, phi + pi)) < 1e-14);
      CHECK(c.phase > -pi);
      CHECK(c.phase <= pi);
    }
  }
}

TEST_CASE("rabi_exact at the vacuum") {
  const TrapConfig cfg = trap(0.1, 0.07);
  const double debye_waller = std::exp(-0.5 * (0.01 + 0.0049));
  CHECK(rabi_exact(0, 0, 0, 0, cfg, 0.0).magnitude ==
        doctest::Approx(debye_waller).epsilon(1e-15));
  CHECK(rabi_exact(1, 0, 0, 0, cfg, 0.0).magnitude ==
        doctest::Approx(debye_waller * 0.1).epsilon(1e-15));
}

TEST_CASE("rabi_exact matches the brute-force displacement exponential") {
  constexpr int kMax = 4;
  constexpr int kPad = 16;
  for (double eta : {0.05, 0.1, 0.25}) {
    const TrapConfig cfg = trap(eta, eta);
    const Eigen::MatrixXcd d = oracle::displacement(eta, 2 * kMax + kPad + 1);
    for (int m = 0; m <= kMax; ++m) {
      for (int n = 0; n <= kMax; ++n) {
        for (int k = 0; k <= kMax; ++k) {
          for (int l = 0; l <= kMax; ++l) {
            const Complex expected = d(k, k + m) * d(l, l + n);
            const Complex got = rabi_exact(m, n, k, l, cfg, 0.0).value();
            CHECK(std::abs(got - expected) < 1e-10);
          }
        }
      }
    }
  }
}

TEST_CASE("displacement_element is symmetric in its indices") {
  for (int r = 0; r < 6; ++r) {
    for (int c = 0; c < 6; ++c) {
      CHECK(displacement_element(0.3, r, c) == displacement_element(0.3, c, r));
    }
  }
}

TEST_CASE("exact and closed-form couplings differ by sqrt(m! n!)") {
  const TrapConfig cfg = trap(0.1, 0.15);
  for (int m = 0; m <= 6; ++m) {
    for (int n = 0; n <= 6; ++n) {
      const double ratio = rabi_exact(m, n, 0, 0, cfg, 0.4).magnitude /
                           rabi_paper(m, n, cfg, 0.4).magnitude;
      CHECK(ratio == doctest::Approx(std::sqrt(oracle::factorial(m) * oracle::factorial(n)))
                         .epsilon(1e-12));
      // Same phase convention.
      CHECK(std::abs(rabi_exact(m, n, 0, 0, cfg, 0.4).phase - rabi_paper(m, n, cfg, 0.4).phase) <
            1e-12);
    }
  }
}

TEST_CASE("higher sidebands are suppressed") {
  for (double eta : {0.05, 0.2, 0.45}) {
    const TrapConfig cfg = trap(eta, eta * 0.8);
    for (int m = 0; m < 6; ++m) {
      for (int n = 0; n < 6; ++n) {
        const double here = rabi_exact(m, n, 0, 0, cfg, 0.0).magnitude;
        CHECK(rabi_exact(m + 1, n, 0, 0, cfg, 0.0).magnitude < here);
        CHECK(rabi_exact(m, n + 1, 0, 0, cfg, 0.0).magnitude < here);
      }
    }
  }
}

TEST_CASE("resonant Hamiltonian structure") {
  const TrapConfig cfg = trap(0.1, 0.12);
  const Caps caps{3, 2};
  StateVector layout(caps);
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      const Eigen::MatrixXcd h = build_resonant_hamiltonian(m, n, cfg, 0.7, caps);
      CHECK(max_abs(h - h.adjoint()) == 0.0);

      // Each basis state couples to at most one partner: block 2x2 form.
      for (Eigen::Index r = 0; r < h.rows(); ++r) {
        int nonzero = 0;
        for (Eigen::Index c = 0; c < h.cols(); ++c) nonzero += h(r, c) != Complex{};
        CHECK(nonzero <= 1);
      }

      const auto g2 = static_cast<Eigen::Index>(layout.flat_index(ElectronicLevel::G2, 0, 0));
      const auto g1 = static_cast<Eigen::Index>(layout.flat_index(ElectronicLevel::G1, m, n));
      const Complex omega_mn = rabi_exact(m, n, 0, 0, cfg, 0.7).value();
      CHECK(std::abs(h(g2, g1) - omega_mn) < 1e-15);
      CHECK(std::abs(h(g1, g2) - std::conj(omega_mn)) < 1e-15);

      // g1 states with fewer than (m, n) quanta have no g2 partner.
      for (int k = 0; k <= caps.x; ++k) {
        for (int l = 0; l <= caps.y; ++l) {
          if (k >= m && l >= n) continue;
          const auto col = static_cast<Eigen::Index>(layout.flat_index(ElectronicLevel::G1, k, l));
          CHECK(h.col(col).cwiseAbs().maxCoeff() == 0.0);
        }
      }
    }
  }
}

TEST_CASE("transferred amplitude carries -i exp(-i phi_mn) sin") {
  const TrapConfig cfg = trap(0.1, 0.1);
  const Caps caps{2, 2};
  StateVector layout(caps);
  for (int m = 0; m <= 2; ++m) {
    for (int n = 0; n <= 2; ++n) {
      const double laser = 0.3 * m - 1.1 * n + 0.2;
      const auto c = rabi_exact(m, n, 0, 0, cfg, laser);
      const double t = 0.37 / c.magnitude;
      const Eigen::MatrixXcd u =
          oracle::unitary(build_resonant_hamiltonian(m, n, cfg, laser, caps), t);
      const auto g2 = static_cast<Eigen::Index>(layout.flat_index(ElectronicLevel::G2, 0, 0));
      const auto g1 = static_cast<Eigen::Index>(layout.flat_index(ElectronicLevel::G1, m, n));
      const Complex expected = Complex{0.0, -1.0} * std::polar(1.0, -c.phase) * std::sin(0.37);
      CHECK(std::abs(u(g1, g2) - expected) < 1e-12);
      CHECK(std::abs(u(g2, g2) - std::cos(0.37)) < 1e-12);
    }
  }
}

TEST_CASE("full interaction phase bookkeeping") {
  TrapConfig cfg = trap(0.1, 0.1);
  const Caps caps{3, 3};
  StateVector layout(caps);
  const int m = 1, n = 2;
  const double detuning = -m * cfg.nu_x - n * cfg.nu_y;
  const FullInteraction h = build_full_interaction(cfg, detuning, 0.4, caps);
  auto idx = [&](ElectronicLevel lv, int x, int y) { return layout.flat_index(lv, x, y); };

  SUBCASE("resonant entries are stationary and equal the resonant Hamiltonian") {
    const Eigen::MatrixXcd res = build_resonant_hamiltonian(m, n, cfg, 0.4, caps);
    for (int k = 0; k + m <= caps.x; ++k) {
      for (int l = 0; l + n <= caps.y; ++l) {
        const auto r = idx(ElectronicLevel::G1, k + m, l + n);
        const auto c = idx(ElectronicLevel::G2, k, l);
        for (double t : {0.0, 0.013, 1.7}) {
          CHECK(std::abs(h.entry(r, c, t) - res(static_cast<Eigen::Index>(r),
                                                 static_cast<Eigen::Index>(c))) < 1e-12);
        }
      }
    }
  }
  SUBCASE("other entries rotate at the residual sideband frequency") {
    const double t = 0.0123;
    for (int kp = 0; kp <= caps.x; ++kp) {
      for (int lp = 0; lp <= caps.y; ++lp) {
        for (int k = 0; k <= caps.x; ++k) {
          for (int l = 0; l <= caps.y; ++l) {
            const auto r = idx(ElectronicLevel::G1, kp, lp);
            const auto c = idx(ElectronicLevel::G2, k, l);
            const double freq = (kp - k - m) * cfg.nu_x + (lp - l - n) * cfg.nu_y;
            const Complex expected = h.entry(r, c, 0.0) * std::polar(1.0, freq * t);
            CHECK(std::abs(h.entry(r, c, t) - expected) < 1e-12);
            if (kp - k != m || lp - l != n) CHECK(freq != 0.0);
          }
        }
      }
    }
  }
  SUBCASE("apply agrees with the dense matrix") {
    std::mt19937_64 rng(7);
    std::normal_distribution<double> g;
    std::vector<Complex> psi(h.dimension()), out(h.dimension());
    for (auto& v : psi) v = {g(rng), g(rng)};
    FullInteraction::Workspace ws;
    for (double t : {0.0, 0.31, 2.5}) {
      h.apply(t, psi, out, ws);
      const Eigen::VectorXcd ref =
          h.dense(t) * Eigen::Map<const Eigen::VectorXcd>(psi.data(), static_cast<Eigen::Index>(psi.size()));
      for (std::size_t i = 0; i < psi.size(); ++i) {
        CHECK(std::abs(out[i] - ref(static_cast<Eigen::Index>(i))) < 1e-12);
      }
    }
  }
  SUBCASE("dense generator is Hermitian") {
    const Eigen::MatrixXcd d = h.dense(0.77);
    CHECK(max_abs(d - d.adjoint()) < 1e-15);
  }
  SUBCASE("time average over many periods approaches the resonant Hamiltonian") {
    // Average of e^{i w t} over [0, T] is O(1 / (w T)); with T spanning 200
    // periods of the slowest nonzero frequency nu_y the bound is Omega / nu_y.
    const double period = 2.0 * pi / cfg.nu_y;
    const double window = 200.0 * period;
    const int samples = 200 * 64;
    Eigen::MatrixXcd avg = Eigen::MatrixXcd::Zero(static_cast<Eigen::Index>(h.dimension()),
                                                  static_cast<Eigen::Index>(h.dimension()));
    for (int s = 0; s < samples; ++s) avg += h.dense((s + 0.5) * window / samples);
    avg /= samples;
    const Eigen::MatrixXcd res = build_resonant_hamiltonian(m, n, cfg, 0.4, caps);
    CHECK(max_abs(avg - res) < cfg.omega_base / cfg.nu_y);
  }
}

TEST_CASE("trap validation") {
  TrapConfig cfg = default_trap();
  CHECK_NOTHROW(cfg.validate());
  cfg.eta_x = 0.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
  cfg = default_trap();
  cfg.nu_y = -1.0;
  CHECK_THROWS_AS(cfg.validate(), Error);
}
