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

// Two-mode Fock space: mode indices, the (J, L) relabeling, dense state
// vectors over {g1, g2} x |n_x> x |n_y>, and the target coefficient table.

#include <complex>
#include <compare>
#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace ionsynth {

using Complex = std::complex<double>;

enum class ElectronicLevel : int { G1 = 0, G2 = 1 };

struct ModeIndex {
  int m = 0;  // x-mode phonons
  int n = 0;  // y-mode phonons

  friend auto operator<=>(const ModeIndex&, const ModeIndex&) = default;
};

// Half-integer J, L are stored doubled so they stay exact.
struct JLIndex {
  int two_J = 0;
  int two_L = 0;

  friend auto operator<=>(const JLIndex&, const JLIndex&) = default;
};

JLIndex mn_to_jl(ModeIndex idx) noexcept;
ModeIndex jl_to_mn(JLIndex idx) noexcept;

struct Caps {
  int x = 0;
  int y = 0;

  friend bool operator==(const Caps&, const Caps&) = default;
};

class StateVector {
 public:
  explicit StateVector(Caps caps);

  Caps caps() const noexcept { return caps_; }
  std::size_t size() const noexcept { return amp_.size(); }
  std::size_t block_size() const noexcept {
    return static_cast<std::size_t>(caps_.x + 1) * static_cast<std::size_t>(caps_.y + 1);
  }

  // level*(cap_x+1)(cap_y+1) + n_x*(cap_y+1) + n_y
  std::size_t flat_index(ElectronicLevel level, int nx, int ny) const;
  bool contains(int nx, int ny) const noexcept {
    return nx >= 0 && ny >= 0 && nx <= caps_.x && ny <= caps_.y;
  }

  Complex& at(ElectronicLevel level, int nx, int ny) { return amp_[flat_index(level, nx, ny)]; }
  const Complex& at(ElectronicLevel level, int nx, int ny) const {
    return amp_[flat_index(level, nx, ny)];
  }

  std::span<Complex> amplitudes() noexcept { return amp_; }
  std::span<const Complex> amplitudes() const noexcept { return amp_; }

  double norm() const noexcept;
  double population(ElectronicLevel level) const noexcept;
  void scale(double factor) noexcept;

  // Copy onto larger (or equal) caps; amplitudes outside the new caps must be zero.
  StateVector padded(Caps larger) const;

 private:
  Caps caps_;
  std::vector<Complex> amp_;
};

StateVector basis_state(ElectronicLevel level, ModeIndex idx, Caps caps);

// Coefficient table C_{m,n} for 0 <= m <= M, 0 <= n <= N.
class TargetSpec {
 public:
  // Relative deviation of the l2 norm from 1 that is silently renormalized.
  static constexpr double kNormTolerance = 1e-9;

  // Validates shape and normalization; renormalizes within kNormTolerance.
  TargetSpec(int M, int N, std::vector<Complex> coeffs);

  // Shape check only. Lets callers replay tables that failed normalization;
  // the planner rejects them with ErrorKind::UnnormalizedResidual.
  static TargetSpec unnormalized(int M, int N, std::vector<Complex> coeffs);

  int M() const noexcept { return M_; }
  int N() const noexcept { return N_; }
  Complex coeff(int m, int n) const;
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  // target (x) |g1>, embedded in caps >= (M, N).
  StateVector embed(Caps caps) const;

 private:
  struct Unchecked {};
  TargetSpec(Unchecked, int M, int N, std::vector<Complex> coeffs);

  int M_;
  int N_;
  std::vector<Complex> coeffs_;  // row-major, m*(N+1)+n
};

// d_{J,L} = C_{J+L, J-L}. Exact zeros are omitted.
std::map<JLIndex, Complex> coeffs_to_d(const TargetSpec& spec);

}  // namespace ionsynth
