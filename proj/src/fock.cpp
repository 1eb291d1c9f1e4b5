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

#include "ionsynth/fock.hpp"

#include <cmath>
#include <string>

#include "ionsynth/error.hpp"

namespace ionsynth {

const char* error_tag(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidInput: return "invalid-input";
    case ErrorKind::TruncationExceeded: return "truncation exceeded";
    case ErrorKind::UnnormalizedResidual: return "unnormalized-residual";
    case ErrorKind::ZeroCoupling: return "zero-coupling";
    case ErrorKind::ProtocolViolation: return "protocol-invariant-violation";
    case ErrorKind::IntegratorDiverged: return "integrator-diverged";
    case ErrorKind::StepFloor: return "step-floor";
    case ErrorKind::CapMismatch: return "cap-mismatch";
  }
  return "unknown";
}

JLIndex mn_to_jl(ModeIndex idx) noexcept { return {idx.m + idx.n, idx.m - idx.n}; }

ModeIndex jl_to_mn(JLIndex idx) noexcept {
  return {(idx.two_J + idx.two_L) / 2, (idx.two_J - idx.two_L) / 2};
}

StateVector::StateVector(Caps caps) : caps_(caps) {
  if (caps.x < 0 || caps.y < 0) {
    throw Error(ErrorKind::InvalidInput, "negative truncation cap");
  }
  amp_.assign(2 * block_size(), Complex{});
}

std::size_t StateVector::flat_index(ElectronicLevel level, int nx, int ny) const {
  if (!contains(nx, ny)) {
    throw Error(ErrorKind::TruncationExceeded,
                "(" + std::to_string(nx) + "," + std::to_string(ny) + ") outside caps (" +
                    std::to_string(caps_.x) + "," + std::to_string(caps_.y) + ")");
  }
  return static_cast<std::size_t>(level) * block_size() +
         static_cast<std::size_t>(nx) * static_cast<std::size_t>(caps_.y + 1) +
         static_cast<std::size_t>(ny);
}

double StateVector::norm() const noexcept {
  double sum = 0.0;
  for (const auto& a : amp_) sum += std::norm(a);
  return std::sqrt(sum);
}

double StateVector::population(ElectronicLevel level) const noexcept {
  const std::size_t offset = static_cast<std::size_t>(level) * block_size();
  double sum = 0.0;
  for (std::size_t i = 0; i < block_size(); ++i) sum += std::norm(amp_[offset + i]);
  return sum;
}

void StateVector::scale(double factor) noexcept {
  for (auto& a : amp_) a *= factor;
}

StateVector StateVector::padded(Caps larger) const {
  StateVector out(larger);
  for (int lv = 0; lv < 2; ++lv) {
    const auto level = static_cast<ElectronicLevel>(lv);
    for (int nx = 0; nx <= caps_.x; ++nx) {
      for (int ny = 0; ny <= caps_.y; ++ny) {
        const Complex a = at(level, nx, ny);
        if (a == Complex{}) continue;
        out.at(level, nx, ny) = a;
      }
    }
  }
  return out;
}

StateVector basis_state(ElectronicLevel level, ModeIndex idx, Caps caps) {
  StateVector s(caps);
  s.at(level, idx.m, idx.n) = 1.0;
  return s;
}

TargetSpec::TargetSpec(Unchecked, int M, int N, std::vector<Complex> coeffs)
    : M_(M), N_(N), coeffs_(std::move(coeffs)) {
  if (M < 0 || N < 0) throw Error(ErrorKind::InvalidInput, "phonon caps M, N must be >= 0");
  const auto expected = static_cast<std::size_t>(M + 1) * static_cast<std::size_t>(N + 1);
  if (coeffs_.size() != expected) {
    throw Error(ErrorKind::InvalidInput, "coefficient table has " +
                                             std::to_string(coeffs_.size()) + " entries, expected " +
                                             std::to_string(expected));
  }
}

TargetSpec TargetSpec::unnormalized(int M, int N, std::vector<Complex> coeffs) {
  return TargetSpec(Unchecked{}, M, N, std::move(coeffs));
}

TargetSpec::TargetSpec(int M, int N, std::vector<Complex> coeffs)
    : TargetSpec(Unchecked{}, M, N, std::move(coeffs)) {
  double sum = 0.0;
  for (const auto& c : coeffs_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::InvalidInput, "non-finite coefficient");
    }
    sum += std::norm(c);
  }
  const double nrm = std::sqrt(sum);
  if (std::abs(nrm - 1.0) > kNormTolerance) {
    throw Error(ErrorKind::InvalidInput,
                "coefficients are not normalized (norm = " + std::to_string(nrm) + ")");
  }
  for (auto& c : coeffs_) c /= nrm;
}

Complex TargetSpec::coeff(int m, int n) const {
  if (m < 0 || n < 0 || m > M_ || n > N_) return {};
  return coeffs_[static_cast<std::size_t>(m) * static_cast<std::size_t>(N_ + 1) +
                 static_cast<std::size_t>(n)];
}

StateVector TargetSpec::embed(Caps caps) const {
  if (caps.x < M_ || caps.y < N_) {
    throw Error(ErrorKind::TruncationExceeded, "caps smaller than target (M, N)");
  }
  StateVector s(caps);
  for (int m = 0; m <= M_; ++m) {
    for (int n = 0; n <= N_; ++n) s.at(ElectronicLevel::G1, m, n) = coeff(m, n);
  }
  return s;
}

std::map<JLIndex, Complex> coeffs_to_d(const TargetSpec& spec) {
  std::map<JLIndex, Complex> d;
  for (int m = 0; m <= spec.M(); ++m) {
    for (int n = 0; n <= spec.N(); ++n) {
      const Complex c = spec.coeff(m, n);
      if (c != Complex{}) d.emplace(mn_to_jl({m, n}), c);
    }
  }
  return d;
}

}  // namespace ionsynth
