// Copyright 2026 The qspace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "qspace/core.hpp"

// Labeled tensor-product construction: explicit vectors in H^n with the
// particle slots numbered, and the (anti)symmetrizers over S_n. Kept dense and
// single-threaded so it stays an obviously-correct reference for checking the
// occupation-number code. Tests and `qspace oracle-compare` only.
namespace qspace::oracle {

inline constexpr std::uint32_t kMaxParticles = 6;
inline constexpr std::uint32_t kMaxModes = 6;

enum class Parity { symmetric, antisymmetric };

/// Element of H^n with H = C^M. The stored array holds numerators; the vector
/// itself is amps / denominator. Label tuples (i_1..i_n) are one-based, slot 1
/// is the most significant digit of the flat index.
class LabeledVector {
 public:
  LabeledVector(std::uint32_t particles, std::uint32_t modes);

  std::uint32_t particles() const noexcept { return n_; }
  std::uint32_t modes() const noexcept { return m_; }
  std::uint64_t denominator() const noexcept { return denominator_; }
  std::size_t size() const noexcept { return amps_.size(); }

  std::size_t index_of(std::span<const std::uint32_t> labels) const;
  std::vector<std::uint32_t> labels_of(std::size_t index) const;

  Complex amplitude(std::span<const std::uint32_t> labels) const;
  Complex amplitude_at(std::size_t index) const;
  /// Logical amplitudes amps / denominator.
  std::vector<Complex> dense() const;

  Complex& numerator_at(std::size_t index) { return amps_[index]; }
  const Complex& numerator_at(std::size_t index) const { return amps_[index]; }
  void set_denominator(std::uint64_t d) noexcept { denominator_ = d; }

 private:
  std::uint32_t n_;
  std::uint32_t m_;
  std::uint64_t denominator_ = 1;
  std::vector<Complex> amps_;
};

/// Elementary tensor whose factors are the monomial of f, in order.
LabeledVector labeled_of(const OccupationState& f, std::uint32_t modes);

/// (1/n!) sum_P P(eta), with sign(P) for the antisymmetric case.
LabeledVector symmetrize(const LabeledVector& eta, Parity parity);

/// Hermitian dot, conjugate-linear in the first argument.
Complex dot(const LabeledVector& lhs, const LabeledVector& rhs);

/// <sigma eta_f, sigma eta_g>, <tau eta_f, tau eta_g> or <eta_f, eta_g>.
Complex oracle_inner_product(const OccupationState& f, const OccupationState& g, Sector sector,
                             std::uint32_t modes);

/// Unit vector of H^n_sigma / H^n_tau / H^n representing the normalized
/// occupation state f: sqrt(n!/prod n_i!) sigma(eta_f), sqrt(n!) tau(eta_f),
/// or eta_f.
LabeledVector normalized_labeled(const OccupationState& f, Sector sector, std::uint32_t modes);

/// Textbook creation on H^n: sqrt(n+1) S(e_k (x) eta), S the (anti)symmetrizer.
LabeledVector labeled_create(std::uint32_t mode, const LabeledVector& eta, Parity parity);

}  // namespace qspace::oracle
