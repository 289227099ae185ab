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

#include <nlohmann/json.hpp>

#include "qspace/core.hpp"
#include "qspace/ladder.hpp"
#include "qspace/matrix.hpp"

namespace qspace {

/// Discretized mode functions: u(i, x) is mode i evaluated at point x, both
/// one-based and bounded by the cutoff M. The matrix is unitary.
class BasisChange {
 public:
  static constexpr double kUnitarityTolerance = 1e-10;

  /// Throws invalid_basis unless u is square and unitary within tolerance.
  explicit BasisChange(ComplexMatrix u);

  static BasisChange identity(std::uint32_t m);
  /// u(i, x) = exp(2 pi i (i-1)(x-1) / M) / sqrt(M)
  static BasisChange fourier(std::uint32_t m);
  /// Haar-like random unitary (Gram-Schmidt on Gaussian columns), seeded.
  static BasisChange random(std::uint32_t m, std::uint64_t seed);

  std::uint32_t cutoff() const noexcept { return static_cast<std::uint32_t>(u_.rows()); }
  Complex u(std::uint32_t mode, std::uint32_t point) const { return u_(mode - 1, point - 1); }
  const ComplexMatrix& matrix() const noexcept { return u_; }

 private:
  ComplexMatrix u_;
};

/// {"M": m, "U": [[{"re": .., "im": ..}, ...], ...]}, rows indexed by mode.
BasisChange basis_from_json(const nlohmann::json& j);
nlohmann::json basis_to_json(const BasisChange& basis);

/// psi+(x) = sum_i u_i(x) create_i, with the statistics of `sector`.
OpSum field_creation_operator(std::uint32_t point, const BasisChange& basis, Sector sector);
/// psi(x) = sum_i conj(u_i(x)) annihilate_i, the adjoint of psi+(x).
OpSum field_annihilation_operator(std::uint32_t point, const BasisChange& basis, Sector sector);

StateVector field_create(std::uint32_t point, const BasisChange& basis, const StateVector& psi);
StateVector field_annihilate(std::uint32_t point, const BasisChange& basis, const StateVector& psi);

/// (1/sqrt(N!)) psi+(x_1) psi+(x_2) ... psi+(x_N) f_0.
StateVector position_state(std::span<const std::uint32_t> points, const BasisChange& basis,
                           Sector sector);

/// <f | position_state(points)> in the orthonormal occupation basis. Zero when
/// total(f) differs from the number of points.
Complex amplitude(const OccupationState& f, std::span<const std::uint32_t> points,
                  const BasisChange& basis, Sector sector);

/// A(r, c) = u_{m_r}(x_c), m the monomial of f.
ComplexMatrix amplitude_matrix(const OccupationState& f, std::span<const std::uint32_t> points,
                               const BasisChange& basis);

/// perm(A) / sqrt(N! prod n_i!) for Bose, det(A) / sqrt(N!) for Fermi.
Complex closed_form_amplitude(const OccupationState& f, std::span<const std::uint32_t> points,
                              const BasisChange& basis, Sector sector);

}  // namespace qspace
