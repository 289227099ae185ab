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

#include <vector>

#include "qspace/core.hpp"
#include "qspace/matrix.hpp"

namespace qspace {

/// Canonically ordered word epsilon_{i1} (x) ... (x) epsilon_{in} with
/// i1 <= ... <= in; mode k appears count(k) times.
struct Monomial {
  std::vector<ModeIndex> factors;

  std::size_t degree() const noexcept { return factors.size(); }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

Monomial monomial_of(const OccupationState& f);

/// Gram matrix G[a][b] = <epsilon_{f_a}, epsilon_{g_b}> of two monomials of
/// equal degree, in the orthonormal basis of V_E.
ComplexMatrix gram_matrix(const Monomial& f, const Monomial& g);

/// Scalar product induced on generators through T(V), S(V) or the exterior
/// algebra: factorwise product of the Gram diagonal (Full), permanent (Bose)
/// or determinant (Fermi). Zero whenever the total particle numbers differ.
/// Bose values are prod n_i! on the diagonal, not 1; see fock_inner_product.
Complex algebra_inner_product(const OccupationState& f, const OccupationState& g, Sector sector);

/// Orthonormal occupation-basis product, conjugate-linear in psi. This is the
/// product under which the ladder operators are mutual adjoints.
Complex fock_inner_product(const StateVector& psi, const StateVector& phi);

double norm(const StateVector& psi);

}  // namespace qspace
