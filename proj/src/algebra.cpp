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

#include "qspace/algebra.hpp"

#include <cmath>

#include "qspace/kernels.hpp"

namespace qspace {

Monomial monomial_of(const OccupationState& f) {
  Monomial m;
  m.factors.reserve(f.total());
  for (const auto& [mode, n] : f.entries()) m.factors.insert(m.factors.end(), n, mode);
  return m;
}

ComplexMatrix gram_matrix(const Monomial& f, const Monomial& g) {
  if (f.degree() != g.degree()) {
    throw Error(ErrorKind::shape_error, "Gram matrix of monomials with different degree");
  }
  const std::size_t n = f.degree();
  ComplexMatrix gram(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) gram(a, b) = f.factors[a] == g.factors[b] ? 1.0 : 0.0;
  }
  return gram;
}

Complex algebra_inner_product(const OccupationState& f, const OccupationState& g, Sector sector) {
  if (f.total() != g.total()) return 0.0;
  const ComplexMatrix gram = gram_matrix(monomial_of(f), monomial_of(g));
  switch (sector) {
    case Sector::full: {
      Complex prod = 1.0;
      for (std::size_t a = 0; a < gram.rows(); ++a) prod *= gram(a, a);
      return prod;
    }
    case Sector::bose:
      return kernels::permanent(gram);
    case Sector::fermi:
      return kernels::determinant(gram);
  }
  return 0.0;
}

Complex fock_inner_product(const StateVector& psi, const StateVector& phi) {
  require_same_sector(psi, phi);
  // merge walk over the two ordered term maps
  Complex sum{};
  auto a = psi.terms().begin();
  auto b = phi.terms().begin();
  while (a != psi.terms().end() && b != phi.terms().end()) {
    if (a->first < b->first) {
      ++a;
    } else if (b->first < a->first) {
      ++b;
    } else {
      sum += std::conj(a->second) * b->second;
      ++a;
      ++b;
    }
  }
  return sum;
}

double norm(const StateVector& psi) {
  double sq = 0.0;
  for (const auto& [f, amp] : psi.terms()) sq += std::norm(amp);
  return std::sqrt(sq);
}

}  // namespace qspace
