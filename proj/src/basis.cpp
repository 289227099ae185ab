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

#include "qspace/basis.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "qspace/algebra.hpp"
#include "qspace/kernels.hpp"

namespace qspace {

namespace {

void require_point(std::uint32_t point, const BasisChange& basis) {
  if (point == 0 || point > basis.cutoff()) {
    throw Error(ErrorKind::cutoff_exceeded, "point " + std::to_string(point) +
                                                " outside 1.." + std::to_string(basis.cutoff()));
  }
}

void require_field_sector(Sector sector) {
  if (sector == Sector::full) {
    throw Error(ErrorKind::sector_mismatch, "field operators need Bose or Fermi statistics");
  }
}

double factorial(std::uint64_t n) {
  double f = 1.0;
  for (std::uint64_t i = 2; i <= n; ++i) f *= static_cast<double>(i);
  return f;
}

}  // namespace

BasisChange::BasisChange(ComplexMatrix u) : u_(std::move(u)) {
  if (!u_.square() || u_.rows() == 0) {
    throw Error(ErrorKind::invalid_basis, "basis change must be a non-empty square matrix");
  }
  const std::size_t m = u_.rows();
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      Complex dot{};
      for (std::size_t x = 0; x < m; ++x) dot += u_(i, x) * std::conj(u_(j, x));
      const double expected = i == j ? 1.0 : 0.0;
      if (std::abs(dot - expected) > kUnitarityTolerance) {
        throw Error(ErrorKind::invalid_basis,
                    "basis change is not unitary: rows " + std::to_string(i + 1) + " and " +
                        std::to_string(j + 1) + " have product " + std::to_string(dot.real()) +
                        "+" + std::to_string(dot.imag()) + "i");
      }
    }
  }
}

BasisChange BasisChange::identity(std::uint32_t m) { return BasisChange(ComplexMatrix::identity(m)); }

BasisChange BasisChange::fourier(std::uint32_t m) {
  ComplexMatrix u(m, m);
  const double scale = 1.0 / std::sqrt(static_cast<double>(m));
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t x = 0; x < m; ++x) {
      const double phase = 2.0 * std::numbers::pi * static_cast<double>((i * x) % m) / m;
      u(i, x) = std::polar(scale, phase);
    }
  }
  return BasisChange(std::move(u));
}

BasisChange BasisChange::random(std::uint32_t m, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  ComplexMatrix u(m, m);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t x = 0; x < m; ++x) u(i, x) = Complex(gauss(rng), gauss(rng));
  }
  // modified Gram-Schmidt over rows
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < i; ++j) {
      Complex proj{};
      for (std::uint32_t x = 0; x < m; ++x) proj += std::conj(u(j, x)) * u(i, x);
      for (std::uint32_t x = 0; x < m; ++x) u(i, x) -= proj * u(j, x);
    }
    double len = 0.0;
    for (std::uint32_t x = 0; x < m; ++x) len += std::norm(u(i, x));
    len = std::sqrt(len);
    for (std::uint32_t x = 0; x < m; ++x) u(i, x) /= len;
  }
  return BasisChange(std::move(u));
}

BasisChange basis_from_json(const nlohmann::json& j) {
  try {
    const auto m = j.at("M").get<std::uint32_t>();
    const auto& rows = j.at("U");
    if (!rows.is_array() || rows.size() != m) {
      throw Error(ErrorKind::invalid_basis, "\"U\" must have M rows");
    }
    ComplexMatrix u(m, m);
    for (std::uint32_t i = 0; i < m; ++i) {
      if (!rows[i].is_array() || rows[i].size() != m) {
        throw Error(ErrorKind::invalid_basis, "row " + std::to_string(i + 1) + " must have M entries");
      }
      for (std::uint32_t x = 0; x < m; ++x) {
        const auto& e = rows[i][x];
        u(i, x) = Complex(e.at("re").get<double>(), e.value("im", 0.0));
      }
    }
    return BasisChange(std::move(u));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::invalid_basis, std::string("malformed basis JSON: ") + e.what());
  }
}

nlohmann::json basis_to_json(const BasisChange& basis) {
  nlohmann::json rows = nlohmann::json::array();
  const std::uint32_t m = basis.cutoff();
  for (std::uint32_t i = 1; i <= m; ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::uint32_t x = 1; x <= m; ++x) {
      row.push_back({{"re", basis.u(i, x).real()}, {"im", basis.u(i, x).imag()}});
    }
    rows.push_back(std::move(row));
  }
  return {{"M", m}, {"U", std::move(rows)}};
}

OpSum field_creation_operator(std::uint32_t point, const BasisChange& basis, Sector sector) {
  require_point(point, basis);
  require_field_sector(sector);
  OpSum op;
  for (std::uint32_t i = 1; i <= basis.cutoff(); ++i) {
    const LadderOp create = sector == Sector::bose ? LadderOp::a_dag(i) : LadderOp::c_dag(i);
    op.words.push_back(OpWord{{create}, basis.u(i, point)});
  }
  return op;
}

OpSum field_annihilation_operator(std::uint32_t point, const BasisChange& basis, Sector sector) {
  return adjoint(field_creation_operator(point, basis, sector));
}

StateVector field_create(std::uint32_t point, const BasisChange& basis, const StateVector& psi) {
  return apply(field_creation_operator(point, basis, psi.sector()), psi);
}

StateVector field_annihilate(std::uint32_t point, const BasisChange& basis, const StateVector& psi) {
  return apply(field_annihilation_operator(point, basis, psi.sector()), psi);
}

StateVector position_state(std::span<const std::uint32_t> points, const BasisChange& basis,
                           Sector sector) {
  require_field_sector(sector);
  if (points.empty()) throw Error(ErrorKind::bounds_exceeded, "position state needs at least one point");
  for (auto x : points) require_point(x, basis);
  StateVector psi = embed(OccupationState{}, sector);
  // rightmost operator, psi+(x_N), acts first
  for (auto it = points.rbegin(); it != points.rend(); ++it) psi = field_create(*it, basis, psi);
  psi *= 1.0 / std::sqrt(factorial(points.size()));
  return psi;
}

Complex amplitude(const OccupationState& f, std::span<const std::uint32_t> points,
                  const BasisChange& basis, Sector sector) {
  if (f.total() != points.size()) return 0.0;
  return fock_inner_product(embed(f, sector), position_state(points, basis, sector));
}

ComplexMatrix amplitude_matrix(const OccupationState& f, std::span<const std::uint32_t> points,
                               const BasisChange& basis) {
  const Monomial m = monomial_of(f);
  if (m.degree() != points.size()) {
    throw Error(ErrorKind::shape_error, "state has " + std::to_string(m.degree()) +
                                            " quanta but " + std::to_string(points.size()) +
                                            " points were given");
  }
  for (auto x : points) require_point(x, basis);
  for (auto mode : m.factors) {
    if (mode.value() > basis.cutoff()) {
      throw Error(ErrorKind::cutoff_exceeded, "mode " + std::to_string(mode.value()) +
                                                  " beyond cutoff " + std::to_string(basis.cutoff()));
    }
  }
  ComplexMatrix a(points.size(), points.size());
  for (std::size_t r = 0; r < m.degree(); ++r) {
    for (std::size_t c = 0; c < points.size(); ++c) a(r, c) = basis.u(m.factors[r].value(), points[c]);
  }
  return a;
}

Complex closed_form_amplitude(const OccupationState& f, std::span<const std::uint32_t> points,
                              const BasisChange& basis, Sector sector) {
  require_field_sector(sector);
  if (f.total() != points.size()) return 0.0;
  const ComplexMatrix a = amplitude_matrix(f, points, basis);
  const double n_fact = factorial(points.size());
  if (sector == Sector::bose) {
    double occupancy = 1.0;
    for (const auto& [mode, n] : f.entries()) occupancy *= factorial(n);
    return kernels::permanent(a) / std::sqrt(n_fact * occupancy);
  }
  return kernels::determinant(a) / std::sqrt(n_fact);
}

}  // namespace qspace
