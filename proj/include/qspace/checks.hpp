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
#include <string>
#include <vector>

#include "qspace/core.hpp"

// Exhaustive relation suites over finite blocks of the occupation basis. The
// parallel versions shard the basis across OpenMP threads; per-state results
// land in fixed slots and are reduced in basis order, so reports do not
// depend on the thread count.
namespace qspace::checks {

/// Every occupation state with support in 1..modes and total <= max_total,
/// in canonical order.
std::vector<OccupationState> occupation_basis(std::uint32_t modes, std::uint32_t max_total);

/// The 2^modes states with all counts <= 1.
std::vector<OccupationState> fermi_basis(std::uint32_t modes);

struct RelationResult {
  std::string name;
  double max_residual = 0.0;
  std::uint64_t evaluations = 0;
};

struct SuiteReport {
  std::vector<RelationResult> relations;
  std::uint64_t states = 0;

  double max_residual() const;
  bool passed(double tolerance) const { return max_residual() <= tolerance; }
};

/// [a_i,a_j], [a+_i,a+_j], [a_i,a+_j] - delta_ij for all i, j <= modes.
SuiteReport check_ccr(std::uint32_t modes, std::uint32_t max_total);
SuiteReport check_ccr_serial(std::uint32_t modes, std::uint32_t max_total);

/// {c_i,c_j}, {c+_i,c+_j}, {c_i,c+_j} - delta_ij for all i, j <= modes.
SuiteReport check_car(std::uint32_t modes);
SuiteReport check_car_serial(std::uint32_t modes);

/// |<O+ f|g> - <f|O g>| for a_k, a+_k, c_k, c+_k, k <= modes, over all basis
/// pairs with total <= max_total (Fermi pairs restricted to admissible states).
SuiteReport check_adjointness(std::uint32_t modes, std::uint32_t max_total);

struct NormalizationEntry {
  Sector sector;
  std::uint32_t particles = 0;
  double expected_constant = 0.0;  // 1 for Full, n! for Bose and Fermi
  double ratio_min = 0.0;          // over pairs with a nonzero oracle product
  double ratio_max = 0.0;
  double max_residual = 0.0;       // |algebra - expected * oracle|
  std::uint64_t pairs = 0;
  std::uint64_t nonzero_pairs = 0;
};

struct OracleReport {
  std::vector<NormalizationEntry> entries;

  /// Fermi residuals must be exactly zero, the others within tolerance, and
  /// the measured ratio must equal the expected constant at every n.
  bool passed(double tolerance) const;
};

/// Compares algebra_inner_product with the labeled oracle for every pair of
/// states with equal total <= max_total on modes 1..modes, in all sectors.
OracleReport compare_with_oracle(std::uint32_t modes, std::uint32_t max_total);

}  // namespace qspace::checks
