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

#include "qspace/checks.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "qspace/algebra.hpp"
#include "qspace/ladder.hpp"
#include "qspace/oracle.hpp"

namespace qspace::checks {

namespace {

using Residuals = std::array<double, 3>;

void enumerate(std::uint32_t mode, std::uint32_t modes, std::uint32_t budget, std::uint32_t cap,
               std::vector<ModeCount>& prefix, std::vector<OccupationState>& out) {
  if (mode > modes) {
    out.push_back(make_occupation(prefix));
    return;
  }
  for (std::uint32_t n = 0; n <= std::min(budget, cap); ++n) {
    if (n > 0) prefix.push_back({mode, n});
    enumerate(mode + 1, modes, budget - n, cap, prefix, out);
    if (n > 0) prefix.pop_back();
  }
}

// Residuals of the three bracket relations on one basis state, maximized over
// all mode pairs.
Residuals bracket_residuals(const OccupationState& f, std::uint32_t modes, Sector sector) {
  const bool bose = sector == Sector::bose;
  const Bracket kind = bose ? Bracket::commutator : Bracket::anticommutator;
  const StateVector psi = embed(f, sector);
  auto lower = [bose](std::uint32_t k) { return bose ? LadderOp::a(k) : LadderOp::c(k); };
  auto raise = [bose](std::uint32_t k) { return bose ? LadderOp::a_dag(k) : LadderOp::c_dag(k); };
  const StateVector zero(sector);

  Residuals r{};
  for (std::uint32_t i = 1; i <= modes; ++i) {
    for (std::uint32_t j = 1; j <= modes; ++j) {
      const StateVector lo = commutator(OpWord{{lower(i)}}, OpWord{{lower(j)}}, psi, kind);
      const StateVector hi = commutator(OpWord{{raise(i)}}, OpWord{{raise(j)}}, psi, kind);
      const StateVector mixed = commutator(OpWord{{lower(i)}}, OpWord{{raise(j)}}, psi, kind);
      r[0] = std::max(r[0], max_coefficient_difference(lo, zero));
      r[1] = std::max(r[1], max_coefficient_difference(hi, zero));
      r[2] = std::max(r[2], max_coefficient_difference(mixed, i == j ? psi : zero));
    }
  }
  return r;
}

SuiteReport assemble(const std::vector<Residuals>& per_state, std::uint32_t modes,
                     std::array<const char*, 3> names) {
  SuiteReport report;
  report.states = per_state.size();
  for (std::size_t rel = 0; rel < names.size(); ++rel) {
    RelationResult result{names[rel], 0.0, per_state.size() * modes * modes};
    for (const auto& r : per_state) result.max_residual = std::max(result.max_residual, r[rel]);
    report.relations.push_back(result);
  }
  return report;
}

std::vector<Residuals> residuals_parallel(const std::vector<OccupationState>& basis,
                                          std::uint32_t modes, Sector sector) {
  std::vector<Residuals> per_state(basis.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t s = 0; s < static_cast<std::int64_t>(basis.size()); ++s) {
    per_state[s] = bracket_residuals(basis[s], modes, sector);
  }
  return per_state;
}

std::vector<Residuals> residuals_serial(const std::vector<OccupationState>& basis,
                                        std::uint32_t modes, Sector sector) {
  std::vector<Residuals> per_state;
  per_state.reserve(basis.size());
  for (const auto& f : basis) per_state.push_back(bracket_residuals(f, modes, sector));
  return per_state;
}

constexpr std::array<const char*, 3> kCcrNames{"[a_i,a_j]", "[a+_i,a+_j]", "[a_i,a+_j]-delta_ij"};
constexpr std::array<const char*, 3> kCarNames{"{c_i,c_j}", "{c+_i,c+_j}", "{c_i,c+_j}-delta_ij"};

double factorial(std::uint32_t n) {
  double f = 1.0;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

std::vector<OccupationState> occupation_basis(std::uint32_t modes, std::uint32_t max_total) {
  std::vector<OccupationState> out;
  std::vector<ModeCount> prefix;
  enumerate(1, modes, max_total, max_total, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<OccupationState> fermi_basis(std::uint32_t modes) {
  std::vector<OccupationState> out;
  std::vector<ModeCount> prefix;
  enumerate(1, modes, modes, 1, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

double SuiteReport::max_residual() const {
  double worst = 0.0;
  for (const auto& r : relations) worst = std::max(worst, r.max_residual);
  return worst;
}

SuiteReport check_ccr(std::uint32_t modes, std::uint32_t max_total) {
  const auto basis = occupation_basis(modes, max_total);
  return assemble(residuals_parallel(basis, modes, Sector::bose), modes, kCcrNames);
}

SuiteReport check_ccr_serial(std::uint32_t modes, std::uint32_t max_total) {
  const auto basis = occupation_basis(modes, max_total);
  return assemble(residuals_serial(basis, modes, Sector::bose), modes, kCcrNames);
}

SuiteReport check_car(std::uint32_t modes) {
  const auto basis = fermi_basis(modes);
  return assemble(residuals_parallel(basis, modes, Sector::fermi), modes, kCarNames);
}

SuiteReport check_car_serial(std::uint32_t modes) {
  const auto basis = fermi_basis(modes);
  return assemble(residuals_serial(basis, modes, Sector::fermi), modes, kCarNames);
}

SuiteReport check_adjointness(std::uint32_t modes, std::uint32_t max_total) {
  SuiteReport report;
  const auto bose_states = occupation_basis(modes, max_total);
  std::vector<OccupationState> fermi_states;
  for (const auto& f : fermi_basis(modes)) {
    if (f.total() <= max_total) fermi_states.push_back(f);
  }
  report.states = bose_states.size() + fermi_states.size();

  struct Generator {
    const char* name;
    std::function<LadderOp(std::uint32_t)> make;
    Sector sector;
  };
  const std::array<Generator, 4> generators{{
      {"a_k", LadderOp::a, Sector::bose},
      {"a+_k", LadderOp::a_dag, Sector::bose},
      {"c_k", LadderOp::c, Sector::fermi},
      {"c+_k", LadderOp::c_dag, Sector::fermi},
  }};
  for (const auto& gen : generators) {
    const auto& states = gen.sector == Sector::bose ? bose_states : fermi_states;
    RelationResult result{std::string("<O+ f|g> - <f|O g>, O = ") + gen.name, 0.0, 0};
    for (std::uint32_t k = 1; k <= modes; ++k) {
      const LadderOp op = gen.make(k);
      const LadderOp op_dag = adjoint(op);
      for (const auto& f : states) {
        const StateVector odag_f = apply(op_dag, embed(f, gen.sector));
        for (const auto& g : states) {
          const StateVector eg = embed(g, gen.sector);
          const Complex lhs = fock_inner_product(odag_f, eg);
          const Complex rhs = fock_inner_product(embed(f, gen.sector), apply(op, eg));
          result.max_residual = std::max(result.max_residual, std::abs(lhs - rhs));
          ++result.evaluations;
        }
      }
    }
    report.relations.push_back(result);
  }
  return report;
}

bool OracleReport::passed(double tolerance) const {
  for (const auto& e : entries) {
    const double limit = e.sector == Sector::fermi ? 0.0 : tolerance * e.expected_constant;
    if (e.max_residual > limit) return false;
    if (e.nonzero_pairs == 0) continue;
    const double spread = tolerance * e.expected_constant;
    if (std::abs(e.ratio_min - e.expected_constant) > spread) return false;
    if (std::abs(e.ratio_max - e.expected_constant) > spread) return false;
  }
  return true;
}

OracleReport compare_with_oracle(std::uint32_t modes, std::uint32_t max_total) {
  OracleReport report;
  const auto basis = occupation_basis(modes, max_total);
  for (Sector sector : {Sector::full, Sector::bose, Sector::fermi}) {
    for (std::uint32_t n = 0; n <= max_total; ++n) {
      NormalizationEntry entry;
      entry.sector = sector;
      entry.particles = n;
      entry.expected_constant = sector == Sector::full ? 1.0 : factorial(n);
      bool seen = false;
      for (const auto& f : basis) {
        if (f.total() != n) continue;
        for (const auto& g : basis) {
          if (g.total() != n) continue;
          const Complex algebra = algebra_inner_product(f, g, sector);
          const Complex labeled = oracle::oracle_inner_product(f, g, sector, modes);
          ++entry.pairs;
          entry.max_residual =
              std::max(entry.max_residual, std::abs(algebra - entry.expected_constant * labeled));
          if (labeled == Complex{}) continue;
          ++entry.nonzero_pairs;
          const double ratio = (algebra / labeled).real();
          entry.ratio_min = seen ? std::min(entry.ratio_min, ratio) : ratio;
          entry.ratio_max = seen ? std::max(entry.ratio_max, ratio) : ratio;
          seen = true;
        }
      }
      report.entries.push_back(entry);
    }
  }
  return report;
}

}  // namespace qspace::checks
