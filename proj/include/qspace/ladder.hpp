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
#include <vector>

#include "qspace/core.hpp"

namespace qspace {

enum class LadderKind { bose_create, bose_annihilate, fermi_create, fermi_annihilate };

struct LadderOp {
  LadderKind kind;
  ModeIndex mode;

  static LadderOp a_dag(std::uint32_t k) { return {LadderKind::bose_create, ModeIndex(k)}; }
  static LadderOp a(std::uint32_t k) { return {LadderKind::bose_annihilate, ModeIndex(k)}; }
  static LadderOp c_dag(std::uint32_t k) { return {LadderKind::fermi_create, ModeIndex(k)}; }
  static LadderOp c(std::uint32_t k) { return {LadderKind::fermi_annihilate, ModeIndex(k)}; }

  friend bool operator==(const LadderOp&, const LadderOp&) = default;
};

Sector sector_of(LadderKind kind) noexcept;
LadderOp adjoint(const LadderOp& op) noexcept;

/// scalar * factors[0] * factors[1] * ... ; the last factor acts first.
struct OpWord {
  std::vector<LadderOp> factors;
  Complex scalar = 1.0;
};

/// Finite sum of words. Field operators and brackets of words live here.
struct OpSum {
  std::vector<OpWord> words;

  static OpSum of(OpWord w) { return OpSum{{std::move(w)}}; }
  static OpSum identity() { return of(OpWord{}); }
};

OpSum operator*(const OpSum& lhs, const OpSum& rhs);
OpSum operator+(OpSum lhs, const OpSum& rhs);
OpSum operator*(Complex alpha, OpSum op);
OpSum adjoint(const OpSum& op);

/// Number of occupied modes strictly below k. This is the exponent s_{f,k}
/// of the fermionic sign: the number of transpositions needed to move
/// epsilon_k from the front into its ordered position.
std::uint32_t jw_sign_exponent(const OccupationState& f, ModeIndex k) noexcept;

StateVector apply_boson_create(ModeIndex k, const StateVector& psi);
StateVector apply_boson_annihilate(ModeIndex k, const StateVector& psi);
StateVector apply_fermion_create(ModeIndex k, const StateVector& psi);
StateVector apply_fermion_annihilate(ModeIndex k, const StateVector& psi);

StateVector apply(const LadderOp& op, const StateVector& psi);
StateVector apply(const OpWord& word, const StateVector& psi);
StateVector apply(const OpSum& op, const StateVector& psi);

enum class Bracket { commutator, anticommutator };

/// (AB - BA) psi for the commutator, (AB + BA) psi for the anticommutator.
StateVector commutator(const OpWord& a, const OpWord& b, const StateVector& psi, Bracket bracket);
StateVector commutator(const OpSum& a, const OpSum& b, const StateVector& psi, Bracket bracket);
OpSum bracket(const OpSum& a, const OpSum& b, Bracket kind);

/// <psi| sum_{k<=cutoff} n_k |psi> / <psi|psi>, with n_k = a+_k a_k or c+_k c_k.
double number_expectation(const StateVector& psi, ModeIndex cutoff);

}  // namespace qspace
