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
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "qspace/basis.hpp"
#include "qspace/core.hpp"
#include "qspace/ladder.hpp"

namespace qspace::cli {

enum class OpSymbol { a_create, a_annihilate, c_create, c_annihilate, psi_create, psi_annihilate };

/// Expression tree. Products apply right to left: in `a+(1) a+(2) |;B>` the
/// ket is acted on by a+(2) first.
struct Expr {
  enum class Kind { ket, scalar, op, product, sum, commutator, anticommutator, inner };

  Kind kind = Kind::scalar;
  OccupationState ket;           // ket
  Sector sector = Sector::full;  // ket
  Complex value;                 // scalar
  OpSymbol symbol = OpSymbol::a_create;
  std::uint32_t index = 0;        // op: mode for a/c, point for psi
  std::vector<Expr> children;     // product factors, sum terms, bracket/inner operands
  std::vector<bool> negated;      // sum: per-term sign

  static Expr make_ket(OccupationState f, Sector s);
  static Expr make_scalar(Complex z);
  static Expr make_op(OpSymbol symbol, std::uint32_t index);
  static Expr make_binary(Kind kind, Expr lhs, Expr rhs);

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Grammar:
///   expr   := sum
///   sum    := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor+            (at most one bare ket literal per term)
///   factor := scalar | ket | op | '(' expr ')' | '[' expr ',' expr ']'
///           | '{' expr ',' expr '}' | '<' bra '|' ket-or-expr '>'
///   ket    := '|' (count '@' mode (',' count '@' mode)*)? ';' ('U'|'B'|'F') '>'
///   op     := ('a'|'c'|'psi') ['+'] '(' int ')'
///   scalar := real | real 'i' | real ('+'|'-') real 'i'
/// Inside '<...>' a bare occupation list "n@k,...;S" may stand for a ket on
/// either side, e.g. <1@1;B|1@1;B>. Throws ParseError with the offset.
Expr parse(std::string_view text);

/// Canonical text; parse(print(e)) == e for every tree parse() produces.
std::string print(const Expr& e);

/// Statistics implied by the kets and ladder symbols, or nullopt when the
/// expression names none. Throws sector_mixing when they disagree.
std::optional<Sector> analyze(const Expr& e);

using Value = std::variant<Complex, StateVector, OpSum>;

/// Throws no_basis_loaded when a field symbol is used without a basis, and
/// type_error for ill-typed combinations (vector times vector, a bare operator
/// result, ...).
Value eval(const Expr& e, const BasisChange* basis = nullptr);

}  // namespace qspace::cli
