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

#include <compare>
#include <complex>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "qspace/error.hpp"

namespace qspace {

using Complex = std::complex<double>;

/// Index k of the single-particle outcome epsilon_k. One-based; the order on
/// outcomes is the order on k.
class ModeIndex {
 public:
  explicit ModeIndex(std::uint32_t k) : k_(k) {
    if (k == 0) throw Error(ErrorKind::invalid_mode, "mode indices start at 1");
  }

  std::uint32_t value() const noexcept { return k_; }

  auto operator<=>(const ModeIndex&) const = default;

 private:
  std::uint32_t k_;
};

enum class Sector { full, bose, fermi };

std::string_view to_string(Sector sector) noexcept;
/// Single-letter tag used by the ket text form: U, B or F.
char sector_letter(Sector sector) noexcept;

struct ModeCount {
  std::uint32_t mode;
  std::uint32_t count;
};

/// Occupation numbers over a finite support. This is the only data a state
/// carries: there is no particle label anywhere, so two states built from the
/// same (mode, count) multiset in any order are identical objects.
class OccupationState {
 public:
  using Entry = std::pair<ModeIndex, std::uint32_t>;

  /// The vacuum f_0.
  OccupationState() = default;

  std::span<const Entry> entries() const noexcept { return entries_; }
  std::uint32_t count(ModeIndex k) const noexcept;
  std::vector<ModeIndex> support() const;
  std::uint64_t total() const noexcept;
  bool is_vacuum() const noexcept { return entries_.empty(); }
  std::uint32_t max_count() const noexcept;
  /// True iff no mode is occupied more than once.
  bool fermi_admissible() const noexcept { return max_count() <= 1; }
  std::optional<ModeIndex> highest_mode() const noexcept;

  /// Copy with count(k) replaced by n; n == 0 removes k from the support.
  OccupationState with_count(ModeIndex k, std::uint32_t n) const;

  auto operator<=>(const OccupationState&) const = default;

 private:
  friend OccupationState make_occupation(const std::vector<ModeCount>& pairs);

  std::vector<Entry> entries_;  // sorted by mode, counts >= 1
};

/// Throws duplicate_mode for a repeated index and zero_count for count == 0.
OccupationState make_occupation(const std::vector<ModeCount>& pairs);

/// Finite complex linear combination of occupation states in one sector.
/// Stored amplitudes are never exactly zero; in the Fermi sector states with
/// a doubly occupied mode are never stored (they are the null class).
class StateVector {
 public:
  using Terms = std::map<OccupationState, Complex>;

  explicit StateVector(Sector sector) : sector_(sector) {}

  Sector sector() const noexcept { return sector_; }
  const Terms& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  Complex amplitude(const OccupationState& f) const;

  /// Adds amp to the coefficient of f, dropping the term if the result is
  /// exactly zero or if f is outside the sector.
  void accumulate(const OccupationState& f, Complex amp);

  /// Copy without the terms whose magnitude is below eps (eps = 0 keeps all).
  StateVector pruned(double eps) const;

  StateVector& operator+=(const StateVector& other);
  StateVector& operator-=(const StateVector& other);
  StateVector& operator*=(Complex alpha);

  friend bool operator==(const StateVector&, const StateVector&) = default;

 private:
  Sector sector_;
  Terms terms_;
};

StateVector embed(const OccupationState& f, Sector sector);
StateVector add(const StateVector& psi, const StateVector& phi);
StateVector scale(Complex alpha, const StateVector& psi);

StateVector operator+(StateVector lhs, const StateVector& rhs);
StateVector operator-(StateVector lhs, const StateVector& rhs);
StateVector operator*(Complex alpha, StateVector psi);

/// Largest per-coefficient |psi_f - phi_f| over the union of supports.
double max_coefficient_difference(const StateVector& psi, const StateVector& phi);

void require_same_sector(const StateVector& psi, const StateVector& phi);

}  // namespace qspace
