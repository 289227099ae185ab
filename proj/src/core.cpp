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

#include "qspace/core.hpp"

#include <algorithm>
#include <string>

namespace qspace {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::invalid_mode: return "InvalidMode";
    case ErrorKind::duplicate_mode: return "DuplicateMode";
    case ErrorKind::zero_count: return "ZeroCount";
    case ErrorKind::sector_mismatch: return "SectorMismatch";
    case ErrorKind::zero_state: return "ZeroState";
    case ErrorKind::cutoff_exceeded: return "CutoffExceeded";
    case ErrorKind::shape_error: return "ShapeError";
    case ErrorKind::bounds_exceeded: return "BoundsExceeded";
    case ErrorKind::absent_kind: return "AbsentKind";
    case ErrorKind::invalid_basis: return "InvalidBasis";
    case ErrorKind::no_basis_loaded: return "NoBasisLoaded";
    case ErrorKind::parse_error: return "ParseError";
    case ErrorKind::sector_mixing: return "SectorMixing";
    case ErrorKind::type_error: return "TypeError";
    case ErrorKind::io_error: return "IoError";
  }
  return "Unknown";
}

std::string_view to_string(Sector sector) noexcept {
  switch (sector) {
    case Sector::full: return "Full";
    case Sector::bose: return "Bose";
    case Sector::fermi: return "Fermi";
  }
  return "Full";
}

char sector_letter(Sector sector) noexcept {
  switch (sector) {
    case Sector::full: return 'U';
    case Sector::bose: return 'B';
    case Sector::fermi: return 'F';
  }
  return 'U';
}

std::uint32_t OccupationState::count(ModeIndex k) const noexcept {
  auto it = std::lower_bound(entries_.begin(), entries_.end(), k,
                             [](const Entry& e, ModeIndex m) { return e.first < m; });
  return (it != entries_.end() && it->first == k) ? it->second : 0;
}

std::vector<ModeIndex> OccupationState::support() const {
  std::vector<ModeIndex> out;
  out.reserve(entries_.size());
  for (const auto& [mode, n] : entries_) out.push_back(mode);
  return out;
}

std::uint64_t OccupationState::total() const noexcept {
  std::uint64_t sum = 0;
  for (const auto& e : entries_) sum += e.second;
  return sum;
}

std::uint32_t OccupationState::max_count() const noexcept {
  std::uint32_t m = 0;
  for (const auto& e : entries_) m = std::max(m, e.second);
  return m;
}

std::optional<ModeIndex> OccupationState::highest_mode() const noexcept {
  if (entries_.empty()) return std::nullopt;
  return entries_.back().first;
}

OccupationState OccupationState::with_count(ModeIndex k, std::uint32_t n) const {
  OccupationState out = *this;
  auto& v = out.entries_;
  auto it = std::lower_bound(v.begin(), v.end(), k,
                             [](const Entry& e, ModeIndex m) { return e.first < m; });
  const bool present = it != v.end() && it->first == k;
  if (n == 0) {
    if (present) v.erase(it);
  } else if (present) {
    it->second = n;
  } else {
    v.insert(it, Entry{k, n});
  }
  return out;
}

OccupationState make_occupation(const std::vector<ModeCount>& pairs) {
  OccupationState f;
  f.entries_.reserve(pairs.size());
  for (const auto& [mode, count] : pairs) {
    if (count == 0) {
      throw Error(ErrorKind::zero_count,
                  "zero occupation for mode " + std::to_string(mode) + " (omit the mode instead)");
    }
    f.entries_.emplace_back(ModeIndex(mode), count);
  }
  std::sort(f.entries_.begin(), f.entries_.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  auto dup = std::adjacent_find(f.entries_.begin(), f.entries_.end(),
                                [](const auto& a, const auto& b) { return a.first == b.first; });
  if (dup != f.entries_.end()) {
    throw Error(ErrorKind::duplicate_mode,
                "mode " + std::to_string(dup->first.value()) + " listed twice");
  }
  return f;
}

Complex StateVector::amplitude(const OccupationState& f) const {
  auto it = terms_.find(f);
  return it == terms_.end() ? Complex{} : it->second;
}

void StateVector::accumulate(const OccupationState& f, Complex amp) {
  if (sector_ == Sector::fermi && !f.fermi_admissible()) return;
  if (amp == Complex{}) return;
  auto [it, inserted] = terms_.try_emplace(f, amp);
  if (!inserted) {
    it->second += amp;
    if (it->second == Complex{}) terms_.erase(it);
  }
}

StateVector StateVector::pruned(double eps) const {
  StateVector out(sector_);
  for (const auto& [f, amp] : terms_) {
    if (std::abs(amp) >= eps) out.terms_.emplace_hint(out.terms_.end(), f, amp);
  }
  return out;
}

StateVector& StateVector::operator+=(const StateVector& other) {
  require_same_sector(*this, other);
  for (const auto& [f, amp] : other.terms_) accumulate(f, amp);
  return *this;
}

StateVector& StateVector::operator-=(const StateVector& other) {
  require_same_sector(*this, other);
  for (const auto& [f, amp] : other.terms_) accumulate(f, -amp);
  return *this;
}

StateVector& StateVector::operator*=(Complex alpha) {
  if (alpha == Complex{}) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= alpha;
    // underflow can still produce an exact zero
    it = it->second == Complex{} ? terms_.erase(it) : std::next(it);
  }
  return *this;
}

StateVector embed(const OccupationState& f, Sector sector) {
  StateVector psi(sector);
  psi.accumulate(f, 1.0);
  return psi;
}

StateVector add(const StateVector& psi, const StateVector& phi) { return psi + phi; }

StateVector scale(Complex alpha, const StateVector& psi) { return alpha * psi; }

StateVector operator+(StateVector lhs, const StateVector& rhs) {
  lhs += rhs;
  return lhs;
}

StateVector operator-(StateVector lhs, const StateVector& rhs) {
  lhs -= rhs;
  return lhs;
}

StateVector operator*(Complex alpha, StateVector psi) {
  psi *= alpha;
  return psi;
}

double max_coefficient_difference(const StateVector& psi, const StateVector& phi) {
  double worst = 0.0;
  for (const auto& [f, amp] : psi.terms()) worst = std::max(worst, std::abs(amp - phi.amplitude(f)));
  for (const auto& [f, amp] : phi.terms()) {
    if (!psi.terms().contains(f)) worst = std::max(worst, std::abs(amp));
  }
  return worst;
}

void require_same_sector(const StateVector& psi, const StateVector& phi) {
  if (psi.sector() != phi.sector()) {
    throw Error(ErrorKind::sector_mismatch, std::string("cannot combine ") +
                                                std::string(to_string(psi.sector())) + " and " +
                                                std::string(to_string(phi.sector())) + " vectors");
  }
}

}  // namespace qspace
