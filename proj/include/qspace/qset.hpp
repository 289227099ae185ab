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
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qspace/core.hpp"

namespace qspace::qset {

/// A sort of m-atom. Kinds are classical objects and compare by label.
struct AtomKind {
  std::string label;

  auto operator<=>(const AtomKind&) const = default;
};

/// Finite quasi-set: how many atoms of each kind, and nothing else. There is
/// no element handle in the model, so "which atom" cannot be asked.
class QSet {
 public:
  using Counts = std::map<AtomKind, std::uint64_t>;

  QSet() = default;
  /// Zero counts are dropped.
  explicit QSet(const Counts& counts);

  const Counts& counts() const noexcept { return counts_; }
  std::uint64_t count(const AtomKind& kind) const;

  QSet& insert(const AtomKind& kind, std::uint64_t n = 1);
  /// Throws absent_kind if fewer than n atoms of `kind` are present.
  QSet& remove(const AtomKind& kind, std::uint64_t n = 1);

  friend bool operator==(const QSet&, const QSet&) = default;

 private:
  Counts counts_;
};

/// Weak extensionality: same quantity of each sort.
bool indistinguishable(const QSet& x, const QSet& y);

/// [[z]]: quasi-cardinal 1, one atom of z's kind.
QSet strong_singleton(const AtomKind& kind);

/// (x - [[z]]) u [[w]]. Throws absent_kind when x holds no atom of kind z.
QSet replace(const QSet& x, const AtomKind& z, const AtomKind& w);

std::uint64_t qcard(const QSet& x);

/// Disjoint union (quasi-cardinals add).
QSet join(const QSet& x, const QSet& y);

/// The pure quasi-set f(epsilon_k): count(k) atoms of one kind.
QSet fiber(const OccupationState& f, ModeIndex k, const AtomKind& kind);

/// Tallies from a property run. A counter names how many instances of that
/// property were checked; `failures` how many of them did not hold.
struct PropertyReport {
  std::uint64_t cases = 0;
  std::uint64_t reflexive = 0;
  std::uint64_t symmetric = 0;
  std::uint64_t transitive = 0;  // triples with x = y and y = z
  std::uint64_t permutation_invariant = 0;
  std::uint64_t cross_kind_distinct = 0;
  std::uint64_t qcard_preserved = 0;
  std::uint64_t failures = 0;
  std::uint64_t fingerprint = 0;  // FNV-1a over the generated cases

  bool passed() const noexcept { return failures == 0; }
};

/// Seeded cases over kinds e, p, n with up to 3 atoms per kind. y and z are
/// copies of the previous set half the time so transitivity is exercised.
PropertyReport random_properties(std::uint64_t seed, std::uint64_t cases);

/// Every quasi-set with qcard <= max_qcard over `kinds` sorts, all pairs and
/// triples for the relation laws.
PropertyReport exhaustive_properties(std::uint32_t max_qcard, std::uint32_t kinds);

}  // namespace qspace::qset
