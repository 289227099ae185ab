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

#include "qspace/qset.hpp"

#include <random>

namespace qspace::qset {

QSet::QSet(const Counts& counts) {
  for (const auto& [kind, n] : counts) {
    if (n != 0) counts_.emplace(kind, n);
  }
}

std::uint64_t QSet::count(const AtomKind& kind) const {
  auto it = counts_.find(kind);
  return it == counts_.end() ? 0 : it->second;
}

QSet& QSet::insert(const AtomKind& kind, std::uint64_t n) {
  if (n != 0) counts_[kind] += n;
  return *this;
}

QSet& QSet::remove(const AtomKind& kind, std::uint64_t n) {
  if (n == 0) return *this;
  auto it = counts_.find(kind);
  if (it == counts_.end() || it->second < n) {
    throw Error(ErrorKind::absent_kind, "quasi-set holds fewer than " + std::to_string(n) +
                                            " atoms of kind '" + kind.label + "'");
  }
  it->second -= n;
  if (it->second == 0) counts_.erase(it);
  return *this;
}

bool indistinguishable(const QSet& x, const QSet& y) { return x.counts() == y.counts(); }

QSet strong_singleton(const AtomKind& kind) {
  QSet s;
  s.insert(kind);
  return s;
}

QSet replace(const QSet& x, const AtomKind& z, const AtomKind& w) {
  QSet out = x;
  out.remove(z);
  out.insert(w);
  return out;
}

std::uint64_t qcard(const QSet& x) {
  std::uint64_t n = 0;
  for (const auto& [kind, count] : x.counts()) n += count;
  return n;
}

QSet join(const QSet& x, const QSet& y) {
  QSet out = x;
  for (const auto& [kind, count] : y.counts()) out.insert(kind, count);
  return out;
}

QSet fiber(const OccupationState& f, ModeIndex k, const AtomKind& kind) {
  QSet out;
  out.insert(kind, f.count(k));
  return out;
}

namespace {

const std::vector<AtomKind>& demo_kinds() {
  static const std::vector<AtomKind> kinds{{"e"}, {"p"}, {"n"}};
  return kinds;
}

void mix(std::uint64_t& hash, std::uint64_t value) {
  constexpr std::uint64_t kPrime = 1099511628211ULL;
  for (int byte = 0; byte < 8; ++byte) {
    hash ^= (value >> (8 * byte)) & 0xffU;
    hash *= kPrime;
  }
}

void fingerprint(std::uint64_t& hash, const QSet& x) {
  for (const auto& [kind, n] : x.counts()) {
    for (char ch : kind.label) mix(hash, static_cast<unsigned char>(ch));
    mix(hash, n);
  }
  mix(hash, ~0ULL);
}

void tally(PropertyReport& r, std::uint64_t& counter, bool holds) {
  ++counter;
  if (!holds) ++r.failures;
}

void check_pair(PropertyReport& r, const QSet& x, const QSet& y) {
  tally(r, r.symmetric, indistinguishable(x, y) == indistinguishable(y, x));
}

void check_triple(PropertyReport& r, const QSet& x, const QSet& y, const QSet& z) {
  if (indistinguishable(x, y) && indistinguishable(y, z)) tally(r, r.transitive, indistinguishable(x, z));
}

void check_single(PropertyReport& r, const QSet& x, const std::vector<AtomKind>& kinds) {
  tally(r, r.reflexive, indistinguishable(x, x));
  for (const auto& [z, n] : x.counts()) {
    const QSet swapped = replace(x, z, z);
    tally(r, r.permutation_invariant, indistinguishable(swapped, x));
    for (const auto& w : kinds) {
      if (w == z) continue;
      const QSet moved = replace(x, z, w);
      tally(r, r.cross_kind_distinct, !indistinguishable(moved, x));
      tally(r, r.qcard_preserved, qcard(moved) == qcard(x));
    }
  }
}

QSet random_qset(std::mt19937_64& rng) {
  QSet x;
  for (const auto& kind : demo_kinds()) x.insert(kind, rng() % 4);
  return x;
}

void enumerate(const std::vector<AtomKind>& kinds, std::size_t next, std::uint32_t budget, QSet& current,
               std::vector<QSet>& out) {
  if (next == kinds.size()) {
    out.push_back(current);
    return;
  }
  for (std::uint32_t n = 0; n <= budget; ++n) {
    QSet with = current;
    with.insert(kinds[next], n);
    enumerate(kinds, next + 1, budget - n, with, out);
  }
}

}  // namespace

PropertyReport random_properties(std::uint64_t seed, std::uint64_t cases) {
  PropertyReport r;
  r.fingerprint = 14695981039346656037ULL;
  std::mt19937_64 rng(seed);
  for (std::uint64_t c = 0; c < cases; ++c) {
    const QSet x = random_qset(rng);
    const QSet y = rng() % 2 == 0 ? x : random_qset(rng);
    const QSet z = rng() % 2 == 0 ? y : random_qset(rng);
    for (const QSet* s : {&x, &y, &z}) fingerprint(r.fingerprint, *s);
    ++r.cases;
    check_single(r, x, demo_kinds());
    check_pair(r, x, y);
    check_triple(r, x, y, z);
  }
  return r;
}

PropertyReport exhaustive_properties(std::uint32_t max_qcard, std::uint32_t kinds) {
  std::vector<AtomKind> sorts;
  for (std::uint32_t k = 0; k < kinds; ++k) sorts.push_back({"k" + std::to_string(k + 1)});
  std::vector<QSet> all;
  QSet empty;
  enumerate(sorts, 0, max_qcard, empty, all);

  PropertyReport r;
  r.fingerprint = 14695981039346656037ULL;
  for (const auto& x : all) {
    fingerprint(r.fingerprint, x);
    ++r.cases;
    check_single(r, x, sorts);
    for (const auto& y : all) {
      check_pair(r, x, y);
      // transitivity only has instances along equal pairs
      if (indistinguishable(x, y)) {
        for (const auto& z : all) check_triple(r, x, y, z);
      }
    }
  }
  return r;
}

}  // namespace qspace::qset
