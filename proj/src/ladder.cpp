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

#include "qspace/ladder.hpp"

#include <cmath>
#include <string>

#include "qspace/algebra.hpp"

namespace qspace {

namespace {

void require_sector(LadderKind kind, const StateVector& psi) {
  if (sector_of(kind) != psi.sector()) {
    throw Error(ErrorKind::sector_mismatch,
                std::string(to_string(sector_of(kind))) + " ladder operator applied to a " +
                    std::string(to_string(psi.sector())) + " vector");
  }
}

}  // namespace

Sector sector_of(LadderKind kind) noexcept {
  switch (kind) {
    case LadderKind::bose_create:
    case LadderKind::bose_annihilate:
      return Sector::bose;
    case LadderKind::fermi_create:
    case LadderKind::fermi_annihilate:
      return Sector::fermi;
  }
  return Sector::bose;
}

LadderOp adjoint(const LadderOp& op) noexcept {
  switch (op.kind) {
    case LadderKind::bose_create: return {LadderKind::bose_annihilate, op.mode};
    case LadderKind::bose_annihilate: return {LadderKind::bose_create, op.mode};
    case LadderKind::fermi_create: return {LadderKind::fermi_annihilate, op.mode};
    case LadderKind::fermi_annihilate: return {LadderKind::fermi_create, op.mode};
  }
  return op;
}

OpSum operator*(const OpSum& lhs, const OpSum& rhs) {
  OpSum out;
  out.words.reserve(lhs.words.size() * rhs.words.size());
  for (const auto& l : lhs.words) {
    for (const auto& r : rhs.words) {
      OpWord w;
      w.scalar = l.scalar * r.scalar;
      w.factors = l.factors;
      w.factors.insert(w.factors.end(), r.factors.begin(), r.factors.end());
      out.words.push_back(std::move(w));
    }
  }
  return out;
}

OpSum operator+(OpSum lhs, const OpSum& rhs) {
  lhs.words.insert(lhs.words.end(), rhs.words.begin(), rhs.words.end());
  return lhs;
}

OpSum operator*(Complex alpha, OpSum op) {
  for (auto& w : op.words) w.scalar *= alpha;
  return op;
}

OpSum adjoint(const OpSum& op) {
  OpSum out;
  for (const auto& w : op.words) {
    OpWord a;
    a.scalar = std::conj(w.scalar);
    for (auto it = w.factors.rbegin(); it != w.factors.rend(); ++it) a.factors.push_back(adjoint(*it));
    out.words.push_back(std::move(a));
  }
  return out;
}

std::uint32_t jw_sign_exponent(const OccupationState& f, ModeIndex k) noexcept {
  std::uint32_t s = 0;
  for (const auto& [mode, n] : f.entries()) {
    if (!(mode < k)) break;
    ++s;
  }
  return s;
}

StateVector apply_boson_create(ModeIndex k, const StateVector& psi) {
  require_sector(LadderKind::bose_create, psi);
  StateVector out(Sector::bose);
  for (const auto& [f, amp] : psi.terms()) {
    const std::uint32_t n = f.count(k);
    out.accumulate(f.with_count(k, n + 1), std::sqrt(static_cast<double>(n + 1)) * amp);
  }
  return out;
}

StateVector apply_boson_annihilate(ModeIndex k, const StateVector& psi) {
  require_sector(LadderKind::bose_annihilate, psi);
  StateVector out(Sector::bose);
  for (const auto& [f, amp] : psi.terms()) {
    const std::uint32_t n = f.count(k);
    if (n == 0) continue;
    out.accumulate(f.with_count(k, n - 1), std::sqrt(static_cast<double>(n)) * amp);
  }
  return out;
}

StateVector apply_fermion_create(ModeIndex k, const StateVector& psi) {
  require_sector(LadderKind::fermi_create, psi);
  StateVector out(Sector::fermi);
  for (const auto& [f, amp] : psi.terms()) {
    if (f.count(k) != 0) continue;  // Pauli: the doubly occupied result is the null class
    const bool odd = (jw_sign_exponent(f, k) & 1U) != 0;
    out.accumulate(f.with_count(k, 1), odd ? -amp : amp);
  }
  return out;
}

StateVector apply_fermion_annihilate(ModeIndex k, const StateVector& psi) {
  require_sector(LadderKind::fermi_annihilate, psi);
  StateVector out(Sector::fermi);
  for (const auto& [f, amp] : psi.terms()) {
    if (f.count(k) == 0) continue;
    OccupationState removed = f.with_count(k, 0);
    const bool odd = (jw_sign_exponent(removed, k) & 1U) != 0;
    out.accumulate(removed, odd ? -amp : amp);
  }
  return out;
}

StateVector apply(const LadderOp& op, const StateVector& psi) {
  switch (op.kind) {
    case LadderKind::bose_create: return apply_boson_create(op.mode, psi);
    case LadderKind::bose_annihilate: return apply_boson_annihilate(op.mode, psi);
    case LadderKind::fermi_create: return apply_fermion_create(op.mode, psi);
    case LadderKind::fermi_annihilate: return apply_fermion_annihilate(op.mode, psi);
  }
  return psi;
}

StateVector apply(const OpWord& word, const StateVector& psi) {
  for (const auto& op : word.factors) require_sector(op.kind, psi);
  StateVector out = psi;
  for (auto it = word.factors.rbegin(); it != word.factors.rend() && !out.is_zero(); ++it) {
    out = apply(*it, out);
  }
  out *= word.scalar;
  return out;
}

StateVector apply(const OpSum& op, const StateVector& psi) {
  StateVector out(psi.sector());
  for (const auto& w : op.words) out += apply(w, psi);
  return out;
}

StateVector commutator(const OpWord& a, const OpWord& b, const StateVector& psi, Bracket bracket) {
  return commutator(OpSum::of(a), OpSum::of(b), psi, bracket);
}

StateVector commutator(const OpSum& a, const OpSum& b, const StateVector& psi, Bracket bracket) {
  const StateVector ab = apply(a, apply(b, psi));
  const StateVector ba = apply(b, apply(a, psi));
  return bracket == Bracket::commutator ? ab - ba : ab + ba;
}

OpSum bracket(const OpSum& a, const OpSum& b, Bracket kind) {
  const Complex sign = kind == Bracket::commutator ? -1.0 : 1.0;
  return a * b + sign * (b * a);
}

double number_expectation(const StateVector& psi, ModeIndex cutoff) {
  if (psi.is_zero()) throw Error(ErrorKind::zero_state, "number expectation of the zero vector");
  if (psi.sector() == Sector::full) {
    throw Error(ErrorKind::sector_mismatch, "no ladder operators act on the Full sector");
  }
  for (const auto& [f, amp] : psi.terms()) {
    if (auto top = f.highest_mode(); top && cutoff < *top) {
      throw Error(ErrorKind::cutoff_exceeded, "state occupies mode " + std::to_string(top->value()) +
                                                  " beyond cutoff " + std::to_string(cutoff.value()));
    }
  }
  // a+_k a_k (c+_k c_k) is diagonal with eigenvalue n_k on the occupation
  // basis; using the count keeps basis-state results exact, where the
  // product sqrt(n) * sqrt(n) would round.
  double weighted = 0.0;
  double weight = 0.0;
  for (const auto& [f, amp] : psi.terms()) {
    const double p = std::norm(amp);
    weighted += p * static_cast<double>(f.total());
    weight += p;
  }
  return weighted / weight;
}

}  // namespace qspace
