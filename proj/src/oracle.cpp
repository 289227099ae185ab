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

#include "qspace/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace qspace::oracle {

namespace {

std::uint64_t factorial(std::uint32_t n) {
  std::uint64_t f = 1;
  for (std::uint32_t i = 2; i <= n; ++i) f *= i;
  return f;
}

int permutation_sign(const std::vector<std::uint32_t>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b] ? 1 : 0;
  }
  return inversions % 2 == 0 ? 1 : -1;
}

Parity parity_of(Sector sector) {
  return sector == Sector::fermi ? Parity::antisymmetric : Parity::symmetric;
}

}  // namespace

LabeledVector::LabeledVector(std::uint32_t particles, std::uint32_t modes)
    : n_(particles), m_(modes) {
  if (particles > kMaxParticles || modes > kMaxModes || modes == 0) {
    throw Error(ErrorKind::bounds_exceeded,
                "labeled oracle supports n <= " + std::to_string(kMaxParticles) + ", 1 <= M <= " +
                    std::to_string(kMaxModes));
  }
  std::size_t len = 1;
  for (std::uint32_t s = 0; s < n_; ++s) len *= m_;
  amps_.assign(len, Complex{});
}

std::size_t LabeledVector::index_of(std::span<const std::uint32_t> labels) const {
  std::size_t index = 0;
  for (auto label : labels) index = index * m_ + (label - 1);
  return index;
}

std::vector<std::uint32_t> LabeledVector::labels_of(std::size_t index) const {
  std::vector<std::uint32_t> labels(n_);
  for (std::uint32_t s = n_; s-- > 0;) {
    labels[s] = static_cast<std::uint32_t>(index % m_) + 1;
    index /= m_;
  }
  return labels;
}

Complex LabeledVector::amplitude(std::span<const std::uint32_t> labels) const {
  return amplitude_at(index_of(labels));
}

Complex LabeledVector::amplitude_at(std::size_t index) const {
  return amps_[index] / static_cast<double>(denominator_);
}

std::vector<Complex> LabeledVector::dense() const {
  std::vector<Complex> out(amps_.size());
  for (std::size_t i = 0; i < amps_.size(); ++i) out[i] = amplitude_at(i);
  return out;
}

LabeledVector labeled_of(const OccupationState& f, std::uint32_t modes) {
  if (auto top = f.highest_mode(); top && top->value() > modes) {
    throw Error(ErrorKind::cutoff_exceeded, "mode " + std::to_string(top->value()) +
                                                " beyond oracle cutoff " + std::to_string(modes));
  }
  LabeledVector eta(static_cast<std::uint32_t>(f.total()), modes);
  std::vector<std::uint32_t> labels;
  for (const auto& [mode, n] : f.entries()) labels.insert(labels.end(), n, mode.value());
  eta.numerator_at(eta.index_of(labels)) = 1.0;
  return eta;
}

LabeledVector symmetrize(const LabeledVector& eta, Parity parity) {
  const std::uint32_t n = eta.particles();
  LabeledVector out(n, eta.modes());
  std::vector<std::uint32_t> perm(n);
  std::vector<std::uint32_t> permuted(n);
  for (std::size_t i = 0; i < eta.size(); ++i) {
    const Complex amp = eta.numerator_at(i);
    if (amp == Complex{}) continue;
    const auto labels = eta.labels_of(i);
    std::iota(perm.begin(), perm.end(), 0U);
    do {
      // P(eta_1 (x) ... (x) eta_n) = eta_P(1) (x) ... (x) eta_P(n)
      for (std::uint32_t s = 0; s < n; ++s) permuted[s] = labels[perm[s]];
      const double sign = parity == Parity::antisymmetric ? permutation_sign(perm) : 1;
      out.numerator_at(out.index_of(permuted)) += sign * amp;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  out.set_denominator(eta.denominator() * factorial(n));
  return out;
}

Complex dot(const LabeledVector& lhs, const LabeledVector& rhs) {
  if (lhs.particles() != rhs.particles() || lhs.modes() != rhs.modes()) {
    throw Error(ErrorKind::shape_error, "dot product of labeled vectors in different spaces");
  }
  Complex sum{};
  for (std::size_t i = 0; i < lhs.size(); ++i) sum += std::conj(lhs.numerator_at(i)) * rhs.numerator_at(i);
  return sum / (static_cast<double>(lhs.denominator()) * static_cast<double>(rhs.denominator()));
}

Complex oracle_inner_product(const OccupationState& f, const OccupationState& g, Sector sector,
                             std::uint32_t modes) {
  if (f.total() != g.total()) return 0.0;
  const LabeledVector eta_f = labeled_of(f, modes);
  const LabeledVector eta_g = labeled_of(g, modes);
  if (sector == Sector::full) return dot(eta_f, eta_g);
  const Parity parity = parity_of(sector);
  return dot(symmetrize(eta_f, parity), symmetrize(eta_g, parity));
}

LabeledVector normalized_labeled(const OccupationState& f, Sector sector, std::uint32_t modes) {
  LabeledVector eta = labeled_of(f, modes);
  if (sector == Sector::full) return eta;
  const auto n = static_cast<std::uint32_t>(f.total());
  double weight = static_cast<double>(factorial(n));
  if (sector == Sector::bose) {
    for (const auto& [mode, count] : f.entries()) weight /= static_cast<double>(factorial(count));
  }
  LabeledVector out = symmetrize(eta, parity_of(sector));
  const double scale = std::sqrt(weight);
  for (std::size_t i = 0; i < out.size(); ++i) out.numerator_at(i) *= scale;
  return out;
}

LabeledVector labeled_create(std::uint32_t mode, const LabeledVector& eta, Parity parity) {
  if (mode == 0 || mode > eta.modes()) {
    throw Error(ErrorKind::cutoff_exceeded, "mode " + std::to_string(mode) + " beyond oracle cutoff");
  }
  LabeledVector raised(eta.particles() + 1, eta.modes());
  const double scale = std::sqrt(static_cast<double>(eta.particles() + 1));
  std::vector<std::uint32_t> labels;
  for (std::size_t i = 0; i < eta.size(); ++i) {
    if (eta.numerator_at(i) == Complex{}) continue;
    labels = eta.labels_of(i);
    labels.insert(labels.begin(), mode);
    raised.numerator_at(raised.index_of(labels)) = scale * eta.numerator_at(i);
  }
  raised.set_denominator(eta.denominator());
  return symmetrize(raised, parity);
}

}  // namespace qspace::oracle
