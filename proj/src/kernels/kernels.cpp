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

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "qspace/kernels.hpp"

namespace qspace::kernels {

namespace {

using Complex = std::complex<double>;

void check_shape(const ComplexMatrix& a) {
  if (!a.square()) {
    throw Error(ErrorKind::shape_error, "permanent of a " + std::to_string(a.rows()) + "x" +
                                            std::to_string(a.cols()) + " matrix");
  }
  if (a.rows() > kMaxPermanentOrder) {
    throw Error(ErrorKind::bounds_exceeded,
                "permanent order " + std::to_string(a.rows()) + " exceeds " +
                    std::to_string(kMaxPermanentOrder));
  }
}

// Sum of the signed Ryser terms for subsets gray(first) .. gray(last - 1).
Complex ryser_block(const ComplexMatrix& a, std::uint64_t first, std::uint64_t last) {
  const std::size_t n = a.rows();
  std::vector<Complex> row_sum(n);
  const std::uint64_t start = first ^ (first >> 1);
  for (std::size_t j = 0; j < n; ++j) {
    if ((start >> j) & 1U) {
      for (std::size_t i = 0; i < n; ++i) row_sum[i] += a(i, j);
    }
  }

  Complex sum{};
  for (std::uint64_t k = first; k < last; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    if (k != first) {
      const int j = std::countr_zero(k);
      if ((gray >> j) & 1U) {
        for (std::size_t i = 0; i < n; ++i) row_sum[i] += a(i, j);
      } else {
        for (std::size_t i = 0; i < n; ++i) row_sum[i] -= a(i, j);
      }
    }
    Complex prod = 1.0;
    for (std::size_t i = 0; i < n; ++i) prod *= row_sum[i];
    const bool odd = ((n - std::popcount(gray)) & 1U) != 0;
    sum += odd ? -prod : prod;
  }
  return sum;
}

}  // namespace

Complex permanent(const ComplexMatrix& a) {
  check_shape(a);
  const std::size_t n = a.rows();
  if (n == 0) return 1.0;

  const std::uint64_t subsets = std::uint64_t{1} << n;
  const std::uint64_t blocks = std::min<std::uint64_t>(kRyserBlocks, subsets - 1);
  const std::uint64_t span = (subsets - 1 + blocks - 1) / blocks;
  std::vector<Complex> partial(blocks);

#pragma omp parallel for schedule(static)
  for (std::int64_t b = 0; b < static_cast<std::int64_t>(blocks); ++b) {
    const std::uint64_t first = 1 + static_cast<std::uint64_t>(b) * span;
    const std::uint64_t last = std::min(subsets, first + span);
    if (first < last) partial[b] = ryser_block(a, first, last);
  }

  Complex sum{};
  for (const auto& p : partial) sum += p;
  return sum;
}

Complex permanent_serial(const ComplexMatrix& a) {
  check_shape(a);
  if (a.rows() == 0) return 1.0;
  return ryser_block(a, 1, std::uint64_t{1} << a.rows());
}

Complex determinant(const ComplexMatrix& a) {
  if (!a.square()) {
    throw Error(ErrorKind::shape_error, "determinant of a " + std::to_string(a.rows()) + "x" +
                                            std::to_string(a.cols()) + " matrix");
  }
  const std::size_t n = a.rows();
  ComplexMatrix lu = a;
  Complex det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(pivot, col))) pivot = r;
    }
    if (lu(pivot, col) == Complex{}) return 0.0;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(lu(pivot, c), lu(col, c));
      det = -det;
    }
    det *= lu(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const Complex factor = lu(r, col) / lu(col, col);
      if (factor == Complex{}) continue;
      for (std::size_t c = col; c < n; ++c) lu(r, c) -= factor * lu(col, c);
    }
  }
  return det;
}

}  // namespace qspace::kernels
