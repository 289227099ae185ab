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

#include <complex>
#include <cstddef>

#include "qspace/matrix.hpp"

namespace qspace::kernels {

inline constexpr std::size_t kMaxPermanentOrder = 25;

/// Number of Gray-code blocks the parallel Ryser sum is cut into. Fixed, so
/// the reduction order (and therefore every bit of the result) does not depend
/// on the thread count.
inline constexpr std::size_t kRyserBlocks = 64;

/// Ryser permanent, Gray-code blocks evaluated in parallel with OpenMP and
/// reduced in block order.
std::complex<double> permanent(const ComplexMatrix& a);

/// Single-pass Gray-code Ryser. Reference for the parallel kernel.
std::complex<double> permanent_serial(const ComplexMatrix& a);

/// LU with partial pivoting.
std::complex<double> determinant(const ComplexMatrix& a);

}  // namespace qspace::kernels

namespace qspace {

using kernels::determinant;
using kernels::permanent;

}  // namespace qspace
