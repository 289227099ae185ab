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

#include "qspace/checks.hpp"

#include <gtest/gtest.h>

namespace qspace::checks {
namespace {

TEST(Bases, Sizes) {
  // C(modes + max_total, max_total)
  EXPECT_EQ(occupation_basis(5, 4).size(), 126u);
  EXPECT_EQ(occupation_basis(4, 3).size(), 35u);
  EXPECT_EQ(occupation_basis(3, 0).size(), 1u);
  EXPECT_EQ(fermi_basis(6).size(), 64u);
  for (const auto& f : fermi_basis(4)) EXPECT_TRUE(f.fermi_admissible());
}

TEST(Bases, CanonicalOrderWithoutDuplicates) {
  const auto basis = occupation_basis(4, 3);
  for (std::size_t i = 1; i < basis.size(); ++i) EXPECT_LT(basis[i - 1], basis[i]);
}

TEST(Suites, ParallelMatchesSerial) {
  const auto ccr = check_ccr(4, 3);
  const auto ccr_serial = check_ccr_serial(4, 3);
  ASSERT_EQ(ccr.relations.size(), ccr_serial.relations.size());
  for (std::size_t i = 0; i < ccr.relations.size(); ++i) {
    EXPECT_EQ(ccr.relations[i].name, ccr_serial.relations[i].name);
    EXPECT_EQ(ccr.relations[i].max_residual, ccr_serial.relations[i].max_residual);
    EXPECT_EQ(ccr.relations[i].evaluations, ccr_serial.relations[i].evaluations);
  }
  const auto car = check_car(5);
  const auto car_serial = check_car_serial(5);
  EXPECT_EQ(car.max_residual(), car_serial.max_residual());
  EXPECT_EQ(car.states, car_serial.states);
}

TEST(Suites, CcrAndCar) {
  const auto ccr = check_ccr(5, 4);
  EXPECT_EQ(ccr.states, 126u);
  EXPECT_EQ(ccr.relations.size(), 3u);
  EXPECT_TRUE(ccr.passed(1e-12));
  const auto car = check_car(6);
  EXPECT_EQ(car.states, 64u);
  EXPECT_EQ(car.max_residual(), 0.0);
}

}  // namespace
}  // namespace qspace::checks
