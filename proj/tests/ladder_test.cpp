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
#include <random>

#include <gtest/gtest.h>

#include "qspace/algebra.hpp"
#include "qspace/checks.hpp"
#include "support/reference.hpp"

namespace qspace {
namespace {

const OccupationState kSignFixture = make_occupation({{3, 1}, {5, 1}, {7, 1}, {8, 1}});

StateVector bose(std::vector<ModeCount> pairs) { return embed(make_occupation(pairs), Sector::bose); }
StateVector fermi(std::vector<ModeCount> pairs) { return embed(make_occupation(pairs), Sector::fermi); }

TEST(SignRule, WorkedValues) {
  EXPECT_EQ(jw_sign_exponent(kSignFixture, ModeIndex(6)), 2u);
  EXPECT_EQ(jw_sign_exponent(kSignFixture, ModeIndex(1)), 0u);
  EXPECT_EQ(jw_sign_exponent(kSignFixture, ModeIndex(9)), 4u);
}

TEST(BoseLadder, CreateFromVacuumAndOccupied) {
  EXPECT_EQ(apply_boson_create(ModeIndex(1), embed({}, Sector::bose)), bose({{1, 1}}));
  const auto raised = apply_boson_create(ModeIndex(1), bose({{1, 1}}));
  ASSERT_EQ(raised.size(), 1u);
  EXPECT_EQ(raised.amplitude(make_occupation({{1, 2}})), Complex(std::sqrt(2.0)));
}

TEST(BoseLadder, Annihilate) {
  EXPECT_TRUE(apply_boson_annihilate(ModeIndex(1), embed({}, Sector::bose)).is_zero());
  const auto lowered = apply_boson_annihilate(ModeIndex(1), bose({{1, 2}}));
  ASSERT_EQ(lowered.size(), 1u);
  EXPECT_EQ(lowered.amplitude(make_occupation({{1, 1}})), Complex(std::sqrt(2.0)));
  EXPECT_TRUE(apply_boson_annihilate(ModeIndex(2), bose({{1, 2}})).is_zero());
}

TEST(BoseLadder, CreationsCommuteOnRandomVectors) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = reference::random_state(rng, Sector::bose, 4, 3, 6);
    const auto lhs = apply_boson_create(ModeIndex(2), apply_boson_create(ModeIndex(1), psi));
    const auto rhs = apply_boson_create(ModeIndex(1), apply_boson_create(ModeIndex(2), psi));
    EXPECT_LE(max_coefficient_difference(lhs, rhs), 1e-12);
  }
}

TEST(BoseLadder, CommutatorIsIdentityOnBasisStates) {
  const OpWord a1{{LadderOp::a(1)}};
  const OpWord ad1{{LadderOp::a_dag(1)}};
  for (const auto& f : checks::occupation_basis(3, 4)) {
    const auto psi = embed(f, Sector::bose);
    EXPECT_LE(max_coefficient_difference(commutator(a1, ad1, psi, Bracket::commutator), psi), 1e-12);
  }
}

TEST(BoseLadder, RaisesAndLowersTotal) {
  for (const auto& f : checks::occupation_basis(3, 3)) {
    const auto psi = embed(f, Sector::bose);
    const double n = static_cast<double>(f.total());
    for (std::uint32_t k = 1; k <= 3; ++k) {
      const auto up = apply_boson_create(ModeIndex(k), psi);
      ASSERT_EQ(up.size(), 1u);
      EXPECT_EQ(up.terms().begin()->first.total(), f.total() + 1);
      EXPECT_EQ(number_expectation(up, ModeIndex(4)), n + 1.0);
      const auto down = apply_boson_annihilate(ModeIndex(k), psi);
      if (f.count(ModeIndex(k)) == 0) {
        EXPECT_TRUE(down.is_zero());
      } else {
        EXPECT_EQ(down.terms().begin()->first.total(), f.total() - 1);
        EXPECT_EQ(number_expectation(down, ModeIndex(4)), n - 1.0);
      }
    }
  }
}

TEST(FermiLadder, CreateSigns) {
  const auto psi = embed(kSignFixture, Sector::fermi);
  const auto six = apply_fermion_create(ModeIndex(6), psi);
  EXPECT_EQ(six, fermi({{3, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}}));
  const auto nine = apply_fermion_create(ModeIndex(9), psi);
  EXPECT_EQ(nine, fermi({{3, 1}, {5, 1}, {7, 1}, {8, 1}, {9, 1}}));
  const auto four = apply_fermion_create(ModeIndex(4), psi);
  EXPECT_EQ(four, Complex(-1.0) * fermi({{3, 1}, {4, 1}, {5, 1}, {7, 1}, {8, 1}}));
}

TEST(FermiLadder, AnnihilateSigns) {
  const auto psi = fermi({{3, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}});
  EXPECT_EQ(apply_fermion_annihilate(ModeIndex(6), psi), embed(kSignFixture, Sector::fermi));
  EXPECT_EQ(apply_fermion_annihilate(ModeIndex(5), psi), Complex(-1.0) * fermi({{3, 1}, {6, 1}, {7, 1}, {8, 1}}));
  for (std::uint32_t k = 1; k <= 6; ++k) {
    EXPECT_TRUE(apply_fermion_annihilate(ModeIndex(k), embed({}, Sector::fermi)).is_zero());
  }
}

TEST(FermiLadder, PauliExclusion) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const auto psi = reference::random_state(rng, Sector::fermi, 5, 5, 8);
    for (std::uint32_t k = 1; k <= 5; ++k) {
      EXPECT_TRUE(apply_fermion_create(ModeIndex(k), apply_fermion_create(ModeIndex(k), psi)).is_zero());
    }
  }
  EXPECT_TRUE(apply_fermion_create(ModeIndex(5), embed(kSignFixture, Sector::fermi)).is_zero());
}

TEST(FermiLadder, Anticommutators) {
  for (const auto& f : checks::fermi_basis(5)) {
    const auto psi = embed(f, Sector::fermi);
    for (std::uint32_t i = 1; i <= 5; ++i) {
      for (std::uint32_t j = 1; j <= 5; ++j) {
        const auto cc = commutator(OpWord{{LadderOp::c_dag(i)}}, OpWord{{LadderOp::c_dag(j)}}, psi,
                                   Bracket::anticommutator);
        EXPECT_TRUE(cc.is_zero());
        const auto mixed = commutator(OpWord{{LadderOp::c(i)}}, OpWord{{LadderOp::c_dag(j)}}, psi,
                                      Bracket::anticommutator);
        EXPECT_EQ(mixed, i == j ? psi : StateVector(Sector::fermi));
      }
    }
  }
}

TEST(Ladder, SectorMismatch) {
  try {
    apply(LadderOp::a_dag(1), embed({}, Sector::fermi));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::sector_mismatch);
  }
  EXPECT_THROW(apply(LadderOp::c(1), embed({}, Sector::bose)), Error);
  EXPECT_THROW(apply(LadderOp::a(1), embed({}, Sector::full)), Error);
}

TEST(OpAlgebra, WordsApplyRightToLeft) {
  const OpWord word{{LadderOp::a(1), LadderOp::a_dag(2)}, 2.0};
  const auto psi = bose({{1, 1}});
  const auto direct = 2.0 * apply_boson_annihilate(ModeIndex(1), apply_boson_create(ModeIndex(2), psi));
  EXPECT_EQ(apply(word, psi), direct);
}

TEST(OpAlgebra, AdjointReversesAndConjugates) {
  const OpWord word{{LadderOp::a(1), LadderOp::a_dag(2)}, Complex(0, 1)};
  const OpSum adj = adjoint(OpSum::of(word));
  ASSERT_EQ(adj.words.size(), 1u);
  EXPECT_EQ(adj.words[0].scalar, Complex(0, -1));
  ASSERT_EQ(adj.words[0].factors.size(), 2u);
  EXPECT_EQ(adj.words[0].factors[0], LadderOp::a(2));
  EXPECT_EQ(adj.words[0].factors[1], LadderOp::a_dag(1));
}

TEST(OpAlgebra, BracketOperatorMatchesStateCommutator) {
  const OpSum a = OpSum::of(OpWord{{LadderOp::a(2)}}) + Complex(0.5) * OpSum::of(OpWord{{LadderOp::a_dag(1)}});
  const OpSum b = OpSum::of(OpWord{{LadderOp::a_dag(2)}});
  const OpSum br = bracket(a, b, Bracket::commutator);
  for (const auto& f : checks::occupation_basis(3, 3)) {
    const auto psi = embed(f, Sector::bose);
    EXPECT_LE(max_coefficient_difference(apply(br, psi), commutator(a, b, psi, Bracket::commutator)), 1e-12);
    EXPECT_LE(max_coefficient_difference(apply(br, psi), psi), 1e-12);
  }
}

TEST(OpAlgebra, Composition) {
  const OpSum x = OpSum::of(OpWord{{LadderOp::a_dag(1)}});
  const OpSum y = OpSum::of(OpWord{{LadderOp::a_dag(2)}});
  const auto vac = embed({}, Sector::bose);
  EXPECT_EQ(apply(x * y, vac), apply(x, apply(y, vac)));
  EXPECT_EQ(apply(OpSum::identity(), vac), vac);
}

TEST(NumberOperator, BasisStatesAndSuperpositions) {
  EXPECT_EQ(number_expectation(embed(make_occupation({{2, 3}, {3, 1}, {5, 4}}), Sector::bose), ModeIndex(5)), 8.0);
  EXPECT_EQ(number_expectation(embed({}, Sector::bose), ModeIndex(3)), 0.0);
  StateVector mix(Sector::bose);
  mix.accumulate(make_occupation({{1, 1}}), 1.0 / std::sqrt(2.0));
  mix.accumulate(make_occupation({{1, 1}, {2, 1}}), 1.0 / std::sqrt(2.0));
  EXPECT_NEAR(number_expectation(mix, ModeIndex(2)), 1.5, 1e-12);
}

TEST(NumberOperator, AgreesWithLadderProducts) {
  std::mt19937_64 rng(3);
  for (Sector s : {Sector::bose, Sector::fermi}) {
    for (int trial = 0; trial < 100; ++trial) {
      const auto psi = reference::random_state(rng, s, 4, 4, 5);
      StateVector n_psi(s);
      for (std::uint32_t k = 1; k <= 4; ++k) {
        const OpWord number{s == Sector::bose ? std::vector{LadderOp::a_dag(k), LadderOp::a(k)}
                                              : std::vector{LadderOp::c_dag(k), LadderOp::c(k)}};
        n_psi += apply(number, psi);
      }
      const double via_ladder = fock_inner_product(psi, n_psi).real() / fock_inner_product(psi, psi).real();
      EXPECT_NEAR(number_expectation(psi, ModeIndex(4)), via_ladder, 1e-12);
    }
  }
}

TEST(NumberOperator, ExactOnBasisStates) {
  for (const auto& f : checks::occupation_basis(4, 8)) {
    EXPECT_EQ(number_expectation(embed(f, Sector::bose), ModeIndex(4)), static_cast<double>(f.total()));
  }
}

TEST(NumberOperator, Errors) {
  try {
    number_expectation(StateVector(Sector::bose), ModeIndex(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::zero_state);
  }
  try {
    number_expectation(bose({{3, 1}}), ModeIndex(2));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::cutoff_exceeded);
  }
}

TEST(Adjointness, ExhaustiveSmallBlock) {
  const auto report = checks::check_adjointness(4, 3);
  EXPECT_EQ(report.relations.size(), 4u);
  EXPECT_LE(report.max_residual(), 1e-12);
}

}  // namespace
}  // namespace qspace
