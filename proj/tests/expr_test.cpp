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

#include "qspace/cli/expr.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "qspace/text.hpp"
#include "support/corpus.hpp"

namespace qspace::cli {
namespace {

TEST(ExprParse, Shapes) {
  const Expr e = parse("a+(1)|;B>");
  ASSERT_EQ(e.kind, Expr::Kind::product);
  ASSERT_EQ(e.children.size(), 2u);
  EXPECT_EQ(e.children[0], Expr::make_op(OpSymbol::a_create, 1));
  EXPECT_EQ(e.children[1], Expr::make_ket(OccupationState{}, Sector::bose));

  const Expr c = parse("[a(1),a+(1)]|1@2;B>");
  ASSERT_EQ(c.kind, Expr::Kind::product);
  EXPECT_EQ(c.children[0].kind, Expr::Kind::commutator);

  EXPECT_EQ(parse("3+4i").value, Complex(3, 4));
  EXPECT_EQ(parse("2i").value, Complex(0, 2));
  EXPECT_EQ(parse("1.5").value, Complex(1.5, 0));
  EXPECT_EQ(parse("  a+ ( 1 ) | ; B > "), parse("a+(1)|;B>"));
}

TEST(ExprParse, SumSigns) {
  const Expr s = parse("|1@1;B> - |1@2;B>");
  ASSERT_EQ(s.kind, Expr::Kind::sum);
  EXPECT_EQ(s.negated, (std::vector<bool>{false, true}));
}

TEST(ExprParse, CorpusRoundTrips) {
  ASSERT_GE(std::size(reference::kExpressionCorpus), 30u);
  for (const char* text : reference::kExpressionCorpus) {
    SCOPED_TRACE(text);
    const Expr e = parse(text);
    const std::string printed = print(e);
    EXPECT_EQ(parse(printed), e) << printed;
    EXPECT_EQ(print(parse(printed)), printed);
  }
}

TEST(ExprParse, SyntaxErrorsCarryOffsets) {
  const std::pair<const char*, std::size_t> cases[] = {
      {"a+(1", 4}, {"b(1)", 0}, {"a+(0)|;B>", 3}, {"|1@1;B", 6}, {"", 0}, {"[a(1) a+(1)]", 11}, {"|;B> )", 5}, {"|;B> |;B>", 5},
  };
  for (const auto& [text, offset] : cases) {
    try {
      parse(text);
      ADD_FAILURE() << text;
    } catch (const ParseError& e) {
      EXPECT_EQ(e.position(), offset) << text << ": " << e.what();
    }
  }
}

TEST(ExprAnalyze, SectorMixing) {
  try {
    analyze(parse("a+(1) c+(2) |;B>"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::sector_mixing);
  }
  EXPECT_THROW(analyze(parse("a+(1)|;F>")), Error);
  EXPECT_EQ(analyze(parse("psi+(1)|;F>")), Sector::fermi);
  EXPECT_EQ(analyze(parse("2+3i")), std::nullopt);
}

TEST(ExprEval, Examples) {
  EXPECT_EQ(std::get<Complex>(eval(parse("<1@1;B|1@1;B>"))), Complex(1.0, 0.0));
  EXPECT_EQ(state_text(std::get<StateVector>(eval(parse("a+(1) a+(1) |;B>")))), "{ |2@1;B>: 1.41421356 }");
  EXPECT_EQ(std::get<StateVector>(eval(parse("c+(6)|1@3,1@5,1@7,1@8;F>"))),
            embed(make_occupation({{3, 1}, {5, 1}, {6, 1}, {7, 1}, {8, 1}}), Sector::fermi));
  EXPECT_EQ(std::get<StateVector>(eval(parse("[a(1),a+(1)]|1@2;B>"))),
            embed(make_occupation({{2, 1}}), Sector::bose));
  EXPECT_EQ(std::get<Complex>(eval(parse("2 + 3i"))), Complex(2, 3));
  EXPECT_TRUE(std::get<StateVector>(eval(parse("c+(1) c+(1) |;F>"))).is_zero());
}

TEST(ExprEval, FieldOperatorsNeedBasis) {
  try {
    eval(parse("psi+(1)|;B>"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::no_basis_loaded);
  }
  const auto b = BasisChange::identity(3);
  EXPECT_EQ(std::get<StateVector>(eval(parse("psi+(2)|;B>"), &b)), embed(make_occupation({{2, 1}}), Sector::bose));
  EXPECT_THROW(eval(parse("<psi+(1)|;U>|psi+(1)|;U>>"), &b), Error);
}

TEST(ExprEval, TypeErrors) {
  for (const char* text : {"(|;B>) a(1)", "[|;B>, a(1)]", "<;B|a(1)>", "|;B> + 2", "(|;B>) |;B>"}) {
    try {
      eval(parse(text));
      ADD_FAILURE() << text;
    } catch (const ParseError&) {
      ADD_FAILURE() << text << " should parse";
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::type_error) << text;
    }
  }
}

TEST(ExprEval, LinearityThroughSums) {
  const auto v = std::get<StateVector>(eval(parse("(a+(1) + 2 a+(2)) |;B> - a+(1)|;B>")));
  EXPECT_EQ(v, Complex(2.0) * embed(make_occupation({{2, 1}}), Sector::bose));
}

}  // namespace
}  // namespace qspace::cli
