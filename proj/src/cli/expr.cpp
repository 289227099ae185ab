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

#include <algorithm>
#include <cctype>
#include <charconv>
#include <set>

#include "qspace/algebra.hpp"
#include "qspace/text.hpp"

namespace qspace::cli {

Expr Expr::make_ket(OccupationState f, Sector s) {
  Expr e;
  e.kind = Kind::ket;
  e.ket = std::move(f);
  e.sector = s;
  return e;
}

Expr Expr::make_scalar(Complex z) {
  Expr e;
  e.kind = Kind::scalar;
  e.value = z;
  return e;
}

Expr Expr::make_op(OpSymbol symbol, std::uint32_t index) {
  Expr e;
  e.kind = Kind::op;
  e.symbol = symbol;
  e.index = index;
  return e;
}

Expr Expr::make_binary(Kind kind, Expr lhs, Expr rhs) {
  Expr e;
  e.kind = kind;
  e.children.push_back(std::move(lhs));
  e.children.push_back(std::move(rhs));
  return e;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse_all() {
    Expr e = parse_sum();
    skip();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(pos_, message); }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char ch) {
    if (peek() != ch) fail(std::string("expected '") + ch + "'");
    ++pos_;
  }

  static bool is_digit(char ch) { return std::isdigit(static_cast<unsigned char>(ch)) != 0; }

  bool starts_factor(char ch) const {
    return is_digit(ch) || ch == '.' || ch == '|' || ch == '(' || ch == '[' || ch == '{' ||
           ch == '<' || ch == 'a' || ch == 'c' || ch == 'p';
  }

  Expr parse_sum() {
    Expr sum;
    sum.kind = Expr::Kind::sum;
    bool negative = false;
    if (char ch = peek(); ch == '+' || ch == '-') {
      negative = ch == '-';
      ++pos_;
    }
    sum.children.push_back(parse_term());
    sum.negated.push_back(negative);
    while (true) {
      const char ch = peek();
      if (ch != '+' && ch != '-') break;
      ++pos_;
      sum.children.push_back(parse_term());
      sum.negated.push_back(ch == '-');
    }
    if (sum.children.size() == 1 && !sum.negated.front()) return std::move(sum.children.front());
    return sum;
  }

  Expr parse_term() {
    Expr product;
    product.kind = Expr::Kind::product;
    bool has_ket = false;
    while (true) {
      const char ch = peek();
      if (!starts_factor(ch)) break;
      if (ch == '|') {
        // a second bare ket cannot follow; '|' then belongs to an enclosing <..|..>
        if (has_ket) break;
        has_ket = true;
        if (bra_depth_ > 0 && !product.children.empty()) {
          auto ket = try_ket_factor();
          if (!ket) break;
          product.children.push_back(std::move(*ket));
          continue;
        }
      }
      product.children.push_back(parse_factor());
    }
    if (product.children.empty()) {
      fail(pos_ < text_.size() ? "expected an operand" : "unexpected end of input");
    }
    if (product.children.size() == 1) return std::move(product.children.front());
    return product;
  }

  Expr parse_factor() {
    const char ch = peek();
    if (is_digit(ch) || ch == '.') return parse_scalar();
    switch (ch) {
      case '|': {
        ++pos_;
        Ket ket = parse_ket_body(text_, pos_);
        return Expr::make_ket(std::move(ket.state), ket.sector);
      }
      case '(': {
        ++pos_;
        Expr inner = parse_sum();
        expect(')');
        return inner;
      }
      case '[':
      case '{': {
        ++pos_;
        Expr lhs = parse_sum();
        expect(',');
        Expr rhs = parse_sum();
        expect(ch == '[' ? ']' : '}');
        return Expr::make_binary(ch == '[' ? Expr::Kind::commutator : Expr::Kind::anticommutator,
                                 std::move(lhs), std::move(rhs));
      }
      case '<':
        ++pos_;
        return parse_inner();
      default:
        return parse_op();
    }
  }

  // An occupation list written without the leading '|', closed by `terminator`.
  std::optional<Expr> try_bare_ket(char terminator) {
    const char ch = peek();
    if (!is_digit(ch) && ch != ';') return std::nullopt;
    const std::size_t saved = pos_;
    try {
      Ket ket = parse_ket_contents(text_, pos_);
      if (peek() == terminator) {
        ++pos_;
        return Expr::make_ket(std::move(ket.state), ket.sector);
      }
    } catch (const ParseError&) {
    }
    pos_ = saved;
    return std::nullopt;
  }

  // Inside a bra, '|' after a factor either starts a ket or closes the bra.
  std::optional<Expr> try_ket_factor() {
    const std::size_t saved = pos_;
    try {
      ++pos_;
      Ket ket = parse_ket_body(text_, pos_);
      return Expr::make_ket(std::move(ket.state), ket.sector);
    } catch (const ParseError&) {
      pos_ = saved;
      return std::nullopt;
    }
  }

  Expr parse_inner() {
    Expr lhs = [&] {
      if (auto bra = try_bare_ket('|')) return std::move(*bra);
      ++bra_depth_;
      Expr e = parse_sum();
      --bra_depth_;
      expect('|');
      return e;
    }();
    if (auto ket = try_bare_ket('>')) {
      return Expr::make_binary(Expr::Kind::inner, std::move(lhs), std::move(*ket));
    }
    Expr rhs = parse_sum();
    expect('>');
    return Expr::make_binary(Expr::Kind::inner, std::move(lhs), std::move(rhs));
  }

  Expr parse_op() {
    const std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) {
      name += text_[pos_++];
    }
    if (name != "a" && name != "c" && name != "psi") {
      pos_ = start;
      fail("unknown symbol '" + name + "'");
    }
    bool create = false;
    if (peek() == '+') {
      create = true;
      ++pos_;
    }
    expect('(');
    skip();
    std::uint32_t index = 0;
    const char* first = text_.data() + pos_;
    auto [ptr, ec] = std::from_chars(first, text_.data() + text_.size(), index);
    if (ec != std::errc{} || ptr == first) fail("expected an integer index");
    if (index == 0) fail("indices start at 1");
    pos_ += static_cast<std::size_t>(ptr - first);
    expect(')');
    OpSymbol symbol;
    if (name == "a") {
      symbol = create ? OpSymbol::a_create : OpSymbol::a_annihilate;
    } else if (name == "c") {
      symbol = create ? OpSymbol::c_create : OpSymbol::c_annihilate;
    } else {
      symbol = create ? OpSymbol::psi_create : OpSymbol::psi_annihilate;
    }
    return Expr::make_op(symbol, index);
  }

  double parse_number() {
    skip();
    const std::size_t start = pos_;
    std::size_t end = pos_;
    while (end < text_.size() && (is_digit(text_[end]) || text_[end] == '.')) ++end;
    if (end < text_.size() && (text_[end] == 'e' || text_[end] == 'E')) {
      std::size_t exp = end + 1;
      if (exp < text_.size() && (text_[exp] == '+' || text_[exp] == '-')) ++exp;
      if (exp < text_.size() && is_digit(text_[exp])) {
        end = exp;
        while (end < text_.size() && is_digit(text_[end])) ++end;
      }
    }
    double value = 0.0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + end, value);
    if (ec != std::errc{} || ptr != text_.data() + end) fail("malformed number");
    pos_ = end;
    return value;
  }

  bool consume_imaginary_unit() {
    if (pos_ < text_.size() && text_[pos_] == 'i') {
      ++pos_;
      return true;
    }
    return false;
  }

  Expr parse_scalar() {
    const double first = parse_number();
    if (consume_imaginary_unit()) return Expr::make_scalar(Complex(0.0, first));
    // greedy "re+imi" / "re-imi"
    const std::size_t saved = pos_;
    const char sign = peek();
    if (sign == '+' || sign == '-') {
      ++pos_;
      const char next = peek();
      if (is_digit(next) || next == '.') {
        const double second = parse_number();
        if (consume_imaginary_unit()) {
          return Expr::make_scalar(Complex(first, sign == '-' ? -second : second));
        }
      }
    }
    pos_ = saved;
    return Expr::make_scalar(Complex(first, 0.0));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int bra_depth_ = 0;
};

std::string shortest(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

std::string print_scalar(Complex z) {
  if (z.imag() == 0.0) return shortest(z.real());
  if (z.real() == 0.0) return shortest(z.imag()) + "i";
  std::string out = shortest(z.real());
  out += std::signbit(z.imag()) ? "-" : "+";
  out += shortest(std::abs(z.imag())) + "i";
  return out;
}

std::string print_op(OpSymbol symbol, std::uint32_t index) {
  const char* name = "";
  switch (symbol) {
    case OpSymbol::a_create: name = "a+"; break;
    case OpSymbol::a_annihilate: name = "a"; break;
    case OpSymbol::c_create: name = "c+"; break;
    case OpSymbol::c_annihilate: name = "c"; break;
    case OpSymbol::psi_create: name = "psi+"; break;
    case OpSymbol::psi_annihilate: name = "psi"; break;
  }
  return std::string(name) + "(" + std::to_string(index) + ")";
}

std::string bare_ket(const Expr& e) {
  std::string text = ket_text(e.ket, e.sector);
  return text.substr(1, text.size() - 2);  // strip '|' and '>'
}

// True when print(e) ends in an unparenthesized ket literal.
bool ends_with_ket(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::ket:
      return true;
    case Expr::Kind::sum:
      return e.children.back().kind != Expr::Kind::sum && ends_with_ket(e.children.back());
    case Expr::Kind::product:
      return e.children.back().kind == Expr::Kind::ket &&
             std::count_if(e.children.begin(), e.children.end(),
                           [](const Expr& f) { return f.kind == Expr::Kind::ket; }) == 1;
    default:
      return false;
  }
}

bool ends_with_scalar(const Expr& e) {
  if (e.kind == Expr::Kind::scalar) return true;
  return e.kind == Expr::Kind::product && e.children.back().kind == Expr::Kind::scalar;
}

}  // namespace

Expr parse(std::string_view text) { return Parser(text).parse_all(); }

std::string print(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::ket:
      return ket_text(e.ket, e.sector);
    case Expr::Kind::scalar:
      return print_scalar(e.value);
    case Expr::Kind::op:
      return print_op(e.symbol, e.index);
    case Expr::Kind::product: {
      std::string out;
      bool has_ket = false;
      for (const auto& f : e.children) {
        if (!out.empty()) out += ' ';
        const bool wrap = f.kind == Expr::Kind::sum || f.kind == Expr::Kind::product ||
                          (f.kind == Expr::Kind::ket && has_ket);
        if (f.kind == Expr::Kind::ket) has_ket = true;
        out += wrap ? "(" + print(f) + ")" : print(f);
      }
      return out;
    }
    case Expr::Kind::sum: {
      std::string out;
      for (std::size_t t = 0; t < e.children.size(); ++t) {
        const Expr& term = e.children[t];
        if (t == 0) {
          if (e.negated[t]) out += '-';
        } else {
          out += e.negated[t] ? " - " : " + ";
        }
        // a trailing scalar would fuse with the next sign into a complex literal
        const bool last = t + 1 == e.children.size();
        const bool wrap = term.kind == Expr::Kind::sum || (!last && ends_with_scalar(term));
        out += wrap ? "(" + print(term) + ")" : print(term);
      }
      return out;
    }
    case Expr::Kind::commutator:
      return "[" + print(e.children[0]) + ", " + print(e.children[1]) + "]";
    case Expr::Kind::anticommutator:
      return "{" + print(e.children[0]) + ", " + print(e.children[1]) + "}";
    case Expr::Kind::inner: {
      const Expr& lhs = e.children[0];
      const Expr& rhs = e.children[1];
      if (lhs.kind == Expr::Kind::ket) {
        return "<" + bare_ket(lhs) + "|" + (rhs.kind == Expr::Kind::ket ? bare_ket(rhs) : print(rhs)) + ">";
      }
      // Unless the bra ends in a ket, a bare occupation list after '|' would
      // be read as a ket factor of the bra; spell the right ket out in full.
      std::string right = print(rhs);
      if (rhs.kind == Expr::Kind::ket && ends_with_ket(lhs)) right = bare_ket(rhs);
      return "<" + print(lhs) + "|" + right + ">";
    }
  }
  return {};
}

namespace {

void collect_sectors(const Expr& e, std::set<Sector>& seen) {
  switch (e.kind) {
    case Expr::Kind::ket:
      seen.insert(e.sector);
      break;
    case Expr::Kind::op:
      if (e.symbol == OpSymbol::a_create || e.symbol == OpSymbol::a_annihilate) seen.insert(Sector::bose);
      if (e.symbol == OpSymbol::c_create || e.symbol == OpSymbol::c_annihilate) seen.insert(Sector::fermi);
      break;
    default:
      break;
  }
  for (const auto& child : e.children) collect_sectors(child, seen);
}

class Evaluator {
 public:
  Evaluator(const BasisChange* basis, std::optional<Sector> statistics)
      : basis_(basis), statistics_(statistics) {}

  Value eval(const Expr& e) const {
    switch (e.kind) {
      case Expr::Kind::ket:
        return embed(e.ket, e.sector);
      case Expr::Kind::scalar:
        return e.value;
      case Expr::Kind::op:
        return operator_of(e);
      case Expr::Kind::product: {
        Value acc = eval(e.children.back());
        for (auto it = std::next(e.children.rbegin()); it != e.children.rend(); ++it) {
          acc = multiply(eval(*it), std::move(acc));
        }
        return acc;
      }
      case Expr::Kind::sum: {
        Value acc = signed_term(e, 0);
        for (std::size_t t = 1; t < e.children.size(); ++t) acc = add_values(std::move(acc), signed_term(e, t));
        return acc;
      }
      case Expr::Kind::commutator:
      case Expr::Kind::anticommutator: {
        const Value lhs = eval(e.children[0]);
        const Value rhs = eval(e.children[1]);
        if (!std::holds_alternative<OpSum>(lhs) || !std::holds_alternative<OpSum>(rhs)) {
          throw Error(ErrorKind::type_error, "brackets take two operators");
        }
        return bracket(std::get<OpSum>(lhs), std::get<OpSum>(rhs),
                       e.kind == Expr::Kind::commutator ? Bracket::commutator : Bracket::anticommutator);
      }
      case Expr::Kind::inner: {
        const Value lhs = eval(e.children[0]);
        const Value rhs = eval(e.children[1]);
        if (!std::holds_alternative<StateVector>(lhs) || !std::holds_alternative<StateVector>(rhs)) {
          throw Error(ErrorKind::type_error, "scalar product takes two vectors");
        }
        return fock_inner_product(std::get<StateVector>(lhs), std::get<StateVector>(rhs));
      }
    }
    throw Error(ErrorKind::type_error, "unknown expression node");
  }

 private:
  OpSum operator_of(const Expr& e) const {
    switch (e.symbol) {
      case OpSymbol::a_create: return OpSum::of(OpWord{{LadderOp::a_dag(e.index)}});
      case OpSymbol::a_annihilate: return OpSum::of(OpWord{{LadderOp::a(e.index)}});
      case OpSymbol::c_create: return OpSum::of(OpWord{{LadderOp::c_dag(e.index)}});
      case OpSymbol::c_annihilate: return OpSum::of(OpWord{{LadderOp::c(e.index)}});
      case OpSymbol::psi_create:
      case OpSymbol::psi_annihilate:
        break;
    }
    if (basis_ == nullptr) {
      throw Error(ErrorKind::no_basis_loaded, "field operator " + print(e) + " needs --basis");
    }
    if (!statistics_ || *statistics_ == Sector::full) {
      throw Error(ErrorKind::type_error,
                  "cannot infer Bose or Fermi statistics for " + print(e) + "; add a ket");
    }
    return e.symbol == OpSymbol::psi_create
               ? field_creation_operator(e.index, *basis_, *statistics_)
               : field_annihilation_operator(e.index, *basis_, *statistics_);
  }

  Value signed_term(const Expr& sum, std::size_t t) const {
    Value v = eval(sum.children[t]);
    if (sum.negated[t]) v = multiply(Complex(-1.0), std::move(v));
    return v;
  }

  static Value multiply(Value lhs, Value rhs) {
    if (auto* z = std::get_if<Complex>(&lhs)) {
      if (auto* w = std::get_if<Complex>(&rhs)) return *z * *w;
      if (auto* psi = std::get_if<StateVector>(&rhs)) return *z * std::move(*psi);
      return *z * std::get<OpSum>(std::move(rhs));
    }
    if (auto* op = std::get_if<OpSum>(&lhs)) {
      if (auto* w = std::get_if<Complex>(&rhs)) return *w * std::move(*op);
      if (auto* psi = std::get_if<StateVector>(&rhs)) return apply(*op, *psi);
      return *op * std::get<OpSum>(rhs);
    }
    auto& psi = std::get<StateVector>(lhs);
    if (auto* w = std::get_if<Complex>(&rhs)) return *w * std::move(psi);
    throw Error(ErrorKind::type_error, "a vector cannot act on a vector or an operator");
  }

  static Value add_values(Value lhs, Value rhs) {
    if (lhs.index() != rhs.index()) {
      throw Error(ErrorKind::type_error, "cannot add a scalar, a vector and an operator together");
    }
    if (auto* z = std::get_if<Complex>(&lhs)) return *z + std::get<Complex>(rhs);
    if (auto* psi = std::get_if<StateVector>(&lhs)) return std::move(*psi) + std::get<StateVector>(rhs);
    return std::get<OpSum>(std::move(lhs)) + std::get<OpSum>(rhs);
  }

  const BasisChange* basis_;
  std::optional<Sector> statistics_;
};

}  // namespace

std::optional<Sector> analyze(const Expr& e) {
  std::set<Sector> seen;
  collect_sectors(e, seen);
  if (seen.size() > 1) {
    std::string names;
    for (Sector s : seen) names += (names.empty() ? "" : ", ") + std::string(to_string(s));
    throw Error(ErrorKind::sector_mixing, "expression mixes statistics: " + names);
  }
  if (seen.empty()) return std::nullopt;
  return *seen.begin();
}

Value eval(const Expr& e, const BasisChange* basis) {
  return Evaluator(basis, analyze(e)).eval(e);
}

}  // namespace qspace::cli
