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

#include "qspace/text.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <limits>

namespace qspace {

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
}

std::uint32_t parse_count(std::string_view text, std::size_t& pos, const char* what) {
  skip_space(text, pos);
  std::uint32_t value = 0;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr == first) throw ParseError(pos, std::string("expected ") + what);
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

void append_escaped(std::string& out, const std::string& s) {
  out += '"';
  for (char ch : s) {
    switch (ch) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default:
        if (static_cast<unsigned char>(ch) < 0x20) {
          char buf[8];
          std::snprintf(buf, sizeof buf, "\\u%04x", ch);
          out += buf;
        } else {
          out += ch;
        }
    }
  }
  out += '"';
}

void dump_into(std::string& out, const nlohmann::json& j) {
  switch (j.type()) {
    case nlohmann::json::value_t::object: {
      out += '{';
      bool first = true;
      for (const auto& [key, value] : j.items()) {
        if (!first) out += ',';
        first = false;
        append_escaped(out, key);
        out += ':';
        dump_into(out, value);
      }
      out += '}';
      break;
    }
    case nlohmann::json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& value : j) {
        if (!first) out += ',';
        first = false;
        dump_into(out, value);
      }
      out += ']';
      break;
    }
    case nlohmann::json::value_t::number_float: {
      const double v = j.get<double>();
      out += std::isfinite(v) ? format_real(v, kJsonDigits) : "null";
      break;
    }
    case nlohmann::json::value_t::string:
      append_escaped(out, j.get<std::string>());
      break;
    default:
      out += j.dump();
  }
}

}  // namespace

std::string format_real(double value, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", digits, value);
  return buf;
}

std::string format_complex(Complex value, int digits) {
  std::string out = format_real(value.real(), digits);
  const double im = value.imag();
  if (!std::signbit(im)) out += '+';
  out += format_real(im, digits);
  out += 'i';
  return out;
}

std::string ket_text(const OccupationState& f, Sector sector) {
  std::string out = "|";
  bool first = true;
  for (const auto& [mode, n] : f.entries()) {
    if (!first) out += ',';
    first = false;
    out += std::to_string(n) + "@" + std::to_string(mode.value());
  }
  out += ';';
  out += sector_letter(sector);
  out += '>';
  return out;
}

std::string state_text(const StateVector& psi, int digits) {
  if (psi.is_zero()) return "{ }";
  std::string out = "{ ";
  bool first = true;
  for (const auto& [f, amp] : psi.terms()) {
    if (!first) out += ", ";
    first = false;
    out += ket_text(f, psi.sector()) + ": ";
    out += amp.imag() == 0.0 ? format_real(amp.real(), digits) : format_complex(amp, digits);
  }
  out += " }";
  return out;
}

Sector sector_from_letter(char letter, std::size_t position) {
  switch (letter) {
    case 'U': return Sector::full;
    case 'B': return Sector::bose;
    case 'F': return Sector::fermi;
    default: throw ParseError(position, "expected sector letter U, B or F");
  }
}

Sector sector_from_name(std::string_view name) {
  if (name == "Full") return Sector::full;
  if (name == "Bose") return Sector::bose;
  if (name == "Fermi") return Sector::fermi;
  throw Error(ErrorKind::parse_error, "unknown sector \"" + std::string(name) + "\"");
}

Ket parse_ket_contents(std::string_view text, std::size_t& pos) {
  std::vector<ModeCount> pairs;
  skip_space(text, pos);
  const std::size_t list_start = pos;
  if (pos < text.size() && text[pos] != ';') {
    while (true) {
      const std::uint32_t count = parse_count(text, pos, "occupation count");
      skip_space(text, pos);
      if (pos >= text.size() || text[pos] != '@') throw ParseError(pos, "expected '@'");
      ++pos;
      const std::size_t mode_pos = pos;
      const std::uint32_t mode = parse_count(text, pos, "mode index");
      if (mode == 0) throw ParseError(mode_pos, "mode indices start at 1");
      if (count == 0) throw ParseError(list_start, "zero occupation count (omit the mode)");
      pairs.push_back({mode, count});
      skip_space(text, pos);
      if (pos < text.size() && text[pos] == ',') {
        ++pos;
        continue;
      }
      break;
    }
  }
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != ';') throw ParseError(pos, "expected ';' before sector");
  ++pos;
  skip_space(text, pos);
  if (pos >= text.size()) throw ParseError(pos, "expected sector letter U, B or F");
  const Sector sector = sector_from_letter(text[pos], pos);
  ++pos;
  try {
    return Ket{make_occupation(pairs), sector};
  } catch (const Error& e) {
    throw ParseError(list_start, e.what());
  }
}

Ket parse_ket_body(std::string_view text, std::size_t& pos) {
  Ket ket = parse_ket_contents(text, pos);
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != '>') throw ParseError(pos, "expected '>' closing ket");
  ++pos;
  return ket;
}

Ket parse_ket(std::string_view text) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (pos >= text.size() || text[pos] != '|') throw ParseError(pos, "expected '|' opening ket");
  ++pos;
  Ket ket = parse_ket_body(text, pos);
  skip_space(text, pos);
  if (pos != text.size()) throw ParseError(pos, "trailing characters after ket");
  return ket;
}

nlohmann::json state_to_json(const StateVector& psi) {
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [f, amp] : psi.terms()) {
    nlohmann::json occ = nlohmann::json::array();
    for (const auto& [mode, n] : f.entries()) occ.push_back({mode.value(), n});
    terms.push_back({{"occ", std::move(occ)}, {"re", amp.real()}, {"im", amp.imag()}});
  }
  return {{"sector", std::string(to_string(psi.sector()))}, {"terms", std::move(terms)}};
}

StateVector state_from_json(const nlohmann::json& j) {
  try {
    StateVector psi(sector_from_name(j.at("sector").get<std::string>()));
    for (const auto& term : j.at("terms")) {
      std::vector<ModeCount> pairs;
      for (const auto& entry : term.at("occ")) {
        pairs.push_back({entry.at(0).get<std::uint32_t>(), entry.at(1).get<std::uint32_t>()});
      }
      psi.accumulate(make_occupation(pairs),
                     Complex(term.at("re").get<double>(), term.value("im", 0.0)));
    }
    return psi;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::parse_error, std::string("malformed state JSON: ") + e.what());
  }
}

std::string dump_json(const nlohmann::json& j) {
  std::string out;
  dump_into(out, j);
  return out;
}

}  // namespace qspace
