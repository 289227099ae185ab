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

#include <cstddef>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "qspace/core.hpp"

namespace qspace {

inline constexpr int kTextDigits = 9;
inline constexpr int kJsonDigits = 17;

std::string format_real(double value, int digits);
/// "re+imi" / "re-imi", always both parts.
std::string format_complex(Complex value, int digits);

/// Canonical ket: |n@k,...;S> with modes ascending, S one of U, B, F.
std::string ket_text(const OccupationState& f, Sector sector);

/// { |ket>: amp, ... } in canonical term order; "{ }" for the zero vector.
std::string state_text(const StateVector& psi, int digits = kTextDigits);

struct Ket {
  OccupationState state;
  Sector sector;
};

/// Parses "n@k,...;S" starting at text[pos], leaving pos after the sector
/// letter. Duplicate modes and zero counts are reported as syntax errors.
Ket parse_ket_contents(std::string_view text, std::size_t& pos);

/// Parses the occupation list and sector of a ket starting at text[pos] (the
/// character after '|'), up to and including the closing '>'. Advances pos.
Ket parse_ket_body(std::string_view text, std::size_t& pos);

/// Whole-string ket, e.g. "|3@2,1@3,4@5;B>".
Ket parse_ket(std::string_view text);

Sector sector_from_letter(char letter, std::size_t position);
Sector sector_from_name(std::string_view name);

/// {"sector": "Bose", "terms": [{"occ": [[2,3],...], "re": .., "im": ..}, ...]}
nlohmann::json state_to_json(const StateVector& psi);
StateVector state_from_json(const nlohmann::json& j);

/// Compact serialization with every floating value printed to 17 significant
/// digits.
std::string dump_json(const nlohmann::json& j);

}  // namespace qspace
