#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "clpolar/clsets/clsets.hpp"
#include "clpolar/scheme/scheme.hpp"
#include "clpolar/search/search.hpp"

namespace clpolar::io {

using nlohmann::json;

// Space descriptor {"kind","d","q","n"}. The ambient dimension disambiguates
// the two hermitian families, so it is always written and wins on read.
json space_to_json(const geometry::SpaceKind& k);
geometry::SpaceKind space_from_json(const json& j);

// Generator set files: {"space": descriptor, "indices": ascending}.
json generator_set_to_json(const clsets::GeneratorSet& L);
clsets::GeneratorSet generator_set_from_json(const json& j);

json report_to_json(const clsets::CLReport& rep);

// Exact integers render as JSON numbers while they fit 53 bits, as decimal
// strings beyond; rationals always as canonical "p/q" or "p" strings.
json bigint_to_json(const algebra::BigInt& v);
std::string rational_to_string(const algebra::Rational& v);

json matrix_to_json(const std::vector<std::vector<algebra::BigInt>>& M);
std::string matrix_to_csv(const std::vector<std::vector<algebra::BigInt>>& M);

// "(3,3)" style listing; "none" when empty.
std::string coincidences_to_string(const std::vector<std::pair<int, int>>& v);

// Eigenvalue rows with their closed-form multiplicities.
json eigenspaces_to_json(const geometry::SpaceKind& k);
std::string eigenspaces_to_csv(const geometry::SpaceKind& k);

// Valuation table of one relation: rows j = 0..d.
json phi_to_json(const geometry::SpaceKind& k, int i);
std::string phi_to_csv(const geometry::SpaceKind& k, int i);

json cursor_to_json(const search::Cursor& c);
search::Cursor cursor_from_json(const json& j);

}  // namespace clpolar::io
