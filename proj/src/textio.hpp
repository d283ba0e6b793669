/*
   Copyright 2026 The qf2 authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef QF2_TEXTIO_HPP
#define QF2_TEXTIO_HPP

#include <string>
#include <variant>

#include <json.hpp>

#include "qform.hpp"

namespace qf2 {

using Json = nlohmann::ordered_json;

/// "0", "1", and "g^i" over the fixed generator for k > 1.
std::string elem_to_string(const FieldElem& c);

/// Sparse rendering like "t^3 + g*t + 1"; compact drops the spaces
/// (used inside place names).
std::string poly_to_string(const Poly& p, bool compact = false);

/// "num / den" with parentheses around multi-term operands, e.g.
/// "(t^2 + 1)/(t^3 + t)"; plain polynomial when den = 1.
std::string ratfunc_to_string(const RatFunc& u, bool compact = false);

/// Expression grammar over t, g, digits, + * / ^ and parentheses.
/// Positions in errors are 1-based offsets into the input.
RatFunc parse_ratfunc(Gf2k field, const std::string& text);

/// parse_ratfunc restricted to polynomials.
Poly parse_poly(Gf2k field, const std::string& text);

/// Coefficient list "[c0,c1,...]" of a residue-field element.
std::string ext_elem_to_string(const ExtElem& e);

std::string place_to_string(const Place& v);
Place parse_place(Gf2k field, const std::string& text);  // "π:<poly>", "pi:<poly>" or "inf"

Json form_to_json(const QuadraticForm& q);

using FormOrGram = std::variant<QuadraticForm, GramInput>;

/// Accepts {"odd": ..., "binaries": [[a,b],...]} or {"gram": [[...],...]}.
FormOrGram form_from_json(Gf2k field, const Json& doc);

/// Canonical shape of either alternative (gram inputs are normalized).
QuadraticForm canonicalize(const FormOrGram& fg);

}  // namespace qf2

#endif
