#pragma once

#include <string>
#include <string_view>

#include <json.hpp>

#include "superspace/pi_value.hpp"
#include "superspace/polynomial.hpp"

namespace superspace {

// Text syntax: terms joined by '+'/'-'; a term is a '*'-joined product of
// rational coefficients, powers x<i>^<e> and fermions e<j>, e.g.
//   3/2*x1^2*e1*e2 - x2
// Fermions may be written in any order; signs are normalized on parse.
// Throws ParseError (with a character offset) on malformed input or on
// generator indices outside `params`.
Polynomial parse_polynomial(std::string_view text, const SpaceParams& params);

// Canonical text form, highest degree first;
// parse_polynomial(format_polynomial(p)) == p.
std::string format_polynomial(const Polynomial& p);

// {"m":int,"n":int,"terms":[{"coeff":"p/q","bos":[...],"ferm":[...]}]}
nlohmann::json polynomial_to_json(const Polynomial& p);
Polynomial polynomial_from_json(const nlohmann::json& j);

// {"coeff":"p/q","halfPiExp":int}
nlohmann::json pi_value_to_json(const PiScaledValue& v);
PiScaledValue pi_value_from_json(const nlohmann::json& j);

}  // namespace superspace
