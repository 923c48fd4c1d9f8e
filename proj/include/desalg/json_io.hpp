#pragma once

#include <string>

#include "json.hpp"

#include "desalg/filtration.hpp"
#include "desalg/free_algebra.hpp"
#include "desalg/group_algebra.hpp"
#include "desalg/rational.hpp"
#include "desalg/verify.hpp"

namespace desalg {

// JSON forms of elements and reports. Numerators and denominators travel as
// decimal strings so arbitrarily large values survive parsers that box every
// number into a double; plain integers are accepted on input. Round trip:
// parsing a dumped element reproduces it exactly.

nlohmann::json rational_to_json(const Rational& q);
Rational rational_from_json(const nlohmann::json& j);

// List of {perm, num, den} in canonical (lex) order.
nlohmann::json group_element_to_json(const GroupAlgebraElement& a);
GroupAlgebraElement group_element_from_json(const nlohmann::json& j, int n);

// List of {word, num, den}; words as space-separated letters ("2 6 7").
nlohmann::json free_element_to_json(const FreeAlgebraElement& e);
FreeAlgebraElement free_element_from_json(const nlohmann::json& j, int alphabet);

// List of {alpha, num, den} with alpha as comma-separated parts ("2,1,1").
nlohmann::json sigma_to_json(const SigmaElement& a);
SigmaElement sigma_from_json(const nlohmann::json& j, int n);

nlohmann::json report_to_json(const Report& r);

}  // namespace desalg
