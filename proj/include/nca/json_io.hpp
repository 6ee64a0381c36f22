#pragma once

#include <string>

#include "json.hpp"
#include "nca/bidet.hpp"
#include "nca/grass.hpp"
#include "nca/specht.hpp"
#include "nca/tableau.hpp"
#include "nca/tl.hpp"

// JSON views of the domain types. Rationals travel as strings, tableaux as
// column lists with the shape spelled out, elements as coefficient/object
// term lists. Parsers throw bad-json with a position hint.

namespace nca {

using Json = nlohmann::json;

Json rational_to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json reading_to_json(const Reading& r);
Reading reading_from_json(const Json& j);

Json poly_to_json(const ExactPoly& p);
ExactPoly poly_from_json(const Json& j);

Json matching_to_json(const Matching& m);
Matching matching_from_json(const Json& j);

Json bitableau_to_json(const Bitableau& b);
Bitableau bitableau_from_json(const Json& j);

Json grass_monomial_to_json(const GrassMonomial& m);
GrassMonomial grass_monomial_from_json(const Json& j);

Json specht_element_to_json(const SpechtElement& e);
Json tl_element_to_json(const TLElement& e);
Json bidet_element_to_json(const BidetElement& e);
Json grass_element_to_json(const GrassElement& e);

// Young-diagram text art, one row per line.
std::string diagram_art(const Tableau& t);

}  // namespace nca
