#pragma once

#include <json.hpp>
#include <string>

#include "inselim/element.hpp"
#include "inselim/generate.hpp"
#include "inselim/virasoro.hpp"

namespace inselim {

// {"d": "p/q"?, "plus": {"<canon>": "p/q", ...}, "minus": {...}}; absent keys
// mean zero, coefficients are lowest-terms rational strings, tree keys ascend.
nlohmann::ordered_json element_to_json(const Element& x);
Element element_from_json(const nlohmann::ordered_json& j);

// Terms ordered by (degree, tree encoding); symbols d, D^{+}_{<canon>},
// D^{-}_{<canon>}; fractional coefficients as \frac{p}{q}.
std::string element_to_latex(const Element& x);

// {"gen": "<basis>"} | {"bracket": [P, P]} | {"sum": [["p/q", P], ...]}
nlohmann::ordered_json poly_to_json(const LiePolynomial& p);
LiePolynomial poly_from_json(const nlohmann::ordered_json& j);

// {"z": "p/q"?, "e": {"<alpha as p/q>": "coeff", ...}} with indices ascending.
nlohmann::ordered_json velement_to_json(const VElement& x);

}  // namespace inselim
