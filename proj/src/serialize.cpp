#include "inselim/serialize.hpp"

#include <map>
#include <stdexcept>

namespace inselim {

namespace {

std::string latex_symbol(const BasisElement& b) {
  switch (b.kind()) {
    case BasisElement::Kind::grading:
      return "d";
    case BasisElement::Kind::insertion:
      return "D^{+}_{" + b.tree().canon() + "}";
    case BasisElement::Kind::elimination:
      return "D^{-}_{" + b.tree().canon() + "}";
  }
  throw std::logic_error("unreachable basis kind");
}

std::string latex_magnitude(const Rational& a) {
  if (a.get_den() == 1) return a.get_num().get_str();
  return "\\frac{" + a.get_num().get_str() + "}{" + a.get_den().get_str() + "}";
}

}  // namespace

nlohmann::ordered_json element_to_json(const Element& x) {
  std::map<std::string, std::string> plus, minus;
  std::string d_coeff;
  for (const auto& [b, c] : x.terms()) {
    switch (b.kind()) {
      case BasisElement::Kind::grading:
        d_coeff = to_string(c);
        break;
      case BasisElement::Kind::insertion:
        plus.emplace(b.tree().canon(), to_string(c));
        break;
      case BasisElement::Kind::elimination:
        minus.emplace(b.tree().canon(), to_string(c));
        break;
    }
  }
  auto j = nlohmann::ordered_json::object();
  if (!d_coeff.empty()) j["d"] = d_coeff;
  if (!plus.empty()) {
    auto p = nlohmann::ordered_json::object();
    for (const auto& [k, v] : plus) p[k] = v;
    j["plus"] = std::move(p);
  }
  if (!minus.empty()) {
    auto m = nlohmann::ordered_json::object();
    for (const auto& [k, v] : minus) m[k] = v;
    j["minus"] = std::move(m);
  }
  return j;
}

Element element_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object()) throw std::invalid_argument("element JSON must be an object");
  Element out;
  for (const auto& [key, value] : j.items()) {
    if (key == "d") {
      out.add_term(BasisElement::grading(), parse_rational(value.get<std::string>()));
    } else if (key == "plus" || key == "minus") {
      if (!value.is_object()) throw std::invalid_argument("expected an object of tree terms");
      for (const auto& [canon, coeff] : value.items()) {
        RootedTree t = RootedTree::parse(canon);
        BasisElement b =
            key == "plus" ? BasisElement::insertion(t) : BasisElement::elimination(t);
        out.add_term(b, parse_rational(coeff.get<std::string>()));
      }
    } else {
      throw std::invalid_argument("unknown element key: " + key);
    }
  }
  return out;
}

std::string element_to_latex(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : x.terms()) {
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    std::string term = a == 1 ? latex_symbol(b) : latex_magnitude(a) + " " + latex_symbol(b);
    if (out.empty())
      out = (neg ? "-" : "") + term;
    else
      out += (neg ? " - " : " + ") + term;
  }
  return out;
}

nlohmann::ordered_json poly_to_json(const LiePolynomial& p) {
  auto j = nlohmann::ordered_json::object();
  switch (p.kind()) {
    case LiePolynomial::Kind::generator:
      j["gen"] = p.leaf().text();
      break;
    case LiePolynomial::Kind::bracket:
      j["bracket"] = nlohmann::ordered_json::array({poly_to_json(p.lhs()), poly_to_json(p.rhs())});
      break;
    case LiePolynomial::Kind::sum: {
      auto terms = nlohmann::ordered_json::array();
      for (const auto& [c, q] : p.terms())
        terms.push_back(nlohmann::ordered_json::array({to_string(c), poly_to_json(q)}));
      j["sum"] = std::move(terms);
      break;
    }
  }
  return j;
}

LiePolynomial poly_from_json(const nlohmann::ordered_json& j) {
  if (!j.is_object() || j.size() != 1)
    throw std::invalid_argument("polynomial JSON must be an object with one key");
  if (j.contains("gen"))
    return LiePolynomial::generator(BasisElement::from_text(j["gen"].get<std::string>()));
  if (j.contains("bracket")) {
    const auto& pair = j["bracket"];
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("bracket needs exactly two operands");
    return LiePolynomial::bracket(poly_from_json(pair[0]), poly_from_json(pair[1]));
  }
  if (j.contains("sum")) {
    std::vector<std::pair<Rational, LiePolynomial>> terms;
    for (const auto& entry : j["sum"]) {
      if (!entry.is_array() || entry.size() != 2)
        throw std::invalid_argument("sum entries are [coefficient, polynomial] pairs");
      terms.emplace_back(parse_rational(entry[0].get<std::string>()), poly_from_json(entry[1]));
    }
    return LiePolynomial::sum(std::move(terms));
  }
  throw std::invalid_argument("unknown polynomial form");
}

nlohmann::ordered_json velement_to_json(const VElement& x) {
  auto j = nlohmann::ordered_json::object();
  auto e = nlohmann::ordered_json::object();
  for (const auto& [b, c] : x.terms()) {
    if (b.is_z)
      j["z"] = to_string(c);
    else
      e[to_string(b.alpha)] = to_string(c);
  }
  if (!e.empty()) j["e"] = std::move(e);
  return j;
}

}  // namespace inselim
