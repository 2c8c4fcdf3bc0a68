#include "inselim/element.hpp"

#include <algorithm>

namespace inselim {

Element::Element(const BasisElement& b, Rational coeff) {
  if (coeff != 0) terms_.emplace(b, std::move(coeff));
}

Rational Element::coeff(const BasisElement& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

Element& Element::add_term(const BasisElement& b, const Rational& c) {
  if (c == 0) return *this;
  auto [it, fresh] = terms_.emplace(b, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
  return *this;
}

Element& Element::operator+=(const Element& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

Element& Element::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

Element Element::operator-() const {
  Element out = *this;
  for (auto& [b, v] : out.terms_) v = -v;
  return out;
}

std::vector<int> Element::degree_support() const {
  std::vector<int> out;
  for (const auto& [b, c] : terms_) {
    int d = b.degree();
    if (out.empty() || out.back() != d) out.push_back(d);
  }
  return out;  // term order is degree-major, so this is ascending and unique
}

Element project_degree(const Element& x, int n) {
  Element out;
  for (const auto& [b, c] : x.terms())
    if (b.degree() == n) out.add_term(b, c);
  return out;
}

}  // namespace inselim
