#pragma once

#include <map>
#include <vector>

#include "inselim/basis.hpp"
#include "inselim/rational.hpp"

namespace inselim {

// Finite rational linear combination of basis elements.  Terms are kept in
// the basis order (degree, then tree encoding) and zero coefficients are
// never stored, so equality is term-map equality.
class Element {
 public:
  Element() = default;  // zero
  explicit Element(const BasisElement& b, Rational coeff = Rational(1));

  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<BasisElement, Rational>& terms() const noexcept { return terms_; }
  Rational coeff(const BasisElement& b) const;

  // Adds c * b, erasing the term if it cancels.
  Element& add_term(const BasisElement& b, const Rational& c);

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Rational& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Rational& c, Element a) { return a *= c; }
  friend Element operator*(Element a, const Rational& c) { return a *= c; }
  Element operator-() const;

  bool operator==(const Element& o) const { return terms_ == o.terms_; }

  // Distinct degrees carrying nonzero terms, ascending.
  std::vector<int> degree_support() const;

 private:
  std::map<BasisElement, Rational> terms_;
};

// Component of x in the degree-n slice.
Element project_degree(const Element& x, int n);

}  // namespace inselim
