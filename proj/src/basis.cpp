#include "inselim/basis.hpp"

namespace inselim {

BasisElement BasisElement::grading() { return BasisElement(Kind::grading, RootedTree()); }

BasisElement BasisElement::insertion(RootedTree t) {
  return BasisElement(Kind::insertion, std::move(t));
}

BasisElement BasisElement::elimination(RootedTree t) {
  return BasisElement(Kind::elimination, std::move(t));
}

BasisElement BasisElement::from_text(std::string_view text) {
  if (text == "d") return grading();
  if (text.size() >= 2 && text[0] == '+') return insertion(RootedTree::parse(text.substr(1)));
  if (text.size() >= 2 && text[0] == '-') return elimination(RootedTree::parse(text.substr(1)));
  throw std::invalid_argument("basis element must be 'd', '+<tree>' or '-<tree>': '" +
                              std::string(text) + "'");
}

const RootedTree& BasisElement::tree() const {
  if (kind_ == Kind::grading) throw std::domain_error("grading element carries no tree");
  return tree_;
}

int BasisElement::degree() const noexcept {
  switch (kind_) {
    case Kind::grading:
      return 0;
    case Kind::insertion:
      return tree_.size();
    case Kind::elimination:
      return -tree_.size();
  }
  return 0;
}

std::string BasisElement::text() const {
  switch (kind_) {
    case Kind::grading:
      return "d";
    case Kind::insertion:
      return "+" + tree_.canon();
    case Kind::elimination:
      return "-" + tree_.canon();
  }
  return {};
}

std::strong_ordering BasisElement::operator<=>(const BasisElement& o) const noexcept {
  if (auto c = degree() <=> o.degree(); c != 0) return c;
  if (kind_ == Kind::grading) return std::strong_ordering::equal;  // degree pins the kind
  return tree_ <=> o.tree_;
}

bool BasisElement::operator==(const BasisElement& o) const noexcept {
  return (*this <=> o) == 0;
}

std::vector<BasisElement> basis_of_degree(int n) {
  std::vector<BasisElement> out;
  if (n == 0) {
    out.push_back(BasisElement::grading());
    return out;
  }
  for (const auto& t : enumerate_trees(n > 0 ? n : -n))
    out.push_back(n > 0 ? BasisElement::insertion(t) : BasisElement::elimination(t));
  return out;
}

}  // namespace inselim
