#include "inselim/algebra.hpp"

#include <map>
#include <mutex>
#include <set>
#include <shared_mutex>
#include <utility>

namespace inselim {

namespace {

Element bracket_insertion_insertion(const RootedTree& s, const RootedTree& t) {
  Element out;
  for (int v = 0; v < t.size(); ++v) out.add_term(BasisElement::insertion(graft(t, v, s)), 1);
  for (int v = 0; v < s.size(); ++v) out.add_term(BasisElement::insertion(graft(s, v, t)), -1);
  return out;
}

Element bracket_elimination_elimination(const RootedTree& s, const RootedTree& t) {
  // Trees with alpha(t,r,s) != 0 are exactly the grafts of t onto s, and
  // symmetrically for the second sum; each coefficient is then counted off
  // the candidate's own edge cuts.
  Element out;
  std::set<RootedTree> seen;
  for (int v = 0; v < s.size(); ++v) {
    RootedTree r = graft(s, v, t);
    if (seen.insert(r).second) out.add_term(BasisElement::elimination(r), alpha(t, r, s));
  }
  seen.clear();
  for (int v = 0; v < t.size(); ++v) {
    RootedTree r = graft(t, v, s);
    if (seen.insert(r).second) out.add_term(BasisElement::elimination(r), -alpha(s, r, t));
  }
  return out;
}

Element bracket_elimination_insertion(const RootedTree& s, const RootedTree& t) {
  Element out;
  for (const auto& [r, p] : cuts(t))
    if (p == s) out.add_term(BasisElement::insertion(r), 1);
  std::set<RootedTree> seen;
  for (const auto& [r, p] : cuts(s))
    if (p == t && seen.insert(r).second)
      out.add_term(BasisElement::elimination(r), beta(s, t, r));
  if (s == t) out.add_term(BasisElement::grading(), 1);
  return out;
}

Element bracket_uncached(const BasisElement& a, const BasisElement& b) {
  using K = BasisElement::Kind;
  if (a.kind() == K::grading && b.kind() == K::grading) return {};
  if (a.kind() == K::grading) return Element(b, b.degree());
  if (b.kind() == K::grading) return Element(a, -a.degree());
  if (a.kind() == K::insertion && b.kind() == K::insertion)
    return bracket_insertion_insertion(a.tree(), b.tree());
  if (a.kind() == K::elimination && b.kind() == K::elimination)
    return bracket_elimination_elimination(a.tree(), b.tree());
  if (a.kind() == K::elimination) return bracket_elimination_insertion(a.tree(), b.tree());
  return -bracket_elimination_insertion(b.tree(), a.tree());
}

}  // namespace

Element bracket(const BasisElement& a, const BasisElement& b) {
  if (a == b) return {};
  bool flip = b < a;
  const BasisElement& lo = flip ? b : a;
  const BasisElement& hi = flip ? a : b;
  using Key = std::pair<BasisElement, BasisElement>;
  static std::shared_mutex mu;
  static std::map<Key, Element> cache;
  Key key(lo, hi);
  {
    std::shared_lock lock(mu);
    if (auto it = cache.find(key); it != cache.end()) return flip ? -it->second : it->second;
  }
  Element res = bracket_uncached(lo, hi);
  {
    std::unique_lock lock(mu);
    cache.emplace(key, res);
  }
  return flip ? -res : res;
}

Element bracket(const Element& x, const Element& y) {
  Element out;
  for (const auto& [a, ca] : x.terms())
    for (const auto& [b, cb] : y.terms()) {
      Element ab = bracket(a, b);
      ab *= ca * cb;
      out += ab;
    }
  return out;
}

Element sigma(const Element& x) {
  Element out;
  for (const auto& [b, c] : x.terms()) {
    switch (b.kind()) {
      case BasisElement::Kind::grading:
        out.add_term(b, c);
        break;
      case BasisElement::Kind::insertion:
        out.add_term(BasisElement::elimination(b.tree()), c * Rational(sym_count(b.tree())));
        break;
      case BasisElement::Kind::elimination:
        out.add_term(BasisElement::insertion(b.tree()), c / Rational(sym_count(b.tree())));
        break;
    }
  }
  return out;
}

Element tau_zeta(const Rational& zeta, const Element& x) {
  if (zeta == 0) throw std::domain_error("tau parameter must be nonzero");
  Element out;
  for (const auto& [b, c] : x.terms()) out.add_term(b, c * pow_rational(zeta, b.degree()));
  return out;
}

Element tau_zero(const Element& x) { return -sigma(x); }

}  // namespace inselim
