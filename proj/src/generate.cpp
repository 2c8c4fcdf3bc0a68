#include "inselim/generate.hpp"

#include <chrono>
#include <map>
#include <mutex>
#include <stdexcept>

namespace inselim {

Prec prec(const RootedTree& s, const RootedTree& t) {
  if (s.size() != t.size()) throw std::domain_error("prec compares trees of equal size");
  if (s == t) return Prec::equal;
  int ds = depth(s), dt = depth(t);
  if (ds > dt) return Prec::less;
  if (ds < dt) return Prec::greater;
  int rs = root_degree(s), rt = root_degree(t);
  if (rs < rt) return Prec::less;
  if (rs > rt) return Prec::greater;
  return Prec::incomparable;
}

struct LiePolynomial::Node {
  Kind kind = Kind::generator;
  std::optional<BasisElement> leaf;
  std::optional<LiePolynomial> l, r;
  std::vector<std::pair<Rational, LiePolynomial>> terms;
};

LiePolynomial::LiePolynomial(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

LiePolynomial LiePolynomial::generator(BasisElement b) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::generator;
  n->leaf = std::move(b);
  return LiePolynomial(std::move(n));
}

LiePolynomial LiePolynomial::bracket(LiePolynomial lhs, LiePolynomial rhs) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::bracket;
  n->l = std::move(lhs);
  n->r = std::move(rhs);
  return LiePolynomial(std::move(n));
}

LiePolynomial LiePolynomial::sum(std::vector<std::pair<Rational, LiePolynomial>> terms) {
  auto n = std::make_shared<Node>();
  n->kind = Kind::sum;
  n->terms = std::move(terms);
  return LiePolynomial(std::move(n));
}

LiePolynomial::Kind LiePolynomial::kind() const noexcept { return node_->kind; }

const BasisElement& LiePolynomial::leaf() const {
  if (node_->kind != Kind::generator) throw std::logic_error("not a generator node");
  return *node_->leaf;
}

const LiePolynomial& LiePolynomial::lhs() const {
  if (node_->kind != Kind::bracket) throw std::logic_error("not a bracket node");
  return *node_->l;
}

const LiePolynomial& LiePolynomial::rhs() const {
  if (node_->kind != Kind::bracket) throw std::logic_error("not a bracket node");
  return *node_->r;
}

const std::vector<std::pair<Rational, LiePolynomial>>& LiePolynomial::terms() const {
  if (node_->kind != Kind::sum) throw std::logic_error("not a sum node");
  return node_->terms;
}

Element evaluate(const LiePolynomial& p) {
  switch (p.kind()) {
    case LiePolynomial::Kind::generator:
      return Element(p.leaf());
    case LiePolynomial::Kind::bracket:
      return bracket(evaluate(p.lhs()), evaluate(p.rhs()));
    case LiePolynomial::Kind::sum: {
      Element out;
      for (const auto& [c, q] : p.terms()) out += c * evaluate(q);
      return out;
    }
  }
  return {};
}

DecomposeStep decompose_step(const RootedTree& t) {
  if (root_degree(t) <= 1) throw std::domain_error("decompose_step needs root degree > 1");
  const auto& comps = t.children();
  // Minimal-depth component, ties broken by smallest encoding; children are
  // encoding-sorted already, so the first minimum wins both criteria.
  std::size_t best = 0;
  int best_depth = depth(comps[0]);
  for (std::size_t i = 1; i < comps.size(); ++i) {
    int di = depth(comps[i]);
    if (di < best_depth) {
      best = i;
      best_depth = di;
    }
  }
  std::vector<RootedTree> rest_comps;
  rest_comps.reserve(comps.size() - 1);
  for (std::size_t i = 0; i < comps.size(); ++i)
    if (i != best) rest_comps.push_back(comps[i]);
  DecomposeStep out{comps[best], RootedTree(std::move(rest_comps)), {}};
  Element br =
      bracket(BasisElement::insertion(out.t1), BasisElement::insertion(out.rest));
  if (br.coeff(BasisElement::insertion(t)) != 1)
    throw std::logic_error("peeling bracket must hit the target with coefficient 1");
  for (const auto& [b, c] : br.terms())
    if (b.tree() != t) out.corrections.emplace_back(c, b.tree());
  return out;
}

namespace {

// Right-nested word [g1,[g2,...[g_{k-1},gk]...]] as its generator sequence.
using Word = std::vector<BasisElement>;
using Poly = std::map<Word, Rational>;

void add_poly(Poly& p, const Word& w, const Rational& c) {
  if (c == 0) return;
  auto [it, fresh] = p.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) p.erase(it);
  }
}

Word cons(const BasisElement& head, const Word& tail) {
  Word w;
  w.reserve(tail.size() + 1);
  w.push_back(head);
  w.insert(w.end(), tail.begin(), tail.end());
  return w;
}

// Normal form of [a, b]: peeling a = [h, t] through the Jacobi identity
// [a, b] = [h, [t, b]] - [t, [h, b]] terminates by induction on |a|.
Poly bracket_words(const Word& a, const Word& b) {
  Poly out;
  if (a.size() == 1) {
    add_poly(out, cons(a[0], b), 1);
    return out;
  }
  const BasisElement& h = a[0];
  Word t(a.begin() + 1, a.end());
  for (const auto& [w, c] : bracket_words(t, b)) add_poly(out, cons(h, w), c);
  for (const auto& [w, c] : bracket_words(t, cons(h, b))) add_poly(out, w, -c);
  return out;
}

Poly decompose_words(const RootedTree& t);

Poly decompose_words_uncached(const RootedTree& t) {
  Poly out;
  if (t.size() == 1 || root_degree(t) == 1) {
    add_poly(out, Word{BasisElement::insertion(t)}, 1);
    return out;
  }
  DecomposeStep step = decompose_step(t);
  Poly a = decompose_words(step.t1);
  Poly b = decompose_words(step.rest);
  for (const auto& [wa, ca] : a)
    for (const auto& [wb, cb] : b)
      for (const auto& [w, c] : bracket_words(wa, wb)) add_poly(out, w, ca * cb * c);
  for (const auto& [c, u] : step.corrections)
    for (const auto& [w, cu] : decompose_words(u)) add_poly(out, w, -c * cu);
  return out;
}

Poly decompose_words(const RootedTree& t) {
  static std::mutex mu;
  static std::map<std::string, Poly> cache;
  {
    std::scoped_lock lock(mu);
    if (auto it = cache.find(t.canon()); it != cache.end()) return it->second;
  }
  Poly res = decompose_words_uncached(t);
  {
    std::scoped_lock lock(mu);
    cache.emplace(t.canon(), res);
  }
  return res;
}

LiePolynomial word_to_poly(const Word& w) {
  LiePolynomial p = LiePolynomial::generator(w.back());
  for (std::size_t i = w.size() - 1; i-- > 0;)
    p = LiePolynomial::bracket(LiePolynomial::generator(w[i]), std::move(p));
  return p;
}

}  // namespace

LiePolynomial decompose(const RootedTree& t) {
  Poly words = decompose_words(t);
  if (words.size() == 1 && words.begin()->second == 1)
    return word_to_poly(words.begin()->first);
  std::vector<std::pair<Rational, LiePolynomial>> terms;
  terms.reserve(words.size());
  for (const auto& [w, c] : words) terms.emplace_back(c, word_to_poly(w));
  return LiePolynomial::sum(std::move(terms));
}

Report ladder_free_check(int m) {
  if (m < 1) throw std::domain_error("ladder index must be >= 1");
  auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = "ladder-free";
  r.params["m"] = m;
  BasisElement target = BasisElement::insertion(ladder(m + 1));
  for (int i = 1; i <= m; ++i) {
    int j = m + 1 - i;
    for (const auto& s : enumerate_trees(i))
      for (const auto& t : enumerate_trees(j)) {
        Element br = bracket(BasisElement::insertion(s), BasisElement::insertion(t));
        ++r.cases;
        if (Rational c = br.coeff(target); c != 0)
          r.violations.push_back(
              {"+" + s.canon() + " , +" + t.canon(), "0", to_string(c)});
      }
  }
  r.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

Report ladder_free_sweep(int max_m) {
  if (max_m < 1) throw std::domain_error("ladder index must be >= 1");
  Report r;
  r.suite = "ladder-free";
  r.params["max_m"] = max_m;
  for (int m = 1; m <= max_m; ++m) {
    Report one = ladder_free_check(m);
    r.cases += one.cases;
    r.violations.insert(r.violations.end(), one.violations.begin(), one.violations.end());
    r.elapsed += one.elapsed;
  }
  return r;
}

}  // namespace inselim
