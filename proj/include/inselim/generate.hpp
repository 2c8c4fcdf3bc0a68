#pragma once

#include <optional>
#include <utility>

#include "inselim/algebra.hpp"
#include "inselim/report.hpp"

namespace inselim {

// Strict partial order on same-size trees: s precedes t when s is deeper,
// or equally deep with smaller root degree.
enum class Prec { less, greater, equal, incomparable };
Prec prec(const RootedTree& s, const RootedTree& t);

// Formal Lie expression over basis generators: a generator leaf, a bracket
// of two expressions, or a rational combination of expressions.
class LiePolynomial {
 public:
  enum class Kind { generator, bracket, sum };

  static LiePolynomial generator(BasisElement b);
  static LiePolynomial bracket(LiePolynomial lhs, LiePolynomial rhs);
  static LiePolynomial sum(std::vector<std::pair<Rational, LiePolynomial>> terms);

  Kind kind() const noexcept;
  const BasisElement& leaf() const;       // kind == generator
  const LiePolynomial& lhs() const;       // kind == bracket
  const LiePolynomial& rhs() const;       // kind == bracket
  const std::vector<std::pair<Rational, LiePolynomial>>& terms() const;  // kind == sum

 private:
  struct Node;
  explicit LiePolynomial(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

Element evaluate(const LiePolynomial& p);

// One peeling step for a tree with root degree > 1: split off the component
// of minimal depth (ties broken by smallest encoding), leaving the tree of
// the remaining components, so that
//   D_t^+ = [D_{t1}^+, D_{rest}^+] - sum of corrections,
// where every correction tree strictly precedes t under prec.
struct DecomposeStep {
  RootedTree t1;
  RootedTree rest;
  std::vector<std::pair<Rational, RootedTree>> corrections;
};
DecomposeStep decompose_step(const RootedTree& t);

// Expresses D_t^+ over the generators {D_u^+ : root degree of u is 1, or
// |u| = 1}.  The result is in right-nested normal form: a generator, one
// right-nested bracket word, or a rational sum of such words.
LiePolynomial decompose(const RootedTree& t);

// Checks that no bracket of two insertion operators with |s| + |t| = m + 1
// produces the path tree on m + 1 vertices, exhaustively for the given m.
Report ladder_free_check(int m);

// Aggregate of ladder_free_check over m = 1..max_m.
Report ladder_free_sweep(int max_m);

}  // namespace inselim
