#include "inselim/algebra.hpp"

#include <gtest/gtest.h>

#include <cstdlib>
#include <string>
#include <vector>

namespace inselim {
namespace {

BasisElement plus(const std::string& s) { return BasisElement::insertion(RootedTree::parse(s)); }
BasisElement minus(const std::string& s) {
  return BasisElement::elimination(RootedTree::parse(s));
}
BasisElement grading() { return BasisElement::grading(); }

Element el(const BasisElement& b, const Rational& c = Rational(1)) { return Element(b, c); }

std::vector<BasisElement> window(int bound) {
  std::vector<BasisElement> out;
  for (int n = -bound; n <= bound; ++n)
    for (const auto& b : basis_of_degree(n)) out.push_back(b);
  return out;
}

TEST(BracketFixtures, EliminationLeafOnInsertionCherry) {
  Element got = bracket(minus("()"), plus("(()())"));
  Element want = el(plus("(())"), Rational(2));
  EXPECT_EQ(got, want);
}

TEST(BracketFixtures, EliminationCherryOnInsertionLeaf) {
  Element got = bracket(minus("(()())"), plus("()"));
  Element want = el(minus("(())"));
  EXPECT_EQ(got, want);
}

TEST(BracketFixtures, InsertionLeafOnInsertionCherry) {
  Element got = bracket(plus("()"), plus("(()())"));
  Element want = el(plus("(()()())"));
  want += el(plus("((())())"), Rational(2));
  want += el(plus("((()()))"), Rational(-1));
  EXPECT_EQ(got, want);
}

TEST(BracketFixtures, EliminationLeafOnEliminationCherry) {
  Element got = bracket(minus("()"), minus("(()())"));
  Element want = el(minus("(()()())"), Rational(-3));
  want += el(minus("((())())"), Rational(-1));
  want += el(minus("((()()))"), Rational(1));
  EXPECT_EQ(got, want);
}

TEST(BracketFixtures, GradingEigenvalues) {
  EXPECT_TRUE(bracket(grading(), grading()).is_zero());
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_trees(n)) {
      BasisElement p = BasisElement::insertion(t);
      BasisElement m = BasisElement::elimination(t);
      EXPECT_EQ(bracket(grading(), p), el(p, Rational(n)));
      EXPECT_EQ(bracket(grading(), m), el(m, Rational(-n)));
      EXPECT_EQ(bracket(p, grading()), el(p, Rational(-n)));
    }
}

TEST(BracketFixtures, GradingElementPairing) {
  EXPECT_EQ(bracket(minus("()"), plus("()")), el(grading()));
  EXPECT_EQ(bracket(minus("(())"), plus("(())")), el(grading()));
  for (int sn = 1; sn <= 4; ++sn)
    for (const auto& s : enumerate_trees(sn))
      for (int tn = 1; tn <= 4; ++tn)
        for (const auto& t : enumerate_trees(tn)) {
          Element br = bracket(BasisElement::elimination(s), BasisElement::insertion(t));
          Rational want = s == t ? Rational(1) : Rational(0);
          EXPECT_EQ(br.coeff(grading()), want) << s.canon() << " vs " << t.canon();
        }
}

TEST(BracketFixtures, MixedBracketsCanVanish) {
  EXPECT_TRUE(bracket(minus("(())"), plus("(()())")).is_zero());
  EXPECT_TRUE(bracket(plus("(())"), minus("(()())")).is_zero());
}

TEST(Bracket, AlternatingAndAntisymmetric) {
  auto B = window(4);
  for (const auto& a : B) {
    EXPECT_TRUE(bracket(a, a).is_zero()) << a.text();
    for (const auto& b : B) {
      Element sum = bracket(a, b) + bracket(b, a);
      EXPECT_TRUE(sum.is_zero()) << a.text() << " , " << b.text();
    }
  }
}

TEST(Bracket, GradedTerms) {
  auto B = window(4);
  for (const auto& a : B)
    for (const auto& b : B) {
      Element br = bracket(a, b);
      for (const auto& [term, c] : br.terms())
        EXPECT_EQ(term.degree(), a.degree() + b.degree()) << a.text() << " , " << b.text();
    }
}

TEST(Bracket, Bilinear) {
  Element x = el(plus("()"), Rational(2)) + el(minus("(())"), Rational(-3)) +
              el(grading(), Rational(1, 2));
  Element y = el(plus("(()())")) + el(minus("()"), Rational(5));
  Element z = el(plus("(())"), Rational(-1, 3)) + el(grading(), Rational(4));
  EXPECT_EQ(bracket(x, y + z), bracket(x, y) + bracket(x, z));
  EXPECT_EQ(bracket(x + y, z), bracket(x, z) + bracket(y, z));
  Rational c(7, 3);
  EXPECT_EQ(bracket(c * x, y), c * bracket(x, y));
  EXPECT_EQ(bracket(x, c * y), c * bracket(x, y));
}

TEST(Bracket, JacobiOnMixedElements) {
  Element x = el(plus("()")) + el(minus("(())"), Rational(2));
  Element y = el(plus("(())"), Rational(-1)) + el(grading());
  Element z = el(minus("()"), Rational(3)) + el(plus("(()())"));
  Element jac = bracket(x, bracket(y, z)) + bracket(y, bracket(z, x)) + bracket(z, bracket(x, y));
  EXPECT_TRUE(jac.is_zero());
}

TEST(Sigma, Fixtures) {
  EXPECT_EQ(sigma(el(grading())), el(grading()));
  EXPECT_EQ(sigma(el(plus("(()())"))), el(minus("(()())"), Rational(2)));
  EXPECT_EQ(sigma(el(minus("(()())"))), el(plus("(()())"), Rational(1, 2)));
  EXPECT_EQ(sigma(el(plus("(()()())"))), el(minus("(()()())"), Rational(6)));
  EXPECT_EQ(sigma(el(plus("(())"))), el(minus("(())")));
}

TEST(Sigma, Involution) {
  for (const auto& b : window(6)) {
    Element e = el(b);
    EXPECT_EQ(sigma(sigma(e)), e) << b.text();
  }
}

TEST(Sigma, AntiAutomorphism) {
  auto B = window(5);
  for (const auto& a : B)
    for (const auto& b : B) {
      if (std::abs(a.degree()) + std::abs(b.degree()) > 5) continue;
      Element lhs = sigma(bracket(a, b));
      Element rhs = bracket(sigma(el(b)), sigma(el(a)));
      EXPECT_EQ(lhs, rhs) << a.text() << " , " << b.text();
    }
}

TEST(Tau, ZetaFixtures) {
  EXPECT_EQ(tau_zeta(Rational(2), el(plus("(()())"))), el(plus("(()())"), Rational(8)));
  EXPECT_EQ(tau_zeta(Rational(2), el(minus("(()())"))), el(minus("(()())"), Rational(1, 8)));
  EXPECT_EQ(tau_zeta(Rational(2), el(grading())), el(grading()));
}

TEST(Tau, ZetaNegativeBase) {
  EXPECT_EQ(tau_zeta(Rational(-3), el(plus("((())())"))), el(plus("((())())"), Rational(81)));
  EXPECT_EQ(tau_zeta(Rational(-3), el(plus("()"))), el(plus("()"), Rational(-3)));
  EXPECT_EQ(tau_zeta(Rational(1, 2), el(minus("(())"))), el(minus("(())"), Rational(4)));
}

TEST(Tau, ZetaZeroRejected) {
  EXPECT_THROW(tau_zeta(Rational(0), el(plus("()"))), std::domain_error);
}

TEST(Tau, ZetaInverseComposesToIdentity) {
  Element x = el(plus("()"), Rational(2)) + el(minus("(()())"), Rational(-1, 3)) + el(grading());
  EXPECT_EQ(tau_zeta(Rational(1, 2), tau_zeta(Rational(2), x)), x);
}

TEST(Tau, ZeroFixtures) {
  EXPECT_EQ(tau_zero(el(grading())), el(grading(), Rational(-1)));
  EXPECT_EQ(tau_zero(el(plus("(()())"))), el(minus("(()())"), Rational(-2)));
  Element x = el(plus("(())"), Rational(3)) + el(minus("()"), Rational(-1, 2));
  EXPECT_EQ(tau_zero(tau_zero(x)), x);
}

TEST(Tau, ZeroIsAnAutomorphism) {
  auto B = window(4);
  for (const auto& a : B)
    for (const auto& b : B) {
      Element lhs = tau_zero(bracket(a, b));
      Element rhs = bracket(tau_zero(el(a)), tau_zero(el(b)));
      EXPECT_EQ(lhs, rhs) << a.text() << " , " << b.text();
    }
}

TEST(Tau, ConjugationInvertsZeta) {
  for (const Rational& zeta : {Rational(2), Rational(-3), Rational(1, 2)})
    for (const auto& b : window(4)) {
      Element e = el(b);
      Element lhs = tau_zero(tau_zeta(zeta, tau_zero(e)));
      Element rhs = tau_zeta(Rational(1) / zeta, e);
      EXPECT_EQ(lhs, rhs) << to_string(zeta) << " on " << b.text();
    }
}

TEST(Tau, MinusOneCommutesWithZero) {
  for (const auto& b : window(4)) {
    Element e = el(b);
    EXPECT_EQ(tau_zeta(Rational(-1), tau_zero(e)), tau_zero(tau_zeta(Rational(-1), e)))
        << b.text();
  }
}

}  // namespace
}  // namespace inselim
