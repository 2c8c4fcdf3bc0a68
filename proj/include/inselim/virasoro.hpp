#pragma once

#include <map>
#include <optional>
#include <string_view>

#include "inselim/rational.hpp"
#include "inselim/report.hpp"

namespace inselim {

// Basis symbol of V(M) for M = (1/q)Z: the central element z or e_alpha with
// alpha*q integral.  z orders before every e_alpha; e's order by index.
struct VBasis {
  bool is_z = false;
  Rational alpha;  // ignored when is_z

  static VBasis z() { return VBasis{true, Rational(0)}; }
  static VBasis e(Rational a) { return VBasis{false, std::move(a)}; }

  friend bool operator==(const VBasis& a, const VBasis& b) {
    return a.is_z == b.is_z && (a.is_z || a.alpha == b.alpha);
  }
  friend bool operator<(const VBasis& a, const VBasis& b) {
    if (a.is_z != b.is_z) return a.is_z;
    if (a.is_z) return false;
    return a.alpha < b.alpha;
  }

  std::string text() const;
};

// Sparse exact element of V((1/q)Z).  All arithmetic requires matching q.
class VElement {
 public:
  explicit VElement(long q);
  static VElement e(long q, const Rational& alpha);  // alpha*q must be integral
  static VElement z(long q);

  long q() const noexcept { return q_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  std::size_t term_count() const noexcept { return terms_.size(); }
  const std::map<VBasis, Rational>& terms() const noexcept { return terms_; }
  Rational coeff(const VBasis& b) const;

  void add_term(const VBasis& b, const Rational& c);
  VElement& operator+=(const VElement& o);
  VElement& operator-=(const VElement& o);
  VElement& operator*=(const Rational& c);
  friend VElement operator+(VElement a, const VElement& b) { return a += b; }
  friend VElement operator-(VElement a, const VElement& b) { return a -= b; }
  friend VElement operator*(const Rational& c, VElement a) { return a *= c; }
  friend VElement operator-(VElement a) { return a *= Rational(-1); }
  friend bool operator==(const VElement& a, const VElement& b) {
    return a.q_ == b.q_ && a.terms_ == b.terms_;
  }

  std::string text() const;

 private:
  long q_;
  std::map<VBasis, Rational> terms_;
};

// [e_a, e_b] = (b - a) e_{a+b} + b^3 [a = -b] z, z central, extended
// bilinearly.  Operands must share q.
VElement v_bracket(const VElement& x, const VElement& y);

// Automorphism induced by the multiplicative homomorphism M -> Q* with
// 1/q -> theta_gen: e_a -> theta_gen^(a q) e_a, z -> z.
VElement tau_theta(const Rational& theta_gen, const VElement& x);

// kappa_zeta(e_a) = zeta e_{a/zeta}, kappa_zeta(z) = z/zeta.  Requires
// M/zeta = M, which for cyclic M forces zeta in {1, -1}.
VElement kappa_zeta(const Rational& zeta, const VElement& x);

// Derivation induced by the additive homomorphism M -> Q with
// 1/q -> theta_gen: e_a -> (a q) theta_gen e_a, z -> 0.
VElement delta_theta(const Rational& theta_gen, const VElement& x);

enum class VSuite {
  jacobi,         // on all e-triples in the index window
  tau_hom,        // tau_theta([x,y]) = [tau_theta x, tau_theta y]
  kappa_hom,      // kappa_zeta([x,y]) = [kappa_zeta x, kappa_zeta y]
  delta_leibniz,  // delta_theta([x,y]) = [delta_theta x, y] + [x, delta_theta y]
};

const char* v_suite_name(VSuite s);
std::optional<VSuite> v_suite_from_name(std::string_view name);

// Exhaustive sweep over the basis window {z} and e_{k/q}, |k| <= bound.
// theta feeds tau_hom and delta_leibniz, zeta feeds kappa_hom.
Report v_verify(VSuite suite, long q, int bound, const Rational& theta = Rational(3),
                const Rational& zeta = Rational(-1), int jobs = 1);

}  // namespace inselim
