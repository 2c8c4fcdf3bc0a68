#pragma once

#include "inselim/element.hpp"

namespace inselim {

// Lie bracket of two basis elements.
//
//   [d, D_t^+] = |t| D_t^+            [d, D_t^-] = -|t| D_t^-
//   [D_s^+, D_t^+] = sum over v in V(t) of D^+_{t with s grafted at v}
//                  - sum over v in V(s) of D^+_{s with t grafted at v}
//   [D_s^-, D_t^-] = sum over r of (alpha(t,r,s) - alpha(s,r,t)) D_r^-
//   [D_s^-, D_t^+] = sum over r of alpha(s,t,r) D_r^+
//                  + sum over r of beta(s,t,r) D_r^-
//                  + (s == t ? d : 0)
//
// alpha-type coefficients are found by direct enumeration of edge cuts and
// beta-type coefficients by direct enumeration of graft targets; results are
// aggregated in canonical form.  Memoized behind a shared-read cache.
Element bracket(const BasisElement& a, const BasisElement& b);

// Bilinear extension.
Element bracket(const Element& x, const Element& y);

// Anti-involution: d -> d, D_t^+ -> xi_t D_t^-, D_t^- -> (1/xi_t) D_t^+,
// where xi_t counts root-preserving automorphisms of t.
Element sigma(const Element& x);

// Automorphism scaling degree-n terms by zeta^n; requires zeta != 0.
Element tau_zeta(const Rational& zeta, const Element& x);

// The involution sigma composed with negation: d -> -d,
// D_t^+ -> -xi_t D_t^-, D_t^- -> -(1/xi_t) D_t^+.
Element tau_zero(const Element& x);

}  // namespace inselim
