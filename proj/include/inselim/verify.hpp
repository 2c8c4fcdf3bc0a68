#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string_view>

#include "inselim/algebra.hpp"
#include "inselim/matrix.hpp"
#include "inselim/report.hpp"
#include "inselim/rng.hpp"

namespace inselim {

enum class Suite {
  jacobi,         // [a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0
  antisymmetry,   // [a,b] + [b,a] = 0
  grading,        // every term of [a,b] has degree deg a + deg b
  sigma,          // sigma([a,b]) = [sigma(b), sigma(a)] and sigma^2 = id
  xi_identity,    // beta(t,s,r) xi_t = alpha(s,t,r) xi_r xi_s
  aut_relation,   // tau_0 tau_zeta tau_0 = tau_{1/zeta}; tau_{-1} commutes with tau_0
};

const char* suite_name(Suite s);
std::optional<Suite> suite_from_name(std::string_view name);

// Exhaustive sweep of a structural identity over all basis tuples within
// the total |degree| budget.  Deterministic; jobs only splits the work.
Report run_suite(Suite suite, int max_total_degree, int jobs = 1);

// Seeded homogeneous element of the given nonzero degree: each basis vector
// of the slice enters with probability 1/2 (at least one forced) and
// coefficients are uniform over {-9,...,9} \ {0}.
Element random_homogeneous(int degree, CounterRng& rng);

// Basis of {y in the degree-n slice : [x, y] = 0} for homogeneous x != 0,
// computed as the kernel of the matrix of ad_x into degree deg(x) + n.
std::vector<Element> centralizer(const Element& x, int n);

// For every 1 <= m, n <= max_degree checks that homogeneous degree-m
// elements (each basis vector plus `trials` seeded random ones) have
// centralizer {0} in degree n for n != m and exactly their own line for
// n == m; mirrored through sigma onto the elimination side.
Report self_centralizing_check(int max_degree, int trials, std::uint64_t seed, int jobs = 1);

// For independent x, y supported in positive degrees: nu is the smaller of
// the two top degrees (inputs swapped so the second dominates), kappa the
// largest degree where the above-kappa tails stop being proportional, and
// witness the degree-(nu+kappa) component of the bracket, which is provably
// nonzero.  Throws std::domain_error on dependent or non-positive input.
struct LeadingTerm {
  int nu = 0;
  int kappa = 0;
  Element witness;
};
LeadingTerm leading_term_check(const Element& x, const Element& y);

// Solves the degree-0 derivation equations on the slices |degree| <= N:
// unknowns are the images of basis elements within their own slice, and
// every pair constraint D([a,b]) = [D(a),b] + [a,D(b)] with all degrees in
// the window contributes rows.  Returns the kernel as explicit maps.
struct DerivationSpace {
  int dimension = 0;
  std::vector<std::map<BasisElement, Element>> basis;  // one map per kernel vector
};
DerivationSpace derivation_space(int truncate);

enum class SubalgebraKind { abelian, nonabelian_2dim, sl2, h_plus_opposite_roots, other };

struct SubalgebraClass {
  bool closed = false;
  int dimension = 0;
  SubalgebraKind kind = SubalgebraKind::other;
  std::optional<Element> escaping;  // a bracket outside the span when not closed
};

// Spans the generators, absorbs pairwise brackets for up to max_rounds
// rounds, and classifies the result when it closes with dimension <= 3:
// abelian, nonabelian of dimension 2, sl2 (derived algebra is the whole
// span), or a grading line plus opposite-degree root vectors (derived
// algebra of dimension 2).  Absorption also stops, reporting an escaping
// bracket, once the span grows past dimension 12 or degree 12; iterated
// brackets double in degree per round, so open input must be cut off.
SubalgebraClass subalgebra_closure(const std::vector<Element>& gens, int max_rounds = 3);

const char* to_string(SubalgebraKind k);

}  // namespace inselim
