#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include "inselim/tree.hpp"

namespace inselim {

// One canonical basis vector of the insertion-elimination Lie algebra:
// the grading element d, an insertion operator indexed by a rooted tree
// (degree +|t|), or an elimination operator indexed by a rooted tree
// (degree -|t|).
//
// Text form: "d", "+<canon>", "-<canon>".
class BasisElement {
 public:
  enum class Kind : std::uint8_t { grading, insertion, elimination };

  static BasisElement grading();
  static BasisElement insertion(RootedTree t);
  static BasisElement elimination(RootedTree t);
  static BasisElement from_text(std::string_view text);

  Kind kind() const noexcept { return kind_; }
  bool is_grading() const noexcept { return kind_ == Kind::grading; }
  const RootedTree& tree() const;  // requires kind != grading
  int degree() const noexcept;

  std::string text() const;

  // Total order by (degree, tree encoding); this is the term order used for
  // all deterministic output.
  std::strong_ordering operator<=>(const BasisElement& o) const noexcept;
  bool operator==(const BasisElement& o) const noexcept;

 private:
  BasisElement(Kind kind, RootedTree t) : kind_(kind), tree_(std::move(t)) {}

  Kind kind_;
  RootedTree tree_;  // unused marker value for the grading element
};

// The ordered basis of the degree-n slice: {d} for n = 0, insertion
// operators over trees of size n for n > 0, elimination operators over
// trees of size -n for n < 0.
std::vector<BasisElement> basis_of_degree(int n);

}  // namespace inselim
