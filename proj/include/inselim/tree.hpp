#pragma once

#include <compare>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "inselim/rational.hpp"

namespace inselim {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t offset);
  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

// A rooted tree considered up to root-preserving isomorphism.
//
// Wire format: Tree := "(" Tree* ")", one "(" ... ")" per vertex.  A tree is
// canonical when the encodings of its children are sorted ascending under
// bytewise comparison, recursively.  Construction always canonicalizes, so
// two RootedTree values are isomorphic iff their encodings are equal.
//
// Vertices are addressed by preorder index over the canonical form: the root
// is 0, followed by each child subtree in canonical child order.
class RootedTree {
 public:
  // The one-vertex tree "()".
  RootedTree();

  // Tree with the given child subtrees; children are re-sorted canonically.
  explicit RootedTree(std::vector<RootedTree> children);

  // Parses the wire format; input need not be canonical.  Throws ParseError
  // carrying the byte offset of the first offending position.
  static RootedTree parse(std::string_view text);

  const std::string& canon() const noexcept;
  int size() const noexcept;  // number of vertices
  const std::vector<RootedTree>& children() const noexcept;

  bool operator==(const RootedTree& o) const noexcept { return canon() == o.canon(); }
  std::strong_ordering operator<=>(const RootedTree& o) const noexcept {
    return canon().compare(o.canon()) <=> 0;
  }

 private:
  struct Node;
  explicit RootedTree(std::shared_ptr<const Node> node);
  std::shared_ptr<const Node> node_;
};

struct TreeStats {
  int size = 0;      // vertex count
  int depth = 0;     // edge count of a longest root-to-leaf path
  int rdeg = 0;      // number of children of the root
  int compsize = 0;  // vertex count of a largest child subtree
  std::vector<RootedTree> components;  // child subtrees, canonical order
};

TreeStats stats(const RootedTree& t);
int depth(const RootedTree& t);
int root_degree(const RootedTree& t);

// All canonical trees with exactly n >= 1 vertices, ascending by encoding.
// Memoized per size; the returned reference stays valid for the process.
const std::vector<RootedTree>& enumerate_trees(int n);

// One (R_e, P_e) pair per edge e: P_e is the subtree hanging below e, R_e is
// the rest of the tree.  Edges are listed by decreasing preorder index of
// the child endpoint, so the deepest-last edge comes first.
std::vector<std::pair<RootedTree, RootedTree>> cuts(const RootedTree& t);

// Subtree rooted at preorder vertex v.
RootedTree subtree_at(const RootedTree& t, int v);

// s with one copy of t attached as a new child of vertex v.
RootedTree graft(const RootedTree& s, int v, const RootedTree& t);

// r with m >= 0 copies of t attached as new children of vertex v.
RootedTree graft_multi(const RootedTree& r, int v, const RootedTree& t, int m);

// Number of edges e of t2 whose cut satisfies R_e(t2) = t3 and P_e(t2) = t1.
int alpha(const RootedTree& t1, const RootedTree& t2, const RootedTree& t3);

// Number of vertices v of t3 with t1 = graft(t3, v, t2).
int beta(const RootedTree& t1, const RootedTree& t2, const RootedTree& t3);

// Largest m such that m copies of t can be split off the children of vertex
// v of s; equals the multiplicity of t among the child subtrees at v.
int m_stat(const RootedTree& s, const RootedTree& t, int v);

// Number of root-preserving graph automorphisms.
Integer sym_count(const RootedTree& t);

// The path tree on n >= 1 vertices.
RootedTree ladder(int n);

}  // namespace inselim
