#include "inselim/tree.hpp"

#include <algorithm>
#include <functional>
#include <mutex>

namespace inselim {

ParseError::ParseError(const std::string& what, std::size_t offset)
    : std::runtime_error(what + " at byte " + std::to_string(offset)), offset_(offset) {}

struct RootedTree::Node {
  std::vector<RootedTree> kids;
  std::string canon;
  int size = 1;
};

RootedTree::RootedTree() {
  static const std::shared_ptr<const Node> leaf = [] {
    auto n = std::make_shared<Node>();
    n->canon = "()";
    return std::shared_ptr<const Node>(std::move(n));
  }();
  node_ = leaf;
}

RootedTree::RootedTree(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

RootedTree::RootedTree(std::vector<RootedTree> children) {
  std::sort(children.begin(), children.end(),
            [](const RootedTree& a, const RootedTree& b) { return a.canon() < b.canon(); });
  auto n = std::make_shared<Node>();
  n->canon.reserve(2 + (children.empty() ? 0 : children.size() * children[0].canon().size()));
  n->canon = "(";
  for (const auto& c : children) {
    n->size += c.size();
    n->canon += c.canon();
  }
  n->canon += ")";
  n->kids = std::move(children);
  node_ = std::move(n);
}

const std::string& RootedTree::canon() const noexcept { return node_->canon; }
int RootedTree::size() const noexcept { return node_->size; }
const std::vector<RootedTree>& RootedTree::children() const noexcept { return node_->kids; }

namespace {

RootedTree parse_tree(std::string_view s, std::size_t& pos) {
  if (pos >= s.size() || s[pos] != '(') throw ParseError("expected '('", pos);
  ++pos;
  std::vector<RootedTree> kids;
  while (pos < s.size() && s[pos] == '(') kids.push_back(parse_tree(s, pos));
  if (pos >= s.size() || s[pos] != ')') throw ParseError("expected ')'", pos);
  ++pos;
  return kids.empty() ? RootedTree() : RootedTree(std::move(kids));
}

}  // namespace

RootedTree RootedTree::parse(std::string_view text) {
  std::size_t pos = 0;
  RootedTree t = parse_tree(text, pos);
  if (pos != text.size()) throw ParseError("trailing input", pos);
  return t;
}

int depth(const RootedTree& t) {
  int d = 0;
  for (const auto& c : t.children()) d = std::max(d, 1 + depth(c));
  return d;
}

int root_degree(const RootedTree& t) { return static_cast<int>(t.children().size()); }

TreeStats stats(const RootedTree& t) {
  TreeStats s;
  s.size = t.size();
  s.depth = depth(t);
  s.rdeg = root_degree(t);
  for (const auto& c : t.children()) s.compsize = std::max(s.compsize, c.size());
  s.components = t.children();
  return s;
}

const std::vector<RootedTree>& enumerate_trees(int n) {
  if (n < 1) throw std::domain_error("tree size must be >= 1");
  static std::mutex mu;
  static std::vector<std::unique_ptr<const std::vector<RootedTree>>> table;
  std::scoped_lock lock(mu);
  for (int k = static_cast<int>(table.size()) + 1; k <= n; ++k) {
    std::vector<RootedTree> out;
    if (k == 1) {
      out.emplace_back();
    } else {
      // A tree on k vertices is a root plus a multiset of child subtrees
      // totalling k-1 vertices; canonical children form a non-decreasing
      // sequence under the encoding order, so generating those sequences
      // from the pool of smaller trees yields each tree exactly once.
      std::vector<RootedTree> pool;
      for (int i = 1; i < k; ++i)
        pool.insert(pool.end(), table[i - 1]->begin(), table[i - 1]->end());
      std::sort(pool.begin(), pool.end(),
                [](const RootedTree& a, const RootedTree& b) { return a.canon() < b.canon(); });
      std::vector<RootedTree> chosen;
      std::function<void(std::size_t, int)> gen = [&](std::size_t start, int remaining) {
        if (remaining == 0) {
          out.emplace_back(RootedTree(chosen));
          return;
        }
        for (std::size_t i = start; i < pool.size(); ++i) {
          if (pool[i].size() > remaining) continue;
          chosen.push_back(pool[i]);
          gen(i, remaining - pool[i].size());
          chosen.pop_back();
        }
      };
      gen(0, k - 1);
      std::sort(out.begin(), out.end(),
                [](const RootedTree& a, const RootedTree& b) { return a.canon() < b.canon(); });
    }
    table.push_back(std::make_unique<const std::vector<RootedTree>>(std::move(out)));
  }
  return *table[n - 1];
}

RootedTree subtree_at(const RootedTree& t, int v) {
  if (v < 0 || v >= t.size()) throw std::out_of_range("vertex index out of range");
  if (v == 0) return t;
  int off = 1;
  for (const auto& c : t.children()) {
    if (v < off + c.size()) return subtree_at(c, v - off);
    off += c.size();
  }
  throw std::logic_error("preorder walk failed");
}

namespace {

RootedTree graft_rec(const RootedTree& s, int v, const RootedTree& t, int m) {
  std::vector<RootedTree> kids = s.children();
  if (v == 0) {
    for (int i = 0; i < m; ++i) kids.push_back(t);
    return RootedTree(std::move(kids));
  }
  int off = 1;
  for (auto& c : kids) {
    if (v < off + c.size()) {
      c = graft_rec(c, v - off, t, m);
      return RootedTree(std::move(kids));
    }
    off += c.size();
  }
  throw std::logic_error("preorder walk failed");
}

RootedTree remove_at(const RootedTree& t, int v) {
  std::vector<RootedTree> kids = t.children();
  int off = 1;
  for (std::size_t i = 0; i < kids.size(); ++i) {
    int sz = kids[i].size();
    if (v < off + sz) {
      if (v == off)
        kids.erase(kids.begin() + static_cast<std::ptrdiff_t>(i));
      else
        kids[i] = remove_at(kids[i], v - off);
      return RootedTree(std::move(kids));
    }
    off += sz;
  }
  throw std::logic_error("preorder walk failed");
}

}  // namespace

RootedTree graft_multi(const RootedTree& r, int v, const RootedTree& t, int m) {
  if (v < 0 || v >= r.size()) throw std::out_of_range("vertex index out of range");
  if (m < 0) throw std::domain_error("copy count must be >= 0");
  return graft_rec(r, v, t, m);
}

RootedTree graft(const RootedTree& s, int v, const RootedTree& t) {
  return graft_multi(s, v, t, 1);
}

std::vector<std::pair<RootedTree, RootedTree>> cuts(const RootedTree& t) {
  std::vector<std::pair<RootedTree, RootedTree>> out;
  out.reserve(static_cast<std::size_t>(t.size() > 0 ? t.size() - 1 : 0));
  for (int v = t.size() - 1; v >= 1; --v) out.emplace_back(remove_at(t, v), subtree_at(t, v));
  return out;
}

int alpha(const RootedTree& t1, const RootedTree& t2, const RootedTree& t3) {
  if (t1.size() + t3.size() != t2.size()) return 0;
  int count = 0;
  for (const auto& [r, p] : cuts(t2))
    if (r == t3 && p == t1) ++count;
  return count;
}

int beta(const RootedTree& t1, const RootedTree& t2, const RootedTree& t3) {
  if (t3.size() + t2.size() != t1.size()) return 0;
  int count = 0;
  for (int v = 0; v < t3.size(); ++v)
    if (graft(t3, v, t2) == t1) ++count;
  return count;
}

int m_stat(const RootedTree& s, const RootedTree& t, int v) {
  RootedTree at = subtree_at(s, v);
  int count = 0;
  for (const auto& c : at.children())
    if (c == t) ++count;
  return count;
}

Integer sym_count(const RootedTree& t) {
  Integer xi = 1;
  const auto& kids = t.children();  // canonical order puts equal subtrees adjacent
  std::size_t i = 0;
  while (i < kids.size()) {
    std::size_t j = i;
    while (j < kids.size() && kids[j] == kids[i]) ++j;
    unsigned long m = static_cast<unsigned long>(j - i);
    Integer fac, pw;
    mpz_fac_ui(fac.get_mpz_t(), m);
    Integer sub = sym_count(kids[i]);
    mpz_pow_ui(pw.get_mpz_t(), sub.get_mpz_t(), m);
    xi *= fac * pw;
    i = j;
  }
  return xi;
}

RootedTree ladder(int n) {
  if (n < 1) throw std::domain_error("ladder size must be >= 1");
  RootedTree t;
  for (int i = 1; i < n; ++i) t = RootedTree(std::vector<RootedTree>{t});
  return t;
}

}  // namespace inselim
