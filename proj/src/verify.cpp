#include "inselim/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <mutex>
#include <stdexcept>

#include "inselim/rng.hpp"

namespace inselim {

namespace {

using Clock = std::chrono::steady_clock;

std::chrono::milliseconds since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start);
}

std::string element_text(const Element& x) {
  if (x.is_zero()) return "0";
  std::string out;
  for (const auto& [b, c] : x.terms()) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + b.text();
  }
  return out;
}

// All basis elements with |degree| <= bound, ascending by (degree, encoding).
std::vector<BasisElement> basis_window(int bound) {
  std::vector<BasisElement> out;
  for (int n = -bound; n <= bound; ++n)
    for (const auto& b : basis_of_degree(n)) out.push_back(b);
  return out;
}

int abs_degree(const BasisElement& b) { return b.degree() < 0 ? -b.degree() : b.degree(); }

// a == c * b for some scalar c (zero elements count as proportional only to zero).
bool proportional(const Element& a, const Element& b) {
  if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
  if (a.term_count() != b.term_count()) return false;
  auto ia = a.terms().begin();
  auto ib = b.terms().begin();
  Rational ratio;
  bool have_ratio = false;
  for (; ia != a.terms().end(); ++ia, ++ib) {
    if (!(ia->first == ib->first)) return false;
    Rational r = ia->second / ib->second;
    if (!have_ratio) {
      ratio = r;
      have_ratio = true;
    } else if (r != ratio) {
      return false;
    }
  }
  return true;
}

// Deterministic sweep harness: evaluates one check per index in parallel and
// collects violations in index order.
template <typename Fn>
void sweep(Report& r, long long n, int jobs, Fn&& check) {
  std::vector<std::optional<Violation>> slots(static_cast<std::size_t>(n));
  parallel_for(n, jobs, [&](long long i) { slots[static_cast<std::size_t>(i)] = check(i); });
  r.cases += n;
  for (auto& s : slots)
    if (s) r.violations.push_back(std::move(*s));
}

// Rational span of elements in echelon form.  Rows are normalized with
// leading coefficient 1 at their smallest basis term; every term after the
// leading one is larger, so forward reduction decides membership.
class ElementSpan {
 public:
  Element reduce(Element e) const {
    for (const auto& row : rows_) {
      if (e.is_zero()) break;
      const BasisElement& lead = row.terms().begin()->first;
      Rational c = e.coeff(lead);
      if (c != 0) e -= c * row;
    }
    return e;
  }

  bool add(const Element& e) {
    Element res = reduce(e);
    if (res.is_zero()) return false;
    res *= Rational(1) / res.terms().begin()->second;
    auto pos = std::find_if(rows_.begin(), rows_.end(), [&](const Element& row) {
      return res.terms().begin()->first < row.terms().begin()->first;
    });
    rows_.insert(pos, std::move(res));
    return true;
  }

  bool contains(const Element& e) const { return reduce(e).is_zero(); }
  int dim() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<Element>& rows() const noexcept { return rows_; }

 private:
  std::vector<Element> rows_;
};

}  // namespace

const char* suite_name(Suite s) {
  switch (s) {
    case Suite::jacobi:
      return "jacobi";
    case Suite::antisymmetry:
      return "antisymmetry";
    case Suite::grading:
      return "grading";
    case Suite::sigma:
      return "sigma";
    case Suite::xi_identity:
      return "xi-identity";
    case Suite::aut_relation:
      return "aut-relation";
  }
  return "?";
}

std::optional<Suite> suite_from_name(std::string_view name) {
  for (Suite s : {Suite::jacobi, Suite::antisymmetry, Suite::grading, Suite::sigma,
                  Suite::xi_identity, Suite::aut_relation})
    if (name == suite_name(s)) return s;
  return std::nullopt;
}

Report run_suite(Suite suite, int max_total_degree, int jobs) {
  if (max_total_degree < 1) throw std::domain_error("degree budget must be >= 1");
  auto start = Clock::now();
  const int K = max_total_degree;
  Report r;
  r.suite = suite_name(suite);
  r.params["max_degree"] = K;

  switch (suite) {
    case Suite::jacobi: {
      auto B = basis_window(K);
      std::vector<std::array<std::size_t, 3>> cases;
      for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j) {
          if (abs_degree(B[i]) + abs_degree(B[j]) > K) continue;
          for (std::size_t k = 0; k < B.size(); ++k) {
            if (abs_degree(B[i]) + abs_degree(B[j]) + abs_degree(B[k]) > K) continue;
            cases.push_back({i, j, k});
          }
        }
      sweep(r, static_cast<long long>(cases.size()), jobs,
            [&](long long ci) -> std::optional<Violation> {
              auto [i, j, k] = cases[static_cast<std::size_t>(ci)];
              Element a(B[i]), b(B[j]), c(B[k]);
              Element jac = bracket(a, bracket(b, c)) + bracket(b, bracket(c, a)) +
                            bracket(c, bracket(a, b));
              if (jac.is_zero()) return std::nullopt;
              return Violation{B[i].text() + " , " + B[j].text() + " , " + B[k].text(), "0",
                               element_text(jac)};
            });
      break;
    }
    case Suite::antisymmetry:
    case Suite::grading: {
      auto B = basis_window(K);
      std::vector<std::array<std::size_t, 2>> cases;
      for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j)
          if (abs_degree(B[i]) + abs_degree(B[j]) <= K) cases.push_back({i, j});
      sweep(r, static_cast<long long>(cases.size()), jobs,
            [&](long long ci) -> std::optional<Violation> {
              auto [i, j] = cases[static_cast<std::size_t>(ci)];
              Element br = bracket(B[i], B[j]);
              if (suite == Suite::antisymmetry) {
                Element sum = br + bracket(B[j], B[i]);
                if (sum.is_zero()) return std::nullopt;
                return Violation{B[i].text() + " , " + B[j].text(), "0", element_text(sum)};
              }
              int want = B[i].degree() + B[j].degree();
              for (const auto& [b, c] : br.terms())
                if (b.degree() != want)
                  return Violation{B[i].text() + " , " + B[j].text(),
                                   "all terms in degree " + std::to_string(want),
                                   element_text(br)};
              return std::nullopt;
            });
      break;
    }
    case Suite::sigma: {
      auto B = basis_window(K);
      std::vector<std::array<std::size_t, 2>> pairs;
      for (std::size_t i = 0; i < B.size(); ++i)
        for (std::size_t j = 0; j < B.size(); ++j)
          if (abs_degree(B[i]) + abs_degree(B[j]) <= K) pairs.push_back({i, j});
      sweep(r, static_cast<long long>(pairs.size()), jobs,
            [&](long long ci) -> std::optional<Violation> {
              auto [i, j] = pairs[static_cast<std::size_t>(ci)];
              Element lhs = sigma(bracket(B[i], B[j]));
              Element rhs = bracket(sigma(Element(B[j])), sigma(Element(B[i])));
              if (lhs == rhs) return std::nullopt;
              return Violation{B[i].text() + " , " + B[j].text(), element_text(rhs),
                               element_text(lhs)};
            });
      auto singles = basis_window(K + 1);
      sweep(r, static_cast<long long>(singles.size()), jobs,
            [&](long long ci) -> std::optional<Violation> {
              const auto& b = singles[static_cast<std::size_t>(ci)];
              Element e(b);
              Element twice = sigma(sigma(e));
              if (twice == e) return std::nullopt;
              return Violation{b.text(), element_text(e), element_text(twice)};
            });
      break;
    }
    case Suite::xi_identity: {
      struct Triple {
        RootedTree r, s, t;
      };
      std::vector<Triple> cases;
      for (int tn = 2; tn <= K; ++tn)
        for (const auto& t : enumerate_trees(tn))
          for (int sn = 1; sn < tn; ++sn)
            for (const auto& s : enumerate_trees(sn))
              for (const auto& rr : enumerate_trees(tn - sn)) cases.push_back({rr, s, t});
      sweep(r, static_cast<long long>(cases.size()), jobs,
            [&](long long ci) -> std::optional<Violation> {
              const auto& [rr, s, t] = cases[static_cast<std::size_t>(ci)];
              Integer lhs = Integer(beta(t, s, rr)) * sym_count(t);
              Integer rhs = Integer(alpha(s, t, rr)) * sym_count(rr) * sym_count(s);
              if (lhs == rhs) return std::nullopt;
              return Violation{"r=" + rr.canon() + " s=" + s.canon() + " t=" + t.canon(),
                               to_string(rhs), to_string(lhs)};
            });
      break;
    }
    case Suite::aut_relation: {
      auto B = basis_window(K);
      const std::array<Rational, 3> zetas = {Rational(2), Rational(-3), Rational(1, 2)};
      std::vector<std::pair<std::size_t, std::size_t>> cases;  // (zeta index, basis index)
      for (std::size_t z = 0; z < zetas.size(); ++z)
        for (std::size_t i = 0; i < B.size(); ++i) cases.push_back({z, i});
      sweep(r, static_cast<long long>(cases.size()), jobs,
            [&](long long ci) -> std::optional<Violation> {
              auto [z, i] = cases[static_cast<std::size_t>(ci)];
              Element e(B[i]);
              Element lhs = tau_zero(tau_zeta(zetas[z], tau_zero(e)));
              Element rhs = tau_zeta(Rational(1) / zetas[z], e);
              if (lhs == rhs) return std::nullopt;
              return Violation{"zeta=" + to_string(zetas[z]) + " , " + B[i].text(),
                               element_text(rhs), element_text(lhs)};
            });
      sweep(r, static_cast<long long>(B.size()), jobs,
            [&](long long ci) -> std::optional<Violation> {
              Element e(B[static_cast<std::size_t>(ci)]);
              Element lhs = tau_zeta(Rational(-1), tau_zero(e));
              Element rhs = tau_zero(tau_zeta(Rational(-1), e));
              if (lhs == rhs) return std::nullopt;
              return Violation{B[static_cast<std::size_t>(ci)].text(), element_text(rhs),
                               element_text(lhs)};
            });
      break;
    }
  }

  r.elapsed = since(start);
  return r;
}

std::vector<Element> centralizer(const Element& x, int n) {
  auto degs = x.degree_support();
  if (degs.empty()) throw std::domain_error("centralizer needs a nonzero element");
  if (degs.size() != 1) throw std::domain_error("centralizer needs a homogeneous element");
  int m = degs[0];
  auto cols = basis_of_degree(n);
  auto target = basis_of_degree(m + n);
  std::map<BasisElement, int> tindex;
  for (std::size_t i = 0; i < target.size(); ++i) tindex.emplace(target[i], static_cast<int>(i));
  RationalMatrix mat(static_cast<int>(target.size()), static_cast<int>(cols.size()));
  for (std::size_t j = 0; j < cols.size(); ++j) {
    Element img = bracket(x, Element(cols[j]));
    for (const auto& [b, c] : img.terms()) mat(tindex.at(b), static_cast<int>(j)) = c;
  }
  std::vector<Element> out;
  for (const auto& v : null_space(mat)) {
    Element e;
    for (std::size_t j = 0; j < cols.size(); ++j) e.add_term(cols[j], v[j]);
    out.push_back(std::move(e));
  }
  return out;
}

Element random_homogeneous(int degree, CounterRng& rng) {
  if (degree == 0) throw std::domain_error("random elements live in nonzero degrees");
  const auto& ts = enumerate_trees(degree > 0 ? degree : -degree);
  auto mk = [&](const RootedTree& t) {
    return degree > 0 ? BasisElement::insertion(t) : BasisElement::elimination(t);
  };
  Element out;
  for (const auto& t : ts)
    if (rng.next() & 1) out.add_term(mk(t), rng.small_nonzero());
  if (out.is_zero()) out.add_term(mk(ts[rng.below(ts.size())]), rng.small_nonzero());
  return out;
}

Report self_centralizing_check(int max_degree, int trials, std::uint64_t seed, int jobs) {
  if (max_degree < 1) throw std::domain_error("degree bound must be >= 1");
  if (trials < 0) throw std::domain_error("trial count must be >= 0");
  auto start = Clock::now();
  Report r;
  r.suite = "self-centralizing";
  r.params["max_degree"] = max_degree;
  r.params["trials"] = trials;
  r.params["seed"] = seed;

  struct Case {
    Element x;
    int n;
    std::string label;
  };
  std::vector<Case> cases;
  for (int m = 1; m <= max_degree; ++m) {
    std::vector<std::pair<Element, std::string>> xs;
    for (const auto& b : basis_of_degree(m)) xs.emplace_back(Element(b), b.text());
    CounterRng rng(seed, static_cast<std::uint64_t>(m));
    for (int trial = 0; trial < trials; ++trial)
      xs.emplace_back(random_homogeneous(m, rng),
                      "random(m=" + std::to_string(m) + ",trial=" + std::to_string(trial) + ")");
    for (const auto& [x, label] : xs) {
      Element mirrored = sigma(x);
      for (int n = 1; n <= max_degree; ++n) {
        cases.push_back({x, n, label});
        cases.push_back({mirrored, -n, "sigma(" + label + ")"});
      }
    }
  }

  sweep(r, static_cast<long long>(cases.size()), jobs,
        [&](long long ci) -> std::optional<Violation> {
          const Case& c = cases[static_cast<std::size_t>(ci)];
          auto cz = centralizer(c.x, c.n);
          bool self = c.x.degree_support()[0] == c.n;
          std::string inputs = c.label + " , n=" + std::to_string(c.n);
          if (!self) {
            if (cz.empty()) return std::nullopt;
            return Violation{inputs, "trivial centralizer", element_text(cz.front())};
          }
          if (cz.size() == 1 && proportional(cz.front(), c.x)) return std::nullopt;
          return Violation{inputs, "centralizer spanned by the element itself",
                           cz.empty() ? "trivial" : element_text(cz.front())};
        });

  r.elapsed = since(start);
  return r;
}

LeadingTerm leading_term_check(const Element& x0, const Element& y0) {
  auto dx = x0.degree_support();
  auto dy = y0.degree_support();
  if (dx.empty() || dy.empty()) throw std::domain_error("inputs must be nonzero");
  if (dx.front() < 1 || dy.front() < 1)
    throw std::domain_error("inputs must be supported in positive degrees");
  if (proportional(x0, y0)) throw std::domain_error("inputs must be linearly independent");

  Element x = x0, y = y0;
  int nu = dx.back(), mu = dy.back();
  if (nu > mu) {
    std::swap(x, y);
    std::swap(nu, mu);
  }
  int kappa = 0;
  if (mu > nu) {
    kappa = mu;
  } else {
    Element xt = project_degree(x, nu);
    Element yt = project_degree(y, nu);
    if (!proportional(yt, xt)) {
      kappa = nu;
    } else {
      Rational c = yt.terms().begin()->second / xt.terms().begin()->second;
      for (int n = nu - 1; n >= 1; --n)
        if (project_degree(y, n) != c * project_degree(x, n)) {
          kappa = n;
          break;
        }
      if (kappa == 0) throw std::domain_error("inputs must be linearly independent");
    }
  }
  return LeadingTerm{nu, kappa, project_degree(bracket(x, y), nu + kappa)};
}

DerivationSpace derivation_space(int truncate) {
  if (truncate < 1) throw std::domain_error("truncation bound must be >= 1");
  const int N = truncate;
  auto B = basis_window(N);

  std::map<int, std::vector<BasisElement>> slice;
  std::map<int, std::map<BasisElement, int>> slice_index;
  for (int n = -N; n <= N; ++n) {
    slice[n] = basis_of_degree(n);
    for (std::size_t i = 0; i < slice[n].size(); ++i)
      slice_index[n].emplace(slice[n][i], static_cast<int>(i));
  }
  std::map<BasisElement, int> offset;
  int total = 0;
  for (const auto& b : B) {
    offset.emplace(b, total);
    total += static_cast<int>(slice[b.degree()].size());
  }

  RowReducer red(total);
  for (std::size_t i = 0; i < B.size(); ++i)
    for (std::size_t j = i + 1; j < B.size(); ++j) {
      int D = B[i].degree() + B[j].degree();
      if (D < -N || D > N) continue;
      const auto& target = slice[D];
      const auto& tindex = slice_index[D];
      std::vector<std::vector<Rational>> rows(
          target.size(), std::vector<Rational>(static_cast<std::size_t>(total)));
      Element ab = bracket(B[i], B[j]);
      for (const auto& [e, c] : ab.terms()) {
        int base = offset.at(e);
        for (std::size_t k = 0; k < target.size(); ++k)
          rows[k][static_cast<std::size_t>(base) + k] += c;
      }
      const auto& wa = slice[B[i].degree()];
      for (std::size_t wi = 0; wi < wa.size(); ++wi) {
        Element wb = bracket(wa[wi], B[j]);
        for (const auto& [u, c] : wb.terms())
          rows[static_cast<std::size_t>(tindex.at(u))]
              [static_cast<std::size_t>(offset.at(B[i])) + wi] -= c;
      }
      const auto& wbs = slice[B[j].degree()];
      for (std::size_t wi = 0; wi < wbs.size(); ++wi) {
        Element aw = bracket(B[i], wbs[wi]);
        for (const auto& [u, c] : aw.terms())
          rows[static_cast<std::size_t>(tindex.at(u))]
              [static_cast<std::size_t>(offset.at(B[j])) + wi] -= c;
      }
      for (auto& row : rows) red.add_row(std::move(row));
    }

  DerivationSpace out;
  for (const auto& v : red.kernel_basis()) {
    std::map<BasisElement, Element> images;
    for (const auto& b : B) {
      const auto& tb = slice[b.degree()];
      Element img;
      for (std::size_t k = 0; k < tb.size(); ++k)
        img.add_term(tb[k], v[static_cast<std::size_t>(offset.at(b)) + k]);
      if (!img.is_zero()) images.emplace(b, std::move(img));
    }
    out.basis.push_back(std::move(images));
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

const char* to_string(SubalgebraKind k) {
  switch (k) {
    case SubalgebraKind::abelian:
      return "abelian";
    case SubalgebraKind::nonabelian_2dim:
      return "nonabelian_2dim";
    case SubalgebraKind::sl2:
      return "sl2";
    case SubalgebraKind::h_plus_opposite_roots:
      return "h_plus_opposite_roots";
    case SubalgebraKind::other:
      return "other";
  }
  return "?";
}

SubalgebraClass subalgebra_closure(const std::vector<Element>& gens, int max_rounds) {
  if (gens.empty()) throw std::domain_error("need at least one generator");
  if (max_rounds < 0) throw std::domain_error("round budget must be >= 0");
  ElementSpan span;
  for (const auto& g : gens) span.add(g);

  // Iterated brackets double in degree every absorption round, so open input
  // would explode without a cutoff: once the span outgrows anything the
  // dimension <= 3 classification can use, one escaping bracket settles the
  // answer and absorption stops.
  constexpr int kDimCap = 12;
  constexpr int kDegreeCap = 12;
  auto max_abs_degree = [](const Element& e) {
    int m = 0;
    for (int n : e.degree_support()) m = std::max(m, std::abs(n));
    return m;
  };

  SubalgebraClass out;
  int round = 0;
  for (;;) {
    const bool last = round == max_rounds || span.dim() > kDimCap;
    std::optional<Element> escape;
    std::vector<Element> found;
    bool degree_blowup = false;
    const auto rows = span.rows();
    for (std::size_t i = 0; i < rows.size() && !(last && escape); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        Element br = bracket(rows[i], rows[j]);
        if (span.contains(br)) continue;
        if (!escape) escape = br;
        if (last) break;
        if (max_abs_degree(br) > kDegreeCap) degree_blowup = true;
        found.push_back(std::move(br));
      }
    if (!escape) {
      out.closed = true;
      break;
    }
    if (last || degree_blowup) {
      out.escaping = std::move(escape);
      break;
    }
    ++round;
    for (const auto& f : found) span.add(f);
  }

  out.dimension = span.dim();
  if (!out.closed) {
    out.kind = SubalgebraKind::other;
    return out;
  }

  ElementSpan derived;
  bool any_nonzero = false;
  const auto& rows = span.rows();
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      Element br = bracket(rows[i], rows[j]);
      if (br.is_zero()) continue;
      any_nonzero = true;
      derived.add(br);
    }
  if (!any_nonzero)
    out.kind = SubalgebraKind::abelian;
  else if (out.dimension == 2)
    out.kind = SubalgebraKind::nonabelian_2dim;
  else if (out.dimension == 3 && derived.dim() == 3)
    out.kind = SubalgebraKind::sl2;
  else if (out.dimension == 3 && derived.dim() == 2)
    out.kind = SubalgebraKind::h_plus_opposite_roots;
  else
    out.kind = SubalgebraKind::other;
  return out;
}

}  // namespace inselim
