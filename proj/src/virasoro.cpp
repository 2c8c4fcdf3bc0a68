#include "inselim/virasoro.hpp"

#include <chrono>
#include <stdexcept>
#include <vector>

namespace inselim {

namespace {

void check_same_q(const VElement& a, const VElement& b) {
  if (a.q() != b.q()) throw std::domain_error("operands live in different index groups");
}

long integral_index(long q, const Rational& alpha) {
  Rational scaled = alpha * Rational(q);
  if (scaled.get_den() != 1) throw std::domain_error("index is not a multiple of 1/q");
  return scaled.get_num().get_si();
}

}  // namespace

std::string VBasis::text() const { return is_z ? "z" : "e(" + to_string(alpha) + ")"; }

VElement::VElement(long q) : q_(q) {
  if (q < 1) throw std::domain_error("group parameter q must be >= 1");
}

VElement VElement::e(long q, const Rational& alpha) {
  VElement out(q);
  integral_index(q, alpha);
  out.add_term(VBasis::e(alpha), Rational(1));
  return out;
}

VElement VElement::z(long q) {
  VElement out(q);
  out.add_term(VBasis::z(), Rational(1));
  return out;
}

Rational VElement::coeff(const VBasis& b) const {
  auto it = terms_.find(b);
  return it == terms_.end() ? Rational(0) : it->second;
}

void VElement::add_term(const VBasis& b, const Rational& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(b, c);
  if (inserted) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

VElement& VElement::operator+=(const VElement& o) {
  check_same_q(*this, o);
  for (const auto& [b, c] : o.terms_) add_term(b, c);
  return *this;
}

VElement& VElement::operator-=(const VElement& o) {
  check_same_q(*this, o);
  for (const auto& [b, c] : o.terms_) add_term(b, -c);
  return *this;
}

VElement& VElement::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [b, v] : terms_) v *= c;
  return *this;
}

std::string VElement::text() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [b, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += to_string(c) + "*" + b.text();
  }
  return out;
}

VElement v_bracket(const VElement& x, const VElement& y) {
  check_same_q(x, y);
  VElement out(x.q());
  for (const auto& [bx, cx] : x.terms()) {
    if (bx.is_z) continue;
    for (const auto& [by, cy] : y.terms()) {
      if (by.is_z) continue;
      Rational c = cx * cy;
      out.add_term(VBasis::e(bx.alpha + by.alpha), c * (by.alpha - bx.alpha));
      if (bx.alpha == -by.alpha) out.add_term(VBasis::z(), c * by.alpha * by.alpha * by.alpha);
    }
  }
  return out;
}

VElement tau_theta(const Rational& theta_gen, const VElement& x) {
  if (theta_gen == 0) throw std::domain_error("theta must generate a multiplicative map");
  VElement out(x.q());
  for (const auto& [b, c] : x.terms()) {
    if (b.is_z)
      out.add_term(b, c);
    else
      out.add_term(b, c * pow_rational(theta_gen, integral_index(x.q(), b.alpha)));
  }
  return out;
}

VElement kappa_zeta(const Rational& zeta, const VElement& x) {
  if (zeta != 1 && zeta != -1) throw std::domain_error("zeta must preserve the index group");
  VElement out(x.q());
  for (const auto& [b, c] : x.terms()) {
    if (b.is_z)
      out.add_term(b, c / zeta);
    else
      out.add_term(VBasis::e(b.alpha / zeta), c * zeta);
  }
  return out;
}

VElement delta_theta(const Rational& theta_gen, const VElement& x) {
  VElement out(x.q());
  for (const auto& [b, c] : x.terms()) {
    if (b.is_z) continue;
    out.add_term(b, c * Rational(integral_index(x.q(), b.alpha)) * theta_gen);
  }
  return out;
}

const char* v_suite_name(VSuite s) {
  switch (s) {
    case VSuite::jacobi:
      return "jacobi";
    case VSuite::tau_hom:
      return "tau_hom";
    case VSuite::kappa_hom:
      return "kappa_hom";
    case VSuite::delta_leibniz:
      return "delta_leibniz";
  }
  return "?";
}

std::optional<VSuite> v_suite_from_name(std::string_view name) {
  for (VSuite s : {VSuite::jacobi, VSuite::tau_hom, VSuite::kappa_hom, VSuite::delta_leibniz})
    if (name == v_suite_name(s)) return s;
  return std::nullopt;
}

Report v_verify(VSuite suite, long q, int bound, const Rational& theta, const Rational& zeta,
                int jobs) {
  if (q < 1) throw std::domain_error("group parameter q must be >= 1");
  if (bound < 1) throw std::domain_error("index bound must be >= 1");
  auto start = std::chrono::steady_clock::now();
  Report r;
  r.suite = v_suite_name(suite);
  r.params["q"] = q;
  r.params["bound"] = bound;
  if (suite == VSuite::tau_hom || suite == VSuite::delta_leibniz)
    r.params["theta"] = to_string(theta);
  if (suite == VSuite::kappa_hom) r.params["zeta"] = to_string(zeta);

  std::vector<VElement> basis;
  basis.push_back(VElement::z(q));
  for (int k = -bound; k <= bound; ++k) {
    Rational a(k, q);
    a.canonicalize();
    basis.push_back(VElement::e(q, a));
  }

  auto run_pairs = [&](auto check) {
    long long n = static_cast<long long>(basis.size()) * static_cast<long long>(basis.size());
    std::vector<std::optional<Violation>> slots(static_cast<std::size_t>(n));
    parallel_for(n, jobs, [&](long long i) {
      const VElement& a = basis[static_cast<std::size_t>(i) / basis.size()];
      const VElement& b = basis[static_cast<std::size_t>(i) % basis.size()];
      slots[static_cast<std::size_t>(i)] = check(a, b);
    });
    r.cases += n;
    for (auto& s : slots)
      if (s) r.violations.push_back(std::move(*s));
  };

  switch (suite) {
    case VSuite::jacobi: {
      std::size_t w = 2 * static_cast<std::size_t>(bound) + 1;
      long long n = static_cast<long long>(w) * w * w;
      std::vector<std::optional<Violation>> slots(static_cast<std::size_t>(n));
      parallel_for(n, jobs, [&](long long i) {
        auto u = static_cast<std::size_t>(i);
        const VElement& a = basis[1 + u % w];
        const VElement& b = basis[1 + (u / w) % w];
        const VElement& c = basis[1 + u / (w * w)];
        VElement jac = v_bracket(a, v_bracket(b, c)) + v_bracket(b, v_bracket(c, a)) +
                       v_bracket(c, v_bracket(a, b));
        if (jac.is_zero()) return;
        slots[u] = Violation{a.text() + " , " + b.text() + " , " + c.text(), "0", jac.text()};
      });
      r.cases += n;
      for (auto& s : slots)
        if (s) r.violations.push_back(std::move(*s));
      break;
    }
    case VSuite::tau_hom:
      run_pairs([&](const VElement& a, const VElement& b) -> std::optional<Violation> {
        VElement lhs = tau_theta(theta, v_bracket(a, b));
        VElement rhs = v_bracket(tau_theta(theta, a), tau_theta(theta, b));
        if (lhs == rhs) return std::nullopt;
        return Violation{a.text() + " , " + b.text(), rhs.text(), lhs.text()};
      });
      break;
    case VSuite::kappa_hom:
      run_pairs([&](const VElement& a, const VElement& b) -> std::optional<Violation> {
        VElement lhs = kappa_zeta(zeta, v_bracket(a, b));
        VElement rhs = v_bracket(kappa_zeta(zeta, a), kappa_zeta(zeta, b));
        if (lhs == rhs) return std::nullopt;
        return Violation{a.text() + " , " + b.text(), rhs.text(), lhs.text()};
      });
      break;
    case VSuite::delta_leibniz:
      run_pairs([&](const VElement& a, const VElement& b) -> std::optional<Violation> {
        VElement lhs = delta_theta(theta, v_bracket(a, b));
        VElement rhs = v_bracket(delta_theta(theta, a), b) + v_bracket(a, delta_theta(theta, b));
        if (lhs == rhs) return std::nullopt;
        return Violation{a.text() + " , " + b.text(), rhs.text(), lhs.text()};
      });
      break;
  }

  r.elapsed =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

}  // namespace inselim
