#include "inselim/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace inselim {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view num = text;
  std::string_view den = "1";
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    num = text.substr(0, slash);
    den = text.substr(slash + 1);
  }
  std::string_view num_digits = num;
  if (!num_digits.empty() && num_digits.front() == '-') num_digits.remove_prefix(1);
  if (!all_digits(num_digits) || !all_digits(den))
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  Rational r(std::string(num) + "/" + std::string(den));
  if (r.get_den() == 0)
    throw std::invalid_argument("zero denominator in rational: '" + std::string(text) + "'");
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) { return r.get_str(); }

std::string to_string(const Integer& n) { return n.get_str(); }

Rational pow_rational(const Rational& base, long exp) {
  if (exp == 0) return Rational(1);
  if (base == 0 && exp < 0) throw std::domain_error("0 raised to a negative power");
  unsigned long k = exp < 0 ? static_cast<unsigned long>(-exp) : static_cast<unsigned long>(exp);
  Rational out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), k);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), k);
  out.canonicalize();
  if (exp < 0) out = Rational(1) / out;
  return out;
}

}  // namespace inselim
