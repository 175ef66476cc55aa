#include "cubechaos/rational.hpp"

#include <algorithm>
#include <cctype>

#include "cubechaos/errors.hpp"

namespace cubechaos {

namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](unsigned char ch) {
    return std::isdigit(ch) != 0;
  });
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

}  // namespace

Integer pow4(std::size_t k) {
  Integer r = 1;
  mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 2 * k);
  return r;
}

Rational pow4_inverse(std::size_t k) { return Rational(Integer(1), pow4(k)); }

Rational diagonal_squared_law(unsigned n, std::size_t k) {
  Rational r(Integer(n), pow4(2 * k));
  r.canonicalize();
  return r;
}

std::string to_fraction_string(const Rational& x) {
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

Rational parse_fraction(std::string_view text) {
  text = trim(text);
  const auto slash = text.find('/');
  std::string_view num = text.substr(0, slash);
  std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  const bool negative = !num.empty() && num.front() == '-';
  if (negative) num.remove_prefix(1);
  if (!all_digits(num) || !all_digits(den))
    throw DomainError("malformed fraction '" + std::string(text) + "'");
  Integer n{std::string(num), 10};
  Integer d{std::string(den), 10};
  if (d == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  Rational r(n, d);
  r.canonicalize();
  return r;
}

Rational parse_decimal(std::string_view text) {
  text = trim(text);
  const auto dot = text.find('.');
  std::string_view whole = text.substr(0, dot);
  std::string_view frac =
      dot == std::string_view::npos ? std::string_view() : text.substr(dot + 1);
  if (whole.empty() && frac.empty())
    throw DomainError("malformed decimal '" + std::string(text) + "'");
  if ((!whole.empty() && !all_digits(whole)) ||
      (dot != std::string_view::npos && !frac.empty() && !all_digits(frac)))
    throw DomainError("malformed decimal '" + std::string(text) + "'");
  Integer num(whole.empty() ? std::string("0") : std::string(whole), 10);
  Integer den = 1;
  if (!frac.empty()) {
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    num = num * den + Integer(std::string(frac), 10);
  }
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string to_fixed_truncated(const Rational& x, int decimals) {
  if (sgn(x) < 0) throw DomainError("to_fixed_truncated expects x >= 0");
  Integer scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(decimals));
  Integer scaled;
  mpz_fdiv_q(scaled.get_mpz_t(), Integer(x.get_num() * scale).get_mpz_t(),
             x.get_den().get_mpz_t());
  Integer whole, frac;
  mpz_fdiv_qr(whole.get_mpz_t(), frac.get_mpz_t(), scaled.get_mpz_t(),
              scale.get_mpz_t());
  std::string out = whole.get_str();
  if (decimals > 0) {
    std::string digits = frac.get_str();
    out += '.';
    out.append(static_cast<std::size_t>(decimals) - digits.size(), '0');
    out += digits;
  }
  return out;
}

Rational squared_distance(const Point& a, const Point& b) {
  if (a.size() != b.size())
    throw DomainError("squared_distance: dimension mismatch");
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    Rational d = a[j] - b[j];
    s += d * d;
  }
  return s;
}

}  // namespace cubechaos
