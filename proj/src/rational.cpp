#include "rbd/rational.hpp"

#include <stdexcept>

namespace rbd {

namespace {

Integer pow10(int digits) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 10, static_cast<unsigned long>(digits));
  return p;
}

// round(|q| * 10^digits), half away from zero, with the sign of q reapplied.
Integer rounded_scaled(const Rational& q, int digits) {
  if (digits < 0) throw std::invalid_argument("negative decimal digits");
  const Rational scaled = abs(q) * Rational(pow10(digits));
  Integer twice_num = 2 * scaled.get_num() + scaled.get_den();
  Integer den = 2 * scaled.get_den();
  Integer n;
  mpz_fdiv_q(n.get_mpz_t(), twice_num.get_mpz_t(), den.get_mpz_t());
  return sgn(q) < 0 ? Integer(-n) : n;
}

}  // namespace

std::string to_fraction_string(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational parse_rational(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw std::invalid_argument("not a rational: " + text);
  q.canonicalize();
  return q;
}

Rational round_decimal(const Rational& q, int digits) {
  Rational out(rounded_scaled(q, digits), pow10(digits));
  out.canonicalize();
  return out;
}

std::string format_decimal(const Rational& q, int digits) {
  const Integer n = rounded_scaled(q, digits);
  std::string body = Integer(abs(n)).get_str();
  if (digits > 0) {
    if (body.size() <= static_cast<std::size_t>(digits))
      body.insert(0, static_cast<std::size_t>(digits) + 1 - body.size(), '0');
    body.insert(body.size() - static_cast<std::size_t>(digits), ".");
  }
  return (sgn(n) < 0 ? "-" : "") + body;
}

double to_double(const Rational& q) { return q.get_d(); }

}  // namespace rbd
