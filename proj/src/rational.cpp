#include "wpp/rational.hpp"

#include "wpp/errors.hpp"

namespace wpp {

Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw InvalidInput("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

Rational make_rational(std::int64_t num, std::int64_t den) {
  return make_rational(Integer(static_cast<long>(num)), Integer(static_cast<long>(den)));
}

bool is_integer(const Rational& q) { return q.get_den() == 1; }

std::int64_t to_int64(const Integer& z) {
  if (!z.fits_slong_p()) throw InternalInconsistency("integer out of 64-bit range: " + z.get_str());
  return z.get_si();
}

std::int64_t to_int64(const Rational& q) {
  if (!is_integer(q)) throw InternalInconsistency("expected an integer, got " + q.get_str());
  return to_int64(q.get_num());
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::int64_t floor_div(std::int64_t x, std::int64_t n) {
  std::int64_t q = x / n;
  if ((x % n != 0) && ((x < 0) != (n < 0))) --q;
  return q;
}

std::int64_t floor_mod(std::int64_t x, std::int64_t n) { return x - floor_div(x, n) * n; }

}  // namespace wpp
