#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace wpp {

using Integer = mpz_class;
// mpq_class keeps values canonical (lowest terms, positive denominator) after
// every arithmetic operation; make_rational canonicalizes explicit pairs.
using Rational = mpq_class;

Rational make_rational(const Integer& num, const Integer& den);
Rational make_rational(std::int64_t num, std::int64_t den = 1);

bool is_integer(const Rational& q);
std::int64_t to_int64(const Integer& z);
// Throws InternalInconsistency if q is not an integer that fits.
std::int64_t to_int64(const Rational& q);
std::string to_string(const Rational& q);

std::int64_t floor_div(std::int64_t x, std::int64_t n);
std::int64_t floor_mod(std::int64_t x, std::int64_t n);

}  // namespace wpp
