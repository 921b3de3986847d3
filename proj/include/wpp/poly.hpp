#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "wpp/rational.hpp"

namespace wpp {

// Dense univariate polynomials, coefficient i is the coefficient of x^i.
// The zero polynomial is the empty vector; otherwise the leading
// coefficient is nonzero.
using QPoly = std::vector<Rational>;
using IntPoly = std::vector<Integer>;

void trim(QPoly& p);
int degree(const QPoly& p);  // -1 for zero

QPoly poly_add(const QPoly& a, const QPoly& b);
QPoly poly_sub(const QPoly& a, const QPoly& b);
QPoly poly_mul(const QPoly& a, const QPoly& b);
QPoly poly_scale(const QPoly& a, const Rational& s);
QPoly poly_monomial(int k, const Rational& c = 1);

// Quotient and remainder; throws InvalidInput for a zero divisor.
std::pair<QPoly, QPoly> poly_divmod(const QPoly& num, const QPoly& den);
QPoly poly_mod(const QPoly& a, const QPoly& m);

// Inverse of a modulo m by the extended Euclidean algorithm, if gcd(a,m)=1.
std::optional<QPoly> poly_inverse_mod(const QPoly& a, const QPoly& m);

QPoly to_qpoly(const IntPoly& p);

}  // namespace wpp
