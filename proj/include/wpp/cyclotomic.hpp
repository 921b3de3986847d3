#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "wpp/poly.hpp"
#include "wpp/rational.hpp"

namespace wpp {

// The n-th cyclotomic polynomial, from x^n - 1 divided by Phi_d for proper d | n.
IntPoly cyclotomic_poly(int n);
int euler_phi(int n);

// Element of Q(zeta_n) in power-basis coordinates modulo Phi_n.
class Cyclotomic {
 public:
  Cyclotomic();  // zero, order 1
  Cyclotomic(const Rational& r, int order = 1);  // NOLINT(implicit)
  Cyclotomic(std::int64_t r) : Cyclotomic(Rational(static_cast<long>(r))) {}  // NOLINT

  // Reduces an arbitrary polynomial in zeta_n.
  static Cyclotomic from_poly(int order, const QPoly& p);
  static Cyclotomic zeta_pow(int n, std::int64_t k);

  int order() const { return order_; }
  const std::vector<Rational>& coords() const { return coords_; }

  bool is_zero() const;
  std::optional<Rational> as_rational() const;
  // Re-express in Q(zeta_N); N must be a multiple of order().
  Cyclotomic embed(int N) const;
  Cyclotomic inv() const;
  Cyclotomic pow(std::int64_t k) const;

  Cyclotomic operator-() const;
  friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
  friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b);
  Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
  Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
  Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }

  // Equality is field equality (mixed orders compare in the lcm field).
  friend bool operator==(const Cyclotomic& a, const Cyclotomic& b);
  // Total order on representations (order first, then coordinates); used
  // only for deterministic grouping keys.
  friend bool operator<(const Cyclotomic& a, const Cyclotomic& b);

  std::string to_string() const;

 private:
  int order_;
  std::vector<Rational> coords_;
};

inline Cyclotomic zeta_pow(int n, std::int64_t k) { return Cyclotomic::zeta_pow(n, k); }
inline Cyclotomic cyc_add(const Cyclotomic& a, const Cyclotomic& b) { return a + b; }
inline Cyclotomic cyc_mul(const Cyclotomic& a, const Cyclotomic& b) { return a * b; }
inline Cyclotomic cyc_inv(const Cyclotomic& a) { return a.inv(); }
inline std::optional<Rational> as_rational(const Cyclotomic& a) { return a.as_rational(); }

}  // namespace wpp
