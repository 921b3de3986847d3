#include "wpp/params.hpp"

#include <numeric>

#include "wpp/errors.hpp"

namespace wpp {

WppParams::WppParams(int a, int b, int c) : a_(a), b_(b), c_(c) {
  if (a < 1 || b < 1 || c < 1) throw InvalidInput("weights must be positive");
  d12_ = std::gcd(a, b);
  d13_ = std::gcd(a, c);
  d23_ = std::gcd(b, c);
  d_ = std::gcd(d12_, c);
  m_ = std::lcm(std::lcm(a, b), c);

  auto ring = std::make_shared<Ring>();
  QPoly one{Rational(1)};
  QPoly p = one;
  for (int w : {a, b, c}) p = poly_mul(p, poly_sub(one, poly_monomial(w)));
  ring->modulus = p;
  auto inv = poly_inverse_mod(poly_monomial(1), p);
  if (!inv) throw InternalInconsistency("g is not invertible modulo P_abc");
  ring->g_inverse = *inv;
  ring_ = std::move(ring);
}

int WppParams::hat(int i) const {
  switch (i) {
    case 1: return a_;
    case 2: return b_;
    case 3: return c_;
    default: throw InvalidInput("chart index must be 1, 2 or 3");
  }
}

int WppParams::dij(int i, int j) const {
  if (i > j) std::swap(i, j);
  if (i == 1 && j == 2) return d12_;
  if (i == 1 && j == 3) return d13_;
  if (i == 2 && j == 3) return d23_;
  throw InvalidInput("pair index must be two distinct charts");
}

std::string WppParams::to_string() const {
  return "(" + std::to_string(a_) + "," + std::to_string(b_) + "," + std::to_string(c_) + ")";
}

}  // namespace wpp
