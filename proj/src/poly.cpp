#include "wpp/poly.hpp"

#include <algorithm>

#include "wpp/errors.hpp"

namespace wpp {

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const QPoly& p) { return static_cast<int>(p.size()) - 1; }

QPoly poly_add(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

QPoly poly_sub(const QPoly& a, const QPoly& b) {
  QPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

QPoly poly_mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

QPoly poly_scale(const QPoly& a, const Rational& s) {
  if (s == 0) return {};
  QPoly r(a);
  for (auto& x : r) x *= s;
  return r;
}

QPoly poly_monomial(int k, const Rational& c) {
  if (c == 0) return {};
  QPoly r(static_cast<std::size_t>(k) + 1);
  r[k] = c;
  return r;
}

std::pair<QPoly, QPoly> poly_divmod(const QPoly& num, const QPoly& den) {
  if (den.empty()) throw InvalidInput("polynomial division by zero");
  QPoly rem(num);
  trim(rem);
  const int dd = degree(den);
  if (degree(rem) < dd) return {{}, rem};
  QPoly quo(rem.size() - den.size() + 1);
  const Rational lead = den.back();
  for (int k = degree(rem); k >= dd; --k) {
    if (rem[k] == 0) continue;
    Rational f = rem[k] / lead;
    quo[k - dd] = f;
    for (int i = 0; i <= dd; ++i) rem[k - dd + i] -= f * den[i];
  }
  rem.resize(dd);
  trim(rem);
  trim(quo);
  return {quo, rem};
}

QPoly poly_mod(const QPoly& a, const QPoly& m) { return poly_divmod(a, m).second; }

std::optional<QPoly> poly_inverse_mod(const QPoly& a, const QPoly& m) {
  // Invariant: s * a ≡ r (mod m) for both rows.
  QPoly r0 = m, r1 = poly_mod(a, m);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r2] = poly_divmod(r0, r1);
    QPoly s2 = poly_sub(s0, poly_mul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r2);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (degree(r0) != 0) return std::nullopt;
  return poly_mod(poly_scale(s0, 1 / r0[0]), m);
}

QPoly to_qpoly(const IntPoly& p) {
  QPoly r;
  r.reserve(p.size());
  for (const auto& z : p) r.emplace_back(z);
  trim(r);
  return r;
}

}  // namespace wpp
