#include "wpp/hilbert.hpp"

#include <numeric>

#include "wpp/errors.hpp"

namespace wpp {

namespace {

Rational Q(std::int64_t n, std::int64_t d = 1) { return make_rational(n, d); }

Rational require_rational(const Cyclotomic& x, const char* what) {
  auto r = x.as_rational();
  if (!r) throw InternalInconsistency(std::string(what) + " is not rational: " + x.to_string());
  return *r;
}

}  // namespace

GeneratingSheafSpec make_generating_spec(const WppParams& params, int E) {
  if (E < 1 || E % params.m() != 0)
    throw InvalidInput("E must be a positive multiple of lcm(a,b,c) = " + std::to_string(params.m()));
  return GeneratingSheafSpec{E};
}

Cyclotomic phi_E(int E, const Cyclotomic& x) {
  if (E < 1) throw InvalidInput("phi_E requires E >= 1");
  Cyclotomic sum(Rational(0), x.order());
  Cyclotomic power = x;
  for (int k = 1; k < E; ++k) {
    sum += Cyclotomic(Q(k), x.order()) * power;
    power = power * x;
  }
  return sum;
}

Rational psi_E(int E, std::int64_t m1, std::int64_t m2, std::int64_t m3, int n) {
  if (n < 1) throw InvalidInput("psi_E requires n >= 1");
  const std::int64_t g = n / std::gcd<std::int64_t>(m1, n);
  Cyclotomic sum(Rational(0), n);
  const Cyclotomic one(Rational(1), n);
  for (int k = 1; k < n; ++k) {
    if (k % g == 0) continue;
    Cyclotomic num = one + Cyclotomic::zeta_pow(n, -k * m2);
    Cyclotomic den = one - Cyclotomic::zeta_pow(n, -k * m1);
    sum += num / den * Cyclotomic::zeta_pow(n, -k * m3) * phi_E(E, Cyclotomic::zeta_pow(n, k));
  }
  return require_rational(sum, "psi_E");
}

HilbTop hilb_top(const WppParams& params, std::int64_t r) {
  const int a = params.a(), b = params.b(), c = params.c(), d = params.d(), m = params.m();
  if (floor_mod(r, d) != 0) return {Q(0), Q(0)};
  const std::int64_t abc = static_cast<std::int64_t>(a) * b * c;
  HilbTop h;
  h.quad = Q(static_cast<std::int64_t>(d) * m * m, 2 * abc);
  Cyclotomic lin(Q((2 * r + a + b + c) * d, 2 * abc), 1);
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    const int k = 6 - i - j;
    const int dij = params.dij(i, j);
    const Cyclotomic one(Rational(1), dij);
    Cyclotomic s(Rational(0), dij);
    for (int hh = 1; hh < dij; ++hh) {
      if (hh % (dij / d) == 0) continue;
      s += Cyclotomic::zeta_pow(dij, hh * r) / (one - Cyclotomic::zeta_pow(dij, -hh * params.hat(k)));
    }
    lin += s * Cyclotomic(Q(1, static_cast<std::int64_t>(params.hat(i)) * params.hat(j)), 1);
  }
  h.lin = require_rational(lin, "hilb_top linear coefficient") * m;
  return h;
}

HilbTop hilb_top_E(const WppParams& params, const GeneratingSheafSpec& spec, std::int64_t r) {
  const int a = params.a(), b = params.b(), c = params.c(), d = params.d(), m = params.m();
  const std::int64_t abc = static_cast<std::int64_t>(a) * b * c;
  HilbTop h{Q(static_cast<std::int64_t>(spec.E) * m * m, 2 * abc), Q(0)};
  for (std::int64_t u = 0; u < spec.E; ++u) {
    if (floor_mod(r + u, d) != 0) continue;
    h.lin += Q((2 * r + 2 * u + a + b + c) * m * d, 2 * abc);
  }
  return h;
}

Integer monomial_count(const WppParams& params, std::int64_t s) {
  if (s < 0) return 0;
  const std::int64_t a = params.a(), b = params.b(), c = params.c();
  Integer count = 0;
  for (std::int64_t i = 0; a * i <= s; ++i)
    for (std::int64_t j = 0; a * i + b * j <= s; ++j)
      if ((s - a * i - b * j) % c == 0) ++count;
  return count;
}

Integer chi_oracle(const WppParams& params, std::int64_t r) {
  return monomial_count(params, r) + monomial_count(params, -r - params.weight_sum());
}

HilbFit hilb_fit_oracle(const WppParams& params, std::int64_t r) {
  const std::int64_t m = params.m();
  Rational y[4];
  for (int t = 0; t < 4; ++t) y[t] = Rational(chi_oracle(params, r + m * t));
  HilbFit fit;
  fit.constant = y[0];
  fit.quad = (y[2] - 2 * y[1] + y[0]) / 2;
  fit.lin = y[1] - y[0] - fit.quad;
  if (fit.quad * 9 + fit.lin * 3 + fit.constant != y[3])
    throw InternalInconsistency("chi_oracle samples are not quadratic in t at r = " + std::to_string(r));
  return fit;
}

Rational slope_mu(const Rational& quad, const Rational& lin) {
  if (quad == 0) throw InvalidInput("slope undefined for zero quadratic term");
  return lin / quad;
}

HilbTop hilb_top_E_of_kclass(const KClass& k, const GeneratingSheafSpec& spec) {
  HilbTop total{Q(0), Q(0)};
  const auto& poly = k.poly();
  for (std::size_t e = 0; e < poly.size(); ++e) {
    if (poly[e] == 0) continue;
    HilbTop h = hilb_top_E(k.params(), spec, -static_cast<std::int64_t>(e));
    total.quad += poly[e] * h.quad;
    total.lin += poly[e] * h.lin;
  }
  return total;
}

Rational chi_E_of_kclass(const KClass& k, const GeneratingSheafSpec& spec) {
  Rational total = 0;
  const auto& poly = k.poly();
  for (std::size_t e = 0; e < poly.size(); ++e) {
    if (poly[e] == 0) continue;
    Integer s = 0;
    for (std::int64_t u = 0; u < spec.E; ++u) s += chi_oracle(k.params(), u - static_cast<std::int64_t>(e));
    total += poly[e] * Rational(s);
  }
  return total;
}

Rational rank2_constant_term(const WppParams& params, const GeneratingSheafSpec& spec, std::int64_t c1,
                             std::int64_t lambda, std::int64_t D1, std::int64_t D2, std::int64_t D3) {
  const std::int64_t a = params.a(), b = params.b(), c = params.c(), d = params.d();
  if (D1 <= 0 || D2 <= 0 || D3 <= 0) throw InvalidInput("widths must be positive");
  if (D1 % b || D2 % c || D3 % a) throw InvalidInput("need b | delta1, c | delta2, a | delta3");
  const std::int64_t S = D1 + D2 + D3;
  if (floor_mod(c1 + S, 2) != 0) throw InvalidInput("c1 + delta1 + delta2 + delta3 must be even");
  const std::int64_t A = -(c1 + S) / 2;
  if (floor_mod(A - lambda, d) != 0) throw InvalidInput("A = -(c1 + sum delta)/2 is not congruent to lambda mod d");
  const std::int64_t E = spec.E;
  const std::int64_t Ad = floor_mod(A, d);
  const std::int64_t w = a + b + c;

  Rational brace = Q(c1 * c1, 4) + Q(D1 * D1 + D2 * D2 + D3 * D3, 4) - Q(D1 * D2 + D2 * D3 + D3 * D1, 2) +
                   Q(w * c1, 2) + Q(a * a + b * b + c * c, 6) + Q(a * b + b * c + c * a, 2) +
                   Q((c1 + w + E - d) * Ad) + Q((c1 + w) * (E - d), 2) + Q(Ad * Ad) + Q(E * E, 3) -
                   Q(E * d, 2) + Q(d * d, 6);
  Rational value = brace * Q(E, a * b * c);
  value += psi_E(static_cast<int>(E), c, D2, A, params.d12()) / Q(a * b);
  value += psi_E(static_cast<int>(E), b, D1, A, params.d13()) / Q(a * c);
  value += psi_E(static_cast<int>(E), a, D3, A, params.d23()) / Q(b * c);
  if (!is_integer(value)) throw InternalInconsistency("rank 2 constant term is not integral: " + value.get_str());
  return value;
}

}  // namespace wpp
