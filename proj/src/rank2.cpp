#include "wpp/rank2.hpp"

#include <limits>
#include <set>

#include "wpp/errors.hpp"

namespace wpp {

TypeIBundle standard_datum(const StableTriple& t) {
  TypeIBundle d;
  d.A = {0, 0, t.A};
  d.delta = {t.D1, t.D2, t.D3};
  return d;
}

namespace {

bool strict_triangle(std::int64_t x, std::int64_t y, std::int64_t z) { return x < y + z && y < z + x && z < x + y; }

bool distinct_points(const TypeIBundle& d) { return !(d.p[0] == d.p[1] || d.p[1] == d.p[2] || d.p[0] == d.p[2]); }

bool positive_widths(const TypeIBundle& d) { return d.delta[0] > 0 && d.delta[1] > 0 && d.delta[2] > 0; }

}  // namespace

bool is_mu_stable(const WppParams& params, const TypeIBundle& datum) {
  check_divisibility(params, datum);
  const auto& D = datum.delta;
  return positive_widths(datum) && distinct_points(datum) && strict_triangle(D[0], D[1], D[2]);
}

bool slope_oracle_stability(const WppParams& params, const GeneratingSheafSpec& spec, const TypeIBundle& datum) {
  check_divisibility(params, datum);
  if (!positive_widths(datum) || !distinct_points(datum)) return false;
  auto mu = [&](const KClass& k) {
    const HilbTop h = hilb_top_E_of_kclass(k, spec);
    return slope_mu(h.quad, h.lin);
  };
  const Rational muF = mu(rank2_typeI_class(params, datum));
  const auto& D = datum.delta;
  const std::int64_t base = datum.sum_A();
  for (int i = 0; i < 3; ++i) {
    const std::int64_t e = base + D[(i + 1) % 3] + D[(i + 2) % 3];
    if (!(mu(KClass::g_pow(params, e)) < muF)) return false;
  }
  return true;
}

std::vector<StableTriple> enumerate_stable_triples(const WppParams& params, std::int64_t c1, std::int64_t lambda,
                                                   std::int64_t maxSum) {
  std::vector<StableTriple> out;
  const int a = params.a(), b = params.b(), c = params.c(), d = params.d();
  for (std::int64_t S = 3; S <= maxSum; ++S) {
    if (floor_mod(c1 + S, 2) != 0) continue;
    const std::int64_t A = -(c1 + S) / 2;
    if (floor_mod(A - lambda, d) != 0) continue;
    for (std::int64_t D1 = b; D1 < S; D1 += b)
      for (std::int64_t D2 = c; D1 + D2 < S; D2 += c) {
        const std::int64_t D3 = S - D1 - D2;
        if (D3 % a != 0 || !strict_triangle(D1, D2, D3)) continue;
        out.push_back({A, D1, D2, D3});
      }
  }
  return out;
}

ChernTargets chern_targets_of(const ChernVector& v) {
  ChernTargets t;
  for (std::size_t s = 0; s < v.sectors().size(); ++s) {
    const int dim = v.sectors()[s].dim;
    t.codeg2.push_back(dim >= 2 ? std::optional(v.codegree(s, 2)) : std::nullopt);
    t.codeg1.push_back(dim >= 1 ? std::optional(v.codegree(s, 1)) : std::nullopt);
  }
  return t;
}

ChernTargets chern_targets_of(const WppParams& params, const StableTriple& t) {
  return chern_targets_of(tch_rank2_closed_form(params, standard_datum(t)));
}

RefinedKey refined_key_of(const ChernVector& v) {
  RefinedKey k;
  for (std::size_t s = 0; s < v.sectors().size(); ++s) k.entries.push_back(v.codegree(s, 0).embed(v.params().m()));
  return k;
}

namespace {

// The f = 0 sector is two-dimensional and its codegree 1 part is c1.
std::int64_t c1_of(const ChernTargets& t) {
  if (t.codeg1.empty() || !t.codeg1[0]) throw InvalidInput("targets lack the untwisted sector");
  auto r = t.codeg1[0]->as_rational();
  if (!r || !is_integer(*r)) throw InvalidInput("first Chern class target must be an integer");
  return to_int64(*r);
}

}  // namespace

std::map<RefinedKey, RefinedEntry> h_vb_refined(const WppParams& params, const GeneratingSheafSpec& spec,
                                                const ChernTargets& targets, std::int64_t maxSum) {
  std::map<RefinedKey, RefinedEntry> out;
  const std::int64_t c1 = c1_of(targets);
  // every residue class of A mod d, filtered by the targets
  for (int lambda = 0; lambda < params.d(); ++lambda)
    for (const auto& t : enumerate_stable_triples(params, c1, lambda, maxSum)) {
      const ChernVector v = tch_rank2_closed_form(params, standard_datum(t));
      if (!(chern_targets_of(v) == targets)) continue;
      const Rational P = rank2_constant_term(params, spec, c1, lambda, t.D1, t.D2, t.D3);
      auto [it, fresh] = out.try_emplace(refined_key_of(v), RefinedEntry{0, P});
      if (!fresh && it->second.exponent != P)
        throw InternalInconsistency("Chern data does not determine the constant term");
      ++it->second.count;
    }
  return out;
}

std::vector<ChernTargets> targets_for(const WppParams& params, std::int64_t c1, std::int64_t lambda,
                                      std::int64_t maxSum) {
  std::vector<ChernTargets> out;
  for (const auto& t : enumerate_stable_triples(params, c1, lambda, maxSum)) {
    auto x = chern_targets_of(params, t);
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(std::move(x));
  }
  return out;
}

namespace {

// P minus its (negative definite) quadratic part depends only on residues of
// the widths, so scanning one period bounds P for all large sums.
std::int64_t exactness_bound(const WppParams& params, const GeneratingSheafSpec& spec, std::int64_t c1,
                             std::int64_t lambda, std::int64_t maxSum) {
  const std::int64_t a = params.a(), b = params.b(), c = params.c(), m = params.m(), E = spec.E;
  const Rational scale(E, 4 * a * b * c);
  std::optional<Rational> cmax;
  for (std::int64_t k1 = 1; k1 <= 2 * m; ++k1)
    for (std::int64_t k2 = 1; k2 <= 2 * m; ++k2)
      for (std::int64_t k3 = 1; k3 <= 2 * m; ++k3) {
        const std::int64_t D1 = k1 * b, D2 = k2 * c, D3 = k3 * a;
        const std::int64_t S = D1 + D2 + D3;
        if (floor_mod(c1 + S, 2) != 0 || floor_mod(-(c1 + S) / 2 - lambda, params.d()) != 0) continue;
        const std::int64_t x = -D1 + D2 + D3, y = D1 - D2 + D3, z = D1 + D2 - D3;
        const Rational B =
            rank2_constant_term(params, spec, c1, lambda, D1, D2, D3) + scale * Rational(x * y + y * z + z * x);
        if (!cmax || B > *cmax) cmax = B;
      }
  if (!cmax) return std::numeric_limits<std::int64_t>::min();
  const Rational X = *cmax - scale * Rational(2 * maxSum - 1);
  return floor_div(to_int64(Integer(X.get_num())), to_int64(Integer(X.get_den()))) + 1;
}

}  // namespace

Rank2Series h_vb_specialized(const WppParams& params, const GeneratingSheafSpec& spec, std::int64_t c1,
                             std::int64_t lambda, std::int64_t maxSum) {
  Series s({"q"}, std::nullopt);
  for (const auto& t : enumerate_stable_triples(params, c1, lambda, maxSum)) {
    const Rational P = rank2_constant_term(params, spec, c1, lambda, t.D1, t.D2, t.D3);
    if (!is_integer(P)) throw InternalInconsistency("non-integral exponent");
    s.add_term({to_int64(P)}, 1);
  }
  return {s, exactness_bound(params, spec, c1, lambda, maxSum)};
}

Rank2Series h_full(const WppParams& params, const GeneratingSheafSpec& spec, std::int64_t c1, std::int64_t lambda,
                   std::int64_t maxSum) {
  const Rank2Series vb = h_vb_specialized(params, spec, c1, lambda, maxSum);
  Series out({"q"}, std::nullopt);
  if (vb.series.terms().empty()) return {out, vb.exact_from};
  const std::int64_t top = vb.series.terms().rbegin()->first[0];
  const std::int64_t lo = vb.exact_from;
  if (top < lo) return {out, lo};
  // G(y), y = 1/q: prod_i prod_n (1 - y^(n E / hat i))^-2
  const std::int64_t L = top - lo;
  Series G = Series::constant({"y"}, L);
  for (int i = 1; i <= 3; ++i) {
    const std::int64_t step = spec.E / params.hat(i);
    for (std::int64_t n = 1; n * step <= L; ++n) G = G * inverse_binomial({"y"}, {n * step}, 2, L);
  }
  std::map<std::int64_t, Rational> acc;
  for (const auto& [e, coeff] : vb.series.terms())
    for (const auto& [k, g] : G.terms())
      if (e[0] - k[0] >= lo) acc[e[0] - k[0]] += coeff * g;
  for (const auto& [e, coeff] : acc) out.add_term({e}, coeff);
  return {out, lo};
}

}  // namespace wpp
