#include "wpp/kgroup.hpp"

#include "wpp/errors.hpp"

namespace wpp {

KClass::KClass(const WppParams& params) : params_(params) {}

KClass::KClass(const WppParams& params, const QPoly& poly)
    : params_(params), poly_(poly_mod(poly, params.modulus())) {}

KClass KClass::g_pow(const WppParams& params, std::int64_t e) {
  if (e >= 0) return KClass(params, poly_monomial(static_cast<int>(e)));
  QPoly result{Rational(1)};
  QPoly base = params.g_inverse();
  std::int64_t k = -e;
  while (k) {
    if (k & 1) result = poly_mod(poly_mul(result, base), params.modulus());
    base = poly_mod(poly_mul(base, base), params.modulus());
    k >>= 1;
  }
  return KClass(params, result);
}

KClass KClass::from_laurent(const WppParams& params, const std::map<std::int64_t, Rational>& terms) {
  KClass out(params);
  QPoly positive;
  for (const auto& [e, c] : terms) {
    if (c == 0) continue;
    if (e >= 0) {
      positive = poly_add(positive, poly_monomial(static_cast<int>(e), c));
    } else {
      out += c * g_pow(params, e);
    }
  }
  return out + KClass(params, positive);
}

std::vector<Rational> KClass::coeffs() const {
  std::vector<Rational> out(params_.weight_sum());
  for (std::size_t i = 0; i < poly_.size(); ++i) out[i] = poly_[i];
  return out;
}

KClass KClass::operator-() const {
  KClass r(params_);
  r.poly_ = poly_scale(poly_, -1);
  return r;
}

KClass operator+(const KClass& x, const KClass& y) {
  KClass r(x.params_);
  r.poly_ = poly_add(x.poly_, y.poly_);
  return r;
}

KClass operator-(const KClass& x, const KClass& y) {
  KClass r(x.params_);
  r.poly_ = poly_sub(x.poly_, y.poly_);
  return r;
}

KClass operator*(const KClass& x, const KClass& y) { return KClass(x.params_, poly_mul(x.poly_, y.poly_)); }

KClass operator*(const Rational& s, const KClass& x) {
  KClass r(x.params_);
  r.poly_ = poly_scale(x.poly_, s);
  return r;
}

bool operator==(const KClass& x, const KClass& y) { return x.params_ == y.params_ && x.poly_ == y.poly_; }

KClass kclass_from_laurent(const WppParams& params, const std::map<std::int64_t, Rational>& terms) {
  return KClass::from_laurent(params, terms);
}

KClass structure_sheaf_point(const WppParams& params, int i, std::int64_t j) {
  QPoly one{Rational(1)};
  QPoly p = one;
  for (int k = 1; k <= 3; ++k)
    if (k != i) p = poly_mul(p, poly_sub(one, poly_monomial(params.hat(k))));
  if (i < 1 || i > 3) throw InvalidInput("chart index must be 1, 2 or 3");
  return KClass(params, p) * KClass::g_pow(params, j);
}

KClass line_bundle_class(const WppParams& params, std::int64_t A, std::int64_t B, std::int64_t C) {
  return KClass::g_pow(params, A + B + C);
}

KClass rank1_class(const WppParams& params, const Rank1Sheaf& sheaf) {
  // Box colors already carry the offset A+B+C, which is the fine weight of the
  // box; the point class with that weight is subtracted as is.
  const std::int64_t s = sheaf.A + sheaf.B + sheaf.C;
  KClass result = line_bundle_class(params, sheaf.A, sheaf.B, sheaf.C);
  for (int i = 1; i <= 3; ++i) {
    auto counts = color_count(sheaf.lambda[i - 1], chart_spec(params, i, s));
    for (std::size_t l = 0; l < counts.size(); ++l)
      if (counts[l]) result -= Rational(static_cast<long>(counts[l])) * structure_sheaf_point(params, i, l);
  }
  return result;
}

KClass rank2_typeI_class(const WppParams& params, const TypeIBundle& datum) {
  check_divisibility(params, datum);
  const auto& D = datum.delta;
  KClass one = KClass::one(params);
  KClass result = one + KClass::g_pow(params, datum.sum_delta());
  for (int i = 0; i < 3; ++i) {
    int j = (i + 1) % 3;
    if (datum.p[i] == datum.p[j]) continue;
    result -= (one - KClass::g_pow(params, D[i])) * (one - KClass::g_pow(params, D[j]));
  }
  return result * KClass::g_pow(params, datum.sum_A());
}

namespace {

KClass point_row(const WppParams& params, int chart, int step, int t) {
  KClass s(params);
  for (int i = 0; i < params.hat(chart) / step; ++i) s += structure_sheaf_point(params, chart, i * step + t);
  return s;
}

}  // namespace

bool verify_relations(const WppParams& params) {
  for (int t = 0; t < params.d(); ++t) {
    KClass r1 = point_row(params, 1, params.d(), t);
    if (!(r1 == point_row(params, 2, params.d(), t)) || !(r1 == point_row(params, 3, params.d(), t))) return false;
  }
  for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
    int dij = params.dij(i, j);
    for (int t = 0; t < dij; ++t)
      if (!(point_row(params, i, dij, t) == point_row(params, j, dij, t))) return false;
  }
  return true;
}

}  // namespace wpp
