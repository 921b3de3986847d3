#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "wpp/params.hpp"
#include "wpp/poly.hpp"
#include "wpp/sheaf_data.hpp"

namespace wpp {

// Element of K(P(a,b,c))_Q = Q[g, g^-1]/((1-g^a)(1-g^b)(1-g^c)), held as the
// unique representative of degree < a+b+c; g = [O(-1)].
class KClass {
 public:
  explicit KClass(const WppParams& params);  // zero
  KClass(const WppParams& params, const QPoly& poly);

  static KClass from_laurent(const WppParams& params, const std::map<std::int64_t, Rational>& terms);
  static KClass g_pow(const WppParams& params, std::int64_t e);
  static KClass one(const WppParams& params) { return g_pow(params, 0); }

  const WppParams& params() const { return params_; }
  // Dense coefficients, length a+b+c.
  std::vector<Rational> coeffs() const;
  const QPoly& poly() const { return poly_; }
  bool is_zero() const { return poly_.empty(); }

  KClass operator-() const;
  friend KClass operator+(const KClass& x, const KClass& y);
  friend KClass operator-(const KClass& x, const KClass& y);
  friend KClass operator*(const KClass& x, const KClass& y);
  friend KClass operator*(const Rational& s, const KClass& x);
  KClass& operator+=(const KClass& y) { return *this = *this + y; }
  KClass& operator-=(const KClass& y) { return *this = *this - y; }
  friend bool operator==(const KClass& x, const KClass& y);

 private:
  WppParams params_;
  QPoly poly_;
};

KClass kclass_from_laurent(const WppParams& params, const std::map<std::int64_t, Rational>& terms);

// (1-g^a)(1-g^b)(1-g^c)/(1-g^hat(i)) * g^j, the class of O_{P_i} twisted by
// the character of weight j.
KClass structure_sheaf_point(const WppParams& params, int i, std::int64_t j);

KClass line_bundle_class(const WppParams& params, std::int64_t A, std::int64_t B, std::int64_t C);

// Line bundle class minus one point class per partition box, each box
// twisted by its color with offset A+B+C.
KClass rank1_class(const WppParams& params, const Rank1Sheaf& sheaf);

KClass rank2_typeI_class(const WppParams& params, const TypeIBundle& datum);

bool verify_relations(const WppParams& params);

}  // namespace wpp
