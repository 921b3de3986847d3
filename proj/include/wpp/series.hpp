#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wpp/rational.hpp"

namespace wpp {

using Exponent = std::vector<std::int64_t>;

// Sparse multivariate series over Q. With a truncation order N every
// monomial of total degree <= N is exact and nothing above N is stored;
// without one the series is an exact (Laurent) polynomial.
class Series {
 public:
  Series(std::vector<std::string> vars, std::optional<std::int64_t> order);
  static Series constant(std::vector<std::string> vars, std::optional<std::int64_t> order, const Rational& c = 1);

  const std::vector<std::string>& vars() const { return vars_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::optional<std::int64_t>& order() const { return order_; }
  const std::map<Exponent, Rational>& terms() const { return terms_; }

  Rational coeff(const Exponent& e) const;
  void add_term(const Exponent& e, const Rational& c);
  Series truncated(std::optional<std::int64_t> order) const;

  friend Series operator+(const Series& x, const Series& y);
  friend Series operator*(const Series& x, const Series& y);
  friend bool operator==(const Series& x, const Series& y);

  static std::int64_t total_degree(const Exponent& e);
  std::string to_string() const;

 private:
  void require_same_vars(const Series& y) const;

  std::vector<std::string> vars_;
  std::optional<std::int64_t> order_;
  std::map<Exponent, Rational> terms_;
};

std::optional<std::int64_t> min_order(std::optional<std::int64_t> x, std::optional<std::int64_t> y);

// Substitutes variable i by the monomial images[i] in target_vars. Without
// out_order the source order is kept when every image has positive degree;
// otherwise out_order must be supplied and the caller guarantees the source
// was computed far enough for it.
Series specialize(const Series& s, const std::vector<std::string>& target_vars, const std::vector<Exponent>& images,
                  std::optional<std::int64_t> out_order = std::nullopt);

// 1/(1 - x^m)^power in the given variables, truncated.
Series inverse_binomial(const std::vector<std::string>& vars, const Exponent& m, int power, std::int64_t order);

}  // namespace wpp
