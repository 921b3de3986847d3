#include "wpp/series.hpp"

#include <sstream>

#include "wpp/errors.hpp"

namespace wpp {

std::optional<std::int64_t> min_order(std::optional<std::int64_t> x, std::optional<std::int64_t> y) {
  if (!x) return y;
  if (!y) return x;
  return std::min(*x, *y);
}

Series::Series(std::vector<std::string> vars, std::optional<std::int64_t> order)
    : vars_(std::move(vars)), order_(order) {}

Series Series::constant(std::vector<std::string> vars, std::optional<std::int64_t> order, const Rational& c) {
  Series s(std::move(vars), order);
  s.add_term(Exponent(s.nvars(), 0), c);
  return s;
}

std::int64_t Series::total_degree(const Exponent& e) {
  std::int64_t t = 0;
  for (auto x : e) t += x;
  return t;
}

Rational Series::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Rational(0) : it->second;
}

void Series::add_term(const Exponent& e, const Rational& c) {
  if (e.size() != vars_.size()) throw InvalidInput("exponent length does not match variables");
  if (c == 0) return;
  if (order_ && total_degree(e) > *order_) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Series Series::truncated(std::optional<std::int64_t> order) const {
  Series s(vars_, min_order(order_, order));
  for (const auto& [e, c] : terms_) s.add_term(e, c);
  return s;
}

void Series::require_same_vars(const Series& y) const {
  if (vars_ != y.vars_) throw InvalidInput("series have different variables");
}

Series operator+(const Series& x, const Series& y) {
  x.require_same_vars(y);
  Series s(x.vars_, min_order(x.order_, y.order_));
  for (const auto& [e, c] : x.terms_) s.add_term(e, c);
  for (const auto& [e, c] : y.terms_) s.add_term(e, c);
  return s;
}

Series operator*(const Series& x, const Series& y) {
  x.require_same_vars(y);
  Series s(x.vars_, min_order(x.order_, y.order_));
  Exponent e(x.nvars());
  for (const auto& [ex, cx] : x.terms_) {
    const auto dx = Series::total_degree(ex);
    for (const auto& [ey, cy] : y.terms_) {
      if (s.order_ && dx + Series::total_degree(ey) > *s.order_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ex[i] + ey[i];
      s.add_term(e, cx * cy);
    }
  }
  return s;
}

bool operator==(const Series& x, const Series& y) {
  return x.vars_ == y.vars_ && x.order_ == y.order_ && x.terms_ == y.terms_;
}

std::string Series::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] != 1) mono += "^" + std::to_string(e[i]);
    }
    if (!first) os << " + ";
    first = false;
    if (mono.empty()) os << c.get_str();
    else if (c == 1) os << mono;
    else if (c == -1) os << "-" << mono;
    else os << c.get_str() << "*" << mono;
  }
  if (first) os << "0";
  if (order_) os << " + O(" << *order_ + 1 << ")";
  return os.str();
}

Series specialize(const Series& s, const std::vector<std::string>& target_vars, const std::vector<Exponent>& images,
                  std::optional<std::int64_t> out_order) {
  if (images.size() != s.nvars()) throw InvalidInput("specialize: one image per variable required");
  bool positive = true;
  for (const auto& img : images) {
    if (img.size() != target_vars.size()) throw InvalidInput("specialize: image has wrong length");
    positive = positive && Series::total_degree(img) >= 1;
  }
  std::optional<std::int64_t> order = out_order;
  if (!order) {
    if (!positive && s.order())
      throw InvalidInput("specialize: degree-0 image of a truncated series needs an explicit output order");
    order = s.order();
  }
  Series out(target_vars, order);
  Exponent t(target_vars.size());
  for (const auto& [e, c] : s.terms()) {
    std::fill(t.begin(), t.end(), 0);
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = 0; j < t.size(); ++j) t[j] += e[i] * images[i][j];
    out.add_term(t, c);
  }
  return out;
}

Series inverse_binomial(const std::vector<std::string>& vars, const Exponent& m, int power, std::int64_t order) {
  const std::int64_t dm = Series::total_degree(m);
  if (dm <= 0) throw InvalidInput("inverse_binomial needs a positive-degree monomial");
  // coefficients of (1-x)^-power up to x^(order/dm)
  const std::int64_t top = order / dm;
  std::vector<Rational> c(top + 1, Rational(0));
  c[0] = 1;
  for (int p = 0; p < power; ++p)
    for (std::int64_t t = 1; t <= top; ++t) c[t] += c[t - 1];
  Series s(vars, order);
  Exponent e(vars.size());
  for (std::int64_t t = 0; t <= top; ++t) {
    for (std::size_t i = 0; i < e.size(); ++i) e[i] = m[i] * t;
    s.add_term(e, c[t]);
  }
  return s;
}

}  // namespace wpp
