#include "wpp/sheaf_data.hpp"

#include "wpp/errors.hpp"

namespace wpp {

ProjPoint::ProjPoint(const Rational& x, const Rational& y) {
  if (x != 0) {
    x_ = 1;
    y_ = y / x;
  } else if (y != 0) {
    x_ = 0;
    y_ = 1;
  } else {
    throw InvalidInput("(0:0) is not a point of P^1");
  }
}

std::string ProjPoint::to_string() const { return "(" + x_.get_str() + ":" + y_.get_str() + ")"; }

void check_divisibility(const WppParams& params, const TypeIBundle& datum) {
  const int div[3] = {params.b(), params.c(), params.a()};
  for (int i = 0; i < 3; ++i) {
    if (datum.delta[i] < 0) throw InvalidInput("delta widths must be nonnegative");
    if (datum.delta[i] % div[i] != 0)
      throw InvalidInput("delta" + std::to_string(i + 1) + " must be divisible by " + std::to_string(div[i]));
  }
}

}  // namespace wpp
