#pragma once

#include <array>
#include <cstdint>
#include <string>

#include "wpp/partition.hpp"
#include "wpp/rational.hpp"

namespace wpp {

// Point of P^1 as a homogeneous pair, normalized so the first nonzero
// coordinate is 1.
class ProjPoint {
 public:
  ProjPoint(const Rational& x, const Rational& y);
  const Rational& x() const { return x_; }
  const Rational& y() const { return y_; }
  std::string to_string() const;

  friend bool operator==(const ProjPoint& p, const ProjPoint& q) { return p.x_ == q.x_ && p.y_ == q.y_; }
  friend bool operator<(const ProjPoint& p, const ProjPoint& q) {
    return p.x_ != q.x_ ? p.x_ < q.x_ : p.y_ < q.y_;
  }

 private:
  Rational x_, y_;
};

// Torsion-free rank 1: reflexive hull L_(A,B,C) with one partition per chart
// removed at the generator corner.
struct Rank1Sheaf {
  std::int64_t A = 0, B = 0, C = 0;
  std::array<Partition, 3> lambda;
};

// Rank 2 bundle with a single box summand per chart.
struct TypeIBundle {
  std::array<std::int64_t, 3> A{0, 0, 0};
  std::array<std::int64_t, 3> delta{0, 0, 0};
  std::array<ProjPoint, 3> p{ProjPoint(1, 0), ProjPoint(0, 1), ProjPoint(1, 1)};

  std::int64_t sum_A() const { return A[0] + A[1] + A[2]; }
  std::int64_t sum_delta() const { return delta[0] + delta[1] + delta[2]; }
};

// Throws InvalidInput unless b | delta1, c | delta2, a | delta3 and all deltas >= 0.
void check_divisibility(const WppParams& params, const TypeIBundle& datum);

}  // namespace wpp
