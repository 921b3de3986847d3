#pragma once

#include <memory>
#include <string>

#include "wpp/poly.hpp"

namespace wpp {

// Weights of P(a,b,c) with derived gcd/lcm data and the cached ring data of
// Q[g]/((1-g^a)(1-g^b)(1-g^c)).
class WppParams {
 public:
  WppParams(int a, int b, int c);

  int a() const { return a_; }
  int b() const { return b_; }
  int c() const { return c_; }
  int d() const { return d_; }
  int d12() const { return d12_; }
  int d13() const { return d13_; }
  int d23() const { return d23_; }
  int m() const { return m_; }
  int weight_sum() const { return a_ + b_ + c_; }

  // hat(1)=a, hat(2)=b, hat(3)=c
  int hat(int i) const;
  // gcd of hat(i), hat(j) for i != j
  int dij(int i, int j) const;

  // Chart i (1..3) acts on C^2 by mu_n with steps (w1, w2): chart 1 is
  // (a; b, c), chart 2 is (b; c, a), chart 3 is (c; a, b).
  int chart_modulus(int chart) const { return hat(chart); }
  int chart_step1(int chart) const { return hat(chart % 3 + 1); }
  int chart_step2(int chart) const { return hat((chart + 1) % 3 + 1); }

  const QPoly& modulus() const { return ring_->modulus; }
  const QPoly& g_inverse() const { return ring_->g_inverse; }

  std::string to_string() const;

  friend bool operator==(const WppParams& x, const WppParams& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
  }

 private:
  struct Ring {
    QPoly modulus;
    QPoly g_inverse;
  };
  int a_, b_, c_, d_, d12_, d13_, d23_, m_;
  std::shared_ptr<const Ring> ring_;
};

}  // namespace wpp
