#pragma once

#include <cstdint>

#include "wpp/cyclotomic.hpp"
#include "wpp/kgroup.hpp"

namespace wpp {

// Coefficients of t^2 and t in a Hilbert polynomial in t.
struct HilbTop {
  Rational quad;
  Rational lin;
  friend bool operator==(const HilbTop&, const HilbTop&) = default;
};

struct HilbFit {
  Rational quad, lin, constant;
};

// E is the rank of the generating sheaf, the sum of O(-u) for 0 <= u < E.
struct GeneratingSheafSpec {
  int E;
};

// Throws InvalidInput unless lcm(a,b,c) divides E.
GeneratingSheafSpec make_generating_spec(const WppParams& params, int E);

// x + 2x^2 + ... + (E-1)x^(E-1)
Cyclotomic phi_E(int E, const Cyclotomic& x);

// Sum over 1 <= k < n with n/gcd(m1,n) not dividing k of
//   (1 + z^(-k m2)) / (1 - z^(-k m1)) * z^(-k m3) * phi_E(z^k),  z = zeta_n.
Rational psi_E(int E, std::int64_t m1, std::int64_t m2, std::int64_t m3, int n);

// Top coefficients of P(O(r), t) = chi(O(r + m t)).
HilbTop hilb_top(const WppParams& params, std::int64_t r);

// Top coefficients of chi(O(r) (x) E^* (x) O(m t)) = sum_u chi(O(r + u + m t)).
HilbTop hilb_top_E(const WppParams& params, const GeneratingSheafSpec& spec, std::int64_t r);

// Number of monomials x^i y^j z^k with a i + b j + c k = s.
Integer monomial_count(const WppParams& params, std::int64_t s);
// chi(O(r)) = N(r) + N(-r-a-b-c); H^1 of a line bundle vanishes.
Integer chi_oracle(const WppParams& params, std::int64_t r);
// Quadratic through chi_oracle(r + m t), t = 0,1,2, checked at t = 3.
HilbFit hilb_fit_oracle(const WppParams& params, std::int64_t r);

Rational slope_mu(const Rational& quad, const Rational& lin);

// Linear extension of hilb_top_E to a K-class (g^e = O(-e)).
HilbTop hilb_top_E_of_kclass(const KClass& k, const GeneratingSheafSpec& spec);
// chi(F (x) E^*) from the K-class by monomial counting.
Rational chi_E_of_kclass(const KClass& k, const GeneratingSheafSpec& spec);

// Constant term P_E(F, 0) of a type I rank 2 bundle with first Chern class c1,
// A = -(c1 + sum delta)/2 congruent to lambda mod d.
Rational rank2_constant_term(const WppParams& params, const GeneratingSheafSpec& spec, std::int64_t c1,
                             std::int64_t lambda, std::int64_t D1, std::int64_t D2, std::int64_t D3);

}  // namespace wpp
