#include <doctest.h>

#include <random>

#include "wpp/errors.hpp"
#include "wpp/kgroup.hpp"

using namespace wpp;

namespace {

KClass poly(const WppParams& p, std::vector<long> c) {
  QPoly q;
  for (long x : c) q.push_back(Rational(x));
  return KClass(p, q);
}

}  // namespace

TEST_SUITE("kgroup") {
  TEST_CASE("laurent reduction") {
    const WppParams P(1, 1, 1);
    CHECK(kclass_from_laurent(P, {{3, 1}}) == poly(P, {1, -3, 3}));
    CHECK(kclass_from_laurent(P, {{-1, 1}}) == poly(P, {3, -3, 1}));
    CHECK(kclass_from_laurent(P, {{0, 1}}) == KClass::one(P));
    CHECK(KClass::g_pow(P, 3).coeffs().size() == 3);
  }

  TEST_CASE("g is a unit") {
    for (int a = 1; a <= 4; ++a)
      for (int b = 1; b <= 4; ++b)
        for (int c = 1; c <= 4; ++c) {
          const WppParams P(a, b, c);
          CHECK(KClass::g_pow(P, 1) * KClass::g_pow(P, -1) == KClass::one(P));
          CHECK(KClass::g_pow(P, 5) * KClass::g_pow(P, -7) == KClass::g_pow(P, -2));
        }
  }

  TEST_CASE("ring axioms on random classes") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4);
    for (int a = 1; a <= 4; ++a)
      for (int b = a; b <= 4; ++b)
        for (int c = b; c <= 4 && a + b + c <= 12; ++c) {
          const WppParams P(a, b, c);
          auto rnd = [&] {
            std::map<std::int64_t, Rational> t;
            for (int e = -3; e <= 6; ++e) t[e] = coef(rng);
            return kclass_from_laurent(P, t);
          };
          const KClass x = rnd(), y = rnd(), z = rnd();
          CHECK((x * y) * z == x * (y * z));
          CHECK(x * (y + z) == x * y + x * z);
        }
  }

  TEST_CASE("point sheaves") {
    const WppParams P(1, 1, 1);
    CHECK(structure_sheaf_point(P, 1, 0) == poly(P, {1, -2, 1}));
    const WppParams Q(1, 1, 2);
    CHECK(structure_sheaf_point(Q, 3, 1) == poly(Q, {0, 1, -2, 1}));
    const WppParams R(2, 3, 4);
    for (int i = 1; i <= 3; ++i)
      for (int j = -2; j <= 4; ++j)
        CHECK(structure_sheaf_point(R, i, j) * KClass::g_pow(R, R.hat(i)) == structure_sheaf_point(R, i, j));
  }

  TEST_CASE("line bundles") {
    const WppParams P(1, 1, 1);
    CHECK(line_bundle_class(P, 0, 0, 0) == KClass::one(P));
    CHECK(line_bundle_class(P, 1, 1, 1) == poly(P, {1, -3, 3}));
    const WppParams Q(2, 3, 5);
    CHECK(line_bundle_class(Q, 1, -2, 4) * line_bundle_class(Q, 3, 0, -1) == line_bundle_class(Q, 4, -2, 3));
  }

  TEST_CASE("rank 1 classes") {
    const WppParams P(1, 1, 1);
    Rank1Sheaf s{0, 0, 0, {Partition({1}), Partition(), Partition()}};
    CHECK(rank1_class(P, s) == KClass::one(P) - poly(P, {1, -2, 1}));
    const WppParams Q(1, 1, 2);
    Rank1Sheaf t{0, 0, 0, {Partition(), Partition(), Partition({1})}};
    CHECK(rank1_class(Q, t) == KClass::one(Q) - structure_sheaf_point(Q, 3, 0));
    for (int A = -2; A <= 2; ++A)
      for (int C = -2; C <= 2; ++C) CHECK(rank1_class(Q, {A, 1, C, {}}) == line_bundle_class(Q, A, 1, C));
  }

  TEST_CASE("rank 1 classes, reference values") {
    // from tests/oracles/derive_values.py
    const WppParams P(1, 1, 2);
    CHECK(rank1_class(P, {1, 0, -2, {Partition({2, 1}), Partition({1}), Partition({1, 1})}}) == poly(P, {-3, 5, 3, -4}));
    const WppParams Q(2, 2, 2);
    CHECK(rank1_class(Q, {1, 1, 0, {Partition({1}), Partition(), Partition({2})}}) == poly(Q, {-3, 0, 7, 0, -3, 0}));
    const WppParams R(1, 2, 3);
    CHECK(rank1_class(R, {0, -1, 2, {Partition(), Partition({2, 1}), Partition({3})}}) ==
          poly(R, {-3, 2, 2, 3, -1, -2}));
  }

  TEST_CASE("type I rank 2 classes") {
    const WppParams P(1, 1, 1);
    TypeIBundle d;
    d.delta = {1, 1, 1};
    CHECK(rank2_typeI_class(P, d) == kclass_from_laurent(P, {{0, -2}, {1, 6}, {2, -3}, {3, 1}}));
    TypeIBundle same = d;
    same.A = {1, -2, 0};
    same.delta = {2, 1, 3};
    same.p = {ProjPoint(1, 2), ProjPoint(2, 4), ProjPoint(-1, -2)};
    CHECK(rank2_typeI_class(P, same) == line_bundle_class(P, 1, -2, 0) + line_bundle_class(P, 3, -1, 3));
    const WppParams Q(1, 2, 2);
    TypeIBundle bad;
    bad.delta = {1, 2, 1};
    CHECK_THROWS_AS(rank2_typeI_class(Q, bad), InvalidInput);
  }

  TEST_CASE("relations") {
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b)
        for (int c = 1; c <= 6; ++c) CHECK(verify_relations(WppParams(a, b, c)));
  }
}
