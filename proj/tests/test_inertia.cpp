#include <doctest.h>

#include <set>

#include "wpp/inertia.hpp"

using namespace wpp;

TEST_SUITE("inertia") {
  TEST_CASE("sector lists") {
    auto s = sectors(WppParams(1, 1, 1));
    REQUIRE(s.size() == 1);
    CHECK(s[0].kind == SectorKind::TwoDim);

    s = sectors(WppParams(1, 1, 2));
    REQUIRE(s.size() == 2);
    CHECK(s[1].f == make_rational(1, 2));
    CHECK(s[1].kind == SectorKind::ZeroDim);
    CHECK(s[1].i == 3);

    s = sectors(WppParams(2, 2, 2));
    REQUIRE(s.size() == 2);
    CHECK(s[1].kind == SectorKind::TwoDim);
  }

  TEST_CASE("sectors partition the ages of all charts") {
    for (int a = 1; a <= 6; ++a)
      for (int b = 1; b <= 6; ++b)
        for (int c = 1; c <= 6; ++c) {
          const WppParams P(a, b, c);
          std::set<Rational> expected;
          for (int w : {a, b, c})
            for (int l = 0; l < w; ++l) expected.insert(make_rational(l, w));
          std::set<Rational> got;
          for (const auto& s : sectors(P)) {
            CHECK(got.insert(s.f).second);
            const int dim = s.kind == SectorKind::TwoDim ? 2 : (s.kind == SectorKind::OneDim ? 1 : 0);
            CHECK(s.dim == dim);
          }
          CHECK(got == expected);
        }
  }

  TEST_CASE("chern character of simple classes") {
    const WppParams P(1, 1, 1);
    auto one = tch_of_kclass(KClass::one(P));
    CHECK(one.entries()[0] == std::vector<Cyclotomic>{1, 0, 0});
    auto g = tch_of_kclass(KClass::g_pow(P, 1));
    CHECK(g.entries()[0] == std::vector<Cyclotomic>{1, -1, Cyclotomic(make_rational(1, 2))});

    const WppParams Q(1, 1, 2);
    auto gq = tch_of_kclass(KClass::g_pow(Q, 1));
    CHECK(gq.entries()[1] == std::vector<Cyclotomic>{-1});
  }

  TEST_CASE("multiplicativity") {
    for (auto abc : {std::array{1, 2, 3}, std::array{2, 2, 4}, std::array{2, 3, 6}}) {
      const WppParams P(abc[0], abc[1], abc[2]);
      const KClass x = kclass_from_laurent(P, {{0, 2}, {1, -1}, {3, 5}});
      const KClass y = kclass_from_laurent(P, {{-2, 1}, {2, 3}});
      CHECK(tch_of_kclass(x * y) == tch_of_kclass(x) * tch_of_kclass(y));
    }
  }

  TEST_CASE("closed form for type I bundles") {
    const WppParams P(1, 1, 1);
    TypeIBundle d;
    d.A = {0, 0, -2};
    d.delta = {1, 2, 2};
    const auto v = tch_rank2_closed_form(P, d);
    CHECK(v.codegree(0, 2) == Cyclotomic(2));
    CHECK(v.codegree(0, 1) == Cyclotomic(-(2 * -2 + 5)));
    CHECK(v == tch_of_kclass(rank2_typeI_class(P, d)));

    const WppParams Q(2, 2, 2);
    TypeIBundle e;
    e.A = {0, 0, 2};
    e.delta = {2, 2, 2};
    CHECK(tch_rank2_closed_form(Q, e) == tch_of_kclass(rank2_typeI_class(Q, e)));
  }
}
