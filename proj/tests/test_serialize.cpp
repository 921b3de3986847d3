#include <doctest.h>

#include "wpp/serialize.hpp"

using namespace wpp;

TEST_SUITE("serialize") {
  TEST_CASE("numbers") {
    CHECK(integer_to_json(Integer(-7)) == json(-7));
    CHECK(integer_to_json(Integer("123456789012345678901234567890")) == json("123456789012345678901234567890"));
    CHECK(rational_to_json(make_rational(-3, 6)) == json("-1/2"));
    CHECK(rational_to_json(Rational(4)) == json("4"));
  }

  TEST_CASE("K-classes") {
    const WppParams P(1, 1, 2);
    CHECK(kclass_to_json(KClass::one(P)).dump() == "[[0,1,1]]");
    CHECK(kclass_to_json(KClass(P)).dump() == "[]");
    const auto k = make_rational(1, 2) * KClass::g_pow(P, 2);
    CHECK(kclass_to_json(k).dump() == "[[2,1,2]]");
  }

  TEST_CASE("Chern vectors") {
    const WppParams P(1, 1, 2);
    const auto j = chern_to_json(tch_of_kclass(KClass::g_pow(P, 1)));
    REQUIRE(j.size() == 2);
    CHECK(j[0]["kind"] == "D");
    CHECK(j[1]["kind"] == "D3");
    CHECK(j[0]["coeffs"].size() == 3);
    CHECK(j[1]["f_num"] == 1);
    CHECK(j[1]["f_den"] == 2);
    CHECK(j[1]["coeffs"].size() == 1);
    CHECK(j[1]["coeffs"][0]["order"] == 2);
  }

  TEST_CASE("series terms") {
    Series s({"q"}, std::nullopt);
    s.add_term({-2}, 3);
    s.add_term({1}, make_rational(1, 3));
    CHECK(series_terms_to_json(s).dump() == R"([{"exp":[-2],"coeff":"3"},{"exp":[1],"coeff":"1/3"}])");
  }

  TEST_CASE("family dump") {
    const WppParams P(1, 1, 1);
    const auto f = rank1_sfamily(P, Rank1Sheaf{0, 0, 0, {}}, 1, Window::square(2));
    const auto j = family_to_json(f);
    CHECK(j["chart"] == 1);
    CHECK(j["boxes"].size() == 1);
    CHECK(j["boxes"][0]["cells"].size() == 5);
    CHECK(j["boxes"][0]["cells"][2][2] == json::array({0, 1}));
    CHECK(j["boxes"][0]["cells"][0][0] == json::array({0, 0}));
  }
}
