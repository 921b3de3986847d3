#pragma once

#include <json.hpp>

#include "wpp/inertia.hpp"
#include "wpp/kgroup.hpp"
#include "wpp/rank2.hpp"
#include "wpp/series.hpp"
#include "wpp/sheaf_model.hpp"

namespace wpp {

using json = nlohmann::ordered_json;

// Integers that fit in 64 bits become numbers, larger ones decimal strings.
json integer_to_json(const Integer& z);
// "p/q", or "p" when integral.
json rational_to_json(const Rational& q);

json kclass_to_json(const KClass& k);  // [[exp, num, den], ...] over nonzero coefficients
json cyclotomic_to_json(const Cyclotomic& x);
json chern_to_json(const ChernVector& v);
json refined_key_to_json(const RefinedKey& k);
// One record per term: {"exp": [...], "coeff": ...}.
json series_terms_to_json(const Series& s);
json family_to_json(const TruncatedSFamily& f);

}  // namespace wpp
