#include "wpp/serialize.hpp"

namespace wpp {

json integer_to_json(const Integer& z) {
  if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
  return json(z.get_str());
}

json rational_to_json(const Rational& q) { return json(to_string(q)); }

json kclass_to_json(const KClass& k) {
  json out = json::array();
  const auto c = k.coeffs();
  for (std::size_t e = 0; e < c.size(); ++e)
    if (c[e] != 0) out.push_back({e, integer_to_json(c[e].get_num()), integer_to_json(c[e].get_den())});
  return out;
}

json cyclotomic_to_json(const Cyclotomic& x) {
  json coords = json::array();
  for (const auto& r : x.coords()) coords.push_back(rational_to_json(r));
  return {{"order", x.order()}, {"coords", coords}};
}

json chern_to_json(const ChernVector& v) {
  json out = json::array();
  for (std::size_t s = 0; s < v.sectors().size(); ++s) {
    const auto& sec = v.sectors()[s];
    json coeffs = json::array();
    for (const auto& c : v.entries()[s]) coeffs.push_back(cyclotomic_to_json(c));
    out.push_back({{"f_num", integer_to_json(sec.f.get_num())},
                   {"f_den", integer_to_json(sec.f.get_den())},
                   {"kind", sec.kind_name()},
                   {"coeffs", coeffs}});
  }
  return out;
}

json refined_key_to_json(const RefinedKey& k) {
  json out = json::array();
  for (const auto& c : k.entries) out.push_back(cyclotomic_to_json(c));
  return out;
}

json series_terms_to_json(const Series& s) {
  json out = json::array();
  for (const auto& [e, c] : s.terms()) out.push_back({{"exp", e}, {"coeff", rational_to_json(c)}});
  return out;
}

json family_to_json(const TruncatedSFamily& f) {
  const auto& w = f.window();
  json boxes = json::array();
  for (const auto& [box, cells] : f.boxes()) {
    json rows = json::array();
    for (std::int64_t l2 = w.lo2; l2 <= w.hi2; ++l2) {
      json row = json::array();
      for (std::int64_t l1 = w.lo1; l1 <= w.hi1; ++l1) {
        const Piece p = f.piece(box, l1, l2);
        json cell = {p.weight, p.dim};
        if (p.label) cell.push_back(p.label->to_string());
        row.push_back(cell);
      }
      rows.push_back(row);
    }
    boxes.push_back({{"box", {box.first, box.second}}, {"cells", rows}});
  }
  return {{"chart", f.chart()},
          {"modulus", f.modulus()},
          {"steps", {f.step1(), f.step2()}},
          {"window", {w.lo1, w.hi1, w.lo2, w.hi2}},
          {"boxes", boxes}};
}

}  // namespace wpp
