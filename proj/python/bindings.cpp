#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "wpp/errors.hpp"
#include "wpp/genfunc.hpp"
#include "wpp/serialize.hpp"

namespace py = pybind11;
using namespace wpp;

namespace {

py::object py_int(const Integer& z) {
  return py::reinterpret_steal<py::object>(PyLong_FromString(z.get_str().c_str(), nullptr, 10));
}

py::object fraction(const Rational& q) {
  static py::object Fraction = py::module_::import("fractions").attr("Fraction");
  return Fraction(py_int(q.get_num()), py_int(q.get_den()));
}

py::list fractions(const std::vector<Rational>& v) {
  py::list out;
  for (const auto& q : v) out.append(fraction(q));
  return out;
}

py::tuple series_to_py(const Series& s) {
  py::dict terms;
  for (const auto& [e, c] : s.terms()) terms[py::tuple(py::cast(e))] = fraction(c);
  return py::make_tuple(s.vars(), terms);
}

Rank1Sheaf rank1(std::int64_t A, std::int64_t B, std::int64_t C, const std::vector<std::vector<int>>& parts) {
  if (!parts.empty() && parts.size() != 3) throw InvalidInput("give three partitions");
  Rank1Sheaf s{A, B, C, {}};
  for (std::size_t i = 0; i < parts.size(); ++i) s.lambda[i] = Partition(parts[i]);
  return s;
}

TypeIBundle typeI(const std::array<std::int64_t, 3>& A, const std::array<std::int64_t, 3>& delta,
                  const std::vector<std::pair<long, long>>& points) {
  TypeIBundle d;
  d.A = A;
  d.delta = delta;
  if (!points.empty()) {
    if (points.size() != 3) throw InvalidInput("give three points");
    for (int i = 0; i < 3; ++i) d.p[i] = ProjPoint(Rational(points[i].first), Rational(points[i].second));
  }
  return d;
}

py::tuple rank2_to_py(const Rank2Series& r) {
  py::dict terms;
  for (const auto& [e, c] : r.series.terms()) terms[py::int_(e[0])] = fraction(c);
  return py::make_tuple(terms, r.exact_from);
}

using Points = std::vector<std::pair<long, long>>;

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Toric sheaves on weighted projective planes";

  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<InternalInconsistency>(m, "InternalInconsistency", PyExc_RuntimeError);
  py::register_exception<InsufficientWindow>(m, "InsufficientWindow", PyExc_RuntimeError);

  py::class_<WppParams>(m, "WppParams")
      .def(py::init<int, int, int>(), py::arg("a"), py::arg("b"), py::arg("c"))
      .def_property_readonly("a", &WppParams::a)
      .def_property_readonly("b", &WppParams::b)
      .def_property_readonly("c", &WppParams::c)
      .def_property_readonly("d", &WppParams::d)
      .def_property_readonly("d12", &WppParams::d12)
      .def_property_readonly("d13", &WppParams::d13)
      .def_property_readonly("d23", &WppParams::d23)
      .def_property_readonly("m", &WppParams::m)
      .def("__repr__", [](const WppParams& p) { return "WppParams" + p.to_string(); });

  // hilbert
  m.def("hilb_top", [](const WppParams& p, std::int64_t r) {
    auto h = hilb_top(p, r);
    return py::make_tuple(fraction(h.quad), fraction(h.lin));
  });
  m.def("hilb_top_E", [](const WppParams& p, int E, std::int64_t r) {
    auto h = hilb_top_E(p, make_generating_spec(p, E), r);
    return py::make_tuple(fraction(h.quad), fraction(h.lin));
  });
  m.def("chi_oracle", [](const WppParams& p, std::int64_t r) { return py_int(chi_oracle(p, r)); });
  m.def("hilb_fit_oracle", [](const WppParams& p, std::int64_t r) {
    auto f = hilb_fit_oracle(p, r);
    return py::make_tuple(fraction(f.quad), fraction(f.lin), fraction(f.constant));
  });
  m.def("rank2_constant_term", [](const WppParams& p, int E, std::int64_t c1, std::int64_t lambda, std::int64_t D1,
                                  std::int64_t D2, std::int64_t D3) {
    return fraction(rank2_constant_term(p, make_generating_spec(p, E), c1, lambda, D1, D2, D3));
  });

  // inertia
  m.def("sectors", [](const WppParams& p) {
    py::list out;
    for (const auto& s : sectors(p)) {
      py::dict d;
      d["f"] = fraction(s.f);
      d["kind"] = s.kind_name();
      d["dim"] = s.dim;
      out.append(d);
    }
    return out;
  });
  m.def("tch_typeI_json", [](const WppParams& p, std::array<std::int64_t, 3> A, std::array<std::int64_t, 3> delta,
                             const Points& pts) {
    return chern_to_json(tch_of_kclass(rank2_typeI_class(p, typeI(A, delta, pts)))).dump();
  }, py::arg("params"), py::arg("A"), py::arg("delta"), py::arg("points") = Points{});
  m.def("tch_typeI_closed_form_json", [](const WppParams& p, std::int64_t A, std::array<std::int64_t, 3> delta) {
    return chern_to_json(tch_rank2_closed_form(p, typeI({0, 0, A}, delta, {}))).dump();
  });

  // kgroup
  m.def("rank1_class", [](const WppParams& p, std::int64_t A, std::int64_t B, std::int64_t C,
                          const std::vector<std::vector<int>>& parts) {
    return fractions(rank1_class(p, rank1(A, B, C, parts)).coeffs());
  }, py::arg("params"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("partitions") = std::vector<std::vector<int>>{});
  m.def("rank2_typeI_class", [](const WppParams& p, std::array<std::int64_t, 3> A, std::array<std::int64_t, 3> delta,
                                const Points& pts) { return fractions(rank2_typeI_class(p, typeI(A, delta, pts)).coeffs()); },
        py::arg("params"), py::arg("A"), py::arg("delta"), py::arg("points") = Points{});
  m.def("verify_relations", &verify_relations);

  // sheaf model
  m.def("rank1_class_by_devissage", [](const WppParams& p, std::int64_t A, std::int64_t B, std::int64_t C,
                                       const std::vector<std::vector<int>>& parts) {
    return fractions(kclass_by_devissage(p, rank1(A, B, C, parts)).coeffs());
  }, py::arg("params"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("partitions") = std::vector<std::vector<int>>{});
  m.def("rank2_class_by_devissage", [](const WppParams& p, std::array<std::int64_t, 3> A,
                                       std::array<std::int64_t, 3> delta, const Points& pts) {
    return fractions(kclass_by_devissage(p, typeI(A, delta, pts)).coeffs());
  }, py::arg("params"), py::arg("A"), py::arg("delta"), py::arg("points") = Points{});
  m.def("check_gluing_rank1", [](const WppParams& p, std::int64_t A, std::int64_t B, std::int64_t C,
                                 const std::vector<std::vector<int>>& parts) {
    auto r = check_gluing(p, rank1_sfamilies(p, rank1(A, B, C, parts)));
    return py::make_tuple(r.ok, r.diagnostic);
  }, py::arg("params"), py::arg("A"), py::arg("B"), py::arg("C"), py::arg("partitions") = std::vector<std::vector<int>>{});
  m.def("check_gluing_typeI", [](const WppParams& p, std::array<std::int64_t, 3> A, std::array<std::int64_t, 3> delta,
                                 const Points& pts) {
    auto r = check_gluing(p, typeI_sfamilies(p, typeI(A, delta, pts)));
    return py::make_tuple(r.ok, r.diagnostic);
  }, py::arg("params"), py::arg("A"), py::arg("delta"), py::arg("points") = Points{});

  // generating functions
  m.def("chart_series", [](const WppParams& p, int chart, std::int64_t beta, std::int64_t order) {
    return series_to_py(chart_series(p, chart, beta, order));
  });
  m.def("g_series", [](const WppParams& p, std::int64_t beta, std::int64_t order) {
    return series_to_py(g_series(p, beta, order));
  });
  m.def("g_series_color0", [](const WppParams& p, std::int64_t beta, std::int64_t order) {
    return series_to_py(g_series_color0(p, beta, order));
  });
  m.def("balanced_brute", [](int k, std::int64_t order) { return series_to_py(balanced_brute(k, order)); });
  m.def("balanced_rhs", [](int k, std::int64_t order) { return series_to_py(balanced_rhs(k, order)); });
  m.def("eta_inv_pow", [](int r, std::int64_t order) { return series_to_py(eta_inv_pow(r, order)); });
  m.def("theta3", [](std::int64_t order) { return series_to_py(theta3(order)); });
  m.def("p1cc_product", [](int c, std::int64_t order) { return series_to_py(p1cc_product(c, order)); });
  m.def("p1cc_specialized", [](int c, std::int64_t order) { return series_to_py(p1cc_specialized(c, order)); });

  // rank 2
  m.def("enumerate_stable_triples", [](const WppParams& p, std::int64_t c1, std::int64_t lambda, std::int64_t maxSum) {
    py::list out;
    for (const auto& t : enumerate_stable_triples(p, c1, lambda, maxSum)) out.append(py::make_tuple(t.A, t.D1, t.D2, t.D3));
    return out;
  });
  m.def("is_mu_stable", [](const WppParams& p, std::array<std::int64_t, 3> delta, const Points& pts) {
    return is_mu_stable(p, typeI({0, 0, 0}, delta, pts));
  }, py::arg("params"), py::arg("delta"), py::arg("points") = Points{});
  m.def("slope_oracle_stability", [](const WppParams& p, int E, std::array<std::int64_t, 3> delta, const Points& pts) {
    return slope_oracle_stability(p, make_generating_spec(p, E), typeI({0, 0, 0}, delta, pts));
  }, py::arg("params"), py::arg("E"), py::arg("delta"), py::arg("points") = Points{});
  m.def("h_vb_specialized", [](const WppParams& p, int E, std::int64_t c1, std::int64_t lambda, std::int64_t maxSum) {
    return rank2_to_py(h_vb_specialized(p, make_generating_spec(p, E), c1, lambda, maxSum));
  });
  m.def("h_full", [](const WppParams& p, int E, std::int64_t c1, std::int64_t lambda, std::int64_t maxSum) {
    return rank2_to_py(h_full(p, make_generating_spec(p, E), c1, lambda, maxSum));
  });
}
