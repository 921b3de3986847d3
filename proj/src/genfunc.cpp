#include "wpp/genfunc.hpp"

#include <functional>

#include "wpp/errors.hpp"

namespace wpp {

std::vector<std::string> chart_variables(const WppParams& params, int chart) {
  const char* prefix[] = {"p", "q", "r"};
  std::vector<std::string> v;
  for (int l = 0; l < params.hat(chart); ++l) v.push_back(prefix[chart - 1] + std::to_string(l));
  return v;
}

std::vector<std::string> all_chart_variables(const WppParams& params) {
  std::vector<std::string> v;
  for (int i = 1; i <= 3; ++i) {
    auto c = chart_variables(params, i);
    v.insert(v.end(), c.begin(), c.end());
  }
  return v;
}

Series tracked_partition_series(const ColoringSpec& spec, const std::vector<int>& color_to_var,
                                std::vector<std::string> vars, std::int64_t maxOrder) {
  if (static_cast<int>(color_to_var.size()) != spec.n) throw InvalidInput("one tracking entry per color required");
  if (maxOrder < 0) throw InvalidInput("order must be nonnegative");
  auto tracked = [&](std::int64_t l1, std::int64_t l2) { return color_to_var[spec.color(l1, l2)]; };
  bool row_ok = false, col_ok = false;
  for (int t = 0; t < spec.n; ++t) {
    row_ok = row_ok || tracked(t, 0) >= 0;
    col_ok = col_ok || tracked(0, t) >= 0;
  }
  if (!row_ok || !col_ok) throw InvalidInput("tracked partition series diverges for this coloring");

  std::map<Exponent, long> counts;
  Exponent exp(vars.size(), 0);
  // Rows are added top to bottom; each call records the partition built so
  // far, then tries every admissible next row.
  std::function<void(std::int64_t, std::int64_t, std::int64_t)> visit = [&](std::int64_t row, std::int64_t maxLen,
                                                                          std::int64_t weight) {
    ++counts[exp];
    std::vector<int> added;
    std::int64_t w = weight;
    for (std::int64_t L = 1; maxLen < 0 || L <= maxLen; ++L) {
      int v = tracked(L - 1, row);
      if (v >= 0) {
        if (w + 1 > maxOrder) break;
        ++exp[v];
        ++w;
        added.push_back(v);
      }
      visit(row + 1, L, w);
    }
    for (int v : added) --exp[v];
  };
  visit(0, -1, 0);

  Series s(std::move(vars), maxOrder);
  for (const auto& [e, n] : counts) s.add_term(e, Rational(n));
  return s;
}

Series chart_series(const WppParams& params, int chart, std::int64_t beta, std::int64_t maxOrder) {
  ColoringSpec spec = chart_spec(params, chart, -beta);
  std::vector<int> identity(spec.n);
  for (int l = 0; l < spec.n; ++l) identity[l] = l;
  return tracked_partition_series(spec, identity, chart_variables(params, chart), maxOrder);
}

namespace {

// Places a chart series into the joint variable list.
Series embed_chart(const WppParams& params, int chart, const Series& s) {
  auto all = all_chart_variables(params);
  std::size_t offset = 0;
  for (int i = 1; i < chart; ++i) offset += params.hat(i);
  std::vector<Exponent> images;
  for (std::size_t l = 0; l < s.nvars(); ++l) {
    Exponent e(all.size(), 0);
    e[offset + l] = 1;
    images.push_back(e);
  }
  return specialize(s, all, images);
}

}  // namespace

Series g_series(const WppParams& params, std::int64_t beta, std::int64_t maxOrder) {
  Series out = Series::constant(all_chart_variables(params), maxOrder);
  for (int i = 1; i <= 3; ++i) out = out * embed_chart(params, i, chart_series(params, i, beta, maxOrder));
  return out;
}

Series g_series_color0(const WppParams& params, std::int64_t beta, std::int64_t maxOrder) {
  Series out = Series::constant({"q"}, maxOrder);
  for (int i = 1; i <= 3; ++i) {
    ColoringSpec spec = chart_spec(params, i, -beta);
    std::vector<int> track(spec.n, -1);
    track[0] = 0;
    out = out * tracked_partition_series(spec, track, {"q"}, maxOrder);
  }
  return out;
}

namespace {

std::vector<std::string> balanced_vars(int k) {
  std::vector<std::string> v;
  for (int i = 0; i < k; ++i) v.push_back("q" + std::to_string(i));
  return v;
}

// n.C.n/2 for the A_{k-1} Cartan matrix
std::int64_t cartan_form(const std::vector<std::int64_t>& n) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i < n.size(); ++i) {
    s += n[i] * n[i];
    if (i + 1 < n.size()) s -= n[i] * n[i + 1];
  }
  return s;
}

void for_each_lattice_point(int dim, std::int64_t R, const std::function<void(const std::vector<std::int64_t>&)>& f) {
  std::vector<std::int64_t> n(dim, -R);
  if (dim == 0) {
    f(n);
    return;
  }
  while (true) {
    f(n);
    int i = 0;
    while (i < dim && n[i] == R) n[i++] = -R;
    if (i == dim) return;
    ++n[i];
  }
}

std::int64_t isqrt(std::int64_t x) {
  std::int64_t r = 0;
  while ((r + 1) * (r + 1) <= x) ++r;
  return r;
}

}  // namespace

Series balanced_brute(int k, std::int64_t maxOrder) {
  if (k < 1) throw InvalidInput("k must be positive");
  ColoringSpec spec{k, 1, k - 1, 0};
  std::vector<int> identity(k);
  for (int l = 0; l < k; ++l) identity[l] = l;
  return tracked_partition_series(spec, identity, balanced_vars(k), maxOrder);
}

Series balanced_rhs(int k, std::int64_t maxOrder) {
  if (k < 1) throw InvalidInput("k must be positive");
  auto vars = balanced_vars(k);
  Series theta(vars, maxOrder);
  // Every exponent is >= 0 and the q0 exponent is the Cartan form, so total
  // degree <= N forces |n_i| <= N.
  for_each_lattice_point(k - 1, maxOrder, [&](const std::vector<std::int64_t>& n) {
    const std::int64_t qe = cartan_form(n);
    Exponent e(k, qe);
    for (int i = 1; i < k; ++i) e[i] += n[i - 1];
    for (auto x : e)
      if (x < 0) throw InternalInconsistency("balanced theta sum produced a negative exponent");
    theta.add_term(e, 1);
  });
  for (std::int64_t j = 1; j * k <= maxOrder; ++j) theta = theta * inverse_binomial(vars, Exponent(k, j), k, maxOrder);
  return theta;
}

Series eta_inv_pow(int r, std::int64_t maxOrder) {
  Series s = Series::constant({"q"}, maxOrder);
  for (std::int64_t n = 1; n <= maxOrder; ++n) s = s * inverse_binomial({"q"}, {n}, r, maxOrder);
  return s;
}

Series theta3(std::int64_t maxOrder) {
  Series s({"q"}, maxOrder);
  for (std::int64_t k = -isqrt(maxOrder); k * k <= maxOrder; ++k) s.add_term({k * k}, 1);
  return s;
}

Series su_k_character_proxy(int k, std::int64_t maxOrder) {
  if (k < 1) throw InvalidInput("k must be positive");
  Series s({"q"}, maxOrder);
  // |n_i|^2 <= 2k * (n.C.n/2)
  const std::int64_t R = isqrt(2 * k * maxOrder) + 1;
  for_each_lattice_point(k - 1, R, [&](const std::vector<std::int64_t>& n) { s.add_term({cartan_form(n)}, 1); });
  return s;
}

Series p1cc_product(int c, std::int64_t maxOrder) {
  std::vector<std::string> vars;
  for (int i = 0; i < c; ++i) vars.push_back("r" + std::to_string(i));
  Series s = Series::constant(vars, maxOrder);
  for (std::int64_t k = 1; k * c <= maxOrder; ++k) s = s * inverse_binomial(vars, Exponent(c, k), 3, maxOrder);
  for (std::int64_t k = 1;; ++k) {
    if ((k - 1) * c + 1 > maxOrder) break;
    for (int i = 0; i + 1 < c; ++i) {
      Exponent m(c, k - 1);
      for (int j = 0; j <= i; ++j) ++m[j];
      s = s * inverse_binomial(vars, m, 2, maxOrder);
    }
  }
  return s;
}

Series p1cc_specialized(int c, std::int64_t maxOrder) {
  WppParams params(1, c, c);
  std::vector<std::string> target;
  for (int i = 0; i < c; ++i) target.push_back("r" + std::to_string(i));
  std::vector<Exponent> images;
  images.push_back(Exponent(c, 1));  // p0
  for (int chart = 2; chart <= 3; ++chart)
    for (int i = 0; i < c; ++i) {
      Exponent e(c, 0);
      e[i] = 1;
      images.push_back(e);
    }
  return specialize(g_series(params, 0, maxOrder), target, images);
}

}  // namespace wpp
