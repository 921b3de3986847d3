#include "wpp/sheaf_model.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

#include "wpp/errors.hpp"

namespace wpp {

TruncatedSFamily::TruncatedSFamily(const WppParams& params, int chart, Window window)
    : chart_(chart), window_(window) {
  if (chart < 1 || chart > 3) throw InvalidInput("chart must be 1, 2 or 3");
  if (window.lo1 > window.hi1 || window.lo2 > window.hi2) throw InvalidInput("empty window");
  n_ = params.chart_modulus(chart);
  n1_ = params.chart_step1(chart);
  n2_ = params.chart_step2(chart);
}

std::size_t TruncatedSFamily::index(std::int64_t l1, std::int64_t l2) const {
  return static_cast<std::size_t>((l2 - window_.lo2) * (window_.hi1 - window_.lo1 + 1) + (l1 - window_.lo1));
}

Piece TruncatedSFamily::piece(const Box& box, std::int64_t l1, std::int64_t l2) const {
  if (!window_.contains(l1, l2)) throw InvalidInput("lattice point outside the window");
  auto it = grid_.find(box);
  if (it == grid_.end()) return {};
  return it->second[index(l1, l2)];
}

void TruncatedSFamily::set_piece(const Box& box, std::int64_t l1, std::int64_t l2, const Piece& p) {
  if (box.first < 0 || box.first >= n1_ || box.second < 0 || box.second >= n2_)
    throw InvalidInput("box outside the box lattice");
  if (!window_.contains(l1, l2)) throw InvalidInput("lattice point outside the window");
  if (p.weight < 0 || p.weight >= n_ || p.dim < 0) throw InvalidInput("bad piece");
  auto [it, fresh] = grid_.try_emplace(box);
  if (fresh)
    it->second.assign(static_cast<std::size_t>((window_.hi1 - window_.lo1 + 1) * (window_.hi2 - window_.lo2 + 1)),
                      Piece{});
  it->second[index(l1, l2)] = p;
}

int TruncatedSFamily::nonzero_box_count() const {
  int count = 0;
  for (const auto& [box, cells] : grid_)
    if (std::any_of(cells.begin(), cells.end(), [](const Piece& p) { return p.dim > 0; })) ++count;
  return count;
}

int TruncatedSFamily::rank() const {
  int r = 0;
  for (const auto& [box, cells] : grid_) r += piece(box, window_.hi1, window_.hi2).dim;
  return r;
}

ChartCorner line_bundle_corner(const WppParams& params, std::int64_t A, std::int64_t B, std::int64_t C, int chart) {
  const std::int64_t vals[3] = {A, B, C};
  const std::int64_t x = vals[chart - 1], y = vals[chart % 3];
  const int n1 = params.chart_step1(chart), n2 = params.chart_step2(chart);
  ChartCorner c;
  c.box = {static_cast<int>(floor_mod(x, n1)), static_cast<int>(floor_mod(y, n2))};
  c.I1 = floor_div(x, n1);
  c.I2 = floor_div(y, n2);
  c.weight = static_cast<int>(floor_mod(A + B + C, params.chart_modulus(chart)));
  return c;
}

namespace {

int lattice_weight(const TruncatedSFamily& f, const ChartCorner& c, std::int64_t l1, std::int64_t l2) {
  return static_cast<int>(floor_mod(c.weight + (l1 - c.I1) * f.step1() + (l2 - c.I2) * f.step2(), f.modulus()));
}

}  // namespace

TruncatedSFamily rank1_chart_family(const WppParams& params, int chart, const ChartCorner& corner,
                                    const Partition& lambda, Window window) {
  TruncatedSFamily f(params, chart, window);
  for (std::int64_t l2 = window.lo2; l2 <= window.hi2; ++l2)
    for (std::int64_t l1 = window.lo1; l1 <= window.hi1; ++l1) {
      const bool inside = l1 >= corner.I1 && l2 >= corner.I2 && !lambda.contains(l1 - corner.I1, l2 - corner.I2);
      f.set_piece(corner.box, l1, l2, Piece{lattice_weight(f, corner, l1, l2), inside ? 1 : 0, std::nullopt});
    }
  return f;
}

TruncatedSFamily typeI_chart_family(const WppParams& params, int chart, const ChartCorner& corner, std::int64_t w1,
                                    std::int64_t w2, const ProjPoint& p, const ProjPoint& q, Window window) {
  if (w1 < 0 || w2 < 0) throw InvalidInput("negative width");
  TruncatedSFamily f(params, chart, window);
  // 0 = zero space, 1 = the line, 2 = everything
  auto level = [](std::int64_t l, std::int64_t I, std::int64_t w) { return l < I ? 0 : (l < I + w ? 1 : 2); };
  for (std::int64_t l2 = window.lo2; l2 <= window.hi2; ++l2)
    for (std::int64_t l1 = window.lo1; l1 <= window.hi1; ++l1) {
      const int v1 = level(l1, corner.I1, w1), v2 = level(l2, corner.I2, w2);
      Piece piece{lattice_weight(f, corner, l1, l2), 0, std::nullopt};
      if (v1 == 0 || v2 == 0) {
        piece.dim = 0;
      } else if (v1 == 2 && v2 == 2) {
        piece.dim = 2;
      } else if (v1 == 2) {
        piece = Piece{piece.weight, 1, q};
      } else if (v2 == 2) {
        piece = Piece{piece.weight, 1, p};
      } else if (p == q) {
        piece = Piece{piece.weight, 1, p};
      }
      f.set_piece(corner.box, l1, l2, piece);
    }
  return f;
}

std::int64_t minimal_window(const Rank1Sheaf& sheaf) {
  std::int64_t m = std::max({std::abs(sheaf.A), std::abs(sheaf.B), std::abs(sheaf.C)});
  int legs = 0;
  for (const auto& l : sheaf.lambda) legs = std::max({legs, l.arm(), l.leg()});
  return m + legs + 2;
}

std::int64_t minimal_window(const TypeIBundle& datum) {
  std::int64_t m = 0;
  for (auto x : datum.A) m = std::max(m, std::abs(x));
  return m + datum.sum_delta() + 2;
}

namespace {

void require_window(const Window& w, std::int64_t minimal) {
  if (w.lo1 > -minimal || w.lo2 > -minimal || w.hi1 < minimal || w.hi2 < minimal)
    throw InvalidInput("window smaller than the minimal stabilizing window " + std::to_string(minimal));
}

}  // namespace

TruncatedSFamily rank1_sfamily(const WppParams& params, const Rank1Sheaf& sheaf, int chart, Window window) {
  require_window(window, minimal_window(sheaf));
  return rank1_chart_family(params, chart, line_bundle_corner(params, sheaf.A, sheaf.B, sheaf.C, chart),
                            sheaf.lambda[chart - 1], window);
}

TruncatedSFamily typeI_sfamily(const WppParams& params, const TypeIBundle& datum, int chart, Window window) {
  check_divisibility(params, datum);
  require_window(window, minimal_window(datum));
  const auto corner = line_bundle_corner(params, datum.A[0], datum.A[1], datum.A[2], chart);
  const std::int64_t w1 = datum.delta[chart - 1] / params.chart_step1(chart);
  const std::int64_t w2 = datum.delta[chart % 3] / params.chart_step2(chart);
  return typeI_chart_family(params, chart, corner, w1, w2, datum.p[chart - 1], datum.p[chart % 3], window);
}

std::array<TruncatedSFamily, 3> rank1_sfamilies(const WppParams& params, const Rank1Sheaf& sheaf) {
  const auto w = Window::square(minimal_window(sheaf));
  return {rank1_sfamily(params, sheaf, 1, w), rank1_sfamily(params, sheaf, 2, w), rank1_sfamily(params, sheaf, 3, w)};
}

std::array<TruncatedSFamily, 3> typeI_sfamilies(const WppParams& params, const TypeIBundle& datum) {
  const auto w = Window::square(minimal_window(datum));
  return {typeI_sfamily(params, datum, 1, w), typeI_sfamily(params, datum, 2, w), typeI_sfamily(params, datum, 3, w)};
}

TruncatedSFamily direct_sum(const TruncatedSFamily& x, const TruncatedSFamily& y) {
  if (x.chart() != y.chart() || x.modulus() != y.modulus() || !(x.window() == y.window()))
    throw InvalidInput("direct sum of families on different charts or windows");
  TruncatedSFamily out = x;
  const auto& w = x.window();
  for (const auto& [box, cells] : y.boxes())
    for (std::int64_t l2 = w.lo2; l2 <= w.hi2; ++l2)
      for (std::int64_t l1 = w.lo1; l1 <= w.hi1; ++l1) {
        Piece a = out.piece(box, l1, l2);
        const Piece b = y.piece(box, l1, l2);
        if (b.dim == 0) continue;
        if (a.dim == 0) {
          out.set_piece(box, l1, l2, b);
          continue;
        }
        if (a.weight != b.weight) throw InvalidInput("direct sum of pieces with different fine weights");
        out.set_piece(box, l1, l2, Piece{a.weight, a.dim + b.dim, std::nullopt});
      }
  return out;
}

namespace {

using GlueEntry = std::tuple<int, int, int, std::optional<ProjPoint>>;

bool same_shape(const Piece& x, const Piece& y) { return x.dim == y.dim && x.label == y.label; }

void require_stable(const TruncatedSFamily& f, bool dir1) {
  const auto& w = f.window();
  const std::int64_t lo = dir1 ? w.lo2 : w.lo1, hi = dir1 ? w.hi2 : w.hi1;
  for (const auto& [box, cells] : f.boxes())
    for (std::int64_t l = lo; l <= hi; ++l) {
      const Piece edge = dir1 ? f.piece(box, w.hi1, l) : f.piece(box, l, w.hi2);
      const Piece prev = dir1 ? f.piece(box, w.hi1 - 1, l) : f.piece(box, l, w.hi2 - 1);
      const int step = dir1 ? f.step1() : f.step2();
      const bool weight_ok = edge.dim == 0 || floor_mod(edge.weight - step - prev.weight, f.modulus()) == 0;
      if (!same_shape(edge, prev) || !weight_ok)
        throw InsufficientWindow("chart " + std::to_string(f.chart()) + " not stable in direction " +
                                 (dir1 ? "1" : "2"));
    }
}

std::string entries_text(const std::vector<GlueEntry>& v) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& [e1, e2, dim, label] = v[i];
    os << (i ? " " : "") << "(" << e1 << "," << e2 << ")x" << dim;
    if (label) os << "@" << label->to_string();
  }
  return os.str() + "]";
}

}  // namespace

GluingReport check_gluing(const WppParams& params, const std::array<TruncatedSFamily, 3>& families) {
  for (int t = 1; t <= 3; ++t)
    if (families[t - 1].chart() != t) throw InvalidInput("families must be given in chart order");
  for (const auto& f : families) {
    require_stable(f, true);
    require_stable(f, false);
  }
  (void)params;
  for (int t = 1; t <= 3; ++t) {
    const auto& F = families[t - 1];
    const auto& G = families[t % 3];
    const int nt = F.modulus(), nu = G.modulus();
    const std::int64_t lo = std::max(F.window().lo2, G.window().lo1);
    const std::int64_t hi = std::min(F.window().hi2, G.window().hi1);
    for (int j = 0; j < F.step2(); ++j)
      for (std::int64_t l = lo; l <= hi; ++l) {
        std::vector<GlueEntry> lhs, rhs;
        const std::int64_t h1 = F.window().hi1;
        for (int u = 0; u < F.step1(); ++u) {
          const Piece p = F.piece({u, j}, h1, l);
          if (p.dim == 0) continue;
          const std::int64_t lw = floor_mod(p.weight - h1 * F.step1(), nt);
          lhs.emplace_back(floor_mod(lw - u, nt), floor_mod(u, nu), p.dim, p.label);
        }
        const std::int64_t h2 = G.window().hi2;
        for (int v = 0; v < G.step2(); ++v) {
          const Piece p = G.piece({j, v}, l, h2);
          if (p.dim == 0) continue;
          const std::int64_t lw = floor_mod(p.weight - h2 * G.step2(), nu);
          const std::int64_t x = v + j + l * G.step1();
          rhs.emplace_back(floor_mod(x, nt), floor_mod(lw - x, nu), p.dim, p.label);
        }
        std::sort(lhs.begin(), lhs.end());
        std::sort(rhs.begin(), rhs.end());
        if (lhs != rhs) {
          std::ostringstream os;
          os << "charts " << t << "/" << t % 3 + 1 << " disagree at j=" << j << " l=" << l << ": "
             << entries_text(lhs) << " vs " << entries_text(rhs);
          return {false, os.str()};
        }
      }
  }
  return {true, ""};
}

bool coherence_check(const TruncatedSFamily& f) {
  const auto& w = f.window();
  for (const auto& [box, cells] : f.boxes()) {
    for (std::int64_t l = w.lo2; l <= w.hi2; ++l)
      if (f.piece(box, w.lo1, l).dim != 0) return false;
    for (std::int64_t l = w.lo1; l <= w.hi1; ++l)
      if (f.piece(box, l, w.lo2).dim != 0) return false;
  }
  return true;
}

bool torsion_free_check(const TruncatedSFamily& f) {
  const auto& w = f.window();
  auto injective = [&](const Piece& x, const Piece& y, int step) {
    if (x.dim == 0) return true;
    if (y.dim < x.dim) return false;
    if (floor_mod(x.weight + step - y.weight, f.modulus()) != 0) return false;
    return !(x.dim == y.dim && x.label != y.label);
  };
  for (const auto& [box, cells] : f.boxes())
    for (std::int64_t l2 = w.lo2; l2 <= w.hi2; ++l2)
      for (std::int64_t l1 = w.lo1; l1 <= w.hi1; ++l1) {
        const Piece here = f.piece(box, l1, l2);
        if (l1 < w.hi1 && !injective(here, f.piece(box, l1 + 1, l2), f.step1())) return false;
        if (l2 < w.hi2 && !injective(here, f.piece(box, l1, l2 + 1), f.step2())) return false;
      }
  return true;
}

bool reflexive_check(const TruncatedSFamily& f) {
  const auto& w = f.window();
  for (const auto& [box, cells] : f.boxes()) {
    const int r = f.piece(box, w.hi1, w.hi2).dim;
    for (std::int64_t l2 = w.lo2; l2 <= w.hi2; ++l2)
      for (std::int64_t l1 = w.lo1; l1 <= w.hi1; ++l1) {
        const Piece v1 = f.piece(box, l1, w.hi2), v2 = f.piece(box, w.hi1, l2);
        Piece meet{0, 0, std::nullopt};
        if (v1.dim == r) {
          meet = v2;
        } else if (v2.dim == r) {
          meet = v1;
        } else if (v1.dim > 0 && v2.dim > 0 && v1.label == v2.label) {
          meet = v1;  // the same line
        }
        const Piece actual = f.piece(box, l1, l2);
        if (!same_shape(meet, actual)) return false;
      }
  }
  return true;
}

namespace {

// Sum over cells of (dim hull - dim F) times the point class of the cell.
KClass devissage(const WppParams& params, const std::array<TruncatedSFamily, 3>& F,
                 const std::array<TruncatedSFamily, 3>& R, KClass hull_class) {
  for (int t = 1; t <= 3; ++t) {
    const auto& f = F[t - 1];
    const auto& r = R[t - 1];
    std::vector<std::int64_t> count(f.modulus(), 0);
    const auto& w = f.window();
    for (const auto& [box, cells] : r.boxes())
      for (std::int64_t l2 = w.lo2; l2 <= w.hi2; ++l2)
        for (std::int64_t l1 = w.lo1; l1 <= w.hi1; ++l1) {
          const Piece pr = r.piece(box, l1, l2), pf = f.piece(box, l1, l2);
          if (pf.dim > pr.dim) throw InternalInconsistency("sheaf not contained in its hull");
          count[pr.weight] += pr.dim - pf.dim;
        }
    for (const auto& [box, cells] : f.boxes())
      if (!r.boxes().count(box) && std::any_of(cells.begin(), cells.end(), [](const Piece& p) { return p.dim > 0; }))
        throw InternalInconsistency("sheaf occupies a box its hull does not");
    for (int j = 0; j < f.modulus(); ++j)
      if (count[j] != 0) hull_class -= Rational(count[j]) * structure_sheaf_point(params, t, j);
  }
  return hull_class;
}

}  // namespace

KClass kclass_by_devissage(const WppParams& params, const Rank1Sheaf& sheaf) {
  const auto F = rank1_sfamilies(params, sheaf);
  Rank1Sheaf hull{sheaf.A, sheaf.B, sheaf.C, {}};
  const auto w = Window::square(minimal_window(sheaf));
  const std::array<TruncatedSFamily, 3> R{rank1_sfamily(params, hull, 1, w), rank1_sfamily(params, hull, 2, w),
                                          rank1_sfamily(params, hull, 3, w)};
  return devissage(params, F, R, line_bundle_class(params, sheaf.A, sheaf.B, sheaf.C));
}

KClass kclass_by_devissage(const WppParams& params, const TypeIBundle& datum) {
  const auto F = typeI_sfamilies(params, datum);
  const auto w = Window::square(minimal_window(datum));
  const auto& A = datum.A;
  const auto& D = datum.delta;
  std::vector<TruncatedSFamily> hull;
  for (int t = 1; t <= 3; ++t) {
    const auto c0 = line_bundle_corner(params, A[0], A[1], A[2], t);
    const auto c1 = line_bundle_corner(params, A[0] + D[0], A[1] + D[1], A[2] + D[2], t);
    hull.push_back(direct_sum(rank1_chart_family(params, t, c0, Partition(), w),
                              rank1_chart_family(params, t, c1, Partition(), w)));
  }
  const KClass cls = line_bundle_class(params, A[0], A[1], A[2]) +
                     line_bundle_class(params, A[0] + D[0], A[1] + D[1], A[2] + D[2]);
  return devissage(params, F, {hull[0], hull[1], hull[2]}, cls);
}

}  // namespace wpp
