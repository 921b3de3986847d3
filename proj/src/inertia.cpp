#include "wpp/inertia.hpp"

#include <algorithm>

#include "wpp/errors.hpp"

namespace wpp {

std::string Sector::kind_name() const {
  switch (kind) {
    case SectorKind::TwoDim: return "D";
    case SectorKind::OneDim: return "D" + std::to_string(i) + std::to_string(j);
    case SectorKind::ZeroDim: return "D" + std::to_string(i);
  }
  return "?";
}

std::vector<Sector> sectors(const WppParams& params) {
  // Classify f = l/m by its reduced denominator q: q | d gives D, otherwise
  // q | d_ij gives D_ij, otherwise q | hat(i) gives D_i.
  std::vector<Sector> out;
  const int m = params.m();
  for (int l = 0; l < m; ++l) {
    Rational f = make_rational(l, m);
    long q = f.get_den().get_si();
    if (params.d() % q == 0) {
      out.push_back({f, SectorKind::TwoDim, 0, 0, 2});
      continue;
    }
    bool placed = false;
    for (auto [i, j] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}}) {
      if (params.dij(i, j) % q == 0) {
        out.push_back({f, SectorKind::OneDim, i, j, 1});
        placed = true;
        break;
      }
    }
    if (placed) continue;
    for (int i = 1; i <= 3; ++i) {
      if (params.hat(i) % q == 0) {
        out.push_back({f, SectorKind::ZeroDim, i, 0, 0});
        break;
      }
    }
  }
  return out;
}

ChernVector::ChernVector(const WppParams& params, std::vector<Sector> sectors,
                         std::vector<std::vector<Cyclotomic>> entries)
    : params_(params), sectors_(std::move(sectors)), entries_(std::move(entries)) {
  if (sectors_.size() != entries_.size()) throw InvalidInput("ChernVector: sector/entry count mismatch");
  for (std::size_t s = 0; s < sectors_.size(); ++s)
    if (static_cast<int>(entries_[s].size()) != sectors_[s].dim + 1)
      throw InvalidInput("ChernVector: entry length must be dim + 1");
}

const Cyclotomic& ChernVector::codegree(std::size_t sector, int k) const {
  const int dim = sectors_.at(sector).dim;
  if (k < 0 || k > dim) throw InvalidInput("codegree out of range");
  return entries_[sector][dim - k];
}

ChernVector operator*(const ChernVector& x, const ChernVector& y) {
  std::vector<std::vector<Cyclotomic>> out;
  for (std::size_t s = 0; s < x.sectors_.size(); ++s) {
    const int dim = x.sectors_[s].dim;
    std::vector<Cyclotomic> e(dim + 1, Cyclotomic(Rational(0), x.params_.m()));
    for (int i = 0; i <= dim; ++i)
      for (int j = 0; i + j <= dim; ++j) e[i + j] += x.entries_[s][i] * y.entries_[s][j];
    out.push_back(std::move(e));
  }
  return ChernVector(x.params_, x.sectors_, std::move(out));
}

namespace {

// exp(-2 pi i f * e) in Q(zeta_m)
Cyclotomic eigen_pow(const WppParams& params, const Rational& f, std::int64_t e) {
  const int m = params.m();
  Rational idx = f * m;
  return Cyclotomic::zeta_pow(m, -idx.get_num().get_si() * e);
}

Cyclotomic cz(const WppParams& params, const Rational& r) { return Cyclotomic(r, params.m()); }

}  // namespace

ChernVector tch_of_kclass(const KClass& k) {
  const WppParams& params = k.params();
  auto secs = sectors(params);
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& s : secs) {
    std::vector<Cyclotomic> e(s.dim + 1, cz(params, 0));
    const auto& poly = k.poly();
    for (std::size_t p = 0; p < poly.size(); ++p) {
      if (poly[p] == 0) continue;
      Cyclotomic eig = eigen_pow(params, s.f, static_cast<std::int64_t>(p));
      // exp(-p x) = sum (-p)^n x^n / n!
      Rational term = poly[p];
      for (int n = 0; n <= s.dim; ++n) {
        e[n] += eig * cz(params, term);
        term = term * Rational(-static_cast<long>(p)) / Rational(n + 1);
      }
    }
    out.push_back(std::move(e));
  }
  return ChernVector(params, std::move(secs), std::move(out));
}

ChernVector tch_rank2_closed_form(const WppParams& params, const TypeIBundle& datum) {
  check_divisibility(params, datum);
  if (datum.A[0] != 0 || datum.A[1] != 0) throw InvalidInput("closed form requires A1 = A2 = 0");
  for (auto x : datum.delta)
    if (x <= 0) throw InvalidInput("closed form requires positive widths");
  if (datum.p[0] == datum.p[1] || datum.p[1] == datum.p[2] || datum.p[0] == datum.p[2])
    throw InvalidInput("closed form requires mutually distinct points");

  const std::int64_t A = datum.A[2];
  const auto& D = datum.delta;
  const std::int64_t S = datum.sum_delta();
  auto secs = sectors(params);
  std::vector<std::vector<Cyclotomic>> out;
  for (const auto& s : secs) {
    auto eps = [&](std::int64_t e) { return eigen_pow(params, s.f, e); };
    const Cyclotomic epsA = eps(A);
    std::vector<Cyclotomic> e;
    switch (s.kind) {
      case SectorKind::TwoDim: {
        Rational sq = make_rational(D[0] * D[0] + D[1] * D[1] + D[2] * D[2], 2);
        e = {epsA * cz(params, 2), epsA * cz(params, Rational(static_cast<long>(-(2 * A + S)))),
             epsA * cz(params, Rational(static_cast<long>(A * A + S * A)) + sq)};
        break;
      }
      case SectorKind::OneDim: {
        // (i,j,k) = (1,2,3) on D12, (2,3,1) on D23, (3,1,2) on D13
        int i, j, k;
        if (s.i == 1 && s.j == 2) { i = 0; j = 1; k = 2; }
        else if (s.i == 2 && s.j == 3) { i = 1; j = 2; k = 0; }
        else { i = 2; j = 0; k = 1; }
        Cyclotomic ej = eps(D[j]);
        Cyclotomic onep = cz(params, 1) + ej;
        Cyclotomic lin = onep * cz(params, Rational(static_cast<long>(A))) + cz(params, Rational(static_cast<long>(D[i]))) +
                         ej * cz(params, Rational(static_cast<long>(D[j]))) + cz(params, Rational(static_cast<long>(D[k])));
        e = {epsA * onep, -(epsA * lin)};
        break;
      }
      case SectorKind::ZeroDim: {
        int i = s.i - 1;
        e = {epsA * (eps(D[i]) + eps(D[(i + 1) % 3]))};
        break;
      }
    }
    out.push_back(std::move(e));
  }
  return ChernVector(params, std::move(secs), std::move(out));
}

}  // namespace wpp
