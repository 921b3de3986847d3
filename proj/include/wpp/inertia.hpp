#pragma once

#include <string>
#include <vector>

#include "wpp/cyclotomic.hpp"
#include "wpp/kgroup.hpp"

namespace wpp {

enum class SectorKind { TwoDim, OneDim, ZeroDim };

// One connected component of the inertia stack, labelled by f in [0,1).
// OneDim carries the chart pair (i<j), ZeroDim the chart i; unused entries 0.
struct Sector {
  Rational f;
  SectorKind kind;
  int i = 0;
  int j = 0;
  int dim = 2;

  std::string kind_name() const;
};

// Sorted by f; the f values are pairwise distinct.
std::vector<Sector> sectors(const WppParams& params);

// Per-sector truncated polynomial in the hyperplane class x. entries[s][k] is
// the coefficient of x^k, k = 0..dim; the codegree-k part is entries[s][dim-k].
// Coefficients live in Q(zeta_m), m = lcm(a,b,c).
class ChernVector {
 public:
  ChernVector(const WppParams& params, std::vector<Sector> sectors, std::vector<std::vector<Cyclotomic>> entries);

  const WppParams& params() const { return params_; }
  const std::vector<Sector>& sectors() const { return sectors_; }
  const std::vector<std::vector<Cyclotomic>>& entries() const { return entries_; }
  const Cyclotomic& codegree(std::size_t sector, int k) const;

  friend ChernVector operator*(const ChernVector& x, const ChernVector& y);
  friend bool operator==(const ChernVector& x, const ChernVector& y) { return x.entries_ == y.entries_; }

 private:
  WppParams params_;
  std::vector<Sector> sectors_;
  std::vector<std::vector<Cyclotomic>> entries_;
};

// Ring map g -> exp(-2 pi i f) * exp(-x) on each sector, truncated at x^dim.
ChernVector tch_of_kclass(const KClass& k);

// Closed form for type I data with A1 = A2 = 0, A3 = A; requires positive
// widths and mutually distinct points.
ChernVector tch_rank2_closed_form(const WppParams& params, const TypeIBundle& datum);

}  // namespace wpp
