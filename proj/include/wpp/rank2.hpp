#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "wpp/hilbert.hpp"
#include "wpp/inertia.hpp"
#include "wpp/series.hpp"

namespace wpp {

struct StableTriple {
  std::int64_t A = 0;
  std::int64_t D1 = 0, D2 = 0, D3 = 0;
  std::int64_t sum() const { return D1 + D2 + D3; }
  friend bool operator==(const StableTriple&, const StableTriple&) = default;
};

// Type I datum (0, 0, A; D1, D2, D3) with points (1:0), (0:1), (1:1).
TypeIBundle standard_datum(const StableTriple& t);

bool is_mu_stable(const WppParams& params, const TypeIBundle& datum);
// Compares modified slopes of F and of its sub line bundles L1, L2, L3.
bool slope_oracle_stability(const WppParams& params, const GeneratingSheafSpec& spec, const TypeIBundle& datum);

// Strictly triangular positive widths with b | D1, c | D2, a | D3,
// 2 | c1 + sum, A = -(c1 + sum)/2 = lambda mod d, sum <= maxSum. Ordered by
// sum, then D1, then D2.
std::vector<StableTriple> enumerate_stable_triples(const WppParams& params, std::int64_t c1, std::int64_t lambda,
                                                   std::int64_t maxSum);

// Codegree 2 and 1 parts of tch per sector; empty where the sector has
// smaller dimension.
struct ChernTargets {
  std::vector<std::optional<Cyclotomic>> codeg2, codeg1;
  friend bool operator==(const ChernTargets&, const ChernTargets&) = default;
};
ChernTargets chern_targets_of(const ChernVector& v);
ChernTargets chern_targets_of(const WppParams& params, const StableTriple& t);

// Codegree 0 parts over all sectors, each in Q(zeta_m).
struct RefinedKey {
  std::vector<Cyclotomic> entries;
  friend bool operator==(const RefinedKey&, const RefinedKey&) = default;
  friend bool operator<(const RefinedKey& x, const RefinedKey& y) {
    return std::lexicographical_compare(x.entries.begin(), x.entries.end(), y.entries.begin(), y.entries.end());
  }
};
RefinedKey refined_key_of(const ChernVector& v);

struct RefinedEntry {
  std::int64_t count = 0;
  Rational exponent;  // P_E(F, 0), common to the whole class
};

// Stable triples whose codegree 2 and 1 Chern data equal the targets,
// grouped by codegree 0 data.
std::map<RefinedKey, RefinedEntry> h_vb_refined(const WppParams& params, const GeneratingSheafSpec& spec,
                                                const ChernTargets& targets, std::int64_t maxSum);

// Distinct targets met by the triples of enumerate_stable_triples.
std::vector<ChernTargets> targets_for(const WppParams& params, std::int64_t c1, std::int64_t lambda,
                                      std::int64_t maxSum);

// Laurent polynomial in q; coefficients of exponents >= exact_from agree with
// the untruncated series.
struct Rank2Series {
  Series series;
  std::int64_t exact_from;
};

Rank2Series h_vb_specialized(const WppParams& params, const GeneratingSheafSpec& spec, std::int64_t c1,
                             std::int64_t lambda, std::int64_t maxSum);

// H^vb times the squares of the chart series, each color specialized to
// q^(-E/hat(i)).
Rank2Series h_full(const WppParams& params, const GeneratingSheafSpec& spec, std::int64_t c1, std::int64_t lambda,
                   std::int64_t maxSum);

}  // namespace wpp
