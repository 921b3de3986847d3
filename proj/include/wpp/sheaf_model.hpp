#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wpp/kgroup.hpp"
#include "wpp/sheaf_data.hpp"

namespace wpp {

// Fine-graded piece of F(l1, l2) in one box summand. Rank <= 2 means a
// 1-dimensional piece inside a rank 2 family is a line, recorded by its point.
struct Piece {
  int weight = 0;  // in Z_n
  int dim = 0;
  std::optional<ProjPoint> label;

  friend bool operator==(const Piece&, const Piece&) = default;
};

struct Window {
  std::int64_t lo1 = 0, hi1 = 0, lo2 = 0, hi2 = 0;
  static Window square(std::int64_t w) { return {-w, w, -w, w}; }
  bool contains(std::int64_t l1, std::int64_t l2) const { return l1 >= lo1 && l1 <= hi1 && l2 >= lo2 && l2 <= hi2; }
  friend bool operator==(const Window&, const Window&) = default;
};

using Box = std::pair<int, int>;  // (u, v), u < step1, v < step2

// S-family of one chart [C^2/mu_n] restricted to a window. Boxes without an
// entry are zero.
class TruncatedSFamily {
 public:
  TruncatedSFamily(const WppParams& params, int chart, Window window);

  int chart() const { return chart_; }
  int modulus() const { return n_; }
  int step1() const { return n1_; }
  int step2() const { return n2_; }
  const Window& window() const { return window_; }
  const std::map<Box, std::vector<Piece>>& boxes() const { return grid_; }

  Piece piece(const Box& box, std::int64_t l1, std::int64_t l2) const;
  void set_piece(const Box& box, std::int64_t l1, std::int64_t l2, const Piece& p);
  // Boxes carrying some nonzero piece.
  int nonzero_box_count() const;
  int rank() const;

 private:
  std::size_t index(std::int64_t l1, std::int64_t l2) const;
  int chart_, n_, n1_, n2_;
  Window window_;
  std::map<Box, std::vector<Piece>> grid_;
};

// Box and corner of L_(A,B,C) on a chart, with the corner fine weight.
struct ChartCorner {
  Box box;
  std::int64_t I1 = 0, I2 = 0;
  int weight = 0;
};
ChartCorner line_bundle_corner(const WppParams& params, std::int64_t A, std::int64_t B, std::int64_t C, int chart);

// Staircase with corner (I1, I2) in one box, lambda removed at the corner.
TruncatedSFamily rank1_chart_family(const WppParams& params, int chart, const ChartCorner& corner,
                                    const Partition& lambda, Window window);
// Two filtrations with widths (w1, w2) and lines p (direction 1), q (direction 2).
TruncatedSFamily typeI_chart_family(const WppParams& params, int chart, const ChartCorner& corner, std::int64_t w1,
                                    std::int64_t w2, const ProjPoint& p, const ProjPoint& q, Window window);

std::int64_t minimal_window(const Rank1Sheaf& sheaf);
std::int64_t minimal_window(const TypeIBundle& datum);

TruncatedSFamily rank1_sfamily(const WppParams& params, const Rank1Sheaf& sheaf, int chart, Window window);
TruncatedSFamily typeI_sfamily(const WppParams& params, const TypeIBundle& datum, int chart, Window window);
std::array<TruncatedSFamily, 3> rank1_sfamilies(const WppParams& params, const Rank1Sheaf& sheaf);
std::array<TruncatedSFamily, 3> typeI_sfamilies(const WppParams& params, const TypeIBundle& datum);

// Pointwise direct sum; pieces meeting in one box must share their weight.
TruncatedSFamily direct_sum(const TruncatedSFamily& x, const TruncatedSFamily& y);

struct GluingReport {
  bool ok = true;
  std::string diagnostic;
};

// Compares, for each pair of neighbouring charts, the graded limits of the
// two families along the common torus orbit. Throws InsufficientWindow when
// a family has not stabilized at the window edge.
GluingReport check_gluing(const WppParams& params, const std::array<TruncatedSFamily, 3>& families);

bool coherence_check(const TruncatedSFamily& f);
bool torsion_free_check(const TruncatedSFamily& f);
bool reflexive_check(const TruncatedSFamily& f);

KClass kclass_by_devissage(const WppParams& params, const Rank1Sheaf& sheaf);
KClass kclass_by_devissage(const WppParams& params, const TypeIBundle& datum);

}  // namespace wpp
