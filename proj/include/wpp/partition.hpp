#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "wpp/params.hpp"

namespace wpp {

// Young diagram; box (l1, l2) exists iff l2 < rows.size() and l1 < rows[l2].
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> rows);
  // "3,2,1" or "" for the empty partition.
  static Partition parse(const std::string& text);

  const std::vector<int>& rows() const { return rows_; }
  int size() const;
  bool empty() const { return rows_.empty(); }
  bool contains(std::int64_t l1, std::int64_t l2) const;
  std::vector<std::pair<int, int>> boxes() const;
  int arm() const { return rows_.empty() ? 0 : rows_[0]; }
  int leg() const { return static_cast<int>(rows_.size()); }
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> rows_;
};

struct ColoringSpec {
  int n = 1;
  std::int64_t w1 = 0;
  std::int64_t w2 = 0;
  std::int64_t offset = 0;

  int color(std::int64_t l1, std::int64_t l2) const;
};

std::vector<std::int64_t> color_count(const Partition& p, const ColoringSpec& spec);

// All partitions with at most maxBoxes boxes, ordered by size, then
// lexicographically by rows.
std::vector<Partition> enumerate_partitions(int maxBoxes);
void for_each_partition(int maxBoxes, const std::function<void(const Partition&)>& visit);

// Chart 1 -> (n=a, w=(b,c)), chart 2 -> (n=b, w=(c,a)), chart 3 -> (n=c, w=(a,b)).
ColoringSpec chart_spec(const WppParams& params, int chart, std::int64_t offset);

}  // namespace wpp
