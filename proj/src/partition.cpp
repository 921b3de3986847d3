#include "wpp/partition.hpp"

#include <sstream>

#include "wpp/errors.hpp"

namespace wpp {

Partition::Partition(std::vector<int> rows) : rows_(std::move(rows)) {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (rows_[i] <= 0) throw InvalidInput("partition rows must be positive");
    if (i > 0 && rows_[i] > rows_[i - 1]) throw InvalidInput("partition rows must weakly decrease");
  }
}

Partition Partition::parse(const std::string& text) {
  std::vector<int> rows;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    try {
      rows.push_back(std::stoi(item));
    } catch (const std::exception&) {
      throw InvalidInput("bad partition text: " + text);
    }
  }
  return Partition(rows);
}

int Partition::size() const {
  int s = 0;
  for (int r : rows_) s += r;
  return s;
}

bool Partition::contains(std::int64_t l1, std::int64_t l2) const {
  if (l1 < 0 || l2 < 0 || l2 >= static_cast<std::int64_t>(rows_.size())) return false;
  return l1 < rows_[l2];
}

std::vector<std::pair<int, int>> Partition::boxes() const {
  std::vector<std::pair<int, int>> out;
  for (int l2 = 0; l2 < static_cast<int>(rows_.size()); ++l2)
    for (int l1 = 0; l1 < rows_[l2]; ++l1) out.emplace_back(l1, l2);
  return out;
}

std::string Partition::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(rows_[i]);
  }
  return "(" + s + ")";
}

int ColoringSpec::color(std::int64_t l1, std::int64_t l2) const {
  return static_cast<int>(floor_mod(offset + l1 * w1 + l2 * w2, n));
}

std::vector<std::int64_t> color_count(const Partition& p, const ColoringSpec& spec) {
  std::vector<std::int64_t> counts(spec.n, 0);
  for (auto [l1, l2] : p.boxes()) ++counts[spec.color(l1, l2)];
  return counts;
}

namespace {

void partitions_of(int remaining, int maxPart, std::vector<int>& rows,
                   const std::function<void(const Partition&)>& visit) {
  if (remaining == 0) {
    visit(Partition(rows));
    return;
  }
  // ascending first part gives lexicographic order
  for (int k = 1; k <= std::min(remaining, maxPart); ++k) {
    rows.push_back(k);
    partitions_of(remaining - k, k, rows, visit);
    rows.pop_back();
  }
}

}  // namespace

void for_each_partition(int maxBoxes, const std::function<void(const Partition&)>& visit) {
  if (maxBoxes < 0) throw InvalidInput("maxBoxes must be nonnegative");
  std::vector<int> rows;
  for (int n = 0; n <= maxBoxes; ++n) partitions_of(n, n, rows, visit);
}

std::vector<Partition> enumerate_partitions(int maxBoxes) {
  std::vector<Partition> out;
  for_each_partition(maxBoxes, [&](const Partition& p) { out.push_back(p); });
  return out;
}

ColoringSpec chart_spec(const WppParams& params, int chart, std::int64_t offset) {
  return ColoringSpec{params.chart_modulus(chart), params.chart_step1(chart),
                      params.chart_step2(chart), offset};
}

}  // namespace wpp
