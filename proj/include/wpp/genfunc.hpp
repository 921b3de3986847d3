#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wpp/partition.hpp"
#include "wpp/series.hpp"

namespace wpp {

// p0..p_{a-1} for chart 1, q0..q_{b-1} for chart 2, r0..r_{c-1} for chart 3.
std::vector<std::string> chart_variables(const WppParams& params, int chart);
std::vector<std::string> all_chart_variables(const WppParams& params);

// Sum over partitions of the product of tracked color variables;
// color_to_var[l] is a variable index or -1 (color not tracked). The order
// bounds the number of tracked boxes. Throws InvalidInput if the first row
// or first column of the coloring contains no tracked color (the sum would
// be infinite).
Series tracked_partition_series(const ColoringSpec& spec, const std::vector<int>& color_to_var,
                                std::vector<std::string> vars, std::int64_t maxOrder);

// Colored partitions of chart i with offset -beta, one variable per color.
Series chart_series(const WppParams& params, int chart, std::int64_t beta, std::int64_t maxOrder);
// Product of the three chart series in free variables.
Series g_series(const WppParams& params, std::int64_t beta, std::int64_t maxOrder);
// Each chart's color 0 tracked by q, all other colors set to 1.
Series g_series_color0(const WppParams& params, std::int64_t beta, std::int64_t maxOrder);

// Colored partitions with coloring (l1 - l2) mod k, variables q0..q_{k-1}.
Series balanced_brute(int k, std::int64_t maxOrder);
// prod_j (1-Q^j)^-k * sum_{n in Z^(k-1)} Q^(n.C.n/2) prod_i q_i^(n_i),
// Q = q0...q_{k-1}, C the Cartan matrix of type A_{k-1}.
Series balanced_rhs(int k, std::int64_t maxOrder);

Series eta_inv_pow(int r, std::int64_t maxOrder);                // prod (1-q^n)^-r
Series theta3(std::int64_t maxOrder);                            // sum q^(k^2)
Series su_k_character_proxy(int k, std::int64_t maxOrder);       // sum_n q^(n.C.n/2)

// Closed product for P(1,c,c) in r0..r_{c-1}:
// prod_k (1-P^k)^-3 * prod_k prod_{i<c-1} (1 - r0...ri P^(k-1))^-2, P = r0...r_{c-1}.
Series p1cc_product(int c, std::int64_t maxOrder);
// g_series of P(1,c,c) with p0 -> r0...r_{c-1} and q_i -> r_i.
Series p1cc_specialized(int c, std::int64_t maxOrder);

}  // namespace wpp
