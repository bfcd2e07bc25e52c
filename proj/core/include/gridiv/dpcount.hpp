#pragma once

#include <vector>

#include "gridiv/board.hpp"

namespace gridiv {

inline constexpr int kDpMaxRows = 8;

/// Column-profile dynamic programming over set-partitions into connected
/// pieces. Scans squares in column-major order; the state is the
/// partition of the m most recent squares in restricted-growth form,
/// tracked together with the number of pieces already sealed off from
/// the frontier. Exact counts for every k at once.
///
/// Returns counts indexed by k (entries 0..rows*cols, entry 0 unused).
/// Throws size_error when rows exceeds kDpMaxRows; the profile space
/// grows like the Bell numbers.
std::vector<BigCount> dp_count(const BoardShape& shape);

/// s_k(n) on the 2 x n board via the same DP, keeping only end states
/// whose two boundary squares lie in different blocks.
BigCount dp_separation_count(int n, int k);

} // namespace gridiv
