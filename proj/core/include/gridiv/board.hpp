#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <vector>

#include "gridiv/types.hpp"

namespace gridiv {

/// Rectangular m x n board of unit squares.
///
/// Squares are indexed column-major: index m*j + r is row r of column j.
/// For m = 2 this puts the top square of column j at 2j and the bottom at
/// 2j+1, so indices 2n-2 and 2n-1 are the rightmost column.
struct BoardShape {
    int rows = 1; // m
    int cols = 1; // n

    int squares() const { return rows * cols; }
    int index(int row, int col) const { return rows * col + row; }
    int row_of(int idx) const { return idx % rows; }
    int col_of(int idx) const { return idx / rows; }

    bool operator==(const BoardShape&) const = default;
};

/// Unordered adjacent pair, stored with a < b.
struct Edge {
    int a = 0;
    int b = 0;

    Edge() = default;
    Edge(int x, int y) : a(x < y ? x : y), b(x < y ? y : x) {}

    bool operator==(const Edge&) const = default;
    auto operator<=>(const Edge&) const = default;
};

/// A division: every square labeled with its piece, labels in [0, k).
/// Canonical form labels pieces by order of first appearance, so two
/// divisions are equal iff their label arrays are equal.
struct Division {
    BoardShape shape;
    std::vector<int> labels;

    int pieces() const;
    bool operator==(const Division&) const = default;
    bool operator<(const Division& o) const { return labels < o.labels; }
};

/// Relabels pieces by order of first appearance. Idempotent.
std::vector<int> canonical_labels(const std::vector<int>& labels);

/// All grid edges of the board: rows*(cols-1) horizontal + (rows-1)*cols
/// vertical. Sorted.
std::vector<Edge> adjacency(const BoardShape& shape);

/// Brute-force size guard, in edges. GRIDIV_EDGE_LIMIT overrides the
/// default of 26 (~6.7e7 subsets).
std::size_t default_edge_limit();

/// Checks the validity rule for an edge-removal: after deleting `removed`
/// from the grid graph, every removed edge must have its endpoints in
/// different components. Returns the component count if valid, nullopt
/// otherwise. Throws input_error if `removed` contains a non-grid edge.
std::optional<int> is_valid_removal(const BoardShape& shape,
                                    const std::vector<Edge>& removed);

/// Exhaustive sweep over the power set of the edge set: every valid
/// removal with exactly k components, one canonical Division each,
/// sorted, no duplicates. Throws size_error above the edge guard.
std::vector<Division> enumerate_divisions(const BoardShape& shape, int k,
                                          std::size_t edge_limit = default_edge_limit());

/// Number of divisions into exactly k pieces, for every k at once
/// (index k, entries 0..rows*cols). Same sweep as enumerate_divisions
/// without materializing the divisions.
std::vector<BigCount> brute_count_all(const BoardShape& shape,
                                      std::size_t edge_limit = default_edge_limit());

BigCount brute_count(const BoardShape& shape, int k,
                     std::size_t edge_limit = default_edge_limit());

/// s_k(n) oracle for the 2 x n board: divisions into k pieces whose two
/// rightmost squares carry different labels.
BigCount separation_count(int n, int k,
                          std::size_t edge_limit = default_edge_limit());

/// All partitions of the squares into connected nonempty classes,
/// regardless of class count. Direct set-partition enumeration, used to
/// cross-check the edge-subset bijection; intended for rows*cols <= 12.
BigCount connected_partition_count(const BoardShape& shape);

/// Fixture format: "m n k" header, then one division per line as
/// comma-separated labels.
void write_divisions(std::ostream& out, const BoardShape& shape, int k,
                     const std::vector<Division>& divisions);

} // namespace gridiv
