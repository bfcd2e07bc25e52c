#pragma once

#include <iosfwd>
#include <map>
#include <vector>

#include "gridiv/types.hpp"

namespace gridiv {

/// Where a table entry came from.
enum class Provenance { recursion, brute, dp };

const char* provenance_name(Provenance p);

/// One row of the coupled recursion: d_k(n) and s_k(n) for all k.
/// Index k; vectors sized 2n+1 so d[k] is valid for 0 <= k <= 2n.
struct RecurrenceRow {
    int n = 1;
    std::vector<BigCount> d;
    std::vector<BigCount> s;
};

/// Anchor at n=1: d_1(1)=d_2(1)=1, s_2(1)=1, everything else 0.
RecurrenceRow base_row();

/// Applies both recursions once:
///   d_k(n+1) = d_{k-2}(n) + 3 d_{k-1}(n) + d_k(n) + 2 s_k(n)
///   s_k(n+1) = d_{k-2}(n) + 2 d_{k-1}(n) + s_k(n)
/// with d_{-1} = d_0 = s_0 = s_1 = 0.
RecurrenceRow step(const RecurrenceRow& row);

/// Dense-by-n table of exact counts, one of d or s.
struct SequenceTable {
    int k_max = 0;
    int n_max = 0;
    Provenance provenance = Provenance::recursion;
    // rows[n-1][k] for 1 <= n <= n_max, 0 <= k <= k_max.
    std::vector<std::vector<BigCount>> rows;

    const BigCount& at(int k, int n) const;
};

SequenceTable d_table(int k_max, int n_max);
SequenceTable s_table(int k_max, int n_max);

/// CSV: header "n,k,count", rows ordered by (n, k). Byte-stable.
void write_csv(std::ostream& out, const SequenceTable& table);

/// JSON mirror of the table layout: {"k_max","n_max","provenance",
/// "rows":[{"n":..,"counts":["..",..]},..]}, counts as decimal strings.
void write_json(std::ostream& out, const SequenceTable& table);

} // namespace gridiv
