#include "gridiv/recurrence.hpp"

#include <ostream>

#include "json.hpp"

namespace gridiv {

const char* provenance_name(Provenance p) {
    switch (p) {
        case Provenance::recursion: return "recursion";
        case Provenance::brute: return "brute";
        case Provenance::dp: return "dp";
    }
    return "?";
}

RecurrenceRow base_row() {
    RecurrenceRow row;
    row.n = 1;
    row.d.assign(3, 0);
    row.s.assign(3, 0);
    row.d[1] = 1;
    row.d[2] = 1;
    row.s[2] = 1;
    return row;
}

RecurrenceRow step(const RecurrenceRow& row) {
    RecurrenceRow next;
    next.n = row.n + 1;
    const int k_hi = 2 * next.n;
    next.d.assign(k_hi + 1, 0);
    next.s.assign(k_hi + 1, 0);
    auto d_at = [&](int k) -> BigCount {
        return (k >= 0 && k < static_cast<int>(row.d.size())) ? row.d[k] : 0;
    };
    auto s_at = [&](int k) -> BigCount {
        return (k >= 0 && k < static_cast<int>(row.s.size())) ? row.s[k] : 0;
    };
    for (int k = 1; k <= k_hi; ++k) {
        next.d[k] = d_at(k - 2) + 3 * d_at(k - 1) + d_at(k) + 2 * s_at(k);
        next.s[k] = d_at(k - 2) + 2 * d_at(k - 1) + s_at(k);
    }
    return next;
}

const BigCount& SequenceTable::at(int k, int n) const {
    if (n < 1 || n > n_max || k < 0 || k > k_max)
        throw input_error("table lookup (k=" + std::to_string(k) +
                          ", n=" + std::to_string(n) + ") out of range");
    return rows[n - 1][k];
}

namespace {

SequenceTable build_table(int k_max, int n_max, bool want_d) {
    if (k_max < 1 || n_max < 1)
        throw input_error("table requires k_max >= 1 and n_max >= 1");
    SequenceTable table;
    table.k_max = k_max;
    table.n_max = n_max;
    table.rows.reserve(n_max);
    RecurrenceRow row = base_row();
    for (int n = 1; n <= n_max; ++n) {
        const auto& src = want_d ? row.d : row.s;
        std::vector<BigCount> dense(k_max + 1, 0);
        for (int k = 0; k <= k_max && k < static_cast<int>(src.size()); ++k)
            dense[k] = src[k];
        table.rows.push_back(std::move(dense));
        if (n < n_max) row = step(row);
    }
    return table;
}

} // namespace

SequenceTable d_table(int k_max, int n_max) { return build_table(k_max, n_max, true); }
SequenceTable s_table(int k_max, int n_max) { return build_table(k_max, n_max, false); }

void write_csv(std::ostream& out, const SequenceTable& table) {
    out << "n,k,count\n";
    for (int n = 1; n <= table.n_max; ++n)
        for (int k = 1; k <= table.k_max; ++k)
            out << n << ',' << k << ',' << table.at(k, n) << '\n';
}

void write_json(std::ostream& out, const SequenceTable& table) {
    nlohmann::ordered_json doc;
    doc["k_max"] = table.k_max;
    doc["n_max"] = table.n_max;
    doc["provenance"] = provenance_name(table.provenance);
    auto& rows = doc["rows"] = nlohmann::ordered_json::array();
    for (int n = 1; n <= table.n_max; ++n) {
        nlohmann::ordered_json row;
        row["n"] = n;
        auto& counts = row["counts"] = nlohmann::ordered_json::array();
        for (int k = 1; k <= table.k_max; ++k)
            counts.push_back(table.at(k, n).str());
        rows.push_back(std::move(row));
    }
    out << doc.dump(2) << '\n';
}

} // namespace gridiv
