#include "gridiv/symmetry.hpp"

#include <algorithm>
#include <ostream>
#include <set>

#include "json.hpp"

namespace gridiv {

const char* group_element_name(GroupElement g) {
    switch (g) {
        case GroupElement::identity: return "e";
        case GroupElement::rotate180: return "r180";
        case GroupElement::mirror_horizontal: return "mH";
        case GroupElement::mirror_vertical: return "mV";
    }
    return "?";
}

GroupElement compose(GroupElement a, GroupElement b) {
    // Klein four-group: xor of the two involution bits
    // (flip-rows, flip-cols).
    auto bits = [](GroupElement g) -> int {
        switch (g) {
            case GroupElement::identity: return 0;
            case GroupElement::mirror_horizontal: return 1; // flips rows
            case GroupElement::mirror_vertical: return 2;   // flips cols
            case GroupElement::rotate180: return 3;
        }
        return 0;
    };
    switch (bits(a) ^ bits(b)) {
        case 0: return GroupElement::identity;
        case 1: return GroupElement::mirror_horizontal;
        case 2: return GroupElement::mirror_vertical;
        default: return GroupElement::rotate180;
    }
}

std::vector<int> index_permutation(const BoardShape& shape, GroupElement g) {
    const bool flip_rows = g == GroupElement::mirror_horizontal || g == GroupElement::rotate180;
    const bool flip_cols = g == GroupElement::mirror_vertical || g == GroupElement::rotate180;
    std::vector<int> perm(shape.squares());
    for (int idx = 0; idx < shape.squares(); ++idx) {
        int r = shape.row_of(idx);
        int c = shape.col_of(idx);
        if (flip_rows) r = shape.rows - 1 - r;
        if (flip_cols) c = shape.cols - 1 - c;
        perm[idx] = shape.index(r, c);
    }
    return perm;
}

Division apply_isometry(const Division& d, GroupElement g) {
    auto perm = index_permutation(d.shape, g);
    std::vector<int> moved(d.labels.size());
    for (std::size_t i = 0; i < d.labels.size(); ++i) moved[perm[i]] = d.labels[i];
    return Division{d.shape, canonical_labels(moved)};
}

BigCount fixed_count(const BoardShape& shape, int k, GroupElement g,
                     std::size_t edge_limit) {
    BigCount count = 0;
    for (const Division& d : enumerate_divisions(shape, k, edge_limit))
        if (apply_isometry(d, g) == d) ++count;
    return count;
}

OrbitCount orbit_count(const BoardShape& shape, int k, std::size_t edge_limit) {
    OrbitCount oc;
    oc.shape = shape;
    oc.k = k;
    auto divisions = enumerate_divisions(shape, k, edge_limit);
    oc.total = divisions.size();
    BigCount sum = 0;
    for (std::size_t i = 0; i < kGroup.size(); ++i) {
        BigCount fixed = 0;
        for (const Division& d : divisions)
            if (apply_isometry(d, kGroup[i]) == d) ++fixed;
        oc.fixed[i] = fixed;
        sum += fixed;
    }
    if (sum % 4 != 0)
        throw oracle_mismatch("Burnside sum " + sum.str() +
                              " not divisible by |G|=4; group action is broken");
    oc.up_to_isometry = sum / 4;
    return oc;
}

BigCount direct_orbit_count(const BoardShape& shape, int k, std::size_t edge_limit) {
    auto divisions = enumerate_divisions(shape, k, edge_limit);
    std::set<std::vector<int>> seen;
    BigCount orbits = 0;
    for (const Division& d : divisions) {
        if (seen.contains(d.labels)) continue;
        ++orbits;
        for (GroupElement g : kGroup) seen.insert(apply_isometry(d, g).labels);
    }
    return orbits;
}

BigCount i2_closed_form(int n) {
    if (n < 1) throw input_error("n must be >= 1");
    return BigCount(n) * (n + 1) / 2;
}

void write_orbit_json(std::ostream& out, const OrbitCount& oc) {
    nlohmann::ordered_json doc;
    doc["m"] = oc.shape.rows;
    doc["n"] = oc.shape.cols;
    doc["k"] = oc.k;
    nlohmann::ordered_json fixed;
    for (std::size_t i = 0; i < kGroup.size(); ++i)
        fixed[group_element_name(kGroup[i])] = oc.fixed[i].str();
    doc["fixed"] = std::move(fixed);
    doc["orbits"] = oc.up_to_isometry.str();
    out << doc.dump(2) << '\n';
}

} // namespace gridiv
