#pragma once

#include <array>
#include <iosfwd>
#include <vector>

#include "gridiv/board.hpp"

namespace gridiv {

/// The order-4 dihedral group acting on the board: identity, 180-degree
/// rotation, reflection across the horizontal axis, reflection across
/// the vertical axis. Every non-identity element is an involution and
/// rotate180 = mirror_horizontal o mirror_vertical.
enum class GroupElement { identity, rotate180, mirror_horizontal, mirror_vertical };

inline constexpr std::array<GroupElement, 4> kGroup = {
    GroupElement::identity, GroupElement::rotate180,
    GroupElement::mirror_horizontal, GroupElement::mirror_vertical};

const char* group_element_name(GroupElement g);

GroupElement compose(GroupElement a, GroupElement b);

/// Square-index permutation induced by g on the given shape.
std::vector<int> index_permutation(const BoardShape& shape, GroupElement g);

/// Permutes the squares and re-canonicalizes the labels.
Division apply_isometry(const Division& d, GroupElement g);

/// Fixed points and the Burnside average. The division by |G| = 4 is
/// checked to be exact; a remainder means the group action is broken.
struct OrbitCount {
    BoardShape shape;
    int k = 0;
    BigCount total;                 // plain division count
    BigCount up_to_isometry;        // Burnside orbit count
    std::array<BigCount, 4> fixed;  // indexed like kGroup
};

/// Number of enumerated divisions fixed by g. Filters the full
/// enumeration; closed-form counts serve as oracles in the tests.
BigCount fixed_count(const BoardShape& shape, int k, GroupElement g,
                     std::size_t edge_limit = default_edge_limit());

OrbitCount orbit_count(const BoardShape& shape, int k,
                       std::size_t edge_limit = default_edge_limit());

/// Independent oracle: partitions the enumerated divisions into explicit
/// orbits under the group and counts the classes.
BigCount direct_orbit_count(const BoardShape& shape, int k,
                            std::size_t edge_limit = default_edge_limit());

/// i_2(n) = n(n+1)/2: divisions of the 2 x n board into two pieces, up
/// to isometry.
BigCount i2_closed_form(int n);

/// JSON report {m, n, k, fixed: {e, r180, mH, mV}, orbits}.
void write_orbit_json(std::ostream& out, const OrbitCount& oc);

} // namespace gridiv
