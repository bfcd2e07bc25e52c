#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gridiv/polynomial.hpp"
#include "gridiv/recurrence.hpp"

namespace gridiv {

/// Closed forms for one k, with the verification flags that make the
/// fit a proof: the recursion holds coefficient-exactly, the degrees
/// match 2k-2 / 2k-3, and extra recurrence values agree.
struct FittedFamily {
    int k = 0;
    Polynomial d;
    Polynomial s;
    bool recursion_identity = false;
    bool degree_ok = false;
    bool spot_values = false;

    bool verified() const { return recursion_identity && degree_ok && spot_values; }
};

/// First coefficient mismatch found by the identity check.
struct IdentityMismatch {
    bool in_d = true; // which of the two identities broke
    int power = 0;
    Rational lhs;
    Rational rhs;
};

/// Checks both recursions as exact polynomial identities:
///   shift(d_k) = d_{k-2} + 3 d_{k-1} + d_k + 2 s_k
///   shift(s_k) = d_{k-2} + 2 d_{k-1} + s_k
/// Returns nullopt when both hold.
std::optional<IdentityMismatch> verify_recursion_identity(const FittedFamily& km2,
                                                          const FittedFamily& km1,
                                                          const FittedFamily& k);

/// Fits one family by exact interpolation of recurrence data: s_k from
/// the values at n = 1..2k-2, d_k from n = 1..2k-1, then checks degrees
/// and ten extra points n = 2k..2k+9. Throws oracle_mismatch with the
/// offending n if a spot check fails. k = 1 is axiomatic: d = 1, s = 0.
FittedFamily fit_family(int k);

/// Families 1..k_max, each fitted and recursion-verified against its
/// predecessors. This is the exact-arithmetic route past k = 5, where
/// floating-point fitting breaks down.
std::vector<FittedFamily> fit_families(int k_max);

/// Result of checking the unrolled summation forms
///   s_k(n) =?= sum_{j=1}^{n-1} [d_{k-2}(j) + 2 d_{k-1}(j)]
///   d_k(n) =?= sum_{j=1}^{n-1} [d_{k-2}(j) + 3 d_{k-1}(j) + 2 s_k(j)]
/// against table values for 2 <= n <= n_max. The forms assume an all-zero
/// n=0 row, which is off by the d_1 term; failing n are reported with
/// their discrepancies rather than patched.
struct SummationReport {
    int k = 0;
    std::vector<int> failing_n_s;
    std::vector<int> failing_n_d;

    bool ok() const { return failing_n_s.empty() && failing_n_d.empty(); }
};

SummationReport summation_check(int k, int n_max);

/// Leading coefficients of d_k per k, plus whether the sequence is
/// strictly decreasing over the fitted range (reported, not asserted).
struct LeadingCoefficientReport {
    std::vector<std::pair<int, Rational>> coefficients;
    bool monotonically_decreasing = false;
};

LeadingCoefficientReport leading_coefficient_report(const std::vector<FittedFamily>& families);

/// One JSON document per family: {k, d, s, degrees, verified flags,
/// leading_coefficient}.
void write_family_json(std::ostream& out, const FittedFamily& family);

/// Markdown table of the closed forms for a set of families.
void write_families_markdown(std::ostream& out, const std::vector<FittedFamily>& families);

} // namespace gridiv
