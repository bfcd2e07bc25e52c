#include "gridiv/closedform.hpp"

#include <ostream>

#include "json.hpp"

namespace gridiv {

namespace {

// d_0 = s_0 = 0, the anchor of the strong induction.
FittedFamily zero_family() {
    FittedFamily f;
    f.k = 0;
    f.recursion_identity = true;
    f.degree_ok = true;
    f.spot_values = true;
    return f;
}

std::optional<IdentityMismatch> first_mismatch(const Polynomial& lhs,
                                               const Polynomial& rhs, bool in_d) {
    int top = std::max(lhs.degree(), rhs.degree());
    for (int power = 0; power <= top; ++power)
        if (lhs.coeff(power) != rhs.coeff(power))
            return IdentityMismatch{in_d, power, lhs.coeff(power), rhs.coeff(power)};
    return std::nullopt;
}

} // namespace

std::optional<IdentityMismatch> verify_recursion_identity(const FittedFamily& km2,
                                                          const FittedFamily& km1,
                                                          const FittedFamily& k) {
    Polynomial d_rhs = km2.d + km1.d * Rational(3) + k.d + k.s * Rational(2);
    if (auto m = first_mismatch(k.d.shift(), d_rhs, true)) return m;
    Polynomial s_rhs = km2.d + km1.d * Rational(2) + k.s;
    return first_mismatch(k.s.shift(), s_rhs, false);
}

std::vector<FittedFamily> fit_families(int k_max) {
    if (k_max < 1) throw input_error("k_max must be >= 1");
    const int n_max = 2 * k_max + 9;
    SequenceTable dt = d_table(k_max, n_max);
    SequenceTable st = s_table(k_max, n_max);

    std::vector<FittedFamily> families;
    families.reserve(k_max);
    FittedFamily prev2 = zero_family();
    for (int k = 1; k <= k_max; ++k) {
        FittedFamily fam;
        fam.k = k;
        if (k == 1) {
            // Axioms of the family: d_1 = 1, s_1 = 0 (degree 2k-3 < 0
            // read as the zero polynomial).
            fam.d = Polynomial::constant(1);
            fam.s = Polynomial{};
            fam.degree_ok = true;
        } else {
            std::vector<std::pair<long, Rational>> d_points, s_points;
            for (int n = 1; n <= 2 * k - 1; ++n)
                d_points.emplace_back(n, Rational(dt.at(k, n)));
            for (int n = 1; n <= 2 * k - 2; ++n)
                s_points.emplace_back(n, Rational(st.at(k, n)));
            fam.d = interpolate(d_points);
            fam.s = interpolate(s_points);
            fam.degree_ok = fam.d.degree() == 2 * k - 2 && fam.s.degree() == 2 * k - 3;
            if (!fam.degree_ok)
                throw oracle_mismatch("fitted degrees for k=" + std::to_string(k) +
                                      " are " + std::to_string(fam.d.degree()) + "/" +
                                      std::to_string(fam.s.degree()) +
                                      ", expected " + std::to_string(2 * k - 2) + "/" +
                                      std::to_string(2 * k - 3));
        }
        for (int n = 2 * k; n <= 2 * k + 9; ++n) {
            if (fam.d.eval(n) != Rational(dt.at(k, n)) ||
                fam.s.eval(n) != Rational(st.at(k, n)))
                throw oracle_mismatch("fitted closed form for k=" + std::to_string(k) +
                                      " disagrees with the recurrence at n=" +
                                      std::to_string(n));
        }
        fam.spot_values = true;

        const FittedFamily& prev1 = families.empty() ? zero_family() : families.back();
        fam.recursion_identity = !verify_recursion_identity(prev2, prev1, fam);
        if (!fam.recursion_identity)
            throw oracle_mismatch("recursion identity failed for fitted k=" +
                                  std::to_string(k));
        prev2 = prev1;
        families.push_back(std::move(fam));
    }
    return families;
}

FittedFamily fit_family(int k) { return fit_families(k).back(); }

SummationReport summation_check(int k, int n_max) {
    if (k < 1 || n_max < 2) throw input_error("summation_check needs k >= 1, n_max >= 2");
    SequenceTable dt = d_table(k, n_max);
    SequenceTable st = s_table(k, n_max);
    auto d_of = [&](int kk, int n) -> BigCount {
        return kk < 1 ? BigCount(0) : dt.at(kk, n);
    };

    SummationReport report;
    report.k = k;
    BigCount s_sum = 0, d_sum = 0;
    for (int n = 2; n <= n_max; ++n) {
        int j = n - 1;
        s_sum += d_of(k - 2, j) + 2 * d_of(k - 1, j);
        d_sum += d_of(k - 2, j) + 3 * d_of(k - 1, j) + 2 * st.at(k, j);
        if (s_sum != st.at(k, n)) report.failing_n_s.push_back(n);
        if (d_sum != dt.at(k, n)) report.failing_n_d.push_back(n);
    }
    return report;
}

LeadingCoefficientReport leading_coefficient_report(const std::vector<FittedFamily>& families) {
    LeadingCoefficientReport report;
    for (const FittedFamily& f : families)
        report.coefficients.emplace_back(f.k, f.d.leading_coefficient());
    report.monotonically_decreasing = true;
    for (std::size_t i = 1; i < report.coefficients.size(); ++i)
        if (report.coefficients[i].second >= report.coefficients[i - 1].second)
            report.monotonically_decreasing = false;
    return report;
}

void write_family_json(std::ostream& out, const FittedFamily& family) {
    nlohmann::ordered_json doc;
    doc["k"] = family.k;
    doc["d"] = nlohmann::json::parse(family.d.to_json());
    doc["s"] = nlohmann::json::parse(family.s.to_json());
    doc["degrees"] = {{"d", family.d.degree()}, {"s", family.s.degree()}};
    doc["verified"] = {{"recursion_identity", family.recursion_identity},
                       {"degree", family.degree_ok},
                       {"spot_values", family.spot_values}};
    Rational lead = family.d.leading_coefficient();
    doc["leading_coefficient"] = {numerator(lead).str(), denominator(lead).str()};
    out << doc.dump(2) << '\n';
}

void write_families_markdown(std::ostream& out, const std::vector<FittedFamily>& families) {
    out << "| k | d_k(n) | s_k(n) |\n|---|---|---|\n";
    for (const FittedFamily& f : families)
        out << "| " << f.k << " | " << f.d.to_string() << " | " << f.s.to_string()
            << " |\n";
}

} // namespace gridiv
