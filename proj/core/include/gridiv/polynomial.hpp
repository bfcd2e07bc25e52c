#pragma once

#include <string>
#include <utility>
#include <vector>

#include "gridiv/types.hpp"

namespace gridiv {

/// Dense univariate polynomial over the rationals, coefficient index =
/// power of n. Normalized: the coefficient list is empty (zero
/// polynomial) or ends in a nonzero coefficient.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> coeffs);
    static Polynomial constant(const Rational& c);
    static Polynomial monomial(int power, const Rational& c = 1);

    /// Degree, or -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<Rational>& coeffs() const { return coeffs_; }
    const Rational& coeff(int power) const;
    Rational leading_coefficient() const;

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator*(const Rational& c) const;
    Polynomial operator-() const;
    bool operator==(const Polynomial&) const = default;

    /// Exact Horner evaluation.
    Rational eval(const Rational& x) const;

    /// n -> p(n+1), by binomial expansion. Degree-preserving.
    Polynomial shift() const;

    /// "c_d*n^d + ... + c_0" with exact fractions "a/b"; zero prints "0".
    std::string to_string() const;

    /// JSON array of [num, den] string pairs by ascending power.
    std::string to_json() const;
    static Polynomial from_json(const std::string& text);

private:
    std::vector<Rational> coeffs_;
};

/// n * (p(n+1) - p(n)). Preserves degree for non-constant p; constant
/// input collapses to the zero polynomial.
Polynomial difference_transform(const Polynomial& p);

/// Newton divided differences: unique polynomial of degree < |points|
/// through all points, exact. Throws input_error on duplicate abscissae.
Polynomial interpolate(const std::vector<std::pair<long, Rational>>& points);

/// Lagrange form, kept as an independent cross-check of interpolate.
Polynomial lagrange_interpolate(const std::vector<std::pair<long, Rational>>& points);

/// j-th Bernoulli number, B_1 = -1/2 convention.
Rational bernoulli(int j);

/// Closed form of n -> sum_{k=1}^{n} k^p: degree p+1, leading
/// coefficient 1/(p+1).
Polynomial faulhaber(int p);

} // namespace gridiv
