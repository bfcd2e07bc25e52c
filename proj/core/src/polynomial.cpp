#include "gridiv/polynomial.hpp"

#include <sstream>

#include "json.hpp"

namespace gridiv {

namespace {

void trim(std::vector<Rational>& c) {
    while (!c.empty() && c.back() == 0) c.pop_back();
}

} // namespace

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    trim(coeffs_);
}

Polynomial Polynomial::constant(const Rational& c) {
    return Polynomial(std::vector<Rational>{c});
}

Polynomial Polynomial::monomial(int power, const Rational& c) {
    std::vector<Rational> v(power + 1, 0);
    v[power] = c;
    return Polynomial(std::move(v));
}

const Rational& Polynomial::coeff(int power) const {
    static const Rational zero = 0;
    if (power < 0 || power >= static_cast<int>(coeffs_.size())) return zero;
    return coeffs_[power];
}

Rational Polynomial::leading_coefficient() const {
    return coeffs_.empty() ? Rational(0) : coeffs_.back();
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    std::vector<Rational> out(std::max(coeffs_.size(), o.coeffs_.size()), 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] += coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) out[i] += o.coeffs_[i];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (is_zero() || o.is_zero()) return {};
    std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1, 0);
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
            out[i + j] += coeffs_[i] * o.coeffs_[j];
    return Polynomial(std::move(out));
}

Polynomial Polynomial::operator*(const Rational& c) const {
    std::vector<Rational> out = coeffs_;
    for (auto& x : out) x *= c;
    return Polynomial(std::move(out));
}

Rational Polynomial::eval(const Rational& x) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + *it;
    return acc;
}

Polynomial Polynomial::shift() const {
    // p(n+1) = sum_i c_i (n+1)^i, expanded with Pascal rows.
    Polynomial result;
    Polynomial n_plus_1(std::vector<Rational>{1, 1});
    Polynomial power = Polynomial::constant(1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        result = result + power * coeffs_[i];
        power = power * n_plus_1;
    }
    return result;
}

std::string Polynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        Rational a = abs(c);
        bool unit = (a == 1) && i > 0;
        if (!unit) {
            out << numerator(a);
            if (denominator(a) != 1) out << '/' << denominator(a);
        }
        if (i > 0) {
            if (!unit) out << '*';
            out << 'n';
            if (i > 1) out << '^' << i;
        }
        first = false;
    }
    return out.str();
}

std::string Polynomial::to_json() const {
    nlohmann::json arr = nlohmann::json::array();
    for (const Rational& c : coeffs_)
        arr.push_back({numerator(c).str(), denominator(c).str()});
    return arr.dump();
}

Polynomial Polynomial::from_json(const std::string& text) {
    auto arr = nlohmann::json::parse(text);
    if (!arr.is_array()) throw input_error("polynomial JSON must be an array");
    std::vector<Rational> coeffs;
    for (const auto& pair : arr) {
        if (!pair.is_array() || pair.size() != 2)
            throw input_error("polynomial JSON entries must be [num, den] pairs");
        BigCount num(pair[0].get<std::string>());
        BigCount den(pair[1].get<std::string>());
        if (den <= 0) throw input_error("polynomial JSON denominator must be positive");
        coeffs.emplace_back(num, den);
    }
    return Polynomial(std::move(coeffs));
}

Polynomial difference_transform(const Polynomial& p) {
    return Polynomial::monomial(1) * (p.shift() - p);
}

Polynomial interpolate(const std::vector<std::pair<long, Rational>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw input_error("duplicate abscissa " +
                                  std::to_string(points[i].first));
    if (points.empty()) return {};

    // Newton form: coefficients are the leading divided differences.
    std::vector<Rational> diffs;
    diffs.reserve(points.size());
    for (const auto& [x, y] : points) diffs.push_back(y);
    std::vector<Rational> newton{diffs[0]};
    for (std::size_t level = 1; level < points.size(); ++level) {
        for (std::size_t i = points.size() - 1; i >= level; --i)
            diffs[i] = (diffs[i] - diffs[i - 1]) /
                       Rational(points[i].first - points[i - level].first);
        newton.push_back(diffs[level]);
    }

    Polynomial result;
    Polynomial basis = Polynomial::constant(1);
    for (std::size_t i = 0; i < newton.size(); ++i) {
        result = result + basis * newton[i];
        basis = basis * Polynomial(std::vector<Rational>{-Rational(points[i].first), 1});
    }
    return result;
}

Polynomial lagrange_interpolate(const std::vector<std::pair<long, Rational>>& points) {
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i].first == points[j].first)
                throw input_error("duplicate abscissa " +
                                  std::to_string(points[i].first));
    Polynomial result;
    for (std::size_t i = 0; i < points.size(); ++i) {
        Polynomial basis = Polynomial::constant(1);
        Rational denom = 1;
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j == i) continue;
            basis = basis * Polynomial(std::vector<Rational>{-Rational(points[j].first), 1});
            denom *= Rational(points[i].first - points[j].first);
        }
        result = result + basis * (points[i].second / denom);
    }
    return result;
}

Rational bernoulli(int j) {
    if (j < 0) throw input_error("Bernoulli index must be >= 0");
    // sum_{i=0}^{m} C(m+1, i) B_i = 0 for m >= 1, solved for B_m.
    std::vector<Rational> b{1};
    for (int m = 1; m <= j; ++m) {
        Rational sum = 0;
        BigCount binom = 1; // C(m+1, i)
        for (int i = 0; i < m; ++i) {
            sum += Rational(binom) * b[i];
            binom = binom * (m + 1 - i) / (i + 1);
        }
        b.push_back(-sum / Rational(m + 1));
    }
    return b[j];
}

Polynomial faulhaber(int p) {
    if (p < 0) throw input_error("Faulhaber power must be >= 0");
    // 1/(p+1) sum_{j=0}^{p} (-1)^j C(p+1, j) B_j n^{p+1-j}
    std::vector<Rational> coeffs(p + 2, 0);
    BigCount binom = 1; // C(p+1, j)
    for (int j = 0; j <= p; ++j) {
        Rational term = Rational(binom) * bernoulli(j) / Rational(p + 1);
        if (j % 2) term = -term;
        coeffs[p + 1 - j] = term;
        binom = binom * (p + 1 - j) / (j + 1);
    }
    return Polynomial(std::move(coeffs));
}

} // namespace gridiv
