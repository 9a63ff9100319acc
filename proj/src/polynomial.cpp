#include "ctf/polynomial.hpp"

#include <algorithm>

namespace ctf {

namespace {

Rational power(const Rational& base, unsigned k) {
    Rational r = 1;
    for (unsigned i = 0; i < k; ++i) r *= base;
    return r;
}

Integer binomial(unsigned n, unsigned k) {
    Integer r = 1;
    for (unsigned i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

// Coefficients of (s*t + a)^n, lowest degree first.
std::vector<Rational> shifted_power(int s, const Rational& a, unsigned n) {
    std::vector<Rational> out(n + 1);
    for (unsigned k = 0; k <= n; ++k) {
        Rational c = Rational(binomial(n, k)) * power(a, n - k);
        if (s < 0 && (k % 2 == 1)) c = -c;
        out[k] = c;
    }
    return out;
}

// Univariate Lagrange basis polynomial for node `a`, lowest degree first.
std::vector<Rational> lagrange_basis(const std::vector<std::int64_t>& nodes, std::size_t a) {
    std::vector<Rational> poly{Rational(1)};
    Rational denom = 1;
    for (std::size_t k = 0; k < nodes.size(); ++k) {
        if (k == a) continue;
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t d = 0; d < poly.size(); ++d) {
            next[d + 1] += poly[d];
            next[d] -= poly[d] * nodes[k];
        }
        poly = std::move(next);
        denom *= Rational(nodes[a] - nodes[k]);
    }
    for (auto& c : poly) c /= denom;
    return poly;
}

std::string monomial_text(unsigned i, unsigned j, const std::string& xn, const std::string& yn) {
    std::string s;
    if (i > 0) s += xn + (i > 1 ? "^" + std::to_string(i) : "");
    if (j > 0) {
        if (!s.empty()) s += "*";
        s += yn + (j > 1 ? "^" + std::to_string(j) : "");
    }
    return s;
}

} // namespace

std::string to_string(const Rational& r) {
    if (denominator(r) == 1) return numerator(r).str();
    return numerator(r).str() + "/" + denominator(r).str();
}

BivariatePolynomial::BivariatePolynomial(const Rational& c) {
    if (c != 0) terms_[{0, 0}] = c;
}

BivariatePolynomial BivariatePolynomial::monomial(unsigned i, unsigned j, const Rational& c) {
    BivariatePolynomial p;
    p.add_term({i, j}, c);
    return p;
}

void BivariatePolynomial::add_term(const Exponent& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational BivariatePolynomial::coefficient(unsigned i, unsigned j) const {
    auto it = terms_.find({i, j});
    return it == terms_.end() ? Rational(0) : it->second;
}

unsigned BivariatePolynomial::degree_x() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.first);
    return d;
}

unsigned BivariatePolynomial::degree_y() const {
    unsigned d = 0;
    for (const auto& [e, c] : terms_) d = std::max(d, e.second);
    return d;
}

bool BivariatePolynomial::has_integer_coefficients() const {
    return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return denominator(t.second) == 1; });
}

Rational BivariatePolynomial::evaluate(const Rational& x, const Rational& y) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) sum += c * power(x, e.first) * power(y, e.second);
    return sum;
}

BivariatePolynomial BivariatePolynomial::substitute(int sx, const Rational& a, int sy, const Rational& b) const {
    BivariatePolynomial out;
    for (const auto& [e, c] : terms_) {
        auto px = shifted_power(sx, a, e.first);
        auto py = shifted_power(sy, b, e.second);
        for (unsigned i = 0; i < px.size(); ++i) {
            if (px[i] == 0) continue;
            for (unsigned j = 0; j < py.size(); ++j) out.add_term({i, j}, c * px[i] * py[j]);
        }
    }
    return out;
}

BivariatePolynomial BivariatePolynomial::substitute_x_constant(const Rational& v) const {
    BivariatePolynomial out;
    for (const auto& [e, c] : terms_) out.add_term({0, e.second}, c * power(v, e.first));
    return out;
}

BivariatePolynomial BivariatePolynomial::substitute_y_constant(const Rational& v) const {
    BivariatePolynomial out;
    for (const auto& [e, c] : terms_) out.add_term({e.first, 0}, c * power(v, e.second));
    return out;
}

BivariatePolynomial& BivariatePolynomial::operator+=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator-=(const BivariatePolynomial& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

BivariatePolynomial& BivariatePolynomial::operator*=(const Rational& c) {
    if (c == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
}

BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b) {
    BivariatePolynomial out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) out.add_term({ea.first + eb.first, ea.second + eb.second}, ca * cb);
    return out;
}

BivariatePolynomial BivariatePolynomial::pow(unsigned k) const {
    BivariatePolynomial r(1);
    for (unsigned i = 0; i < k; ++i) r = r * *this;
    return r;
}

std::string BivariatePolynomial::to_text(const std::string& x_name, const std::string& y_name) const {
    if (terms_.empty()) return "0";
    std::vector<std::pair<Exponent, Rational>> ordered(terms_.begin(), terms_.end());
    std::sort(ordered.begin(), ordered.end(), [](const auto& l, const auto& r) {
        auto dl = l.first.first + l.first.second, dr = r.first.first + r.first.second;
        if (dl != dr) return dl > dr;
        return l.first.first > r.first.first;
    });
    std::string out;
    for (const auto& [e, c] : ordered) {
        const bool negative = c < 0;
        const Rational magnitude = negative ? Rational(-c) : c;
        if (negative) out += "-";
        else if (!out.empty()) out += "+";
        const auto mono = monomial_text(e.first, e.second, x_name, y_name);
        if (mono.empty()) out += to_string(magnitude);
        else if (magnitude == 1) out += mono;
        else out += to_string(magnitude) + "*" + mono;
    }
    return out;
}

nlohmann::json to_json(const BivariatePolynomial& p) {
    nlohmann::json monomials = nlohmann::json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
        monomials.push_back({it->first.first, it->first.second, to_string(it->second)});
    return {{"vars", {"x", "y"}}, {"monomials", monomials}};
}

BivariatePolynomial polynomial_from_json(const nlohmann::json& j) {
    BivariatePolynomial p;
    for (const auto& m : j.at("monomials")) {
        auto i = m.at(0).get<unsigned>();
        auto k = m.at(1).get<unsigned>();
        p += BivariatePolynomial::monomial(i, k, Rational(m.at(2).get<std::string>()));
    }
    return p;
}

BivariatePolynomial interpolate(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys,
                                const std::vector<std::vector<Integer>>& values) {
    if (xs.empty() || ys.empty()) throw InterpolationError("empty sample set");
    if (values.size() != xs.size()) throw InterpolationError("grid has wrong number of rows");
    for (const auto& row : values)
        if (row.size() != ys.size()) throw InterpolationError("grid has wrong number of columns");
    auto sorted_distinct = [](std::vector<std::int64_t> v) {
        std::sort(v.begin(), v.end());
        return std::adjacent_find(v.begin(), v.end()) == v.end();
    };
    if (!sorted_distinct(xs) || !sorted_distinct(ys)) throw InterpolationError("sample points are not distinct");

    std::vector<std::vector<Rational>> bx, by;
    for (std::size_t a = 0; a < xs.size(); ++a) bx.push_back(lagrange_basis(xs, a));
    for (std::size_t b = 0; b < ys.size(); ++b) by.push_back(lagrange_basis(ys, b));

    BivariatePolynomial out;
    for (std::size_t a = 0; a < xs.size(); ++a) {
        for (std::size_t b = 0; b < ys.size(); ++b) {
            if (values[a][b] == 0) continue;
            const Rational v(values[a][b]);
            for (unsigned i = 0; i < bx[a].size(); ++i) {
                if (bx[a][i] == 0) continue;
                for (unsigned j = 0; j < by[b].size(); ++j)
                    out += BivariatePolynomial::monomial(i, j, v * bx[a][i] * by[b][j]);
            }
        }
    }
    return out;
}

} // namespace ctf
