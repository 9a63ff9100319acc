#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>
#include <json.hpp>

namespace ctf {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Exponent pair (i, j) of the monomial x^i y^j.
using Exponent = std::pair<unsigned, unsigned>;

/// Polynomial in x, y with exact rational coefficients. Only nonzero
/// coefficients are stored.
class BivariatePolynomial {
public:
    BivariatePolynomial() = default;
    BivariatePolynomial(std::int64_t c) : BivariatePolynomial(Rational(c)) {} // NOLINT
    BivariatePolynomial(const Rational& c);                                    // NOLINT

    static BivariatePolynomial x() { return monomial(1, 0, 1); }
    static BivariatePolynomial y() { return monomial(0, 1, 1); }
    static BivariatePolynomial monomial(unsigned i, unsigned j, const Rational& c);

    Rational coefficient(unsigned i, unsigned j) const;
    const std::map<Exponent, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    unsigned degree_x() const;
    unsigned degree_y() const;
    bool has_integer_coefficients() const;

    Rational evaluate(const Rational& x, const Rational& y) const;

    /// P(sx*x + a, sy*y + b) with sx, sy in {+1, -1}.
    BivariatePolynomial substitute(int sx, const Rational& a, int sy, const Rational& b) const;
    /// P(v, y) as a polynomial in y only.
    BivariatePolynomial at_x(const Rational& v) const { return substitute_x_constant(v); }
    /// P(x, v) as a polynomial in x only.
    BivariatePolynomial at_y(const Rational& v) const { return substitute_y_constant(v); }

    BivariatePolynomial& operator+=(const BivariatePolynomial& o);
    BivariatePolynomial& operator-=(const BivariatePolynomial& o);
    BivariatePolynomial& operator*=(const Rational& c);
    friend BivariatePolynomial operator+(BivariatePolynomial a, const BivariatePolynomial& b) { return a += b; }
    friend BivariatePolynomial operator-(BivariatePolynomial a, const BivariatePolynomial& b) { return a -= b; }
    friend BivariatePolynomial operator*(const BivariatePolynomial& a, const BivariatePolynomial& b);
    friend BivariatePolynomial operator*(BivariatePolynomial a, const Rational& c) { return a *= c; }
    friend BivariatePolynomial operator*(const Rational& c, BivariatePolynomial a) { return a *= c; }
    BivariatePolynomial operator-() const { return *this * Rational(-1); }
    BivariatePolynomial pow(unsigned k) const;

    friend bool operator==(const BivariatePolynomial&, const BivariatePolynomial&) = default;

    /// Human-readable sum, graded order: total degree descending, then
    /// x-degree descending. Example: "y^3+x^2+2*x*y-1/3*y".
    std::string to_text(const std::string& x_name = "x", const std::string& y_name = "y") const;

private:
    BivariatePolynomial substitute_x_constant(const Rational& v) const;
    BivariatePolynomial substitute_y_constant(const Rational& v) const;
    void add_term(const Exponent& e, const Rational& c);

    std::map<Exponent, Rational> terms_;
};

/// {"vars":["x","y"],"monomials":[[i,j,"c"],...]} with (i,j) descending.
nlohmann::json to_json(const BivariatePolynomial& p);
BivariatePolynomial polynomial_from_json(const nlohmann::json& j);

std::string to_string(const Rational& r);

class InterpolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Unique polynomial of x-degree <= |xs|-1 and y-degree <= |ys|-1 with
/// values[a][b] at (xs[a], ys[b]); tensor-product Lagrange interpolation.
BivariatePolynomial interpolate(const std::vector<std::int64_t>& xs, const std::vector<std::int64_t>& ys,
                                const std::vector<std::vector<Integer>>& values);

} // namespace ctf
