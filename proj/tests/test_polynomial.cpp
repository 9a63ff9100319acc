#include <doctest.h>

#include <random>

#include "ctf/polynomial.hpp"

using namespace ctf;

namespace {

const auto X = BivariatePolynomial::x();
const auto Y = BivariatePolynomial::y();

BivariatePolynomial random_polynomial(std::mt19937& rng, unsigned dx, unsigned dy) {
    std::uniform_int_distribution<int> coeff(-9, 9);
    BivariatePolynomial p;
    for (unsigned i = 0; i <= dx; ++i)
        for (unsigned j = 0; j <= dy; ++j) p += BivariatePolynomial::monomial(i, j, Rational(coeff(rng), 1 + (i + j) % 3));
    return p;
}

} // namespace

TEST_CASE("arithmetic") {
    const auto p = (X - 1) * (Y + 2);
    CHECK(p.coefficient(1, 1) == 1);
    CHECK(p.coefficient(1, 0) == 2);
    CHECK(p.coefficient(0, 1) == -1);
    CHECK(p.coefficient(0, 0) == -2);
    CHECK(p.terms().size() == 4);
    CHECK((p - p).is_zero());
    CHECK((X + Y).pow(2) == X * X + Rational(2) * X * Y + Y * Y);
    CHECK((X + Y).pow(0) == BivariatePolynomial(1));
    CHECK(-X == X * Rational(-1));
    CHECK(p.degree_x() == 1);
    CHECK(BivariatePolynomial().degree_y() == 0);
    CHECK(BivariatePolynomial(Rational(0)).is_zero());
}

TEST_CASE("evaluation and substitution") {
    const auto p = X * X * Y - Rational(1, 3) * Y + 4;
    CHECK(p.evaluate(2, 3) == Rational(15));
    CHECK(p.evaluate(Rational(1, 2), 3) == Rational(15, 4));
    CHECK(p.at_x(2) == Rational(11, 3) * Y + 4);
    CHECK(p.at_y(-1) == -X * X + Rational(13, 3));
    const auto shifted = p.substitute(-1, 1, 1, -2);
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b) CHECK(shifted.evaluate(a, b) == p.evaluate(1 - a, b - 2));
    CHECK(p.substitute(1, 0, 1, 0) == p);
}

TEST_CASE("integer coefficient test") {
    CHECK((X * Y + 3).has_integer_coefficients());
    CHECK_FALSE((Rational(1, 2) * X).has_integer_coefficients());
}

TEST_CASE("text form uses graded order") {
    const auto t = Y.pow(3) + X * X + Rational(2) * X * Y + Rational(2) * Y * Y + X + Y;
    CHECK(t.to_text() == "y^3+x^2+2*x*y+2*y^2+x+y");
    CHECK((X - Rational(1, 3) * Y - 4).to_text() == "x-1/3*y-4");
    CHECK(BivariatePolynomial().to_text() == "0");
    CHECK((-X).to_text() == "-x");
    CHECK(X.to_text("p", "q") == "p");
}

TEST_CASE("json form") {
    const auto p = Rational(14, 3) * Y.pow(3) + Rational(3) * X * X - 4;
    const auto j = to_json(p);
    CHECK(j["vars"] == nlohmann::json::array({"x", "y"}));
    CHECK(j["monomials"] == nlohmann::json::parse(R"([[2,0,"3"],[0,3,"14/3"],[0,0,"-4"]])"));
    CHECK(polynomial_from_json(j) == p);
    CHECK(to_json(BivariatePolynomial())["monomials"].empty());
    CHECK_THROWS(polynomial_from_json(nlohmann::json::parse(R"({"vars":["x","y"],"monomials":[[1,0,"a"]]})")));
}

TEST_CASE("interpolation recovers polynomials") {
    std::mt19937 rng(7);
    for (unsigned dx = 0; dx <= 3; ++dx)
        for (unsigned dy = 0; dy <= 3; ++dy) {
            const auto p = random_polynomial(rng, dx, dy) * Rational(6);
            std::vector<std::int64_t> xs, ys;
            for (unsigned i = 0; i <= dx; ++i) xs.push_back(static_cast<std::int64_t>(i) - 1);
            for (unsigned j = 0; j <= dy; ++j) ys.push_back(2 * static_cast<std::int64_t>(j));
            std::vector<std::vector<Integer>> values(xs.size(), std::vector<Integer>(ys.size()));
            bool integral = true;
            for (std::size_t a = 0; a < xs.size(); ++a)
                for (std::size_t b = 0; b < ys.size(); ++b) {
                    const auto v = p.evaluate(xs[a], ys[b]);
                    integral = integral && denominator(v) == 1;
                    values[a][b] = numerator(v);
                }
            if (!integral) continue;
            CHECK(interpolate(xs, ys, values) == p);
        }
}

TEST_CASE("interpolation rejects malformed input") {
    CHECK_THROWS_AS(interpolate({0, 1}, {0}, {{Integer(1)}}), InterpolationError);
    CHECK_THROWS_AS(interpolate({0, 0}, {0}, {{Integer(1)}, {Integer(2)}}), InterpolationError);
    CHECK_THROWS_AS(interpolate({}, {0}, {}), InterpolationError);
}

TEST_CASE("rational formatting") {
    CHECK(to_string(Rational(-6, 4)) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
}
