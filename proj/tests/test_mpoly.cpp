#include "doctest.h"
#include "helpers.hpp"
#include "pnlie/errors.hpp"
#include "pnlie/mpoly.hpp"
#include "pnlie/random_points.hpp"

using namespace pnlie;

namespace {

MPoly random_poly(std::size_t nvars, RationalSampler& s, unsigned max_terms = 5,
                  unsigned max_deg = 3) {
    MPoly p(nvars);
    const unsigned terms = 1 + static_cast<unsigned>(s.next_u64() % max_terms);
    for (unsigned t = 0; t < terms; ++t) {
        Exponents e(nvars, 0);
        for (auto& x : e) x = static_cast<unsigned>(s.next_u64() % (max_deg + 1));
        p.add_term(e, s.small());
    }
    return p;
}

}  // namespace

TEST_CASE("partial derivative of x1 x2") {
    const MPoly f = MPoly::variable(2, 0) * MPoly::variable(2, 1);
    CHECK(f.partial(0) == MPoly::variable(2, 1));
    CHECK(f.partial(1) == MPoly::variable(2, 0));
    CHECK(f.partial(0).partial(0).is_zero());
}

TEST_CASE("square of x1 + x2 expands") {
    const MPoly f = MPoly::variable(2, 0) + MPoly::variable(2, 1);
    MPoly expected(2);
    expected.add_term({2, 0}, Rational(1));
    expected.add_term({1, 1}, Rational(2));
    expected.add_term({0, 2}, Rational(1));
    CHECK(f * f == expected);
}

TEST_CASE("evaluation basics") {
    CHECK(MPoly(2).eval({Rational(9), Rational(-4)}) == 0);
    CHECK(MPoly::variable(2, 0).eval({Rational(5), Rational(7)}) == 5);
    CHECK_THROWS_AS(MPoly::variable(2, 0).eval({Rational(5)}), DimensionError);
}

TEST_CASE("nvars mismatch throws") {
    CHECK_THROWS_AS(MPoly(2) + MPoly(3), DimensionError);
    CHECK_THROWS_AS(MPoly(2) * MPoly(3), DimensionError);
}

TEST_CASE("ring axioms on random triples") {
    RationalSampler s(3);
    for (int t = 0; t < 40; ++t) {
        const MPoly f = random_poly(3, s), g = random_poly(3, s), h = random_poly(3, s);
        CHECK(f + g == g + f);
        CHECK(f * g == g * f);
        CHECK((f * g) * h == f * (g * h));
        CHECK(f * (g + h) == f * g + f * h);
        CHECK((f - f).is_zero());
    }
}

TEST_CASE("evaluation is a ring homomorphism at 100 random points") {
    RationalSampler s(4);
    const MPoly f = random_poly(3, s), g = random_poly(3, s), h = random_poly(3, s);
    for (int t = 0; t < 100; ++t) {
        const Vec p = s.point(3);
        CHECK((f * g + h).eval(p) == f.eval(p) * g.eval(p) + h.eval(p));
    }
}

TEST_CASE("partial derivative satisfies the Leibniz rule") {
    RationalSampler s(5);
    for (int t = 0; t < 30; ++t) {
        const MPoly f = random_poly(2, s), g = random_poly(2, s);
        for (std::size_t i = 0; i < 2; ++i)
            CHECK((f * g).partial(i) == f.partial(i) * g + f * g.partial(i));
    }
}

TEST_CASE("linear substitution round-trips through the inverse matrix") {
    RationalSampler s(6);
    Mat c(3, 3);
    do {
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) c.at(i, j) = s.small();
    } while (c.determinant() == 0);
    const Mat cinv = c.inverse();
    for (int t = 0; t < 20; ++t) {
        const MPoly f = random_poly(3, s);
        CHECK(f.subst_linear(c).subst_linear(cinv) == f);
    }
}

TEST_CASE("degree and homogeneity") {
    MPoly f(2);
    f.add_term({2, 1}, Rational(4));
    f.add_term({0, 3}, Rational(-1) / 2);
    CHECK(f.total_degree() == 3);
    CHECK(f.is_homogeneous());
    f.add_term({1, 0}, Rational(1));
    CHECK(!f.is_homogeneous());
    CHECK(MPoly(4).is_homogeneous());
    CHECK(f.max_abs_coeff() == 4);
}

TEST_CASE("graded-lex term order is degree-major") {
    MPoly f(2);
    f.add_term({0, 2}, Rational(1));
    f.add_term({1, 0}, Rational(1));
    f.add_term({0, 0}, Rational(1));
    std::vector<unsigned> degrees;
    for (const auto& [e, c] : f.terms()) degrees.push_back(e[0] + e[1]);
    CHECK(degrees == std::vector<unsigned>{0, 1, 2});
}

TEST_CASE("zero coefficients are never stored") {
    MPoly f(2);
    f.add_term({1, 1}, Rational(3));
    f.add_term({1, 1}, Rational(-3));
    CHECK(f.terms().empty());
    CHECK(f.is_zero());
}
