#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <zetatau/rational_function.hpp>
#include <zetatau/selftest.hpp>

#include <random>

using namespace zetatau;

namespace {
IntPolynomial P(std::initializer_list<long> coeffs) { return IntPolynomial::from_coeffs(coeffs); }
RationalFunction RF(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RationalFunction(P(num), P(den));
}
}  // namespace

TEST_CASE("normalization") {
    // common content removed
    CHECK(RF({2, -2}, {2}) == RationalFunction(P({1, -1})));
    // polynomial factor cancelled
    CHECK(RF({1, 0, -1}, {1, -1}) == RationalFunction(P({1, 1})));
    // (-1+t)/(-1+t)^2 = 1/(t-1); the sign rule moves the minus to the numerator
    CHECK(RF({-1, 1}, {1, -2, 1}) == RF({-1}, {1, -1}));
    CHECK(RF({-1, 1}, {1, -2, 1}).den() == P({1, -1}));
    CHECK(RF({-1, 1}, {1, -2, 1}).num() == P({-1}));
    // only the shared content is removed: -5/(1-t)^2 is already canonical
    CHECK(RF({-5}, {1, -2, 1}).num() == P({-5}));
    // zero is 0/1
    CHECK(RationalFunction().is_zero());
    CHECK(RF({0}, {3, 1}).den() == P({1}));
    CHECK_THROWS_AS(RationalFunction(P({1}), IntPolynomial()), std::invalid_argument);
}

TEST_CASE("canonical invariants on random inputs") {
    std::mt19937 rng(99);
    for (int rep = 0; rep < 200; ++rep) {
        const IntPolynomial a = selftest::random_polynomial(rng, 4, 9);
        IntPolynomial b = selftest::random_polynomial(rng, 4, 9);
        if (b.is_zero()) b = P({0, 3});
        const RationalFunction r(a, b);
        CHECK(r.den().lowest_coeff() > 0);
        if (!r.num().is_zero()) {
            CHECK(poly_gcd(r.num(), r.den()).degree() == 0);
            CHECK(gcd(r.num().content(), r.den().content()) == 1);
        } else {
            CHECK(r.den() == P({1}));
        }
    }
}

TEST_CASE("field arithmetic") {
    const RationalFunction zeta_cubed(P({1, -1}).pow(3));
    const RationalFunction tau = RF({-2, 3, -2}, {1, -4, 6, -4, 1});
    CHECK(zeta_cubed * tau == RF({-2, 3, -2}, {1, -1}));

    const RationalFunction a = RF({3, 1}, {1, 0, 2});
    CHECK(a * RationalFunction(1) == a);
    CHECK(a / a == RationalFunction(1));
    CHECK(a - a == RationalFunction());
    CHECK(a + RationalFunction() == a);
    CHECK_THROWS_AS(a / RationalFunction(), std::domain_error);

    // 1/1 divided by 2/1: a constant denominator > 1 is representable
    const RationalFunction half = RationalFunction(1) / RationalFunction(2);
    CHECK(half.num() == P({1}));
    CHECK(half.den() == P({2}));
}

TEST_CASE("field axioms on random triples") {
    std::mt19937 rng(2024);
    auto random_rf = [&] {
        IntPolynomial num = selftest::random_polynomial(rng, 3, 5);
        IntPolynomial den = selftest::random_polynomial(rng, 3, 5);
        if (den.is_zero()) den = P({1, 1});
        return RationalFunction(num, den);
    };
    for (int rep = 0; rep < 100; ++rep) {
        const RationalFunction a = random_rf(), b = random_rf(), c = random_rf();
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a * (b + c) == a * b + a * c);
        if (!b.is_zero()) CHECK((a / b) * b == a);
        if (!c.is_zero()) CHECK(a * c / c == a);
    }
}

TEST_CASE("derivative") {
    // d/dt 1/(1-t) = 1/(1-t)^2
    CHECK(derivative(RF({1}, {1, -1})) == RF({1}, {1, -2, 1}));
    CHECK(derivative(RationalFunction(P({1, -1, 1}))) == RationalFunction(P({-1, 2})));
    CHECK(derivative(RationalFunction(7)).is_zero());
}

TEST_CASE("printing") {
    CHECK(to_string(RF({1, -1, 1}, {1, -1})) == "(1 - t + t^2)/(1 - t)");
    CHECK(to_string(RF({-2, 3, -2}, {1, -4, 6, -4, 1})) == "(-2 + 3t - 2t^2)/(1 - t)^4");
    CHECK(to_string(RF({-5}, {1, -2, 1})) == "-5/(1 - t)^2");
    CHECK(to_string(RationalFunction(P({19, -37, 19}), P({1, -1}).pow(6))) ==
          "(19 - 37t + 19t^2)/(1 - t)^6");
    CHECK(to_string(RationalFunction(P({1, -3, 3, -1}))) == "(1 - t)^3");
    CHECK(to_string(RationalFunction(1)) == "1");
    CHECK(to_string(RationalFunction()) == "0");
    CHECK(to_string(RF({0, 1}, {1, -3, 3, -1})) == "t/(1 - t)^3");
    CHECK(to_string(RF({1}, {1, 0, 2})) == "1/(1 + 2t^2)");
}
