#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "blowup/parse.hpp"

using namespace blowup;

namespace {

RingPtr xy() { return make_ring({"x", "y"}); }

Polynomial P(const RingPtr& r, const std::string& s) { return parse_polynomial(r, s); }

// random sparse polynomial with small coefficients, deterministic
Polynomial random_poly(const RingPtr& r, std::mt19937& rng, unsigned max_deg = 3,
                       unsigned max_terms = 4) {
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<unsigned> nterms(1, max_terms);
    std::uniform_int_distribution<unsigned> expo(0, max_deg);
    Polynomial acc = Polynomial::zero(r);
    unsigned k = nterms(rng);
    for (unsigned t = 0; t < k; ++t) {
        Monomial m(r->arity());
        for (std::size_t v = 0; v < r->arity(); ++v) m.exp[v] = expo(rng);
        int c = coeff(rng);
        acc = acc + Polynomial::from_term(r, m, Rational(c));
    }
    return acc;
}

std::vector<Rational> random_point(std::size_t n, std::mt19937& rng) {
    std::uniform_int_distribution<int> num(-5, 5);
    std::uniform_int_distribution<int> den(1, 4);
    std::vector<Rational> p;
    for (std::size_t i = 0; i < n; ++i) {
        Rational q(num(rng), den(rng));
        q.canonicalize();
        p.push_back(q);
    }
    return p;
}

} // namespace

TEST_CASE("parsing reads terms directly") {
    auto r = xy();
    Polynomial f = P(r, "y^2 - x^3");
    REQUIRE(f.terms().size() == 2);
    CHECK(f == Polynomial::from_term(r, Monomial{{0, 2}}, 1) +
                   Polynomial::from_term(r, Monomial{{3, 0}}, -1));
}

TEST_CASE("parsing zero") {
    auto r = xy();
    Polynomial f = P(r, "0");
    CHECK(f.is_zero());
    CHECK(f.terms().empty());
    CHECK(f.str() == "0");
}

TEST_CASE("like terms collect") {
    auto r = xy();
    CHECK(P(r, "3/2*x*y + x*y") == P(r, "5/2*x*y"));
    CHECK(P(r, "x - x") == Polynomial::zero(r));
}

TEST_CASE("parse errors carry positions") {
    auto r = xy();
    CHECK_THROWS_AS(P(r, "x + z"), parse_error);
    CHECK_THROWS_AS(P(r, "1/0"), parse_error);
    CHECK_THROWS_AS(P(r, "x + "), parse_error);
    CHECK_THROWS_AS(P(r, ""), parse_error);
    CHECK_THROWS_AS(P(r, "x ^"), parse_error);
    try {
        P(r, "x + q*y");
    } catch (const parse_error& e) {
        CHECK(e.offset == 4);
    }
}

TEST_CASE("format round trips and is canonical") {
    auto r = xy();
    std::mt19937 rng(12345);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = random_poly(r, rng);
        CHECK(P(r, f.str()) == f);
    }
    CHECK(P(r, "-1*x^3 + y^2").str() == P(r, "y^2 - x^3").str());
    CHECK(P(r, "2/4*x").str() == "1/2*x");
}

TEST_CASE("arithmetic agrees with evaluation at random rational points") {
    auto r = xy();
    std::mt19937 rng(777);
    for (int i = 0; i < 100; ++i) {
        Polynomial f = random_poly(r, rng), g = random_poly(r, rng);
        auto p = random_point(2, rng);
        CHECK((f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p));
        CHECK((f - g).evaluate(p) == f.evaluate(p) - g.evaluate(p));
        CHECK((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
        CHECK((f + (-f)).is_zero());
    }
}

TEST_CASE("partial derivatives: power rule") {
    auto r = xy();
    Polynomial f = P(r, "y^2 - x^3");
    CHECK(partial_derivative(f, 0) == P(r, "-3*x^2"));
    CHECK(partial_derivative(f, 1) == P(r, "2*y"));
    CHECK(partial_derivative(P(r, "y"), 0).is_zero());
    CHECK_THROWS_AS(partial_derivative(f, 2), argument_error);
}

TEST_CASE("Leibniz rule on random inputs") {
    auto r = xy();
    std::mt19937 rng(99);
    for (int i = 0; i < 50; ++i) {
        Polynomial f = random_poly(r, rng), g = random_poly(r, rng);
        for (std::size_t v = 0; v < 2; ++v)
            CHECK(partial_derivative(f * g, v) ==
                  f * partial_derivative(g, v) + g * partial_derivative(f, v));
    }
}

TEST_CASE("substitution is the chart map") {
    auto r = xy();
    auto rt = make_ring({"x", "y", "T"});
    Polynomial f = P(r, "y^2 - x^3");
    std::vector<Polynomial> images{P(rt, "x"), P(rt, "x*T")};
    CHECK(substitute(f, images) == P(rt, "x^2*T^2 - x^3"));

    std::vector<Polynomial> ident{P(r, "x"), P(r, "y")};
    CHECK(substitute(P(r, "x"), ident) == P(r, "x"));
    CHECK(substitute(P(r, "1"), ident) == P(r, "1"));
    CHECK_THROWS_AS(substitute(f, {P(rt, "x")}), argument_error);
}

TEST_CASE("substitution is a ring homomorphism") {
    auto r = xy();
    auto rt = make_ring({"u", "v"});
    std::mt19937 rng(4242);
    for (int i = 0; i < 30; ++i) {
        Polynomial f = random_poly(r, rng, 2), g = random_poly(r, rng, 2);
        std::vector<Polynomial> im{random_poly(rt, rng, 2), random_poly(rt, rng, 2)};
        CHECK(substitute(f + g, im) == substitute(f, im) + substitute(g, im));
        CHECK(substitute(f * g, im) == substitute(f, im) * substitute(g, im));
    }
}

TEST_CASE("order at a point") {
    auto r = xy();
    Polynomial f = P(r, "y^2 - x^3");
    CHECK(order_at_point(f, {0, 0}) == 2u);
    CHECK(order_at_point(f, {1, 1}) == 1u);
    CHECK(order_at_point(f, {2, 1}) == 0u);
    CHECK(!order_at_point(Polynomial::zero(r), {0, 0}).has_value());
    CHECK_THROWS_AS(order_at_point(f, {0, 0, 0}), argument_error);
}

TEST_CASE("order is additive (integral domain)") {
    auto r = xy();
    std::mt19937 rng(31415);
    int tested = 0;
    while (tested < 40) {
        Polynomial f = random_poly(r, rng, 2), g = random_poly(r, rng, 2);
        if (f.is_zero() || g.is_zero()) continue;
        auto p = random_point(2, rng);
        auto of = order_at_point(f, p), og = order_at_point(g, p);
        CHECK(order_at_point(f * g, p) == *of + *og);
        ++tested;
    }
}

TEST_CASE("monomial orders behave") {
    auto lex = MonomialOrder::lex();
    auto grevlex = MonomialOrder::grevlex();
    Monomial x{{1, 0, 0}}, y{{0, 1, 0}}, z{{0, 0, 1}};
    // lex: x > y > z
    CHECK(compare(x, y, lex) > 0);
    CHECK(compare(y, z, lex) > 0);
    // grevlex: degree first
    CHECK(compare(x * x, y, grevlex) > 0);
    // grevlex classic: x*z < y^2 (same degree, z-heavy is smaller)
    CHECK(compare(x * z, y * y, grevlex) < 0);
    // multiplicative, 1 minimal
    Monomial one{{0, 0, 0}};
    for (const auto& ord : {lex, grevlex, MonomialOrder::block(1)}) {
        CHECK(compare(x, one, ord) > 0);
        CHECK(compare(x * z, y * z, ord) == compare(x, y, ord));
    }
    // block(1): anything with x beats anything without
    CHECK(compare(x, y * y * z, MonomialOrder::block(1)) > 0);
}

TEST_CASE("printing follows the ring order descending") {
    auto r = xy();
    CHECK(P(r, "y^2 - x^3").str() == "-x^3 + y^2");
    CHECK(P(r, "1 + x").str() == "x + 1");
    CHECK(P(r, "2*x*y - 3*x^2 + 1/3").str() == "-3*x^2 + 2*x*y + 1/3");
    CHECK(P(r, "-x").str() == "-x");
}
