#include <doctest.h>

#include <random>

#include "../fixtures.hpp"
#include "../oracles.hpp"
#include "skpval/error.hpp"

using namespace skpval;

namespace {

poly P(const char *s) { return parse_poly(s); }

} // namespace

TEST_CASE("scalar arithmetic over Q and F_p")
{
    scalar a(mpq_class(1, 3)), b(mpq_class(1, 6));
    CHECK((a + b).value() == mpq_class(1, 2));
    CHECK((a / b).value() == 2);
    CHECK_THROWS_AS(scalar(0L).inverse(), error);

    field f7 = field::prime(7);
    scalar x(3, f7), y(5, f7);
    CHECK((x + y).value() == 1);
    CHECK((x * y).value() == 1);
    CHECK((x * x.inverse()).is_one());
    CHECK((scalar(mpq_class(1, 2), f7)).value() == 4);
    CHECK_THROWS_AS(scalar(1, field::prime(5)) + scalar(1, f7), error);
}

TEST_CASE("parsing and printing")
{
    poly f = P("X1^2 - X0^3");
    CHECK(f.num_terms() == 2);
    CHECK(f.str() == "X1^2 - X0^3");
    CHECK(P("(X0 + 1)^2") == P("X0^2 + 2*X0 + 1"));
    CHECK(P("1/2*X2 - 3").str() == "1/2*X2 - 3");
    CHECK_THROWS_AS(P("X0 +"), error);
    CHECK(P("0").is_zero());
}

TEST_CASE("monic division examples")
{
    poly g = P("X1^2 - X0^3");
    auto [q1, r1] = monic_divide(P("X1^3"), g, 1);
    CHECK(q1 == P("X1"));
    CHECK(r1 == P("X0^3*X1"));

    auto [q2, r2] = monic_divide(g, g, 1);
    CHECK(q2 == P("1"));
    CHECK(r2.is_zero());

    auto [q3, r3] = monic_divide(P("X0^5"), g, 1);
    CHECK(q3.is_zero());
    CHECK(r3 == P("X0^5"));

    CHECK_THROWS_AS(monic_divide(P("X1^3"), P("2*X1^2 - X0"), 1), error);
}

TEST_CASE("monic division roundtrip")
{
    std::mt19937_64 rng(41);
    std::uniform_int_distribution<unsigned> dg(1, 4);
    for (int k = 0; k < 500; ++k) {
        poly f = fixtures::random_poly(rng, {0, 1, 2}, 8, 6);
        unsigned d = dg(rng);
        // X2^d plus lower terms, monic in X2
        poly mg = pow(poly::var(2), d);
        poly lower = fixtures::random_poly(rng, {0, 1, 2}, d + 2, 4);
        for (auto &[e, c] : lower.terms())
            if (e.size() < 3 || e[2] < d)
                mg.add_term(e, c);
        REQUIRE(mg.is_monic_in(2));
        auto [q, r] = monic_divide(f, mg, 2);
        CHECK(q * mg + r == f);
        CHECK(r.deg(2) < d);
        // the same identity at a random point
        auto pt = oracle::random_point(rng, 3);
        CHECK((oracle::mulmod(oracle::eval(q, pt), oracle::eval(mg, pt)) + oracle::eval(r, pt)) % oracle::P ==
              oracle::eval(f, pt));
    }
}

TEST_CASE("order")
{
    CHECK(order_of(P("X0^2*X1 + X0^5")) == 3);
    CHECK(order_of(P("1")) == 0);
    CHECK(order_of(P("X0^3*X1*X2^2")) == 6);
    CHECK_THROWS_AS(order_of(poly()), error);

    std::mt19937_64 rng(43);
    for (int k = 0; k < 200; ++k) {
        poly f = fixtures::random_poly(rng, {0, 1, 2}, 6);
        poly g = fixtures::random_poly(rng, {0, 1, 2}, 6);
        CHECK(order_of(f * g) == order_of(f) + order_of(g));
    }
}

TEST_CASE("multiplication agrees with evaluation")
{
    std::mt19937_64 rng(47);
    for (int k = 0; k < 200; ++k) {
        poly f = fixtures::random_poly(rng, {0, 1, 2}, 6);
        poly g = fixtures::random_poly(rng, {0, 1, 2}, 6);
        auto pt = oracle::random_point(rng, 3);
        CHECK(oracle::eval(f * g, pt) == oracle::mulmod(oracle::eval(f, pt), oracle::eval(g, pt)));
        CHECK(oracle::eval(f - g, pt) == (oracle::eval(f, pt) + oracle::P - oracle::eval(g, pt)) % oracle::P);
    }
}

TEST_CASE("truncation keeps total degree within the cutoff")
{
    truncation t{5};
    std::mt19937_64 rng(53);
    for (int k = 0; k < 100; ++k) {
        poly f = fixtures::random_poly(rng, {0, 1}, 4);
        poly g = fixtures::random_poly(rng, {0, 1}, 4);
        poly h = mul(f, g, t);
        for (auto &[e, c] : h.terms())
            CHECK(total_degree(e) <= 5);
        poly full = f * g;
        CHECK(h == full.truncate(5));
        poly p = pow(f, 3, t);
        poly pf = f * f * f;
        CHECK(p == pf.truncate(5));
    }
}
