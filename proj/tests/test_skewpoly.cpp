#include "doctest.h"
#include "support.hpp"

#include "ore/error.hpp"
#include "ore/evaluation.hpp"
#include "ore/random.hpp"

using namespace testing_support;

TEST_CASE("multiplication follows t b = S(b) t + D(b)") {
    auto h = hq();
    auto p = poly(h, "t - [j]") * poly(h, "t - [i]");
    CHECK(p == poly(h, "t^2 - [i+j]*t - [k]"));
    auto k = f4();
    CHECK(poly(k, "t - 1") * poly(k, "t - 1") == poly(k, "t^2 + 1"));
    CHECK(poly(k, "t") * poly(k, "[w]") == poly(k, "[w^2]*t"));
    auto u = qu();
    // t u = u t + 1
    CHECK(poly(u, "t") * poly(u, "[u]") == poly(u, "[u]*t + 1"));
    auto f = poly(h, "[1+i]*t^2 + [j]");
    CHECK(f * SkewPolynomial::one(h) == f);
    CHECK((f * SkewPolynomial(h)).is_zero());
}

TEST_CASE("degree sentinel") {
    auto h = hq();
    SkewPolynomial z(h);
    CHECK(z.degree().is_neg_inf());
    CHECK_THROWS_AS(z.degree().value(), Error);
    CHECK(z.degree() < Degree(0));
    CHECK((z.degree() + Degree(3)).is_neg_inf());
}

TEST_CASE("right division") {
    auto h = hq();
    auto [q1, r1] = right_divmod(poly(h, "t^2 + 1"), poly(h, "t - [i]"));
    CHECK(q1 == poly(h, "t + [i]"));
    CHECK(r1.is_zero());
    auto f = poly(h, "t - [j]") * poly(h, "t - [i]");
    auto [q2, r2] = right_divmod(f, poly(h, "t - [j]"));
    CHECK(r2 == SkewPolynomial::constant(h, el(h, "-2k")));
    CHECK(r2 == SkewPolynomial::constant(h, evaluate(f, el(h, "j"))));
    auto [q3, r3] = right_divmod(f, f);
    CHECK(q3 == SkewPolynomial::one(h));
    CHECK(r3.is_zero());
    CHECK_THROWS_AS(right_divmod(f, SkewPolynomial(h)), Error);
}

TEST_CASE("left division") {
    auto h = hq();
    auto d = left_divmod(poly(h, "t^2 + 1"), poly(h, "t + [j]"));
    REQUIRE(d);
    CHECK(d->quotient == poly(h, "t - [j]"));
    CHECK(d->remainder.is_zero());
    auto x = qx_square();
    CHECK_FALSE(left_divmod(poly(x, "[x]*t"), poly(x, "t")).has_value());
    auto e = left_divmod(poly(x, "[x^2]*t"), poly(x, "t"));
    REQUIRE(e);
    CHECK(e->quotient == poly(x, "[x]"));
}

TEST_CASE("rgcd and llcm worked cases") {
    auto h = hq();
    CHECK(rgcd(poly(h, "t - [i]"), poly(h, "t^2 + 1")) == poly(h, "t - [i]"));
    auto gl = rgcd_llcm(poly(h, "t - [i]"), poly(h, "t - [j]"));
    CHECK(gl.rgcd == SkewPolynomial::one(h));
    CHECK(gl.llcm == poly(h, "t^2 + 1"));
    auto f = poly(h, "[2]*t^2 + [i]*t + [j]");
    auto self = rgcd_llcm(f, f);
    CHECK(self.rgcd == f.monic());
    CHECK(self.llcm == f.monic());
    auto zero = rgcd_llcm(f, SkewPolynomial(h));
    CHECK(zero.rgcd == f.monic());
    CHECK(zero.llcm.is_zero());
    auto zero2 = rgcd_llcm(SkewPolynomial(h), f);
    CHECK(zero2.rgcd == f.monic());
    CHECK(zero2.llcm.is_zero());
}

TEST_CASE("division and gcd identities on random inputs") {
    std::vector<ContextPtr> rings{q(), hq(), f4(), f4(true, true), f8(true, true), qu(), qx_square()};
    for (const auto& k : rings) {
        Rng rng(5);
        for (int trial = 0; trial < 60; ++trial) {
            auto f = random_polynomial_upto(k, rng, 3);
            auto g = random_polynomial_upto(k, rng, 2);
            auto [q, r] = right_divmod(f, g);
            CHECK(q * g + r == f);
            CHECK(r.degree() < g.degree());
            auto gl = rgcd_llcm(f, g);
            CHECK(f.degree() + g.degree() == gl.rgcd.degree() + gl.llcm.degree());
            CHECK(right_divides(gl.rgcd, f));
            CHECK(right_divides(gl.rgcd, g));
            CHECK(right_divides(f, gl.llcm));
            CHECK(right_divides(g, gl.llcm));
            auto h3 = random_polynomial_upto(k, rng, 2);
            CHECK((f * g) * h3 == f * (g * h3));
            CHECK(f * (g + h3) == f * g + f * h3);
            if (k->capabilities().s_is_automorphism) {
                auto l = left_divmod(f, g);
                REQUIRE(l);
                CHECK(g * l->quotient + l->remainder == f);
            }
        }
    }
}

TEST_CASE("polynomial literals") {
    auto h = hq();
    auto f = poly(h, "t^2 + [j]");
    CHECK(f.coeff(2).is_one());
    CHECK(f.coeff(0) == el(h, "j"));
    CHECK(poly(h, "[j] + t^2") == f);
    CHECK(poly(h, "t^2 + [1+2i]*t + [j]").to_string() == "t^2 + [1+2i]*t + [j]");
    CHECK(poly(h, "t^2 - [i+j]*t - [k]").to_string() == "t^2 - [i+j]*t - [k]");
    CHECK(poly(h, "-t + 3").to_string() == "-t + [3]");
    CHECK(poly(h, "0").is_zero());
    CHECK_THROWS_AS(poly(h, "t^2 + [i"), SyntaxError);
    CHECK_THROWS_AS(poly(h, "t t"), SyntaxError);
    std::vector<ContextPtr> rings{q(), hq(), f4(), f8(), qu(), qx_square()};
    for (const auto& k : rings) {
        Rng rng(9);
        for (int trial = 0; trial < 100; ++trial) {
            auto p = random_polynomial_upto(k, rng, 4);
            CHECK(SkewPolynomial::parse(k, p.to_string()) == p);
        }
    }
}

TEST_CASE("context mismatch") {
    CHECK_THROWS_AS(poly(hq(), "t") * poly(f4(), "t"), Error);
    CHECK_THROWS_AS(poly(f4(false), "t") + poly(f4(true), "t"), Error);
}
