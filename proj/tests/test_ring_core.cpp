#include "doctest.h"
#include "support.hpp"

#include "ore/error.hpp"
#include "ore/random.hpp"

using namespace testing_support;

TEST_CASE("apply_S on the three endomorphism kinds") {
    auto h = hq();
    CHECK(h->apply_S(el(h, "i")) == el(h, "i"));
    auto k = f4();
    CHECK(k->apply_S(el(k, "w")) == el(k, "w^2"));
    CHECK(k->format(k->apply_S(el(k, "w"))) == "w+1");
    auto x = qx_square();
    CHECK(x->apply_S(el(x, "x+1")) == el(x, "x^2+1"));
}

TEST_CASE("apply_D values") {
    auto k = f4(true, true);
    // D(w) = w*w - S(w)*w = w^2 - w^3 = w
    CHECK(k->apply_D(el(k, "w")) == el(k, "w"));
    auto u = qu();
    CHECK(u->apply_D(el(u, "u^2")) == el(u, "2u"));
    CHECK(hq()->apply_D(el(hq(), "1+i")).is_zero());
}

TEST_CASE("s_preimage") {
    auto x = qx_square();
    CHECK(x->s_preimage(el(x, "x^2+1")) == el(x, "x+1"));
    CHECK_FALSE(x->s_preimage(el(x, "x")).has_value());
    CHECK(x->s_preimage(el(x, "1/(x^4-2)")) == el(x, "1/(x^2-2)"));
    auto r = q();
    CHECK(r->s_preimage(el(r, "5")) == el(r, "5"));
    auto k = f8();
    for (const auto& a : k->enumerate()) CHECK(k->apply_S(*k->s_preimage(a)) == a);
}

TEST_CASE("s-image membership on Q(x) is the evenness test") {
    auto x = qx_square();
    Rng rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        Element a = random_element(*x, rng);
        const auto& r = a.as<RatFunc>();
        // a(x) = a(-x) computed independently by substitution
        RatFunc reflected(r.num().negate_variable(), r.den().negate_variable());
        CHECK(x->s_preimage(a).has_value() == (reflected == r));
        Element sq = x->apply_S(a);
        CHECK(x->s_preimage(sq) == a);
    }
}

TEST_CASE("enumeration order") {
    auto k = f4();
    auto all = k->enumerate();
    REQUIRE(all.size() == 4);
    CHECK(all[0].is_zero());
    CHECK(all[1].is_one());
    CHECK(all[2] == el(k, "w"));
    CHECK(all[3] == el(k, "w^2"));
    CHECK(f8()->enumerate().size() == 8);
    auto f2 = RingContext::finite_field(RingContext::f2(), Endomorphism::identity(), Derivation::zero());
    CHECK(f2->enumerate().size() == 2);
    CHECK_THROWS_AS(hq()->enumerate(), Error);
}

TEST_CASE("endomorphism and derivation laws on random pairs") {
    std::vector<ContextPtr> rings{q(), hq(), f4(), f4(true, true), f8(true, true), qu(), qx_square(),
                                  RingContext::quaternions(Derivation::inner(Quaternion(1, 2, 0, -1)))};
    for (const auto& k : rings) {
        Rng rng(11);
        for (int trial = 0; trial < 200; ++trial) {
            Element a = random_element(*k, rng), b = random_element(*k, rng);
            CHECK(k->apply_S(a * b) == k->apply_S(a) * k->apply_S(b));
            CHECK(k->apply_S(a + b) == k->apply_S(a) + k->apply_S(b));
            CHECK(k->apply_D(a * b) == k->apply_S(a) * k->apply_D(b) + k->apply_D(a) * b);
            if (!a.is_zero()) {
                CHECK((a * a.inverse()).is_one());
                CHECK((a.inverse() * a).is_one());
            }
        }
        CHECK(k->apply_S(k->one()).is_one());
        CHECK(k->apply_D(k->one()).is_zero());
    }
}

TEST_CASE("quaternion products follow Hamilton's rules") {
    auto h = hq();
    CHECK(el(h, "i*j") == el(h, "k"));
    CHECK(el(h, "j*i") == el(h, "-k"));
    CHECK(el(h, "j*k") == el(h, "i"));
    CHECK(el(h, "k*i") == el(h, "j"));
    CHECK(el(h, "i^2") == el(h, "-1"));
    CHECK(el(h, "(1+i)^-1") == el(h, "1/2-i/2"));
}

TEST_CASE("element literals") {
    auto h = hq();
    Element a = el(h, "1+2i-3j+k/2");
    CHECK(a == Element(Quaternion(1, 2, -3, mpq_class(1, 2))));
    CHECK(h->format(a) == "1+2i-3j+k/2");
    auto k = f4();
    CHECK(el(k, "w^2+w+1").is_zero());
    auto x = qx_square();
    CHECK(el(x, "(x^2+1)/(x-1)") == Element(RatFunc(QPoly(std::vector<mpq_class>{1, 0, 1}),
                                                     QPoly(std::vector<mpq_class>{-1, 1}))));
    CHECK_THROWS_AS(el(h, "1+w"), Error);
    CHECK_THROWS_AS(el(h, "1+(i"), SyntaxError);
    try {
        el(h, "1+*i");
    } catch (const SyntaxError& e) {
        CHECK(e.position() == 2);
    }
}

TEST_CASE("format/parse round trip") {
    std::vector<ContextPtr> rings{q(), hq(), f4(), f8(), qu(), qx_square()};
    for (const auto& k : rings) {
        Rng rng(3);
        for (int trial = 0; trial < 300; ++trial) {
            Element a = random_element(*k, rng);
            CHECK(k->parse(k->format(a)) == a);
        }
    }
}

TEST_CASE("context validation rejects bad combinations") {
    CHECK_THROWS_AS(RingContext::rational_functions('x', Endomorphism::square_variable(),
                                                    Derivation::formal_derivative()),
                    Error);
    CHECK_THROWS_AS(RingContext::quaternions(Derivation::inner(Element(mpq_class(1)))), Error);
}
