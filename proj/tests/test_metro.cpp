#include "doctest.h"
#include "support.hpp"

#include "ore/error.hpp"
#include "ore/evaluation.hpp"
#include "ore/metro.hpp"
#include "ore/random.hpp"
#include "ore/wedderburn.hpp"

using namespace testing_support;
using Status = MetroSolutionReport::Status;
using Uniqueness = MetroSolutionReport::Uniqueness;

namespace {

MetroSolutionReport solve(const ContextPtr& k, const std::string& a, const std::string& b, const std::string& c) {
    return solve_metro(*k, MetroProblem(el(k, a), el(k, b), el(k, c)));
}

}  // namespace

TEST_CASE("metro worked solutions over quaternions") {
    auto h = hq();
    auto r = solve(h, "i", "2", "1");
    REQUIRE(r.status == Status::Solution);
    CHECK(*r.x == el(h, "-(2+i)/5"));
    CHECK((el(h, "i") - el(h, "2")) * *r.x == h->one());
    CHECK(r.uniqueness == Uniqueness::Unique);
    CHECK(r.strategy == "linear-algebra");

    CHECK(solve(h, "i", "i", "1").status == Status::NoSolution);

    r = solve(h, "i", "i", "j");
    REQUIRE(r.status == Status::Solution);
    CHECK(*r.x == el(h, "-k/2"));
    CHECK(r.uniqueness == Uniqueness::Multiple);
    REQUIRE(r.other);
    CHECK(*r.other != *r.x);
    CHECK(metro_lhs(*h, el(h, "i"), el(h, "i"), *r.other) == el(h, "j"));
}

TEST_CASE("metro over a differential field") {
    auto u = qu();
    auto r = solve(u, "u", "u", "1");
    REQUIRE(r.status == Status::Solution);
    CHECK(*r.x == el(u, "-u"));
    CHECK(r.strategy == "antiderivative");

    r = solve(u, "u", "u", "1/u");
    CHECK(r.status == Status::Undecided);
    CHECK_FALSE(r.reason.empty());

    // (a - b) x - x' = c with a - b = u, c = u^2 - 1 has x = u.
    r = solve(u, "2u", "u", "u^2-1");
    REQUIRE(r.status == Status::Solution);
    CHECK(*r.x == el(u, "u"));
    CHECK(r.uniqueness == Uniqueness::Unknown);

    // x = 1/u: u * (1/u) + 1/u^2 = 1 + 1/u^2
    r = solve(u, "u", "0", "1 + 1/u^2");
    REQUIRE(r.status == Status::Solution);
    CHECK(metro_lhs(*u, el(u, "u"), u->zero(), *r.x) == el(u, "1+1/u^2"));

    auto plain = RingContext::rational_functions('x', Endomorphism::identity(), Derivation::zero());
    r = solve(plain, "x", "1", "x^2");
    REQUIRE(r.status == Status::Solution);
    CHECK(*r.x == el(plain, "x^2/(x-1)"));
    CHECK(solve(plain, "x", "x", "1").status == Status::NoSolution);

    CHECK(solve(qx_square(), "x", "1", "1").status == Status::Undecided);
}

TEST_CASE("metro rejects c = 0") {
    auto h = hq();
    CHECK_THROWS_AS(MetroProblem(el(h, "i"), el(h, "i"), h->zero()), Error);
    try {
        MetroProblem(el(h, "i"), el(h, "j"), h->zero());
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::ZeroC);
    }
    // the excluded equation always has x = 0
    CHECK(metro_lhs(*h, el(h, "i"), el(h, "j"), h->zero()).is_zero());
}

TEST_CASE("exhaustive metro agrees with a direct count over F4") {
    for (bool inner : {false, true}) {
        auto k = f4(true, inner);
        const auto all = k->enumerate();
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all) {
                    if (c.is_zero()) continue;
                    int count = 0;
                    for (const auto& x : all)
                        if (a * x - k->apply_S(x) * b - k->apply_D(x) == c) ++count;
                    auto r = solve_metro(*k, MetroProblem(a, b, c));
                    CHECK((count > 0) == (r.status == Status::Solution));
                    if (count == 1) CHECK(r.uniqueness == Uniqueness::Unique);
                    if (count > 1) CHECK(r.uniqueness == Uniqueness::Multiple);
                }
    }
}

TEST_CASE("solvability matches quadratic W-ness") {
    auto h = hq();
    auto rep = metro_wedderburn_equivalence(h, MetroProblem(el(h, "i"), el(h, "i"), el(h, "j")));
    CHECK(rep.quadratic == poly(h, "t^2 + 1"));
    CHECK(rep.quadratic_is_w == std::optional<bool>(true));
    CHECK(rep.agree());

    rep = metro_wedderburn_equivalence(h, MetroProblem(el(h, "i"), el(h, "i"), el(h, "1")));
    CHECK(rep.quadratic == poly(h, "t^2 - [2i]*t - 1"));
    CHECK(rep.quadratic_is_w == std::optional<bool>(false));
    CHECK(rep.quadratic_roots == els(h, {"i"}));
    CHECK(rep.agree());

    auto u = qu();
    rep = metro_wedderburn_equivalence(u, MetroProblem(el(u, "u"), el(u, "u"), el(u, "1")));
    CHECK(rep.quadratic == poly(u, "t^2 - [2u]*t + [u^2-1]"));
    REQUIRE(rep.second_root);
    CHECK(*rep.second_root == el(u, "u + 1/u"));
    CHECK(rep.quadratic_is_w == std::optional<bool>(true));
    CHECK(rep.agree());

    for (bool inner : {false, true}) {
        auto k = f4(true, inner);
        const auto all = k->enumerate();
        for (const auto& a : all)
            for (const auto& b : all)
                for (const auto& c : all)
                    if (!c.is_zero()) CHECK(metro_wedderburn_equivalence(k, MetroProblem(a, b, c)).agree());
    }

    Rng rng(17);
    for (int n = 0; n < 40; ++n) {
        auto a = random_element(*h, rng), b = random_element(*h, rng), c = random_element(*h, rng, true);
        CHECK(metro_wedderburn_equivalence(h, MetroProblem(a, b, c)).agree());
    }
}

TEST_CASE("unique solutions outside the class") {
    auto h = hq();
    auto rep = class_algebraic_uniqueness(h, el(h, "i"), el(h, "1+j"), h->one());
    CHECK(rep.class_polynomial == poly(h, "t^2 + 1"));
    CHECK(rep.holds());
    try {
        class_algebraic_uniqueness(h, el(h, "i"), el(h, "-i"), h->one());
        FAIL("expected A_IN_CLASS");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::AInClass);
    }
    rep = class_algebraic_uniqueness(h, el(h, "3/2"), el(h, "5/2"), el(h, "2-k"));
    CHECK(rep.class_polynomial == poly(h, "t - [3/2]"));
    CHECK(rep.holds());

    auto hd = RingContext::quaternions(Derivation::inner(el(h, "j")));
    SkewPolynomial f = class_minimal_polynomial(hd, el(hd, "i"));
    for (const auto& c : els(hd, {"1", "j", "1+k", "2-i+3j"}))
        CHECK(evaluate(f, conjugate(*hd, el(hd, "i"), c)).is_zero());
    CHECK(f.degree() == 2u);

    auto k = f4();
    f = class_minimal_polynomial(k, k->one());
    CHECK(f == poly(k, "t^2 + 1"));
}
