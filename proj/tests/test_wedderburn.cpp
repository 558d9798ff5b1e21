#include "doctest.h"
#include "support.hpp"

#include "ore/base_linear.hpp"
#include "ore/error.hpp"
#include "ore/evaluation.hpp"
#include "ore/random.hpp"
#include "ore/wedderburn.hpp"

#include <algorithm>

using namespace testing_support;
using Verdict = WCertificate::Verdict;

namespace {

std::vector<SkewPolynomial> all_monic(const ContextPtr& k, std::size_t max_degree) {
    const auto all = k->enumerate();
    std::vector<SkewPolynomial> out;
    std::vector<std::vector<Element>> level{{}};
    for (std::size_t d = 0; d <= max_degree; ++d) {
        for (auto c : level) {
            c.push_back(k->one());
            out.emplace_back(k, c);
        }
        std::vector<std::vector<Element>> next;
        for (const auto& c : level)
            for (const auto& e : all) {
                auto n = c;
                n.push_back(e);
                next.push_back(n);
            }
        level = std::move(next);
    }
    return out;
}

}  // namespace

TEST_CASE("centralizers") {
    auto h = hq();
    auto c = centralizer(*h, el(h, "i"));
    CHECK(c.size() == 2);
    BaseField qf(0);
    std::vector<BaseVector> span;
    for (const auto& e : c) span.push_back(h->coordinates(e));
    CHECK(in_span(qf, span, h->coordinates(el(h, "1"))));
    CHECK(in_span(qf, span, h->coordinates(el(h, "i"))));
    CHECK_FALSE(in_span(qf, span, h->coordinates(el(h, "j"))));
    CHECK(centralizer(*h, el(h, "7/3")).size() == 4);
    CHECK(centralizer(*f4(), f4()->zero()).size() == 2);
    CHECK_THROWS_AS(centralizer(*qu(), el(qu(), "u")), Error);
}

TEST_CASE("exponential spaces") {
    auto h = hq();
    auto e = exponential_space(poly(h, "t^2 + 1"), el(h, "i"));
    CHECK(e.base_basis.size() == 4);
    CHECK(e.dimension() == 2);
    e = exponential_space(poly(h, "t - [1+j]"), el(h, "1+j"));
    CHECK(e.dimension() == 1);
    e = exponential_space(poly(h, "t - [j]") * poly(h, "t - [i]"), el(h, "i"));
    CHECK(e.dimension() == 1);
    for (const auto& x : e.base_basis)
        CHECK(evaluate(poly(h, "t - [j]") * poly(h, "t - [i]"), conjugate(*h, el(h, "i"), x)).is_zero());
    // Lambda_f(x) = f(a^x) x
    auto f = poly(h, "t^3 - [2j]*t + [1-k]");
    Element a = el(h, "1+i"), x = el(h, "2-j+k");
    CHECK(lambda_map(f, a, x) == evaluate(f, conjugate(*h, a, x)) * x);
}

TEST_CASE("conjugacy classes of finite fields") {
    auto k = f4();
    auto cls = conjugacy_classes(k);
    std::size_t total = 0;
    for (const auto& c : cls) total += c.size();
    CHECK(total == 4);
    // a^c = c^2 a / c = c a for Frobenius: classes {0} and the units
    CHECK(cls.size() == 2);
    auto k8 = f8(true, true);
    total = 0;
    for (const auto& c : conjugacy_classes(k8)) total += c.size();
    CHECK(total == 8);
}

TEST_CASE("W certificates for worked polynomials") {
    auto h = hq();
    auto cert = is_wedderburn(poly(h, "t^2 + 1"));
    CHECK(cert.verdict == Verdict::IsW);
    CHECK(cert.roots == els(h, {"i", "-i"}));
    CHECK(verify_certificate(cert));

    cert = is_wedderburn(poly(h, "t - [j]") * poly(h, "t - [i]"));
    CHECK(cert.verdict == Verdict::NotW);
    CHECK(cert.zero_set_polynomial == poly(h, "t - [i]"));
    CHECK(cert.roots == els(h, {"i"}));
    CHECK(verify_certificate(cert));

    auto u = qu();
    cert = is_wedderburn(poly(u, "t - [u]") * poly(u, "t - [u]"));
    CHECK(cert.verdict == Verdict::IsW);
    auto roots = cert.roots;
    std::sort(roots.begin(), roots.end());
    auto expected = els(u, {"u", "u + 1/u"});
    std::sort(expected.begin(), expected.end());
    CHECK(roots == expected);
    CHECK(evaluate(cert.polynomial, el(u, "u+1/u")).is_zero());
    CHECK(verify_certificate(cert));

    auto r = q();
    cert = is_wedderburn(poly(r, "t^2 + 1"));
    CHECK(cert.verdict == Verdict::NotW);
    CHECK(cert.zero_set_polynomial == poly(r, "1"));
    cert = is_wedderburn(poly(r, "t^2 - 3*t + 2"));
    CHECK(cert.verdict == Verdict::IsW);

    CHECK_THROWS_AS(is_wedderburn(poly(h, "2*t + 1")), Error);

    // Nothing in the default domain solves t^2 - x over Q(x).
    auto plain = RingContext::rational_functions('x', Endomorphism::identity(), Derivation::zero());
    cert = is_wedderburn(poly(plain, "t^2 - [x]"));
    CHECK(cert.verdict == Verdict::NotSplit);
}

TEST_CASE("central quadratics of non-central quaternions are W") {
    auto h = hq();
    Rng rng(5);
    for (int n = 0; n < 25; ++n) {
        Element a = random_element(*h, rng);
        const Quaternion& qa = a.as<Quaternion>();
        if (qa.is_real()) continue;
        SkewPolynomial f(h, {Element(Quaternion(qa.norm())), Element(Quaternion(-qa.trace())), h->one()});
        auto cert = is_wedderburn(f);
        CHECK(cert.verdict == Verdict::IsW);
        CHECK(verify_certificate(cert));
    }
}

TEST_CASE("inner derivations on quaternions") {
    auto h = hq();
    auto hd = RingContext::quaternions(Derivation::inner(el(h, "j")));
    Rng rng(9);
    for (int n = 0; n < 10; ++n) {
        auto a = random_element(*hd, rng), b = random_element(*hd, rng);
        auto f = SkewPolynomial::linear(hd, a) * SkewPolynomial::linear(hd, b);
        auto cert = is_wedderburn(f);
        CHECK(verify_certificate(cert));
        CHECK(cert.verdict != Verdict::Undecided);
        CHECK(evaluate(cert.zero_set_polynomial, b).is_zero());
        CHECK((cert.verdict == Verdict::IsW) == diagonalization_check(f, cert.verdict == Verdict::IsW
                                                                             ? cert.roots
                                                                             : std::vector<Element>{b, b}));
    }
}

TEST_CASE("splitting") {
    auto h = hq();
    auto s = split(poly(h, "t^2 + 1"));
    REQUIRE(s.split);
    CHECK(s.roots == els(h, {"i", "-i"}));
    CHECK(SkewPolynomial::linear(h, s.roots[1]) * SkewPolynomial::linear(h, s.roots[0]) == poly(h, "t^2 + 1"));

    s = split(poly(q(), "t^2 + 1"));
    CHECK_FALSE(s.split);
    CHECK_FALSE(s.reason.empty());

    auto k = f4();
    s = split(poly(k, "t^2 + 1"));
    REQUIRE(s.split);
    CHECK(s.roots == els(k, {"1", "1"}));

    Rng rng(3);
    for (int n = 0; n < 10; ++n) {
        SkewPolynomial f = SkewPolynomial::one(h);
        for (int d = 0; d < 3; ++d) f = SkewPolynomial::linear(h, random_element(*h, rng)) * f;
        s = split(f);
        REQUIRE(s.split);
        SkewPolynomial back = SkewPolynomial::one(h);
        for (const auto& c : s.roots) back = SkewPolynomial::linear(h, c) * back;
        CHECK(back == f);
    }
}

TEST_CASE("companion and Vandermonde matrices") {
    auto r = q();
    auto c = companion(poly(r, "t^2 + 1"));
    CHECK(c(0, 0).is_zero());
    CHECK(c(0, 1).is_one());
    CHECK(c(1, 0) == el(r, "-1"));
    CHECK(c(1, 1).is_zero());
    auto h = hq();
    auto v = vandermonde(h, els(h, {"i", "j"}));
    CHECK(v(0, 0).is_one());
    CHECK(v(0, 1).is_one());
    CHECK(v(1, 0) == el(h, "i"));
    CHECK(v(1, 1) == el(h, "j"));
    auto v1 = vandermonde(h, els(h, {"3+k"}));
    CHECK(v1.rows() == 1);
    CHECK(v1(0, 0).is_one());
    CHECK(v.to_string() == "[1, 1; i, j]");
}

TEST_CASE("diagonalization") {
    auto h = hq();
    CHECK(diagonalization_check(poly(h, "t^2 + 1"), els(h, {"i", "j"})));
    CHECK_FALSE(diagonalization_check(poly(h, "t - [j]") * poly(h, "t - [i]"), els(h, {"i", "i"})));
    auto k = f4();
    CHECK(diagonalization_check(poly(k, "t^2 + 1"), els(k, {"1", "w"})));
    CHECK_THROWS_AS(diagonalization_check(poly(k, "t^2 + 1"), els(k, {"1"})), Error);
    // a right root that is not a root fails the identity
    CHECK_FALSE(diagonalization_check(poly(h, "t^2 + 1"), els(h, {"i", "2j"})));
}

TEST_CASE("dual representations") {
    auto h = hq();
    auto d = dual_representation(h, els(h, {"i", "j"}));
    CHECK(d.polynomial == poly(h, "t^2 + 1"));
    CHECK(d.b == els(h, {"-j", "-i"}));
    CHECK(d.verified);
    d = dual_representation(h, els(h, {"1+k"}));
    CHECK(d.b == els(h, {"1+k"}));
    CHECK(d.verified);
    auto k = f4();
    d = dual_representation(k, els(k, {"1", "w"}));
    CHECK(d.b[1] == el(k, "1"));
    CHECK(d.b[0] == conjugate(*k, k->one(), el(k, "1-w")));
    CHECK(d.verified);
    try {
        dual_representation(h, els(h, {"i", "j", "k"}));
        FAIL("expected NOT_P_INDEPENDENT");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotPIndependent);
    }
    CHECK(right_lcm_linear(h, els(h, {"-j", "-i"})) == poly(h, "t^2 + 1"));
    auto left = std::vector<Element>{el(h, "i"), el(h, "-i"), el(h, "j")};
    CHECK(has_dual_right_representation(poly(h, "t^2 + 1"), &left));
}

TEST_CASE("factor theorem") {
    auto h = hq();
    auto r = factor_theorem_check(poly(h, "t^2 + 1"));
    CHECK(r.is_w == Check::True);
    CHECK(r.all_factors_w == Check::True);
    CHECK(r.quadratic_factors_w == Check::True);
    r = factor_theorem_check(poly(h, "t - [j]") * poly(h, "t - [i]"));
    CHECK(r.is_w == Check::False);
    CHECK(r.all_factors_w == Check::False);
    CHECK(r.quadratic_factors_w == Check::False);
    r = factor_theorem_check(poly(h, "t - [2+i]"));
    CHECK(r.is_w == Check::True);
    CHECK(r.all_factors_w == Check::True);
    CHECK(r.quadratic_factors_w == Check::True);
    CHECK(r.agree());
}

TEST_CASE("product theorem") {
    auto h = hq();
    auto r = product_theorem_check(poly(h, "t + [i]"), poly(h, "t - [i]"));
    CHECK(r.product_w == Check::True);
    CHECK(r.unit_in_sum == Check::True);
    CHECK(r.quadratics_w == Check::True);
    CHECK(r.image_contains == Check::Untested);
    CHECK(r.agree());
    r = product_theorem_check(poly(h, "t - [j]"), poly(h, "t - [i]"));
    CHECK(r.product_w == Check::False);
    CHECK(r.unit_in_sum == Check::False);
    CHECK(r.agree());
    auto k = f4();
    r = product_theorem_check(poly(k, "t - 1"), poly(k, "t - 1"));
    CHECK(r.product_w == Check::True);
    CHECK(r.image_contains == Check::True);
    CHECK(r.agree());
}

TEST_CASE("rank theorems on quaternion instances") {
    auto h = hq();
    auto domain = els(h, {"i", "-i", "j", "-j", "k", "-k"});
    auto r = rank_union_check(AlgebraicSet(h, els(h, {"i"})), AlgebraicSet(h, els(h, {"j", "k"})), &domain);
    CHECK(r.lhs == 3);
    CHECK(r.rhs == 3);
    r = rank_union_check(AlgebraicSet(h, els(h, {"i"})), AlgebraicSet(h, els(h, {"j", "k"})));
    CHECK(r.lhs == r.rhs);

    r = phi_rank_check(poly(h, "t - [i]"), AlgebraicSet(h, els(h, {"j", "k"})), &domain);
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 1);
    CHECK(phi_transform(poly(h, "t - [i]"), el(h, "j")) == el(h, "-i"));
    CHECK(phi_transform(poly(h, "t - [i]"), el(h, "k")) == el(h, "-i"));
    try {
        phi_rank_check(poly(h, "t - [i]"), AlgebraicSet(h, els(h, {"i", "j"})), &domain);
        FAIL("expected DISJOINTNESS_VIOLATED");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::DisjointnessViolated);
    }

    r = product_rank_bound(poly(h, "t - [j]"), poly(h, "t - [i]"));
    CHECK(r.lhs == 1);
    CHECK(r.rhs == 2);
    r = rank_union_check(AlgebraicSet(qu(), els(qu(), {"u"})), AlgebraicSet(qu(), els(qu(), {"1"})));
    CHECK(r.lhs == 2);
    CHECK(r.rhs == 2);
}

TEST_CASE("unit in Rg + hR") {
    auto h = hq();
    CHECK(unit_in_sum(poly(h, "t + [i]"), poly(h, "t - [i]")));
    CHECK_FALSE(unit_in_sum(poly(h, "t - [i]"), poly(h, "t - [i]")));
    CHECK(unit_in_sum(poly(h, "3"), poly(h, "t")));
    auto k = f4();
    CHECK_FALSE(unit_in_sum(poly(k, "t"), poly(k, "t^2")));
}

TEST_CASE("four W verdicts agree over F4") {
    for (bool inner : {false, true}) {
        auto k = f4(true, inner);
        for (const auto& f : all_monic(k, 3)) {
            auto cert = is_wedderburn(f);
            REQUIRE(verify_certificate(cert));
            const bool w = cert.verdict == Verdict::IsW;
            CHECK(cert.verdict != Verdict::Undecided);
            CHECK(cert.verdict != Verdict::NotSplit);
            auto roots = right_roots(f);
            CHECK((minimal_polynomial(k, roots).rank() == f.degree().value()) == w);
            auto ft = factor_theorem_check(f);
            CHECK(ft.agree());
            CHECK((ft.quadratic_factors_w == Check::True) == w);
            const std::size_t esum = exponential_dimension_sum(f);
            CHECK(esum <= f.degree().value());
            CHECK((esum == f.degree().value()) == w);
            CHECK(has_dual_right_representation(f) == w);
            if (w && f.degree() > 0) {
                CHECK(diagonalization_check(f, cert.roots));
                CHECK(dual_representation(k, cert.roots).verified);
            }
        }
    }
}

TEST_CASE("exponential dimension sum over quaternions") {
    auto h = hq();
    Rng rng(11);
    for (int n = 0; n < 15; ++n) {
        auto f = random_polynomial(h, rng, 1 + n % 3, true);
        auto cert = is_wedderburn(f);
        CHECK(verify_certificate(cert));
        const std::size_t esum = exponential_dimension_sum(f);
        CHECK(esum <= f.degree().value());
        CHECK((esum == f.degree().value()) == (cert.verdict == Verdict::IsW));
    }
}
