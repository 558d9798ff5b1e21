#include "ore/worked_examples.hpp"

#include "ore/evaluation.hpp"
#include "ore/lattice.hpp"
#include "ore/metro.hpp"
#include "ore/wedderburn.hpp"

#include <algorithm>
#include <exception>
#include <functional>

namespace ore {

namespace {

std::string join(const ContextPtr& ctx, const std::vector<Element>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + ctx->format(v[i]);
    return s + "}";
}

void run(std::vector<WorkedExample>& out, const std::string& name, const std::function<bool(std::string&)>& body) {
    WorkedExample ex{name, false, {}};
    try {
        ex.passed = body(ex.detail);
    } catch (const std::exception& e) {
        ex.detail = std::string("exception: ") + e.what();
    }
    out.push_back(std::move(ex));
}

}  // namespace

std::vector<WorkedExample> worked_examples() {
    std::vector<WorkedExample> out;
    const ContextPtr h = RingContext::quaternions();
    const Element i = h->parse("i"), j = h->parse("j"), k = h->parse("k");
    const SkewPolynomial f = SkewPolynomial::parse(h, "t^2 + 1");
    const SkewPolynomial g = SkewPolynomial::linear(h, j) * SkewPolynomial::linear(h, i);

    run(out, "t^2 + 1 is a W-polynomial over HQ", [&](std::string& d) {
        WCertificate c = is_wedderburn(f);
        d = to_string(c.verdict) + ", roots " + join(h, c.roots);
        return c.verdict == WCertificate::Verdict::IsW && verify_certificate(c);
    });
    run(out, "(t - j)(t - i) is not a W-polynomial over HQ and V = {i}", [&](std::string& d) {
        WCertificate c = is_wedderburn(g);
        d = to_string(c.verdict) + ", f_V = " + c.zero_set_polynomial.to_string() + ", roots " + join(h, c.roots);
        return c.verdict == WCertificate::Verdict::NotW && verify_certificate(c) &&
               c.zero_set_polynomial == SkewPolynomial::linear(h, i) && c.roots == std::vector<Element>{i};
    });
    run(out, "Phi of a constant c is conjugation by c; Phi_1 is the identity", [&](std::string& d) {
        const Element c = h->parse("2-j+k"), x = h->parse("1+i-3k");
        auto by_c = phi_transform(SkewPolynomial::constant(h, c), x);
        auto by_1 = phi_transform(SkewPolynomial::one(h), x);
        d = "Phi_c(x) = " + h->format(*by_c);
        return by_c && *by_c == conjugate(*h, x, c) && by_1 && *by_1 == x;
    });
    run(out, "Phi_t is S on nonzero elements when D = 0", [&](std::string& d) {
        const ContextPtr f4 = RingContext::finite_field(RingContext::f4(), Endomorphism::frobenius(), Derivation::zero());
        const SkewPolynomial t = SkewPolynomial::monomial(f4, f4->one(), 1);
        std::size_t checked = 0;
        for (const auto& a : f4->enumerate()) {
            if (a.is_zero()) continue;
            auto y = phi_transform(t, a);
            if (!y || *y != f4->apply_S(a)) return false;
            ++checked;
        }
        d = std::to_string(checked) + " elements of F4 with Frobenius";
        return checked == 3;
    });
    run(out, "rgcd(t - i, t^2 + 1) = t - i while the intersection {i} n {j, k} has minimal polynomial 1",
        [&](std::string& d) {
            auto rep = intersection_minpoly({AlgebraicSet(h, {i}), AlgebraicSet(h, {j, k})});
            d = "rgcd " + rep.rgcd.to_string() + ", intersection " + rep.intersection_polynomial.to_string() +
                ", {j, k} full: " + (rep.not_full.empty() ? "yes" : "no");
            return rep.rgcd == SkewPolynomial::linear(h, i) && rep.intersection_polynomial == SkewPolynomial::one(h) &&
                   rep.not_full == std::vector<std::size_t>{1};
        });
    run(out, "i x - x i = j is solvable and (t - i^j)(t - i) = t^2 + 1 is W", [&](std::string& d) {
        auto rep = metro_wedderburn_equivalence(h, MetroProblem(i, i, j));
        d = "x = " + h->format(*rep.solution.x) + ", quadratic " + rep.quadratic.to_string();
        return rep.agree() && rep.quadratic == f && *rep.quadratic_is_w;
    });
    run(out, "i x - x i = 1 is unsolvable and (t - i)^2 is not W", [&](std::string& d) {
        auto rep = metro_wedderburn_equivalence(h, MetroProblem(i, i, h->one()));
        d = to_string(rep.solution.status) + ", roots " + join(h, rep.quadratic_roots);
        return rep.agree() && rep.solution.status == MetroSolutionReport::Status::NoSolution && !*rep.quadratic_is_w;
    });
    const ContextPtr qu = RingContext::rational_functions('u', Endomorphism::identity(), Derivation::formal_derivative());
    const Element u = qu->parse("u");
    run(out, "(t - u)^2 is W over Q(u) with d/du, roots u and u + 1/u", [&](std::string& d) {
        WCertificate c = is_wedderburn(SkewPolynomial::linear(qu, u) * SkewPolynomial::linear(qu, u));
        auto roots = c.roots;
        std::sort(roots.begin(), roots.end());
        std::vector<Element> expected{u, qu->parse("u + 1/u")};
        std::sort(expected.begin(), expected.end());
        d = to_string(c.verdict) + ", roots " + join(qu, c.roots);
        return c.verdict == WCertificate::Verdict::IsW && verify_certificate(c) && roots == expected;
    });
    run(out, "u x - x u - x' = 1 over Q(u) has the solution x = -u", [&](std::string& d) {
        auto rep = metro_wedderburn_equivalence(qu, MetroProblem(u, u, qu->one()));
        d = "x = " + qu->format(*rep.solution.x) + ", second root " + qu->format(*rep.second_root);
        return *rep.solution.x == -u && rep.agree() && *rep.second_root == qu->parse("u + 1/u");
    });
    return out;
}

}  // namespace ore
