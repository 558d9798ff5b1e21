#include "ore/sweeps.hpp"

#include "ore/algebraic_set.hpp"
#include "ore/evaluation.hpp"
#include "ore/lattice.hpp"
#include "ore/metro.hpp"
#include "ore/random.hpp"
#include "ore/wedderburn.hpp"

#include <algorithm>
#include <exception>

namespace ore {

SweepResult run_sweep(std::size_t count, Execution mode, const Trial& trial) {
    std::vector<std::optional<std::string>> outcome(count);
    std::vector<char> special(count, 0);
    auto body = [&](std::size_t i) {
        bool s = false;
        try {
            outcome[i] = trial(i, s);
        } catch (const std::exception& e) {
            outcome[i] = std::string("exception: ") + e.what();
        }
        special[i] = s;
    };
    if (mode == Execution::Serial) {
        for (std::size_t i = 0; i < count; ++i) body(i);
    } else {
        const long n = static_cast<long>(count);
#pragma omp parallel for schedule(dynamic)
        for (long i = 0; i < n; ++i) body(static_cast<std::size_t>(i));
    }
    SweepResult r;
    r.trials = count;
    for (std::size_t i = 0; i < count; ++i) {
        if (special[i]) ++r.special;
        if (!outcome[i]) continue;
        if (r.failures++ == 0) r.first_failure = "trial " + std::to_string(i) + ": " + *outcome[i];
    }
    return r;
}

std::vector<NamedContext> standard_backends() {
    const auto& f4 = RingContext::f4();
    const auto& f8 = RingContext::f8();
    auto w4 = *RingContext::finite_field(f4, Endomorphism::identity(), Derivation::zero())->symbol("w");
    auto hq = RingContext::quaternions();
    return {
        {"Q", RingContext::rationals()},
        {"F4[S=frob,D=inner(w)]", RingContext::finite_field(f4, Endomorphism::frobenius(), Derivation::inner(w4))},
        {"F8[S=frob,D=0]", RingContext::finite_field(f8, Endomorphism::frobenius(), Derivation::zero())},
        {"Qx[S=x->x^2,D=0]", RingContext::rational_functions('x', Endomorphism::square_variable(), Derivation::zero())},
        {"Qu[S=id,D=d/du]", RingContext::rational_functions('u', Endomorphism::identity(), Derivation::formal_derivative())},
        {"HQ[D=0]", hq},
        {"HQ[D=inner(i)]", RingContext::quaternions(Derivation::inner(*hq->symbol("i")))},
    };
}

std::vector<SkewPolynomial> all_monic_polynomials(const ContextPtr& ctx, std::size_t max_degree) {
    const auto all = ctx->enumerate();
    std::vector<SkewPolynomial> out;
    std::vector<std::vector<Element>> level{{}};
    for (std::size_t d = 0; d <= max_degree; ++d) {
        for (auto c : level) {
            c.push_back(ctx->one());
            out.emplace_back(ctx, std::move(c));
        }
        if (d == max_degree) break;
        std::vector<std::vector<Element>> next;
        next.reserve(level.size() * all.size());
        for (const auto& c : level)
            for (const auto& e : all) {
                auto n = c;
                n.push_back(e);
                next.push_back(std::move(n));
            }
        level = std::move(next);
    }
    return out;
}

namespace {

std::size_t random_degree(Rng& rng, std::size_t max) {
    return std::uniform_int_distribution<std::size_t>(0, max)(rng);
}

std::string show(const SkewPolynomial& f) { return f.to_string(); }

}  // namespace

SweepResult sweep_remainder(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode) {
    return run_sweep(count, mode, [&](std::size_t i, bool&) -> std::optional<std::string> {
        Rng rng = trial_rng(seed, i);
        SkewPolynomial f = random_polynomial_upto(ctx, rng, 3);
        Element a = random_element(*ctx, rng);
        const SkewPolynomial lin = SkewPolynomial::linear(ctx, a);
        DivResult d = right_divmod(f, lin);
        const Element fa = evaluate(f, a);
        if (d.remainder != SkewPolynomial::constant(ctx, fa)) return "remainder differs from f(a) for " + show(f);
        if (d.quotient * lin + SkewPolynomial::constant(ctx, fa) != f) return "q(t-a) + f(a) != f for " + show(f);
        return std::nullopt;
    });
}

SweepResult sweep_product_formula(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode) {
    return run_sweep(count, mode, [&](std::size_t i, bool& special) -> std::optional<std::string> {
        Rng rng = trial_rng(seed, i);
        SkewPolynomial g = random_polynomial_upto(ctx, rng, 2);
        Element a = random_element(*ctx, rng);
        SkewPolynomial h = random_polynomial_upto(ctx, rng, i % 2 ? 1 : 2);
        if (i % 2) h = h * SkewPolynomial::linear(ctx, a);
        const Element ha = evaluate(h, a);
        special = ha.is_zero();
        const Element lhs = evaluate(g * h, a);
        const Element rhs = ha.is_zero() ? ctx->zero() : evaluate(g, conjugate(*ctx, a, ha)) * ha;
        if (lhs != rhs) return "product formula fails for g = " + show(g) + ", h = " + show(h);
        return std::nullopt;
    });
}

SweepResult sweep_conjugation(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode) {
    return run_sweep(count, mode, [&](std::size_t i, bool&) -> std::optional<std::string> {
        Rng rng = trial_rng(seed, i);
        Element a = random_element(*ctx, rng);
        Element c = random_element(*ctx, rng, true);
        Element d = random_element(*ctx, rng, true);
        if (conjugate(*ctx, conjugate(*ctx, a, c), d) != conjugate(*ctx, a, d * c))
            return "(a^c)^d != a^(dc) for a = " + ctx->format(a);
        return std::nullopt;
    });
}

SweepResult sweep_degree_identity(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode) {
    return run_sweep(count, mode, [&](std::size_t i, bool&) -> std::optional<std::string> {
        Rng rng = trial_rng(seed, i);
        SkewPolynomial f = random_polynomial(ctx, rng, random_degree(rng, 3));
        SkewPolynomial g = random_polynomial(ctx, rng, random_degree(rng, 2));
        GcdLcm gl = rgcd_llcm(f, g);
        const std::size_t lhs = f.degree().value() + g.degree().value();
        const std::size_t rhs = gl.rgcd.degree().value() + gl.llcm.degree().value();
        if (lhs != rhs) return "degrees " + std::to_string(lhs) + " != " + std::to_string(rhs) + " for " + show(f) + ", " + show(g);
        if (!right_divides(gl.rgcd, f) || !right_divides(gl.rgcd, g)) return "rgcd does not right-divide both";
        if (!right_divides(f, gl.llcm) || !right_divides(g, gl.llcm)) return "llcm is not a common left multiple";
        return std::nullopt;
    });
}

SweepResult sweep_w_verdicts(const ContextPtr& ctx, std::size_t max_degree, Execution mode) {
    const auto polys = all_monic_polynomials(ctx, max_degree);
    return run_sweep(polys.size(), mode, [&](std::size_t i, bool& special) -> std::optional<std::string> {
        const SkewPolynomial& f = polys[i];
        const std::size_t n = f.degree().value();
        const auto roots = right_roots(f);
        const MinimalPolynomialResult m = minimal_polynomial(ctx, roots);
        const bool by_rank = m.rank() == n;
        const bool by_quadratics = factor_theorem_check(f).quadratic_factors_w == Check::True;
        const bool by_exponents = exponential_dimension_sum(f) == n;
        const bool by_dual = has_dual_right_representation(f);
        special = by_rank;
        if (by_rank != by_quadratics || by_rank != by_exponents || by_rank != by_dual)
            return show(f) + ": rank " + std::to_string(by_rank) + ", quadratic factors " + std::to_string(by_quadratics) +
                   ", exponents " + std::to_string(by_exponents) + ", dual " + std::to_string(by_dual);
        WCertificate cert = is_wedderburn(f);
        if (!verify_certificate(cert) || (cert.verdict == WCertificate::Verdict::IsW) != by_rank)
            return show(f) + ": certificate disagrees";
        if (by_rank && n > 0) {
            if (!dual_representation(ctx, m.basis).verified) return show(f) + ": constructed dual representation fails";
            if (!diagonalization_check(f, m.basis)) return show(f) + ": diagonalization fails";
        }
        return std::nullopt;
    });
}

SweepResult sweep_rank_union(const ContextPtr& ctx, Execution mode) {
    const SubsetTable table(ctx);
    const std::size_t subsets = std::size_t(table.universe()) + 1;
    return run_sweep(subsets * subsets, mode, [&](std::size_t i, bool&) -> std::optional<std::string> {
        AlgebraicSet delta(ctx, table.elements_of(static_cast<Mask>(i / subsets)));
        AlgebraicSet gamma(ctx, table.elements_of(static_cast<Mask>(i % subsets)));
        RankSides r = rank_union_check(delta, gamma);
        if (r.lhs != r.rhs) return "union formula " + std::to_string(r.lhs) + " != " + std::to_string(r.rhs);
        return std::nullopt;
    });
}

SweepResult sweep_phi_rank(const ContextPtr& ctx, std::size_t max_degree, Execution mode) {
    const SubsetTable table(ctx);
    std::vector<std::pair<SkewPolynomial, Mask>> cases;
    for (const auto& h : all_monic_polynomials(ctx, max_degree)) {
        const Mask outside = table.universe() & ~table.mask_of(right_roots(h));
        for (Mask d = outside;; d = (d - 1) & outside) {
            cases.emplace_back(h, d);
            if (d == 0) break;
        }
    }
    return run_sweep(cases.size(), mode, [&](std::size_t i, bool&) -> std::optional<std::string> {
        const auto& [h, d] = cases[i];
        RankSides r = phi_rank_check(h, AlgebraicSet(ctx, table.elements_of(d)));
        if (r.lhs != r.rhs) return "Phi rank " + std::to_string(r.lhs) + " != " + std::to_string(r.rhs) + " for h = " + show(h);
        return std::nullopt;
    });
}

SweepResult sweep_product_rank(const ContextPtr& ctx, std::size_t max_degree, Execution mode) {
    const auto polys = all_monic_polynomials(ctx, max_degree);
    const std::size_t n = polys.size();
    return run_sweep(n * n, mode, [&](std::size_t i, bool&) -> std::optional<std::string> {
        const auto& g = polys[i / n];
        const auto& h = polys[i % n];
        RankSides r = product_rank_bound(g, h);
        if (r.lhs > r.rhs) return "rk V(gh) > rk V(g) + rk V(h) for " + show(g) + ", " + show(h);
        return std::nullopt;
    });
}

SweepResult sweep_metro_exhaustive(const ContextPtr& ctx, Execution mode) {
    const auto all = ctx->enumerate();
    const std::size_t q = all.size();
    return run_sweep(q * q * (q - 1), mode, [&](std::size_t i, bool& special) -> std::optional<std::string> {
        const Element& a = all[i / (q * (q - 1))];
        const Element& b = all[(i / (q - 1)) % q];
        const Element& c = all[1 + i % (q - 1)];
        auto rep = metro_wedderburn_equivalence(ctx, MetroProblem(a, b, c));
        special = rep.solution.status == MetroSolutionReport::Status::Solution;
        if (!rep.agree()) return "equivalence fails for a = " + ctx->format(a) + ", b = " + ctx->format(b) + ", c = " + ctx->format(c);
        return std::nullopt;
    });
}

SweepResult sweep_metro_random(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode) {
    return run_sweep(count, mode, [&](std::size_t i, bool& special) -> std::optional<std::string> {
        Rng rng = trial_rng(seed, i);
        Element a = random_element(*ctx, rng);
        // Every third trial takes b in the class of a so that both outcomes occur.
        Element b = i % 3 == 0 ? conjugate(*ctx, a, random_element(*ctx, rng, true)) : random_element(*ctx, rng);
        Element c = random_element(*ctx, rng, true);
        auto rep = metro_wedderburn_equivalence(ctx, MetroProblem(a, b, c));
        special = rep.solution.status == MetroSolutionReport::Status::Solution;
        if (!rep.agree()) return "equivalence fails for a = " + ctx->format(a) + ", b = " + ctx->format(b) + ", c = " + ctx->format(c);
        return std::nullopt;
    });
}

SweepResult sweep_class_uniqueness(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode) {
    return run_sweep(count, mode, [&](std::size_t i, bool&) -> std::optional<std::string> {
        Rng rng = trial_rng(seed, i);
        Element b = random_element(*ctx, rng);
        const SkewPolynomial cls = class_minimal_polynomial(ctx, b);
        Element a = random_element(*ctx, rng);
        while (evaluate(cls, a).is_zero() || are_conjugate(*ctx, b, a)) a = random_element(*ctx, rng);
        Element c = random_element(*ctx, rng, true);
        auto rep = class_algebraic_uniqueness(ctx, b, a, c);
        if (!rep.holds()) return "no unique solution for b = " + ctx->format(b) + ", a = " + ctx->format(a);
        return std::nullopt;
    });
}

SweepResult sweep_left_root_cosets(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, bool scaled,
                                   Execution mode) {
    const auto base = default_search_domain(ctx);
    const Element var = *ctx->symbol(std::string(1, ctx->variable()));
    return run_sweep(count, mode, [&](std::size_t i, bool& special) -> std::optional<std::string> {
        Rng rng = trial_rng(seed, i);
        Element a = random_element(*ctx, rng), b = random_element(*ctx, rng);
        SkewPolynomial f = SkewPolynomial::linear(ctx, a) * SkewPolynomial::linear(ctx, b);
        if (scaled) f = f.scale_left(var);
        std::vector<Element> domain = base;
        for (const auto& e : base) {
            domain.push_back(a + ctx->apply_S(e));
            domain.push_back(b + ctx->apply_S(e));
            domain.push_back(a + e);
        }
        domain.push_back(b);
        std::sort(domain.begin(), domain.end());
        domain.erase(std::unique(domain.begin(), domain.end()), domain.end());
        const auto roots = left_roots(f, &domain);
        special = roots.size() >= 2;
        CosetReport rep = coset_check(f, roots);
        if (!rep.consistent()) return "left roots of " + show(f) + " are " + to_string(rep.pattern);
        if (!scaled && rep.pattern != CosetReport::Pattern::SingleCoset) return "monic " + show(f) + " has separated left roots";
        return std::nullopt;
    });
}

SweepResult sweep_central_quadratics(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode) {
    return run_sweep(count, mode, [&](std::size_t i, bool&) -> std::optional<std::string> {
        Rng rng = trial_rng(seed, i);
        Element a = random_element(*ctx, rng);
        while (a.as<Quaternion>().is_real()) a = random_element(*ctx, rng);
        const Quaternion& q = a.as<Quaternion>();
        SkewPolynomial f(ctx, {Element(Quaternion(q.norm())), Element(Quaternion(-q.trace())), ctx->one()});
        WCertificate cert = is_wedderburn(f);
        if (cert.verdict != WCertificate::Verdict::IsW || !verify_certificate(cert))
            return show(f) + " is not certified W";
        return std::nullopt;
    });
}

}  // namespace ore
