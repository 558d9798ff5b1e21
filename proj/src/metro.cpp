#include "ore/metro.hpp"

#include "ore/base_linear.hpp"
#include "ore/error.hpp"
#include "ore/evaluation.hpp"
#include "ore/wedderburn.hpp"

#include <algorithm>

namespace ore {

MetroProblem::MetroProblem(Element a_, Element b_, Element c_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)) {
    if (c.is_zero()) throw Error(ErrorCode::ZeroC, "metro equation needs c != 0 (x = 0 solves c = 0)");
}

Element metro_lhs(const RingContext& ctx, const Element& a, const Element& b, const Element& x) {
    return a * x - ctx.apply_S(x) * b - ctx.apply_D(x);
}

std::string to_string(MetroSolutionReport::Status s) {
    switch (s) {
        case MetroSolutionReport::Status::Solution: return "SOLUTION";
        case MetroSolutionReport::Status::NoSolution: return "NO_SOLUTION";
        case MetroSolutionReport::Status::Undecided: return "UNDECIDED";
    }
    return "?";
}

std::string to_string(MetroSolutionReport::Uniqueness u) {
    switch (u) {
        case MetroSolutionReport::Uniqueness::Unique: return "UNIQUE";
        case MetroSolutionReport::Uniqueness::Multiple: return "MULTIPLE";
        case MetroSolutionReport::Uniqueness::Unknown: return "UNKNOWN";
    }
    return "?";
}

namespace {

using Status = MetroSolutionReport::Status;
using Uniqueness = MetroSolutionReport::Uniqueness;

MetroSolutionReport exhaustive(const RingContext& ctx, const MetroProblem& p) {
    MetroSolutionReport r;
    r.strategy = "exhaustive";
    std::vector<Element> found;
    for (const auto& x : ctx.enumerate()) {
        if (metro_lhs(ctx, p.a, p.b, x) == p.c) {
            found.push_back(x);
            if (found.size() == 2) break;
        }
    }
    if (found.empty()) {
        r.status = Status::NoSolution;
        return r;
    }
    r.status = Status::Solution;
    r.x = found[0];
    if (found.size() == 1) {
        r.uniqueness = Uniqueness::Unique;
    } else {
        r.uniqueness = Uniqueness::Multiple;
        r.other = found[1];
    }
    return r;
}

MetroSolutionReport linear_algebra(const RingContext& ctx, const MetroProblem& p) {
    MetroSolutionReport r;
    r.strategy = "linear-algebra";
    BaseMatrix m = matrix_of_map(ctx, [&](const Element& x) { return metro_lhs(ctx, p.a, p.b, x); });
    auto sol = m.solve(ctx.coordinates(p.c));
    if (!sol) {
        r.status = Status::NoSolution;
        return r;
    }
    r.status = Status::Solution;
    r.x = ctx.from_coordinates(*sol);
    auto kernel = m.kernel();
    if (kernel.empty()) {
        r.uniqueness = Uniqueness::Unique;
    } else {
        r.uniqueness = Uniqueness::Multiple;
        r.other = *r.x + ctx.from_coordinates(kernel.front());
    }
    return r;
}

QPoly lcm(const QPoly& a, const QPoly& b) {
    return divmod(a * b, gcd(a, b)).first.monic();
}

long rat_degree(const RatFunc& r) {
    return std::max(r.num().degree(), r.den().degree());
}

QPoly antiderivative(const QPoly& p) {
    std::vector<mpq_class> c(p.coeffs().size() + 1, mpq_class(0));
    for (std::size_t i = 0; i < p.coeffs().size(); ++i) c[i + 1] = p.coeffs()[i] / mpq_class(long(i + 1));
    return QPoly(std::move(c));
}

bool effectively_no_derivation(const RingContext& ctx) {
    // Inner derivations vanish on a commutative K with S = id.
    return ctx.derivation().kind != Derivation::Kind::FormalDerivative;
}

MetroSolutionReport rational_ansatz(const RingContext& ctx, const MetroProblem& p) {
    MetroSolutionReport r;
    r.strategy = "rational-ansatz";
    const RatFunc& a = p.a.as<RatFunc>();
    const RatFunc& b = p.b.as<RatFunc>();
    const RatFunc& c = p.c.as<RatFunc>();
    const RatFunc diff = a - b;
    const QPoly L = lcm(lcm(a.den(), b.den()), c.den());
    const std::size_t bound = metro_ansatz_degree_bound(ctx, p);
    QPoly Lm(1);
    for (unsigned m = 0; m <= 2; ++m, Lm = Lm * L) {
        std::vector<RatFunc> images;
        QPoly common = c.den();
        for (std::size_t k = 0; k <= bound; ++k) {
            RatFunc xk(QPoly::monomial(1, k), Lm);
            RatFunc img = diff * xk - xk.derivative();
            common = lcm(common, img.den());
            images.push_back(std::move(img));
        }
        auto scaled = [&](const RatFunc& v) { return v.num() * divmod(common, v.den()).first; };
        std::vector<QPoly> cols;
        long top = 0;
        for (const auto& img : images) {
            cols.push_back(scaled(img));
            top = std::max(top, cols.back().degree());
        }
        QPoly rhs = scaled(c);
        top = std::max(top, rhs.degree());
        BaseMatrix mat(BaseField(0), static_cast<std::size_t>(top + 1), cols.size());
        for (std::size_t k = 0; k < cols.size(); ++k)
            for (long e = 0; e <= top; ++e) mat(static_cast<std::size_t>(e), k) = cols[k].coeff(static_cast<std::size_t>(e));
        BaseVector target(static_cast<std::size_t>(top + 1));
        for (long e = 0; e <= top; ++e) target[static_cast<std::size_t>(e)] = rhs.coeff(static_cast<std::size_t>(e));
        auto sol = mat.solve(target);
        if (!sol) continue;
        Element x(RatFunc(QPoly(*sol), Lm));
        if (metro_lhs(ctx, p.a, p.b, x) != p.c) continue;
        r.status = Status::Solution;
        r.x = x;
        r.uniqueness = Uniqueness::Unknown;
        return r;
    }
    r.status = Status::Undecided;
    r.reason = "no solution P/L^m with L the lcm of the denominators, m <= 2, deg P <= " + std::to_string(bound);
    return r;
}

MetroSolutionReport commutative_identity(const RingContext& ctx, const MetroProblem& p) {
    MetroSolutionReport r;
    const bool same = p.a == p.b;
    if (effectively_no_derivation(ctx)) {
        r.strategy = "division";
        if (same) {
            r.status = Status::NoSolution;
            return r;
        }
        r.status = Status::Solution;
        r.x = p.c * (p.a - p.b).inverse();
        r.uniqueness = Uniqueness::Unique;
        return r;
    }
    if (!same) return rational_ansatz(ctx, p);
    r.strategy = "antiderivative";
    const RatFunc& c = p.c.as<RatFunc>();
    if (!c.is_polynomial()) {
        r.status = Status::Undecided;
        r.reason = "c is not a polynomial in " + std::string(1, ctx.variable());
        return r;
    }
    Element x0(RatFunc(-antiderivative(c.num())));
    r.status = Status::Solution;
    r.x = x0;
    r.uniqueness = Uniqueness::Multiple;
    r.other = x0 + ctx.one();
    return r;
}

}  // namespace

std::size_t metro_ansatz_degree_bound(const RingContext& ctx, const MetroProblem& p) {
    if (ctx.backend() != Backend::RationalFunctions) return 0;
    long d = std::max({rat_degree(p.a.as<RatFunc>()), rat_degree(p.b.as<RatFunc>()), rat_degree(p.c.as<RatFunc>())});
    return static_cast<std::size_t>(2 * std::max(d, 0L) + 4);
}

MetroSolutionReport solve_metro(const RingContext& ctx, const MetroProblem& p) {
    for (const Element* e : {&p.a, &p.b, &p.c})
        if (!ctx.contains(*e)) throw Error(ErrorCode::ContextMismatch, "metro data outside " + ctx.ring_tag());
    const auto& caps = ctx.capabilities();
    MetroSolutionReport r;
    if (caps.finitely_enumerable) {
        r = exhaustive(ctx, p);
    } else if (caps.central_dimension > 0) {
        r = linear_algebra(ctx, p);
    } else if (caps.commutative && ctx.endomorphism().is_identity()) {
        r = commutative_identity(ctx, p);
    } else {
        r.status = Status::Undecided;
        r.strategy = "none";
        r.reason = "no solving strategy for " + ctx.name();
    }
    if (r.x && metro_lhs(ctx, p.a, p.b, *r.x) != p.c)
        throw Error(ErrorCode::InvalidArgument, "metro solution failed substitution");
    if (r.other && metro_lhs(ctx, p.a, p.b, *r.other) != p.c)
        throw Error(ErrorCode::InvalidArgument, "second metro solution failed substitution");
    return r;
}

bool MetroEquivalenceReport::decided() const {
    return solution.status != MetroSolutionReport::Status::Undecided && quadratic_is_w.has_value();
}

bool MetroEquivalenceReport::agree() const {
    if (!decided()) return false;
    const bool solvable = solution.status == MetroSolutionReport::Status::Solution;
    if (solvable != *quadratic_is_w) return false;
    if (unit_in_sum && *unit_in_sum != solvable) return false;
    if (solvable && !second_root_verified) return false;
    return true;
}

MetroEquivalenceReport metro_wedderburn_equivalence(const ContextPtr& ctx, const MetroProblem& p,
                                                    const std::vector<Element>* domain) {
    const RingContext& k = *ctx;
    MetroEquivalenceReport rep{solve_metro(k, p), SkewPolynomial(ctx), std::nullopt, {}, std::nullopt,
                               std::nullopt, false};
    const Element bc = conjugate(k, p.b, p.c);
    const SkewPolynomial left = SkewPolynomial::linear(ctx, bc);
    const SkewPolynomial right = SkewPolynomial::linear(ctx, p.a);
    rep.quadratic = left * right;

    if (rep.solution.x) {
        Element cand = p.a - p.c * rep.solution.x->inverse();
        rep.second_root = cand;
        rep.second_root_verified = cand != p.a && evaluate(rep.quadratic, cand).is_zero();
    }

    const auto& caps = k.capabilities();
    if (caps.finitely_enumerable) {
        rep.quadratic_roots = right_roots(rep.quadratic);
        rep.quadratic_is_w = rep.quadratic_roots.size() >= 2;
    } else if (caps.central_dimension > 0) {
        WCertificate cert = is_wedderburn(rep.quadratic);
        rep.quadratic_roots = cert.roots;
        if (cert.verdict == WCertificate::Verdict::IsW) rep.quadratic_is_w = true;
        else if (cert.verdict == WCertificate::Verdict::NotW) rep.quadratic_is_w = false;
    } else {
        std::vector<Element> space = domain ? *domain : std::vector<Element>{};
        for (auto& e : default_search_domain(ctx)) space.push_back(std::move(e));
        space.push_back(p.a);
        if (rep.second_root) space.push_back(*rep.second_root);
        std::sort(space.begin(), space.end());
        space.erase(std::unique(space.begin(), space.end()), space.end());
        rep.quadratic_roots = right_roots(rep.quadratic, &space);
        if (rep.quadratic_roots.size() >= 2) rep.quadratic_is_w = true;
        else if (k.is_classical() && caps.commutative) rep.quadratic_is_w = bc != p.a;
    }
    if (caps.central_dimension > 0) rep.unit_in_sum = unit_in_sum(left, right);
    return rep;
}

SkewPolynomial class_minimal_polynomial(const ContextPtr& ctx, const Element& b) {
    const RingContext& k = *ctx;
    if (!k.contains(b)) throw Error(ErrorCode::ContextMismatch, "element outside " + k.ring_tag());
    if (k.capabilities().finitely_enumerable) {
        std::vector<Element> cls;
        for (const auto& c : k.enumerate())
            if (!c.is_zero()) cls.push_back(conjugate(k, b, c));
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        return minimal_polynomial(ctx, cls).polynomial;
    }
    if (k.is_classical() && k.capabilities().commutative) return SkewPolynomial::linear(ctx, b);
    if (k.backend() == Backend::Quaternions) {
        // Inner D: t - d is central in K[t; D] and the class of b is d plus
        // the ordinary class of b - d.
        Element d = k.derivation().d ? *k.derivation().d : k.zero();
        const Quaternion q = (b - d).as<Quaternion>();
        SkewPolynomial shifted = SkewPolynomial::linear(ctx, d);
        if (q.is_real()) return shifted - SkewPolynomial::constant(ctx, Element(q));
        return shifted * shifted - shifted.scale_left(Element(Quaternion(q.trace()))) +
               SkewPolynomial::constant(ctx, Element(Quaternion(q.norm())));
    }
    throw Error(ErrorCode::CapabilityMissing, "conjugacy class minimal polynomial not available on " + k.name());
}

ClassUniquenessReport class_algebraic_uniqueness(const ContextPtr& ctx, const Element& b, const Element& a,
                                                 const Element& c) {
    MetroProblem problem(a, b, c);
    SkewPolynomial f = class_minimal_polynomial(ctx, b);
    if (evaluate(f, a).is_zero() || are_conjugate(*ctx, b, a))
        throw Error(ErrorCode::AInClass, ctx->format(a) + " lies in the conjugacy class of " + ctx->format(b));
    ClassUniquenessReport rep{f, false, solve_metro(*ctx, problem)};
    SkewPolynomial quad = SkewPolynomial::linear(ctx, conjugate(*ctx, b, c)) * SkewPolynomial::linear(ctx, a);
    rep.quadratic_is_w = is_wedderburn(quad).verdict == WCertificate::Verdict::IsW;
    return rep;
}

}  // namespace ore
