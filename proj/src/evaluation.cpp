#include "ore/evaluation.hpp"

#include "ore/base_linear.hpp"
#include "ore/error.hpp"

#include <algorithm>

namespace ore {

PowerFunctionTable power_function(const RingContext& ctx, const Element& a, std::size_t n) {
    PowerFunctionTable table{a, {}};
    table.values.reserve(n + 1);
    table.values.push_back(ctx.one());
    const bool has_d = !ctx.derivation_is_zero();
    for (std::size_t i = 1; i <= n; ++i) {
        const Element& prev = table.values.back();
        Element next = ctx.apply_S(prev) * a;
        if (has_d) next += ctx.apply_D(prev);
        table.values.push_back(std::move(next));
    }
    return table;
}

Element evaluate(const SkewPolynomial& f, const Element& a) {
    const RingContext& ctx = f.ring();
    if (!ctx.contains(a)) throw Error(ErrorCode::ContextMismatch, "evaluation point is not in " + ctx.name());
    if (f.is_zero()) return ctx.zero();
    auto table = power_function(ctx, a, f.degree().value());
    Element sum = ctx.zero();
    for (std::size_t i = 0; i < f.coeffs().size(); ++i)
        if (!f.coeffs()[i].is_zero()) sum += f.coeffs()[i] * table.values[i];
    return sum;
}

Element conjugate(const RingContext& ctx, const Element& a, const Element& c) {
    if (c.is_zero()) throw Error(ErrorCode::ZeroConjugator, "conjugation by zero");
    Element c_inv = c.inverse();
    Element r = ctx.apply_S(c) * a * c_inv;
    if (!ctx.derivation_is_zero()) r += ctx.apply_D(c) * c_inv;
    return r;
}

std::optional<Element> conjugator(const RingContext& ctx, const Element& a, const Element& b) {
    if (ctx.is_classical() && ctx.capabilities().commutative) {
        if (a == b) return ctx.one();
        return std::nullopt;
    }
    if (ctx.capabilities().central_dimension == 0)
        throw Error(ErrorCode::CapabilityMissing, "conjugacy is not decidable on " + ctx.name());
    auto kernel = kernel_of_map(ctx, [&](const Element& c) {
        return ctx.apply_S(c) * a + ctx.apply_D(c) - b * c;
    });
    if (kernel.empty()) return std::nullopt;
    return kernel.front();
}

bool are_conjugate(const RingContext& ctx, const Element& a, const Element& b) {
    return conjugator(ctx, a, b).has_value();
}

std::optional<Element> phi_transform(const SkewPolynomial& h, const Element& x) {
    Element v = evaluate(h, x);
    if (v.is_zero()) return std::nullopt;
    return conjugate(h.ring(), x, v);
}

namespace {

std::vector<Element> search_space(const RingContext& ctx, const std::vector<Element>* domain) {
    if (domain) {
        for (const auto& d : *domain)
            if (!ctx.contains(d)) throw Error(ErrorCode::ContextMismatch, "domain element is not in " + ctx.name());
        return *domain;
    }
    if (!ctx.capabilities().finitely_enumerable)
        throw Error(ErrorCode::DomainRequired, "a search domain is required on " + ctx.name());
    return ctx.enumerate();
}

void sort_unique(std::vector<Element>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<Element> right_roots(const SkewPolynomial& f, const std::vector<Element>* domain) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
    std::vector<Element> out;
    for (const auto& a : search_space(f.ring(), domain))
        if (evaluate(f, a).is_zero()) out.push_back(a);
    sort_unique(out);
    return out;
}

std::vector<Element> left_roots(const SkewPolynomial& f, const std::vector<Element>* domain) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "roots of the zero polynomial");
    const ContextPtr& ctx = f.context();
    if (!ctx->capabilities().s_preimage_decidable)
        throw Error(ErrorCode::CapabilityMissing, "left roots need decidable S-preimages on " + ctx->name());
    std::vector<Element> out;
    for (const auto& b : search_space(*ctx, domain))
        if (left_divides(SkewPolynomial::linear(ctx, b), f)) out.push_back(b);
    sort_unique(out);
    return out;
}

bool same_s_coset(const RingContext& ctx, const Element& a, const Element& b) {
    return ctx.s_preimage(a - b).has_value();
}

CosetReport coset_check(const SkewPolynomial& f, const std::vector<Element>& sample) {
    const RingContext& ctx = f.ring();
    CosetReport report;
    std::optional<std::pair<Element, Element>> together, apart;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        for (std::size_t j = i + 1; j < sample.size(); ++j) {
            if (same_s_coset(ctx, sample[i], sample[j])) {
                if (!together) together.emplace(sample[i], sample[j]);
            } else if (!apart) {
                apart.emplace(sample[i], sample[j]);
            }
        }
    }
    if (together && apart) {
        report.pattern = CosetReport::Pattern::Mixed;
        report.witnesses = {*together, *apart};
    } else if (apart) {
        report.pattern = CosetReport::Pattern::PairwiseSeparated;
        report.witnesses = {*apart};
    }
    report.monic_violation = f.is_monic() && apart.has_value();
    return report;
}

std::string to_string(CosetReport::Pattern p) {
    switch (p) {
        case CosetReport::Pattern::SingleCoset: return "single-coset";
        case CosetReport::Pattern::PairwiseSeparated: return "pairwise-separated";
        case CosetReport::Pattern::Mixed: return "mixed";
    }
    return "?";
}

}  // namespace ore
