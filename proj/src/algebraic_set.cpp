#include "ore/algebraic_set.hpp"

#include "ore/error.hpp"
#include "ore/evaluation.hpp"

#include <algorithm>

namespace ore {

AlgebraicSet::AlgebraicSet(ContextPtr ctx, std::vector<Element> elements)
    : ctx_(std::move(ctx)), elements_(std::move(elements)) {
    for (std::size_t i = 0; i < elements_.size(); ++i) {
        if (!ctx_->contains(elements_[i]))
            throw Error(ErrorCode::ContextMismatch, "set element is not in " + ctx_->name());
        for (std::size_t j = 0; j < i; ++j)
            if (elements_[i] == elements_[j])
                throw Error(ErrorCode::InvalidArgument, "repeated element " + ctx_->format(elements_[i]));
    }
}

bool AlgebraicSet::contains(const Element& a) const {
    return std::find(elements_.begin(), elements_.end(), a) != elements_.end();
}

MinimalPolynomialBuilder::MinimalPolynomialBuilder(ContextPtr ctx)
    : ctx_(std::move(ctx)), g_(SkewPolynomial::one(ctx_)) {}

bool MinimalPolynomialBuilder::add(const Element& a) {
    Element v = evaluate(g_, a);
    if (v.is_zero()) return false;
    g_ = SkewPolynomial::linear(ctx_, conjugate(*ctx_, a, v)) * g_;
    basis_.push_back(a);
    return true;
}

MinimalPolynomialResult minimal_polynomial(const AlgebraicSet& set) {
    MinimalPolynomialBuilder b(set.context());
    for (const auto& a : set.elements()) b.add(a);
    return b.result();
}

MinimalPolynomialResult minimal_polynomial(const ContextPtr& ctx, const std::vector<Element>& elements) {
    return minimal_polynomial(AlgebraicSet(ctx, elements));
}

std::size_t rank(const AlgebraicSet& set) { return minimal_polynomial(set).rank(); }

bool is_p_dependent(const Element& d, const AlgebraicSet& set) {
    return evaluate(minimal_polynomial(set).polynomial, d).is_zero();
}

bool is_p_independent(const AlgebraicSet& set) {
    const auto& e = set.elements();
    for (std::size_t i = 0; i < e.size(); ++i) {
        std::vector<Element> others;
        for (std::size_t j = 0; j < e.size(); ++j)
            if (j != i) others.push_back(e[j]);
        if (is_p_dependent(e[i], AlgebraicSet(set.context(), others))) return false;
    }
    return true;
}

std::vector<Element> closure(const AlgebraicSet& set, const std::vector<Element>* domain) {
    auto f = minimal_polynomial(set).polynomial;
    if (!domain && !set.context()->capabilities().finitely_enumerable)
        throw Error(ErrorCode::DomainRequired, "closure needs a search domain on " + set.context()->name());
    return right_roots(f, domain);
}

bool is_full(const AlgebraicSet& set, const std::vector<Element>* domain) {
    for (const auto& x : closure(set, domain))
        if (!set.contains(x)) return false;
    return true;
}

}  // namespace ore
