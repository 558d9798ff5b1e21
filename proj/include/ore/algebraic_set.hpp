#pragma once

#include "ore/skewpoly.hpp"

#include <vector>

namespace ore {

/// Finite set of pairwise distinct elements of one context, kept in the
/// order given (the order decides which P-basis is reported).
class AlgebraicSet {
public:
    /// Throws InvalidArgument on repeated elements, ContextMismatch on strangers.
    AlgebraicSet(ContextPtr ctx, std::vector<Element> elements);
    static AlgebraicSet empty(ContextPtr ctx) { return AlgebraicSet(std::move(ctx), {}); }

    const ContextPtr& context() const noexcept { return ctx_; }
    const std::vector<Element>& elements() const noexcept { return elements_; }
    std::size_t size() const noexcept { return elements_.size(); }
    bool contains(const Element& a) const;

private:
    ContextPtr ctx_;
    std::vector<Element> elements_;
};

struct MinimalPolynomialResult {
    SkewPolynomial polynomial;
    /// Generators that raised the degree, in input order.
    std::vector<Element> basis;
    std::size_t rank() const { return basis.size(); }
};

/// Grows f_Delta one element at a time: g := (t - a^{g(a)}) g whenever g(a) != 0.
class MinimalPolynomialBuilder {
public:
    explicit MinimalPolynomialBuilder(ContextPtr ctx);

    /// Returns true when `a` was P-independent of the elements added so far.
    bool add(const Element& a);
    const SkewPolynomial& polynomial() const noexcept { return g_; }
    const std::vector<Element>& basis() const noexcept { return basis_; }
    MinimalPolynomialResult result() const { return {g_, basis_}; }

private:
    ContextPtr ctx_;
    SkewPolynomial g_;
    std::vector<Element> basis_;
};

MinimalPolynomialResult minimal_polynomial(const AlgebraicSet& set);
MinimalPolynomialResult minimal_polynomial(const ContextPtr& ctx, const std::vector<Element>& elements);

std::size_t rank(const AlgebraicSet& set);

/// Whether d is killed by f_Delta.
bool is_p_dependent(const Element& d, const AlgebraicSet& set);

/// No generator is P-dependent on the others.
bool is_p_independent(const AlgebraicSet& set);

/// Elements of the search space (K when enumerable, else `domain`) that are
/// P-dependent on the set. Throws DomainRequired.
std::vector<Element> closure(const AlgebraicSet& set, const std::vector<Element>* domain = nullptr);

/// Whether the closure inside the search space adds nothing.
bool is_full(const AlgebraicSet& set, const std::vector<Element>* domain = nullptr);

}  // namespace ore
