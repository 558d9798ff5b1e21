#pragma once

#include "ore/context.hpp"
#include "ore/skewpoly.hpp"

#include <string>
#include <vector>

namespace testing_support {

using namespace ore;

inline ContextPtr hq() { return RingContext::quaternions(); }
inline ContextPtr q() { return RingContext::rationals(); }

inline Element gf_w(const GaloisField& f) {
    return *RingContext::finite_field(f, Endomorphism::identity(), Derivation::zero())->symbol("w");
}

inline ContextPtr f4(bool frob = true, bool inner = false) {
    const auto& f = RingContext::f4();
    return RingContext::finite_field(f, frob ? Endomorphism::frobenius() : Endomorphism::identity(),
                                     inner ? Derivation::inner(gf_w(f)) : Derivation::zero());
}

inline ContextPtr f8(bool frob = true, bool inner = false) {
    const auto& f = RingContext::f8();
    return RingContext::finite_field(f, frob ? Endomorphism::frobenius() : Endomorphism::identity(),
                                     inner ? Derivation::inner(gf_w(f)) : Derivation::zero());
}

/// Q(u) with S = id, D = d/du.
inline ContextPtr qu() {
    return RingContext::rational_functions('u', Endomorphism::identity(), Derivation::formal_derivative());
}

/// Q(x) with S: x -> x^2, D = 0.
inline ContextPtr qx_square() {
    return RingContext::rational_functions('x', Endomorphism::square_variable(), Derivation::zero());
}

inline Element el(const ContextPtr& k, const std::string& text) { return k->parse(text); }

inline SkewPolynomial poly(const ContextPtr& k, const std::string& text) { return SkewPolynomial::parse(k, text); }

inline std::vector<Element> els(const ContextPtr& k, const std::vector<std::string>& texts) {
    std::vector<Element> out;
    for (const auto& t : texts) out.push_back(k->parse(t));
    return out;
}

}  // namespace testing_support
