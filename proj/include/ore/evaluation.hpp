#pragma once

#include "ore/skewpoly.hpp"

#include <optional>
#include <vector>

namespace ore {

/// N_0(a), ..., N_n(a) with N_0 = 1 and N_i = S(N_{i-1}) a + D(N_{i-1}).
struct PowerFunctionTable {
    Element a;
    std::vector<Element> values;
};

PowerFunctionTable power_function(const RingContext& ctx, const Element& a, std::size_t n);

/// f(a) = sum b_i N_i(a); equals the remainder of f on right division by t - a.
Element evaluate(const SkewPolynomial& f, const Element& a);

/// a^c = S(c) a c^{-1} + D(c) c^{-1}. Throws ZeroConjugator for c = 0.
Element conjugate(const RingContext& ctx, const Element& a, const Element& c);

/// Some nonzero c with a^c = b, found as a kernel vector of
/// c -> S(c) a + D(c) - b c. Needs a finite-dimensional or enumerable K.
std::optional<Element> conjugator(const RingContext& ctx, const Element& a, const Element& b);
bool are_conjugate(const RingContext& ctx, const Element& a, const Element& b);

/// Phi_h(x) = x^{h(x)}; empty when h(x) = 0.
std::optional<Element> phi_transform(const SkewPolynomial& h, const Element& x);

/// Right roots of f inside `domain`, or inside K when K is enumerable and no
/// domain is given. Sorted, without repetitions. Throws DomainRequired.
std::vector<Element> right_roots(const SkewPolynomial& f, const std::vector<Element>* domain = nullptr);

/// Elements b of the search space with f in (t - b)R. Throws DomainRequired
/// and CapabilityMissing.
std::vector<Element> left_roots(const SkewPolynomial& f, const std::vector<Element>* domain = nullptr);

/// Whether a - b lies in S(K). Throws CapabilityMissing.
bool same_s_coset(const RingContext& ctx, const Element& a, const Element& b);

struct CosetReport {
    enum class Pattern { SingleCoset, PairwiseSeparated, Mixed };
    Pattern pattern = Pattern::SingleCoset;
    /// For Mixed: a pair in one coset and a pair in different cosets.
    std::vector<std::pair<Element, Element>> witnesses;
    /// Monic input whose roots do not share one coset.
    bool monic_violation = false;
    bool consistent() const { return pattern != Pattern::Mixed && !monic_violation; }
};

/// Classifies a set of left roots of f by additive S(K)-cosets: either all
/// in one coset or no two in the same one, and the former when f is monic.
CosetReport coset_check(const SkewPolynomial& f, const std::vector<Element>& left_root_sample);

std::string to_string(CosetReport::Pattern p);

}  // namespace ore
