#pragma once

#include "ore/algebraic_set.hpp"
#include "ore/skewpoly.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace ore {

/// Subsets of a finite K as bitmasks over ctx->enumerate().
using Mask = std::uint32_t;

/// Minimal polynomial and P-closure of every subset of a finite K.
class SubsetTable {
public:
    /// Throws CapabilityMissing unless K is finite with at most 16 elements.
    explicit SubsetTable(ContextPtr ctx);

    const ContextPtr& context() const noexcept { return ctx_; }
    const std::vector<Element>& elements() const noexcept { return elements_; }
    Mask universe() const noexcept { return static_cast<Mask>(closure_.size() - 1); }

    const SkewPolynomial& minimal_polynomial(Mask m) const { return poly_[m]; }
    Mask closure(Mask m) const { return closure_[m]; }
    bool full(Mask m) const { return closure_[m] == m; }

    Mask mask_of(const std::vector<Element>& set) const;
    std::vector<Element> elements_of(Mask m) const;

private:
    ContextPtr ctx_;
    std::vector<Element> elements_;
    std::vector<SkewPolynomial> poly_;
    std::vector<Mask> closure_;
};

/// Finite lattice of full algebraic sets (ordered by inclusion) or of
/// W-polynomials (f <= h when h right-divides f).
struct FiniteLattice {
    enum class Kind { FullSets, WPolynomials };
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    Kind kind = Kind::FullSets;
    ContextPtr ctx;
    /// Full sets: the set. W-polynomials: V(f). Sorted.
    std::vector<std::vector<Element>> sets;
    /// Full sets: f_Delta. W-polynomials: f.
    std::vector<SkewPolynomial> polynomials;
    std::vector<std::vector<char>> leq;
    /// npos where the formula left the node set.
    std::vector<std::vector<std::size_t>> meet, join;
    /// Adjoined top/bottom elements carrying no set or polynomial.
    std::vector<char> marker;

    std::size_t size() const { return leq.size(); }
    std::size_t bottom() const;
    std::size_t top() const;
    /// Pairs (lower, upper) with nothing strictly between.
    std::vector<std::pair<std::size_t, std::size_t>> covering_edges() const;
    std::string node_label(std::size_t i) const;
    /// Graphviz description of the Hasse diagram.
    std::string to_dot() const;
};

std::string to_string(FiniteLattice::Kind k);

/// Nodes: subsets equal to their closure, ordered by rank then element list;
/// meet = intersection, join = closure of the union.
FiniteLattice build_full_lattice(const ContextPtr& ctx);
/// Nodes: minimal polynomials of all subsets, ordered by degree then V(f);
/// meet = llcm, join = rgcd.
FiniteLattice build_w_lattice(const ContextPtr& ctx);

/// Copy with a new bottom and a new top marker node.
FiniteLattice with_markers(const FiniteLattice& l);

/// Order axioms, meet/join as glb/lub, modular law on all triples.
std::vector<std::string> lattice_violations(const FiniteLattice& l);

struct DualityReport {
    std::size_t full_nodes = 0;
    std::size_t w_nodes = 0;
    std::size_t pairs_checked = 0;
    std::size_t triples_checked = 0;
    std::size_t intervals_checked = 0;
    std::size_t atoms = 0;
    std::size_t maximal_w = 0;
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

/// Delta -> f_Delta and f -> V(f) are inverse order-reversing bijections;
/// rank and degree are dimension functions; atoms are singletons and the
/// maximal W-polynomials are the t - a; each interval [f, h] of W is the set
/// of monic g with Rf in Rg in Rh.
DualityReport duality_check(const FiniteLattice& full, const FiniteLattice& w);

struct IntersectionReport {
    SkewPolynomial rgcd;
    SkewPolynomial intersection_polynomial;
    /// Indices of input sets that are not full.
    std::vector<std::size_t> not_full;
    bool identity_holds = false;
};

/// rgcd of the minimal polynomials against the minimal polynomial of the
/// intersection. With `strict`, throws NotFull when some set is not full;
/// otherwise the report shows what happens then.
IntersectionReport intersection_minpoly(const std::vector<AlgebraicSet>& sets,
                                        const std::vector<Element>* domain = nullptr, bool strict = false);

/// Whether V(f_Delta) = Delta: by enumeration on finite K or in a domain,
/// exactly on Q and the quaternions.
bool set_is_full(const AlgebraicSet& set, const std::vector<Element>* domain = nullptr);

struct ModularLawReport {
    bool preconditions_ok = true;
    std::string precondition_issue;
    std::size_t checked = 0;
    std::vector<Element> violations;
    bool holds() const { return preconditions_ok && violations.empty(); }
};

/// Every x in Gamma that is P-dependent on Pi u Delta is P-dependent on
/// (Gamma n Pi) u Delta, for full Gamma, Pi and Delta inside Gamma.
ModularLawReport modular_law_check(const AlgebraicSet& gamma, const AlgebraicSet& pi, const AlgebraicSet& delta);

struct ModularLawSweep {
    std::size_t triples = 0;
    std::size_t elements_checked = 0;
    std::size_t violations = 0;
};

/// All valid triples over a finite K.
ModularLawSweep modular_law_exhaustive(const SubsetTable& table);

}  // namespace ore
