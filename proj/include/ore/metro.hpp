#pragma once

#include "ore/skewpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ore {

/// a x - S(x) b - D(x) = c with c != 0.
struct MetroProblem {
    /// Throws ZeroC when c = 0.
    MetroProblem(Element a, Element b, Element c);
    Element a, b, c;
};

/// a x - S(x) b - D(x)
Element metro_lhs(const RingContext& ctx, const Element& a, const Element& b, const Element& x);

struct MetroSolutionReport {
    enum class Status { Solution, NoSolution, Undecided };
    enum class Uniqueness { Unique, Multiple, Unknown };

    Status status = Status::Undecided;
    std::optional<Element> x;
    Uniqueness uniqueness = Uniqueness::Unknown;
    /// Second solution when Multiple.
    std::optional<Element> other;
    /// exhaustive | linear-algebra | antiderivative | division | rational-ansatz | none
    std::string strategy;
    std::string reason;
};

std::string to_string(MetroSolutionReport::Status s);
std::string to_string(MetroSolutionReport::Uniqueness u);

/// Exhaustive search on finite K; an exact base-field linear solve on
/// finite-dimensional K; for commutative K with S = id the equation
/// (a - b) x - D(x) = c is handled by division, antiderivatives of
/// polynomials, or a bounded rational ansatz. Anything else is Undecided.
MetroSolutionReport solve_metro(const RingContext& ctx, const MetroProblem& p);

/// Numerator degree bound of the rational ansatz.
std::size_t metro_ansatz_degree_bound(const RingContext& ctx, const MetroProblem& p);

struct MetroEquivalenceReport {
    MetroSolutionReport solution;
    /// (t - b^c)(t - a)
    SkewPolynomial quadratic;
    /// W verdict of the quadratic: 1 yes, 0 no, empty when undecided.
    std::optional<bool> quadratic_is_w;
    std::vector<Element> quadratic_roots;
    /// 1 in R(t - b^c) + (t - a)R, on finite-dimensional K.
    std::optional<bool> unit_in_sum;
    /// Second root a - c x^{-1} built from the solution, when there is one.
    std::optional<Element> second_root;
    bool second_root_verified = false;
    bool decided() const;
    bool agree() const;
};

MetroEquivalenceReport metro_wedderburn_equivalence(const ContextPtr& ctx, const MetroProblem& p,
                                                    const std::vector<Element>* domain = nullptr);

/// Minimal polynomial of the (S,D)-conjugacy class of b when that class is
/// algebraic and computable (finite K, or rational quaternions).
SkewPolynomial class_minimal_polynomial(const ContextPtr& ctx, const Element& b);

struct ClassUniquenessReport {
    SkewPolynomial class_polynomial;
    bool quadratic_is_w = false;
    MetroSolutionReport solution;
    bool holds() const {
        return quadratic_is_w && solution.status == MetroSolutionReport::Status::Solution &&
               solution.uniqueness == MetroSolutionReport::Uniqueness::Unique;
    }
};

/// For a outside the class of b: (t - b^c)(t - a) is W and the metro
/// equation has exactly one solution. Throws AInClass, ZeroC.
ClassUniquenessReport class_algebraic_uniqueness(const ContextPtr& ctx, const Element& b, const Element& a,
                                                 const Element& c);

}  // namespace ore
