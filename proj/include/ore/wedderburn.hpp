#pragma once

#include "ore/algebraic_set.hpp"
#include "ore/skewpoly.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ore {

/// Base-field basis of C_a = {0} u {c != 0 : a^c = a}, the kernel of
/// c -> S(c) a + D(c) - a c. Throws CapabilityMissing.
std::vector<Element> centralizer(const RingContext& ctx, const Element& a);

/// Lambda_f(x) = sum b_i Lambda_i(x) with Lambda_0(x) = x and
/// Lambda_{i+1}(x) = S(Lambda_i(x)) a + D(Lambda_i(x)); for x != 0 this is
/// f(a^x) x.
Element lambda_map(const SkewPolynomial& f, const Element& a, const Element& x);

/// E(f, a) = {0} u {x != 0 : f(a^x) = 0}.
struct ExponentialSpace {
    Element representative;
    /// Basis over the base field (Q or F_p).
    std::vector<Element> base_basis;
    /// Basis as a right vector space over C_a.
    std::vector<Element> basis;
    std::size_t dimension() const { return basis.size(); }
};

/// Throws CapabilityMissing unless K is finite-dimensional over its base field.
ExponentialSpace exponential_space(const SkewPolynomial& f, const Element& a);

/// (S,D)-conjugacy classes of a finite K, each sorted, ordered by their
/// smallest element (the representative).
std::vector<std::vector<Element>> conjugacy_classes(const ContextPtr& ctx);

/// Representatives of every conjugacy class that can contain a right root
/// of f: all classes on finite K; for rational quaternions the classes read
/// off the rational factors of degree <= 2 of the norm polynomial; for Q
/// the rational roots. Throws CapabilityMissing elsewhere.
std::vector<Element> candidate_classes(const SkewPolynomial& f);

/// Elements c + e*var with c, e in -2..2, used when no domain is given on
/// rational function fields.
std::vector<Element> default_search_domain(const ContextPtr& ctx);

/// Result of the greedy root collection.
struct ZeroSet {
    /// True when `polynomial` is f_{V(f)} exactly; false when only part of
    /// V(f) was searched.
    bool complete = false;
    /// P-independent right roots, in discovery order.
    std::vector<Element> basis;
    /// Minimal polynomial of `basis`.
    SkewPolynomial polynomial;
    std::string limitation;
};

/// Greedy: g = 1; while some class representative a has E(f,a) outside
/// E(g,a), adjoin a^x for a basis vector x of E(f,a) outside E(g,a).
ZeroSet zero_set(const SkewPolynomial& f, const std::vector<Element>* domain = nullptr);

/// rk V(f) = deg f_{V(f)}; throws DomainRequired when the zero set could
/// not be determined exactly.
std::size_t zero_set_rank(const SkewPolynomial& f, const std::vector<Element>* domain = nullptr);

struct WCertificate {
    enum class Verdict { IsW, NotW, NotSplit, Undecided };
    Verdict verdict = Verdict::Undecided;
    SkewPolynomial polynomial;
    /// For IsW: deg f P-independent roots with minimal polynomial f.
    /// Otherwise the P-basis of the roots that were found.
    std::vector<Element> roots;
    /// f_{V(f)} for NotW; minimal polynomial of `roots` otherwise.
    SkewPolynomial zero_set_polynomial;
    std::string note;
};

std::string to_string(WCertificate::Verdict v);

/// Throws InvalidArgument unless f is monic.
WCertificate is_wedderburn(const SkewPolynomial& f, const std::vector<Element>* domain = nullptr);

/// Re-checks the evidence: IsW roots rebuild f, NotW's f_{V(f)} properly
/// right-divides f and kills every listed root.
bool verify_certificate(const WCertificate& cert);

struct SplitResult {
    bool split = false;
    /// c_1, ..., c_n with f = (t - c_n) ... (t - c_1).
    std::vector<Element> roots;
    std::string reason;
};

/// Repeatedly locates a right root and right-divides. Throws InvalidArgument
/// unless f is monic of degree >= 1.
SplitResult split(const SkewPolynomial& f, const std::vector<Element>* domain = nullptr);

/// sum over the conjugacy classes a_j meeting V(f) of dim_{C_j} E(f, a_j).
std::size_t exponential_dimension_sum(const SkewPolynomial& f);

/// Square matrix over K.
class MatrixOverK {
public:
    MatrixOverK(ContextPtr ctx, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const ContextPtr& context() const noexcept { return ctx_; }
    Element& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const Element& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

    friend MatrixOverK operator*(const MatrixOverK& x, const MatrixOverK& y);
    friend MatrixOverK operator+(const MatrixOverK& x, const MatrixOverK& y);
    friend bool operator==(const MatrixOverK& x, const MatrixOverK& y);

    /// Entrywise S and D.
    MatrixOverK apply_S() const;
    MatrixOverK apply_D() const;

    /// Row rank by elimination with left row operations.
    std::size_t rank() const;
    bool invertible() const { return rows_ == cols_ && rank() == rows_; }

    std::string to_string() const;

private:
    ContextPtr ctx_;
    std::size_t rows_, cols_;
    std::vector<Element> a_;
};

/// Rows e_2, ..., e_n, then (-b_0, ..., -b_{n-1}). Throws InvalidArgument
/// unless f is monic of degree >= 1.
MatrixOverK companion(const SkewPolynomial& f);

/// Row i is (N_i(c_1), ..., N_i(c_n)) for i = 0..n-1.
MatrixOverK vandermonde(const ContextPtr& ctx, const std::vector<Element>& c);

/// V(c) invertible and C(f) V = S(V) diag(c) + D(V).
bool diagonalization_check(const SkewPolynomial& f, const std::vector<Element>& roots);

/// Monic generator of the intersection of the right ideals (t - b_i)R.
/// Throws CapabilityMissing when S is not invertible.
SkewPolynomial right_lcm_linear(const ContextPtr& ctx, const std::vector<Element>& b);

struct DualRepresentation {
    SkewPolynomial polynomial;
    std::vector<Element> b;
    /// Each t - b_i left-divides f and the right lcm of the t - b_i is f.
    bool verified = false;
};

/// b_i = a_i^{h_i(a_i)}, h_i the minimal polynomial of the other elements.
/// Throws NotPIndependent.
DualRepresentation dual_representation(const ContextPtr& ctx, const std::vector<Element>& basis);

/// Whether f = (t - b_1)...(t - b_n) R-intersects to f: brute-force left
/// roots B of f (or roots within `domain`) and a right lcm of degree deg f.
bool has_dual_right_representation(const SkewPolynomial& f, const std::vector<Element>* domain = nullptr);

enum class Check { True, False, Untested };
std::string to_string(Check c);
inline Check to_check(bool b) { return b ? Check::True : Check::False; }

struct FactorTheoremReport {
    Check is_w = Check::Untested;
    Check all_factors_w = Check::Untested;
    Check quadratic_factors_w = Check::Untested;
    bool splits = false;
    std::vector<SkewPolynomial> factors_checked;
    /// Every evaluated condition gives the same answer.
    bool agree() const;
    std::string note;
};

/// Conditions of the factor theorem: f is W; f splits and every monic factor
/// is W; f splits and every monic quadratic factor is W. On finite K the
/// factors are all p with f = p1 p p2; elsewhere the consecutive subproducts
/// of one splitting.
FactorTheoremReport factor_theorem_check(const SkewPolynomial& f, const std::vector<Element>* domain = nullptr);

/// Monic right divisors of f of degree >= 1 on finite K.
std::vector<SkewPolynomial> monic_right_divisors(const SkewPolynomial& f);

/// 1 in R g + h R, solved with deg u < deg h, deg v < deg g as a
/// base-field linear system. Throws CapabilityMissing.
bool unit_in_sum(const SkewPolynomial& g, const SkewPolynomial& h);

struct ProductTheoremReport {
    Check product_w = Check::Untested;   ///< (1)
    Check g_w = Check::Untested;
    Check h_w = Check::Untested;
    Check unit_in_sum = Check::Untested;  ///< 1 in Rg + hR
    Check image_contains = Check::Untested;  ///< V(g) inside im Phi_h
    Check quadratics_w = Check::Untested;  ///< (t-a)(t-b) W for a in V(g), b in V'(h)
    bool agree() const;
    std::string note;
};

ProductTheoremReport product_theorem_check(const SkewPolynomial& g, const SkewPolynomial& h,
                                           const std::vector<Element>* domain = nullptr);

struct RankSides {
    std::size_t lhs = 0;
    std::size_t rhs = 0;
};

/// rk(D) + rk(G) and rk(D u G) + rk(closure(D) n closure(G)).
RankSides rank_union_check(const AlgebraicSet& delta, const AlgebraicSet& gamma,
                           const std::vector<Element>* domain = nullptr);
/// rk(Phi_h(D)) and rk(D) - rk(closure(D) n V(h)). Throws DisjointnessViolated.
RankSides phi_rank_check(const SkewPolynomial& h, const AlgebraicSet& delta,
                         const std::vector<Element>* domain = nullptr);
/// rk V(gh) and rk V(g) + rk V(h).
RankSides product_rank_bound(const SkewPolynomial& g, const SkewPolynomial& h,
                             const std::vector<Element>* domain = nullptr);

}  // namespace ore
