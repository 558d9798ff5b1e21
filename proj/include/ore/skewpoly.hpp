#pragma once

#include "ore/context.hpp"

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ore {

/// Polynomial degree with a distinct sentinel for the zero polynomial.
class Degree {
public:
    static Degree neg_inf() { return Degree(); }
    explicit Degree(std::size_t d) : d_(static_cast<long>(d)) {}

    bool is_neg_inf() const noexcept { return d_ < 0; }
    /// Throws InvalidArgument for the sentinel.
    std::size_t value() const;

    friend Degree operator+(Degree a, Degree b) {
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return Degree(static_cast<std::size_t>(a.d_ + b.d_));
    }
    friend bool operator==(Degree, Degree) = default;
    friend std::strong_ordering operator<=>(Degree a, Degree b) { return a.d_ <=> b.d_; }
    friend bool operator==(Degree a, std::size_t b) { return a.d_ == static_cast<long>(b); }
    friend std::strong_ordering operator<=>(Degree a, std::size_t b) { return a.d_ <=> static_cast<long>(b); }

    std::string to_string() const { return is_neg_inf() ? "-inf" : std::to_string(d_); }

private:
    Degree() : d_(-1) {}
    long d_;
};

/// Element sum b_i t^i of K[t; S, D] with coefficients on the left of the
/// powers of t. Multiplication follows t*b = S(b)*t + D(b).
class SkewPolynomial {
public:
    explicit SkewPolynomial(ContextPtr ctx);
    SkewPolynomial(ContextPtr ctx, std::vector<Element> coeffs);

    static SkewPolynomial constant(ContextPtr ctx, Element c);
    static SkewPolynomial monomial(ContextPtr ctx, Element c, std::size_t power);
    /// t - a
    static SkewPolynomial linear(ContextPtr ctx, const Element& a);
    static SkewPolynomial one(ContextPtr ctx);

    const ContextPtr& context() const noexcept { return ctx_; }
    const RingContext& ring() const noexcept { return *ctx_; }
    const std::vector<Element>& coeffs() const noexcept { return c_; }
    Element coeff(std::size_t i) const;
    /// Leading coefficient; precondition: nonzero.
    const Element& leading() const;
    Degree degree() const { return c_.empty() ? Degree::neg_inf() : Degree(c_.size() - 1); }
    bool is_zero() const noexcept { return c_.empty(); }
    bool is_monic() const { return !c_.empty() && c_.back().is_one(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    /// lc^{-1} * f; zero stays zero.
    SkewPolynomial monic() const;
    SkewPolynomial scale_left(const Element& c) const;

    SkewPolynomial operator-() const;
    friend SkewPolynomial operator+(const SkewPolynomial& f, const SkewPolynomial& g);
    friend SkewPolynomial operator-(const SkewPolynomial& f, const SkewPolynomial& g);
    friend SkewPolynomial operator*(const SkewPolynomial& f, const SkewPolynomial& g);
    friend bool operator==(const SkewPolynomial& f, const SkewPolynomial& g);
    friend bool operator!=(const SkewPolynomial& f, const SkewPolynomial& g) { return !(f == g); }
    /// Canonical order: degree, then coefficients from the top.
    friend bool operator<(const SkewPolynomial& f, const SkewPolynomial& g);

    /// Descending powers, bracketed non-unit coefficients: `t^2 - [i]*t + [1]`.
    std::string to_string() const;
    /// Terms `[c]*t^n` in any order; missing terms are zero.
    static SkewPolynomial parse(ContextPtr ctx, std::string_view text);

private:
    void trim();
    /// t * h
    SkewPolynomial times_t() const;

    ContextPtr ctx_;
    std::vector<Element> c_;
};

struct DivResult {
    SkewPolynomial quotient;
    SkewPolynomial remainder;
};

/// f = q*g + r with deg r < deg g. Throws DivisionByZeroPoly.
DivResult right_divmod(const SkewPolynomial& f, const SkewPolynomial& g);

/// f = g*q + r with deg r < deg g, forcing coefficients of q from the top.
/// Empty when a required S-preimage does not exist. Throws
/// CapabilityMissing / DivisionByZeroPoly.
std::optional<DivResult> left_divmod(const SkewPolynomial& f, const SkewPolynomial& g);

/// Whether g right-divides f, i.e. f is in R*g.
bool right_divides(const SkewPolynomial& g, const SkewPolynomial& f);
/// Whether g left-divides f, i.e. f is in g*R.
bool left_divides(const SkewPolynomial& g, const SkewPolynomial& f);

struct GcdLcm {
    SkewPolynomial rgcd;  ///< monic generator of R f + R g
    SkewPolynomial llcm;  ///< monic generator of R f ∩ R g (zero if either input is)
};

/// Right gcd and least left common multiple via the right remainder
/// sequence and its cofactors.
GcdLcm rgcd_llcm(const SkewPolynomial& f, const SkewPolynomial& g);
SkewPolynomial rgcd(const SkewPolynomial& f, const SkewPolynomial& g);
SkewPolynomial llcm(const SkewPolynomial& f, const SkewPolynomial& g);

}  // namespace ore
