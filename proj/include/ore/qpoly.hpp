#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

namespace ore {

/// Dense univariate polynomial over Q, ascending coefficients, no trailing
/// zeros. The zero polynomial has an empty coefficient vector.
class QPoly {
public:
    QPoly() = default;
    explicit QPoly(std::vector<mpq_class> coeffs);
    QPoly(const mpq_class& constant);
    QPoly(long constant) : QPoly(mpq_class(constant)) {}

    static QPoly monomial(const mpq_class& c, std::size_t power);
    static QPoly variable() { return monomial(1, 1); }

    bool is_zero() const noexcept { return c_.empty(); }
    /// Degree of a nonzero polynomial; -1 for zero (internal helper only).
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }
    const std::vector<mpq_class>& coeffs() const noexcept { return c_; }
    mpq_class coeff(std::size_t i) const { return i < c_.size() ? c_[i] : mpq_class(0); }
    const mpq_class& leading() const { return c_.back(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    QPoly operator-() const;
    QPoly& operator+=(const QPoly& o);
    QPoly& operator-=(const QPoly& o);
    QPoly& operator*=(const QPoly& o);
    QPoly& operator*=(const mpq_class& s);

    friend QPoly operator+(QPoly a, const QPoly& b) { return a += b; }
    friend QPoly operator-(QPoly a, const QPoly& b) { return a -= b; }
    friend QPoly operator*(QPoly a, const QPoly& b) { return a *= b; }
    friend QPoly operator*(QPoly a, const mpq_class& s) { return a *= s; }
    friend bool operator==(const QPoly& a, const QPoly& b) { return a.c_ == b.c_; }

    mpq_class operator()(const mpq_class& x) const;

    QPoly monic() const;
    QPoly derivative() const;
    /// p(x) -> p(x^2)
    QPoly compose_square() const;
    /// p(x) -> p(-x)
    QPoly negate_variable() const;
    bool is_even() const;
    /// For an even polynomial p(x) = q(x^2), returns q.
    QPoly halve_even() const;

    /// Lexicographic comparison on (degree, coefficients from the top).
    friend bool operator<(const QPoly& a, const QPoly& b);

    std::string to_string(char var) const;

private:
    void trim();
    std::vector<mpq_class> c_;
};

/// Euclidean division a = q*b + r with deg r < deg b.
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
QPoly gcd(QPoly a, QPoly b);
/// Squarefree part, made monic.
QPoly squarefree_part(const QPoly& p);

std::string format_rational(const mpq_class& q);

}  // namespace ore
