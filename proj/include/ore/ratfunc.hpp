#pragma once

#include "ore/qpoly.hpp"

#include <optional>
#include <string>

namespace ore {

/// Element of Q(x) in canonical form: coprime numerator and denominator,
/// denominator monic. Zero is 0/1.
class RatFunc {
public:
    RatFunc() : num_(), den_(1) {}
    RatFunc(QPoly num) : num_(std::move(num)), den_(1) {}
    RatFunc(QPoly num, QPoly den);

    const QPoly& num() const noexcept { return num_; }
    const QPoly& den() const noexcept { return den_; }
    bool is_zero() const noexcept { return num_.is_zero(); }
    bool is_polynomial() const noexcept { return den_.degree() == 0; }

    RatFunc operator-() const { return RatFunc(-num_, den_, Canonical{}); }
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator<(const RatFunc& a, const RatFunc& b);

    /// Precondition: nonzero.
    RatFunc inverse() const;
    /// d/dx
    RatFunc derivative() const;
    /// r(x) -> r(x^2)
    RatFunc compose_square() const;
    /// r(x) = s(x^2) for some s: returns s; otherwise nothing.
    std::optional<RatFunc> square_preimage() const;

    std::string to_string(char var) const;

private:
    struct Canonical {};
    RatFunc(QPoly num, QPoly den, Canonical) : num_(std::move(num)), den_(std::move(den)) {}

    QPoly num_;
    QPoly den_;
};

}  // namespace ore
