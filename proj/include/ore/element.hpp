#pragma once

#include "ore/galois_field.hpp"
#include "ore/quaternion.hpp"
#include "ore/ratfunc.hpp"

#include <gmpxx.h>

#include <variant>

namespace ore {

struct GfElem {
    const GaloisField* field;
    GaloisField::Code code;

    friend bool operator==(const GfElem& a, const GfElem& b) {
        return a.field == b.field && a.code == b.code;
    }
};

/// Exact value of one of the four backends. Arithmetic between values of
/// different backends (or different finite fields) throws ContextMismatch.
/// S, D, printing and parsing live on RingContext, since they depend on
/// the context rather than on the value alone.
class Element {
public:
    using Value = std::variant<mpq_class, GfElem, RatFunc, Quaternion>;

    Element() : v_(mpq_class(0)) {}
    Element(mpq_class q) : v_(std::move(q)) {}
    Element(GfElem g) : v_(g) {}
    Element(RatFunc r) : v_(std::move(r)) {}
    Element(Quaternion q) : v_(std::move(q)) {}

    const Value& value() const noexcept { return v_; }
    template <class T>
    const T& as() const { return std::get<T>(v_); }
    template <class T>
    bool holds() const noexcept { return std::holds_alternative<T>(v_); }

    bool is_zero() const;
    bool is_one() const;
    bool same_kind(const Element& o) const;

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const Element& a, const Element& b);
    Element& operator+=(const Element& o) { return *this = *this + o; }
    Element& operator-=(const Element& o) { return *this = *this - o; }
    Element& operator*=(const Element& o) { return *this = *this * o; }
    /// Throws DivisionByZero for zero.
    Element inverse() const;

    friend bool operator==(const Element& a, const Element& b);
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }
    /// Total order used for canonical sorting of result sets. Finite-field
    /// values compare by code, which is the enumeration order.
    friend bool operator<(const Element& a, const Element& b);

private:
    Value v_;
};

}  // namespace ore
