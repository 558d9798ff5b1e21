#include "ore/element.hpp"

#include "ore/error.hpp"

namespace ore {

namespace {

[[noreturn]] void mismatch() {
    throw Error(ErrorCode::ContextMismatch, "elements belong to different rings");
}

const GaloisField& common_field(const GfElem& a, const GfElem& b) {
    if (a.field != b.field) mismatch();
    return *a.field;
}

template <class Op>
Element combine(const Element& a, const Element& b, Op op) {
    return std::visit(
        [&](const auto& x, const auto& y) -> Element {
            using X = std::decay_t<decltype(x)>;
            using Y = std::decay_t<decltype(y)>;
            if constexpr (!std::is_same_v<X, Y>) {
                mismatch();
            } else {
                return op(x, y);
            }
        },
        a.value(), b.value());
}

}  // namespace

bool Element::is_zero() const {
    return std::visit(
        [](const auto& x) -> bool {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, mpq_class>) return x == 0;
            else if constexpr (std::is_same_v<X, GfElem>) return x.code == 0;
            else return x.is_zero();
        },
        v_);
}

bool Element::is_one() const {
    return std::visit(
        [](const auto& x) -> bool {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, mpq_class>) return x == 1;
            else if constexpr (std::is_same_v<X, GfElem>) return x.code == 1;
            else if constexpr (std::is_same_v<X, RatFunc>) return x == RatFunc(QPoly(1));
            else return x == Quaternion(mpq_class(1));
        },
        v_);
}

bool Element::same_kind(const Element& o) const {
    if (v_.index() != o.v_.index()) return false;
    if (holds<GfElem>()) return as<GfElem>().field == o.as<GfElem>().field;
    return true;
}

Element Element::operator-() const {
    return std::visit(
        [](const auto& x) -> Element {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, GfElem>) return GfElem{x.field, x.field->neg(x.code)};
            else return X(-x);
        },
        v_);
}

Element operator+(const Element& a, const Element& b) {
    return combine(a, b, [](const auto& x, const auto& y) -> Element {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, GfElem>) return GfElem{x.field, common_field(x, y).add(x.code, y.code)};
        else return X(x + y);
    });
}

Element operator-(const Element& a, const Element& b) {
    return combine(a, b, [](const auto& x, const auto& y) -> Element {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, GfElem>) return GfElem{x.field, common_field(x, y).sub(x.code, y.code)};
        else return X(x - y);
    });
}

Element operator*(const Element& a, const Element& b) {
    return combine(a, b, [](const auto& x, const auto& y) -> Element {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, GfElem>) return GfElem{x.field, common_field(x, y).mul(x.code, y.code)};
        else return X(x * y);
    });
}

Element Element::inverse() const {
    if (is_zero()) throw Error(ErrorCode::DivisionByZero, "inverse of zero");
    return std::visit(
        [](const auto& x) -> Element {
            using X = std::decay_t<decltype(x)>;
            if constexpr (std::is_same_v<X, mpq_class>) return mpq_class(1 / x);
            else if constexpr (std::is_same_v<X, GfElem>) return GfElem{x.field, x.field->inv(x.code)};
            else return x.inverse();
        },
        v_);
}

bool operator==(const Element& a, const Element& b) {
    if (!a.same_kind(b)) return false;
    return a.v_ == b.v_;
}

bool operator<(const Element& a, const Element& b) {
    if (a.v_.index() != b.v_.index()) return a.v_.index() < b.v_.index();
    return std::visit(
        [&](const auto& x) -> bool {
            using X = std::decay_t<decltype(x)>;
            const X& y = std::get<X>(b.v_);
            if constexpr (std::is_same_v<X, GfElem>) return x.code < y.code;
            else return x < y;
        },
        a.v_);
}

}  // namespace ore
