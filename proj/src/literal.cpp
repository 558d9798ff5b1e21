// Element literal grammar shared by the library and the CLI:
//
//   expr    := product (('+' | '-') product)*
//   product := unary (('*' | '/' | <juxtaposition>) unary)*
//   unary   := '-' unary | '+' unary | power
//   power   := primary ('^' ['-'] digits)?
//   primary := digits | name | '(' expr ')'
//
// Juxtaposition multiplies when the next token is a name or '(' so that
// `2i`, `3w^2` and `k/2` read naturally. Products keep operand order, which
// matters for quaternions.

#include "ore/context.hpp"
#include "ore/error.hpp"

#include <cctype>

namespace ore {

namespace {

class ElementParser {
public:
    ElementParser(const RingContext& ctx, std::string_view text) : ctx_(ctx), s_(text) {}

    Element parse_all() {
        skip_ws();
        if (pos_ >= s_.size()) throw SyntaxError(pos_, "empty element literal");
        Element v = expr();
        skip_ws();
        if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
        return v;
    }

private:
    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    char peek() {
        skip_ws();
        return pos_ < s_.size() ? s_[pos_] : '\0';
    }

    Element expr() {
        Element v = product();
        for (;;) {
            char c = peek();
            if (c == '+') {
                ++pos_;
                v = v + product();
            } else if (c == '-') {
                ++pos_;
                v = v - product();
            } else {
                return v;
            }
        }
    }

    Element product() {
        Element v = unary();
        for (;;) {
            char c = peek();
            if (c == '*') {
                ++pos_;
                v = v * unary();
            } else if (c == '/') {
                std::size_t at = ++pos_;
                Element d = unary();
                if (d.is_zero()) throw SyntaxError(at, "division by zero");
                v = v * d.inverse();
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '(') {
                v = v * power();
            } else {
                return v;
            }
        }
    }

    Element unary() {
        char c = peek();
        if (c == '-') {
            ++pos_;
            return -unary();
        }
        if (c == '+') {
            ++pos_;
            return unary();
        }
        return power();
    }

    Element power() {
        Element base = primary();
        if (peek() != '^') return base;
        ++pos_;
        skip_ws();
        bool negative = false;
        if (pos_ < s_.size() && s_[pos_] == '-') {
            negative = true;
            ++pos_;
        }
        std::size_t start = pos_;
        long e = digits();
        if (negative) {
            if (base.is_zero()) throw SyntaxError(start, "negative power of zero");
            base = base.inverse();
        }
        Element r = ctx_.one();
        for (long i = 0; i < e; ++i) r = r * base;
        return r;
    }

    long digits() {
        std::size_t start = pos_;
        long v = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            v = v * 10 + (s_[pos_] - '0');
            if (v > 100000) throw SyntaxError(start, "exponent too large");
            ++pos_;
        }
        if (pos_ == start) throw SyntaxError(pos_, "expected digits");
        return v;
    }

    Element primary() {
        char c = peek();
        if (c == '(') {
            ++pos_;
            Element v = expr();
            if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
            ++pos_;
            return v;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            mpz_class n(std::string(s_.substr(start, pos_ - start)));
            return ctx_.from_rational(mpq_class(n));
        }
        if (std::isalpha(static_cast<unsigned char>(c))) {
            std::size_t start = pos_++;
            std::string name(1, c);
            auto sym = ctx_.symbol(name);
            if (!sym) throw Error(ErrorCode::WrongRing, "symbol '" + name + "' at position " +
                                                            std::to_string(start) + " is not in " +
                                                            ctx_.ring_tag());
            return *sym;
        }
        if (c == '\0') throw SyntaxError(pos_, "unexpected end of input");
        throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
    }

    const RingContext& ctx_;
    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Element RingContext::parse(std::string_view text) const { return ElementParser(*this, text).parse_all(); }

std::string RingContext::format(const Element& a) const {
    require_member(a);
    switch (backend_) {
        case Backend::Rationals: return format_rational(a.as<mpq_class>());
        case Backend::FiniteField: return field_->format(a.as<GfElem>().code);
        case Backend::RationalFunctions: return a.as<RatFunc>().to_string(var_);
        case Backend::Quaternions: return a.as<Quaternion>().to_string();
    }
    return "?";
}

}  // namespace ore
