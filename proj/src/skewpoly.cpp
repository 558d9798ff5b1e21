#include "ore/skewpoly.hpp"

#include "ore/error.hpp"

#include <cctype>

namespace ore {

std::size_t Degree::value() const {
    if (is_neg_inf()) throw Error(ErrorCode::InvalidArgument, "degree of the zero polynomial");
    return static_cast<std::size_t>(d_);
}

SkewPolynomial::SkewPolynomial(ContextPtr ctx) : ctx_(std::move(ctx)) {}

SkewPolynomial::SkewPolynomial(ContextPtr ctx, std::vector<Element> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& c : c_)
        if (!ctx_->contains(c))
            throw Error(ErrorCode::ContextMismatch, "coefficient does not belong to " + ctx_->name());
    trim();
}

SkewPolynomial SkewPolynomial::constant(ContextPtr ctx, Element c) {
    return SkewPolynomial(std::move(ctx), std::vector<Element>{std::move(c)});
}

SkewPolynomial SkewPolynomial::monomial(ContextPtr ctx, Element c, std::size_t power) {
    std::vector<Element> v(power + 1, ctx->zero());
    v[power] = std::move(c);
    return SkewPolynomial(std::move(ctx), std::move(v));
}

SkewPolynomial SkewPolynomial::linear(ContextPtr ctx, const Element& a) {
    Element one = ctx->one();
    return SkewPolynomial(std::move(ctx), std::vector<Element>{-a, std::move(one)});
}

SkewPolynomial SkewPolynomial::one(ContextPtr ctx) {
    Element one = ctx->one();
    return constant(std::move(ctx), std::move(one));
}

void SkewPolynomial::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Element SkewPolynomial::coeff(std::size_t i) const { return i < c_.size() ? c_[i] : ctx_->zero(); }

const Element& SkewPolynomial::leading() const {
    if (c_.empty()) throw Error(ErrorCode::InvalidArgument, "leading coefficient of the zero polynomial");
    return c_.back();
}

SkewPolynomial SkewPolynomial::scale_left(const Element& c) const {
    SkewPolynomial r(ctx_);
    r.c_.reserve(c_.size());
    for (const auto& b : c_) r.c_.push_back(c * b);
    r.trim();
    return r;
}

SkewPolynomial SkewPolynomial::monic() const {
    if (is_zero()) return *this;
    return scale_left(leading().inverse());
}

SkewPolynomial SkewPolynomial::operator-() const {
    SkewPolynomial r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

SkewPolynomial operator+(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same_context(f.ctx_, g.ctx_);
    SkewPolynomial r = f.c_.size() >= g.c_.size() ? f : g;
    const SkewPolynomial& o = f.c_.size() >= g.c_.size() ? g : f;
    for (std::size_t i = 0; i < o.c_.size(); ++i) r.c_[i] = r.c_[i] + o.c_[i];
    r.trim();
    return r;
}

SkewPolynomial operator-(const SkewPolynomial& f, const SkewPolynomial& g) { return f + (-g); }

SkewPolynomial SkewPolynomial::times_t() const {
    SkewPolynomial r(ctx_);
    if (is_zero()) return r;
    const RingContext& k = *ctx_;
    r.c_.assign(c_.size() + 1, k.zero());
    const bool has_d = !k.derivation_is_zero();
    for (std::size_t j = 0; j < c_.size(); ++j) {
        r.c_[j + 1] = r.c_[j + 1] + k.apply_S(c_[j]);
        if (has_d) r.c_[j] = r.c_[j] + k.apply_D(c_[j]);
    }
    r.trim();
    return r;
}

SkewPolynomial operator*(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same_context(f.ctx_, g.ctx_);
    SkewPolynomial result(f.ctx_);
    if (f.is_zero() || g.is_zero()) return result;
    // result = sum_i f_i * (t^i g)
    result.c_.assign(f.c_.size() + g.c_.size() - 1, f.ctx_->zero());
    SkewPolynomial power = g;
    for (std::size_t i = 0; i < f.c_.size(); ++i) {
        if (i > 0) power = power.times_t();
        if (f.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < power.c_.size(); ++j)
            result.c_[j] = result.c_[j] + f.c_[i] * power.c_[j];
    }
    result.trim();
    return result;
}

bool operator==(const SkewPolynomial& f, const SkewPolynomial& g) {
    return same_context(f.ctx_, g.ctx_) && f.c_ == g.c_;
}

bool operator<(const SkewPolynomial& f, const SkewPolynomial& g) {
    if (f.c_.size() != g.c_.size()) return f.c_.size() < g.c_.size();
    for (std::size_t i = f.c_.size(); i-- > 0;) {
        if (f.c_[i] != g.c_[i]) return f.c_[i] < g.c_[i];
    }
    return false;
}

DivResult right_divmod(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same_context(f.context(), g.context());
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "right division by the zero polynomial");
    const ContextPtr& ctx = f.context();
    const std::size_t m = g.degree().value();
    SkewPolynomial q(ctx);
    SkewPolynomial r = f;
    // S^k(lc g) for the degree gaps we meet
    std::vector<Element> lc_powers{g.leading()};
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const std::size_t k = r.degree().value() - m;
        while (lc_powers.size() <= k) lc_powers.push_back(ctx->apply_S(lc_powers.back()));
        Element c = r.leading() * lc_powers[k].inverse();
        SkewPolynomial term = SkewPolynomial::monomial(ctx, c, k);
        q = q + term;
        SkewPolynomial next = r - term * g;
        if (!(next.degree() < r.degree()))
            throw Error(ErrorCode::InvalidArgument, "right division failed to reduce the degree");
        r = std::move(next);
    }
    return {std::move(q), std::move(r)};
}

std::optional<DivResult> left_divmod(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same_context(f.context(), g.context());
    if (g.is_zero()) throw Error(ErrorCode::DivisionByZeroPoly, "left division by the zero polynomial");
    const ContextPtr& ctx = f.context();
    if (!ctx->capabilities().s_preimage_decidable)
        throw Error(ErrorCode::CapabilityMissing, "left division needs decidable S-preimages on " + ctx->name());
    const std::size_t m = g.degree().value();
    const Element lc_inv = g.leading().inverse();
    SkewPolynomial q(ctx);
    SkewPolynomial r = f;
    while (!r.is_zero() && r.degree() >= g.degree()) {
        const std::size_t k = r.degree().value() - m;
        // lc(g * c t^k) = lc(g) S^m(c): pull lc(g)^{-1} lc(r) back through S m times.
        Element target = lc_inv * r.leading();
        for (std::size_t s = 0; s < m; ++s) {
            auto pre = ctx->s_preimage(target);
            if (!pre) return std::nullopt;
            target = std::move(*pre);
        }
        SkewPolynomial term = SkewPolynomial::monomial(ctx, target, k);
        q = q + term;
        SkewPolynomial next = r - g * term;
        if (!(next.degree() < r.degree()))
            throw Error(ErrorCode::InvalidArgument, "left division failed to reduce the degree");
        r = std::move(next);
    }
    return DivResult{std::move(q), std::move(r)};
}

bool right_divides(const SkewPolynomial& g, const SkewPolynomial& f) {
    return right_divmod(f, g).remainder.is_zero();
}

bool left_divides(const SkewPolynomial& g, const SkewPolynomial& f) {
    auto d = left_divmod(f, g);
    return d && d->remainder.is_zero();
}

GcdLcm rgcd_llcm(const SkewPolynomial& f, const SkewPolynomial& g) {
    require_same_context(f.context(), g.context());
    if (f.is_zero() && g.is_zero())
        throw Error(ErrorCode::InvalidArgument, "rgcd/llcm of two zero polynomials");
    const ContextPtr& ctx = f.context();
    // Invariant: r = u*f + v*g for both rows of the remainder sequence.
    SkewPolynomial r_prev = f, r = g;
    SkewPolynomial u_prev = SkewPolynomial::one(ctx), u(ctx);
    while (!r.is_zero()) {
        auto [q, rem] = right_divmod(r_prev, r);
        SkewPolynomial u_next = u_prev - q * u;
        if (!rem.is_zero()) {
            // keep the sequence monic to limit coefficient growth
            Element s = rem.leading().inverse();
            rem = rem.scale_left(s);
            u_next = u_next.scale_left(s);
        }
        r_prev = std::move(r);
        u_prev = std::move(u);
        r = std::move(rem);
        u = std::move(u_next);
    }
    return {r_prev.monic(), (u * f).monic()};
}

SkewPolynomial rgcd(const SkewPolynomial& f, const SkewPolynomial& g) { return rgcd_llcm(f, g).rgcd; }
SkewPolynomial llcm(const SkewPolynomial& f, const SkewPolynomial& g) { return rgcd_llcm(f, g).llcm; }

// ---------------------------------------------------------------------------
// literals

namespace {

std::string power_suffix(std::size_t i) {
    if (i == 0) return "";
    if (i == 1) return "t";
    return "t^" + std::to_string(i);
}

std::string term_body(const RingContext& k, const Element& c, std::size_t i) {
    if (i > 0 && c.is_one()) return power_suffix(i);
    std::string s = "[" + k.format(c) + "]";
    if (i > 0) s += "*" + power_suffix(i);
    return s;
}

}  // namespace

std::string SkewPolynomial::to_string() const {
    if (is_zero()) return "0";
    const RingContext& k = *ctx_;
    std::string out;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const Element& c = c_[i];
        if (c.is_zero()) continue;
        Element neg = -c;
        bool use_minus = k.format(c).starts_with('-') && !k.format(neg).starts_with('-');
        if (out.empty()) {
            out = use_minus && i > 0 && neg.is_one() ? "-" + power_suffix(i) : term_body(k, c, i);
        } else if (use_minus) {
            out += " - " + term_body(k, neg, i);
        } else {
            out += " + " + term_body(k, c, i);
        }
    }
    return out;
}

SkewPolynomial SkewPolynomial::parse(ContextPtr ctx, std::string_view text) {
    const RingContext& k = *ctx;
    std::vector<Element> coeffs;
    auto add_term = [&](const Element& c, std::size_t power) {
        if (coeffs.size() <= power) coeffs.resize(power + 1, k.zero());
        coeffs[power] = coeffs[power] + c;
    };
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    bool any = false;
    skip_ws();
    while (pos < text.size()) {
        bool negative = false;
        bool signed_term = false;
        while (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
            if (text[pos] == '-') negative = !negative;
            signed_term = true;
            ++pos;
            skip_ws();
        }
        if (any && !signed_term) throw SyntaxError(pos, "expected '+' or '-' between terms");
        if (pos >= text.size()) throw SyntaxError(pos, "dangling sign");
        std::optional<Element> coeff;
        if (text[pos] == '[') {
            std::size_t close = text.find(']', pos);
            if (close == std::string_view::npos) throw SyntaxError(pos, "unterminated '['");
            try {
                coeff = k.parse(text.substr(pos + 1, close - pos - 1));
            } catch (const SyntaxError& e) {
                throw SyntaxError(pos + 1 + e.position(), "bad coefficient");
            }
            pos = close + 1;
        } else if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
            std::size_t start = pos;
            while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
            coeff = k.from_rational(mpq_class(mpz_class(std::string(text.substr(start, pos - start)))));
        }
        skip_ws();
        bool star = false;
        if (coeff && pos < text.size() && text[pos] == '*') {
            star = true;
            ++pos;
            skip_ws();
        }
        std::size_t power = 0;
        if (pos < text.size() && text[pos] == 't') {
            ++pos;
            power = 1;
            skip_ws();
            if (pos < text.size() && text[pos] == '^') {
                ++pos;
                skip_ws();
                std::size_t start = pos;
                std::size_t p = 0;
                while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
                    p = p * 10 + static_cast<std::size_t>(text[pos] - '0');
                    if (p > 10000) throw SyntaxError(start, "exponent too large");
                    ++pos;
                }
                if (pos == start) throw SyntaxError(pos, "expected exponent after '^'");
                power = p;
            }
        } else if (star || !coeff) {
            throw SyntaxError(pos, "expected 't', '[coefficient]' or an integer");
        }
        Element c = coeff ? *coeff : k.one();
        add_term(negative ? -c : c, power);
        any = true;
        skip_ws();
    }
    if (!any) throw SyntaxError(0, "empty polynomial literal");
    return SkewPolynomial(std::move(ctx), std::move(coeffs));
}

}  // namespace ore
