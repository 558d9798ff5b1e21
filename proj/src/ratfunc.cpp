#include "ore/ratfunc.hpp"

#include <stdexcept>

namespace ore {

RatFunc::RatFunc(QPoly num, QPoly den) {
    if (den.is_zero()) throw std::domain_error("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = QPoly(1);
        return;
    }
    QPoly g = den.is_constant() ? QPoly(1) : gcd(num, den);
    if (g.degree() > 0) {
        num = divmod(num, g).first;
        den = divmod(den, g).first;
    }
    mpq_class lead_inv = 1 / den.leading();
    num *= lead_inv;
    den *= lead_inv;
    num_ = std::move(num);
    den_ = std::move(den);
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    QPoly g = gcd(a.den_, b.den_);
    if (g.is_constant()) {
        // reduced fractions over coprime denominators add to a reduced fraction
        QPoly num = a.num_ * b.den_ + b.num_ * a.den_;
        if (num.is_zero()) return {};
        return RatFunc(std::move(num), a.den_ * b.den_, RatFunc::Canonical{});
    }
    QPoly da = divmod(a.den_, g).first, db = divmod(b.den_, g).first;
    return RatFunc(a.num_ * db + b.num_ * da, da * b.den_);
}

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // cross-cancel so that the product is already reduced
    QPoly an = a.num_, ad = a.den_, bn = b.num_, bd = b.den_;
    QPoly g1 = gcd(an, bd);
    if (!g1.is_constant()) {
        an = divmod(an, g1).first;
        bd = divmod(bd, g1).first;
    }
    QPoly g2 = gcd(bn, ad);
    if (!g2.is_constant()) {
        bn = divmod(bn, g2).first;
        ad = divmod(ad, g2).first;
    }
    QPoly num = an * bn, den = ad * bd;
    mpq_class lead_inv = 1 / den.leading();
    num *= lead_inv;
    den *= lead_inv;
    return RatFunc(std::move(num), std::move(den), RatFunc::Canonical{});
}

bool operator<(const RatFunc& a, const RatFunc& b) {
    if (!(a.num_ == b.num_)) return a.num_ < b.num_;
    return a.den_ < b.den_;
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw std::domain_error("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derivative() const {
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::compose_square() const {
    return RatFunc(num_.compose_square(), den_.compose_square(), RatFunc::Canonical{});
}

std::optional<RatFunc> RatFunc::square_preimage() const {
    // r = p/q = p(x)q(-x) / (q(x)q(-x)); the denominator is even, so r is in
    // the image of x -> x^2 exactly when the new numerator is even.
    QPoly q_neg = den_.negate_variable();
    QPoly n = num_ * q_neg;
    QPoly d = den_ * q_neg;
    if (!n.is_even()) return std::nullopt;
    return RatFunc(n.halve_even(), d.halve_even());
}

std::string RatFunc::to_string(char var) const {
    if (is_polynomial()) return num_.to_string(var);
    std::string n = num_.to_string(var);
    std::string d = den_.to_string(var);
    bool n_simple = num_.coeffs().size() <= 1 || n.find_first_of("+- ", 1) == std::string::npos;
    bool d_simple = d.find_first_of("+-/ ") == std::string::npos;
    if (!n_simple || n.find('/') != std::string::npos) n = "(" + n + ")";
    if (!d_simple) d = "(" + d + ")";
    return n + "/" + d;
}

}  // namespace ore
