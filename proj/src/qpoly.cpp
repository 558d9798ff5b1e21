#include "ore/qpoly.hpp"

#include <algorithm>

namespace ore {

QPoly::QPoly(std::vector<mpq_class> coeffs) : c_(std::move(coeffs)) { trim(); }

QPoly::QPoly(const mpq_class& constant) {
    if (constant != 0) c_.push_back(constant);
}

QPoly QPoly::monomial(const mpq_class& c, std::size_t power) {
    if (c == 0) return {};
    std::vector<mpq_class> v(power + 1, mpq_class(0));
    v[power] = c;
    return QPoly(std::move(v));
}

void QPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

QPoly QPoly::operator-() const {
    QPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

QPoly& QPoly::operator+=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator-=(const QPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpq_class(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const QPoly& o) {
    if (is_zero() || o.is_zero()) {
        c_.clear();
        return *this;
    }
    std::vector<mpq_class> r(c_.size() + o.c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    c_ = std::move(r);
    trim();
    return *this;
}

QPoly& QPoly::operator*=(const mpq_class& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& c : c_) c *= s;
    return *this;
}

mpq_class QPoly::operator()(const mpq_class& x) const {
    mpq_class acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
}

QPoly QPoly::monic() const {
    if (is_zero()) return {};
    QPoly r = *this;
    mpq_class inv = 1 / leading();
    r *= inv;
    return r;
}

QPoly QPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<mpq_class> r(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
    return QPoly(std::move(r));
}

QPoly QPoly::compose_square() const {
    if (is_zero()) return {};
    std::vector<mpq_class> r(2 * c_.size() - 1, mpq_class(0));
    for (std::size_t i = 0; i < c_.size(); ++i) r[2 * i] = c_[i];
    return QPoly(std::move(r));
}

QPoly QPoly::negate_variable() const {
    QPoly r = *this;
    for (std::size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

bool QPoly::is_even() const {
    for (std::size_t i = 1; i < c_.size(); i += 2)
        if (c_[i] != 0) return false;
    return true;
}

QPoly QPoly::halve_even() const {
    std::vector<mpq_class> r;
    for (std::size_t i = 0; i < c_.size(); i += 2) r.push_back(c_[i]);
    return QPoly(std::move(r));
}

bool operator<(const QPoly& a, const QPoly& b) {
    if (a.c_.size() != b.c_.size()) return a.c_.size() < b.c_.size();
    for (std::size_t i = a.c_.size(); i-- > 0;) {
        if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
    }
    return false;
}

std::string format_rational(const mpq_class& q) { return q.get_str(); }

std::string QPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::string out;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        const mpq_class& c = c_[i];
        if (c == 0) continue;
        mpz_class num = c.get_num();
        const mpz_class& den = c.get_den();
        bool negative = num < 0;
        if (negative) num = -num;
        if (first) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        first = false;
        if (i == 0 || num != 1) out += num.get_str();
        if (i > 0) {
            out += var;
            if (i > 1) out += "^" + std::to_string(i);
        }
        if (den != 1) out += "/" + den.get_str();
    }
    return out;
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw std::domain_error("QPoly division by zero");
    if (a.degree() < b.degree()) return {QPoly(), a};
    const std::size_t m = b.coeffs().size() - 1;
    const mpq_class lead_inv = 1 / b.leading();
    std::vector<mpq_class> r = a.coeffs();
    std::vector<mpq_class> q(r.size() - m, mpq_class(0));
    mpq_class tmp;
    for (std::size_t k = q.size(); k-- > 0;) {
        mpq_class c = r[k + m] * lead_inv;
        if (c == 0) continue;
        for (std::size_t j = 0; j < m; ++j) {
            tmp = c * b.coeffs()[j];
            r[k + j] -= tmp;
        }
        r[k + m] = 0;
        q[k] = std::move(c);
    }
    r.resize(m);
    return {QPoly(std::move(q)), QPoly(std::move(r))};
}

namespace {

using ZPoly = std::vector<mpz_class>;

void trim_z(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

void make_primitive(ZPoly& p) {
    mpz_class g = 0;
    for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
    if (g == 0 || g == 1) return;
    for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

ZPoly primitive_integer(const QPoly& p) {
    mpz_class l = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c.get_num() * (l / c.get_den()));
    make_primitive(out);
    return out;
}

/// Pseudo-remainder of a by b (lc(b)^k a = q b + r), made primitive.
ZPoly primitive_prem(ZPoly a, const ZPoly& b) {
    const std::size_t m = b.size() - 1;
    const mpz_class& lb = b.back();
    while (a.size() >= b.size()) {
        const std::size_t k = a.size() - b.size();
        mpz_class la = a.back();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
        mpz_class fa = lb / g, fb = la / g;
        for (std::size_t i = 0; i < a.size() - 1; ++i) a[i] *= fa;
        for (std::size_t j = 0; j < m; ++j) a[k + j] -= fb * b[j];
        a.pop_back();
        trim_z(a);
        make_primitive(a);
    }
    return a;
}

}  // namespace

QPoly gcd(QPoly a, QPoly b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return QPoly(1);
    ZPoly x = primitive_integer(a), y = primitive_integer(b);
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return QPoly(1);
        ZPoly r = primitive_prem(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    std::vector<mpq_class> c;
    c.reserve(x.size());
    for (const auto& v : x) c.emplace_back(v);
    return QPoly(std::move(c)).monic();
}

QPoly squarefree_part(const QPoly& p) {
    if (p.is_zero() || p.is_constant()) return p.monic();
    QPoly g = gcd(p, p.derivative());
    return divmod(p, g).first.monic();
}

}  // namespace ore
