#include "ore/wedderburn.hpp"

#include "ore/base_linear.hpp"
#include "ore/error.hpp"
#include "ore/evaluation.hpp"
#include "ore/metro.hpp"
#include "ore/rational_factors.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ore {

std::vector<Element> centralizer(const RingContext& ctx, const Element& a) {
    return kernel_of_map(ctx, [&](const Element& c) { return ctx.apply_S(c) * a + ctx.apply_D(c) - a * c; });
}

Element lambda_map(const SkewPolynomial& f, const Element& a, const Element& x) {
    const RingContext& ctx = f.ring();
    Element lam = x;
    Element sum = f.coeff(0) * lam;
    for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
        lam = ctx.apply_S(lam) * a + ctx.apply_D(lam);
        sum += f.coeffs()[i] * lam;
    }
    return sum;
}

ExponentialSpace exponential_space(const SkewPolynomial& f, const Element& a) {
    const RingContext& ctx = f.ring();
    if (!ctx.contains(a)) throw Error(ErrorCode::ContextMismatch, "class representative outside " + ctx.ring_tag());
    ExponentialSpace e{a, kernel_of_map(ctx, [&](const Element& x) { return lambda_map(f, a, x); }), {}};
    const BaseField field = base_field_of(ctx);
    const auto cent = centralizer(ctx, a);
    std::vector<BaseVector> span;
    for (const auto& x : e.base_basis) {
        if (in_span(field, span, ctx.coordinates(x))) continue;
        e.basis.push_back(x);
        for (const auto& c : cent) span.push_back(ctx.coordinates(x * c));
    }
    return e;
}

std::vector<std::vector<Element>> conjugacy_classes(const ContextPtr& ctx) {
    const RingContext& k = *ctx;
    const auto all = k.enumerate();
    std::vector<Element> units(all.begin() + 1, all.end());
    std::set<Element> seen;
    std::vector<std::vector<Element>> classes;
    for (const auto& a : all) {
        if (seen.count(a)) continue;
        std::vector<Element> cls;
        for (const auto& c : units) cls.push_back(conjugate(k, a, c));
        std::sort(cls.begin(), cls.end());
        cls.erase(std::unique(cls.begin(), cls.end()), cls.end());
        seen.insert(cls.begin(), cls.end());
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& x, const auto& y) { return x.front() < y.front(); });
    return classes;
}

namespace {

QPoly rational_coefficients(const SkewPolynomial& f) {
    std::vector<mpq_class> c;
    for (const auto& e : f.coeffs()) c.push_back(e.as<mpq_class>());
    return QPoly(std::move(c));
}

mpz_class binomial(unsigned long n, unsigned long k) {
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

std::vector<Element> quaternion_classes(const SkewPolynomial& f) {
    const RingContext& ctx = f.ring();
    const Quaternion d = ctx.derivation().d ? ctx.derivation().d->as<Quaternion>() : Quaternion();
    // f in terms of t' = t - d, which commutes with K.
    const std::size_t n = f.coeffs().size();
    std::vector<Quaternion> shifted(n);
    for (std::size_t i = 0; i < n; ++i) {
        Quaternion dp(mpq_class(1));
        const Quaternion& b = f.coeffs()[i].as<Quaternion>();
        for (std::size_t k = i + 1; k-- > 0;) {
            // term k of (t' + d)^i is C(i,k) d^(i-k) t'^k
            shifted[k] = shifted[k] + b * dp * Quaternion(mpq_class(binomial(i, k)));
            dp = dp * d;
        }
    }
    std::vector<mpq_class> norm(n == 0 ? 0 : 2 * n - 1, mpq_class(0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l) {
            Quaternion prod = shifted[k] * shifted[l].conj();
            norm[k + l] += prod.w;
        }
    LowDegreeFactors factors = low_degree_factors(QPoly(std::move(norm)));
    std::vector<Element> reps;
    for (const auto& r : factors.roots) reps.emplace_back(Quaternion(r) + d);
    for (const auto& [s, nn] : factors.definite_quadratics) {
        mpq_class m = nn - s * s / 4;
        auto sq = three_squares(m.get_num() * m.get_den());
        if (!sq) continue;  // no rational quaternion has this trace and norm
        mpq_class den(m.get_den());
        Quaternion v(mpq_class(s / 2), mpq_class((*sq)[0]) / den, mpq_class((*sq)[1]) / den,
                     mpq_class((*sq)[2]) / den);
        reps.emplace_back(v + d);
    }
    return reps;
}

void require_monic(const SkewPolynomial& f, const char* what) {
    if (!f.is_monic()) throw Error(ErrorCode::InvalidArgument, std::string(what) + " needs a monic polynomial");
}

bool has_class_enumeration(const RingContext& ctx) {
    return ctx.capabilities().finitely_enumerable || ctx.backend() == Backend::Quaternions ||
           ctx.backend() == Backend::Rationals;
}

std::vector<Element> search_space(const ContextPtr& ctx, const std::vector<Element>* domain) {
    std::vector<Element> space = domain ? *domain : std::vector<Element>{};
    for (auto& e : default_search_domain(ctx)) space.push_back(std::move(e));
    std::sort(space.begin(), space.end());
    space.erase(std::unique(space.begin(), space.end()), space.end());
    return space;
}

}  // namespace

std::vector<Element> candidate_classes(const SkewPolynomial& f) {
    const ContextPtr& ctx = f.context();
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "classes of the zero polynomial");
    if (ctx->capabilities().finitely_enumerable) {
        std::vector<Element> reps;
        for (const auto& cls : conjugacy_classes(ctx)) reps.push_back(cls.front());
        return reps;
    }
    if (ctx->backend() == Backend::Quaternions) return quaternion_classes(f);
    if (ctx->backend() == Backend::Rationals) {
        std::vector<Element> reps;
        for (const auto& r : low_degree_factors(rational_coefficients(f)).roots) reps.emplace_back(r);
        return reps;
    }
    throw Error(ErrorCode::CapabilityMissing, "conjugacy classes are not enumerable on " + ctx->name());
}

std::vector<Element> default_search_domain(const ContextPtr& ctx) {
    std::vector<Element> out;
    if (ctx->backend() != Backend::RationalFunctions) return out;
    const Element var = *ctx->symbol(std::string(1, ctx->variable()));
    for (long e = -2; e <= 2; ++e)
        for (long c = -2; c <= 2; ++c) out.push_back(ctx->from_int(c) + ctx->from_int(e) * var);
    std::sort(out.begin(), out.end());
    return out;
}

ZeroSet zero_set(const SkewPolynomial& f, const std::vector<Element>* domain) {
    if (f.is_zero()) throw Error(ErrorCode::InvalidArgument, "zero set of the zero polynomial");
    const ContextPtr& ctx = f.context();
    const RingContext& k = *ctx;
    const std::size_t n = f.degree().value();
    MinimalPolynomialBuilder builder(ctx);
    auto done = [&] { return builder.basis().size() == n; };
    ZeroSet zs{false, {}, SkewPolynomial(ctx), {}};
    if (n == 0) {
    } else if (k.capabilities().finitely_enumerable) {
        for (const auto& x : k.enumerate()) {
            if (done()) break;
            if (evaluate(f, x).is_zero()) builder.add(x);
        }
    } else if (k.backend() == Backend::Rationals) {
        for (const auto& r : candidate_classes(f)) builder.add(r);
    } else if (k.backend() == Backend::Quaternions) {
        for (const auto& a : candidate_classes(f)) {
            if (done()) break;
            for (const auto& x : exponential_space(f, a).base_basis) {
                if (done()) break;
                builder.add(conjugate(k, a, x));
            }
        }
    } else {
        if (n == 1) builder.add(-f.coeff(0));
        const auto space = search_space(ctx, domain);
        for (const auto& x : right_roots(f, &space)) {
            if (done()) break;
            builder.add(x);
        }
        if (n == 2 && builder.basis().size() == 1) {
            // f = (t - b)(t - a): a second root is a - x^{-1} for a solution
            // x of a x - S(x) b - D(x) = 1, and V(f) = {a} when none exists.
            const Element a = builder.basis().front();
            const SkewPolynomial q = right_divmod(f, SkewPolynomial::linear(ctx, a)).quotient;
            MetroSolutionReport sol = solve_metro(k, MetroProblem(a, -q.coeff(0), k.one()));
            if (sol.status == MetroSolutionReport::Status::Solution) {
                builder.add(a - sol.x->inverse());
            } else if (sol.status == MetroSolutionReport::Status::NoSolution) {
                zs.complete = true;
            } else {
                zs.limitation = sol.reason;
            }
        }
        if (!zs.complete && !done() && zs.limitation.empty())
            zs.limitation = "roots searched in a finite domain of " + std::to_string(space.size()) + " elements";
    }
    zs.basis = builder.basis();
    zs.polynomial = builder.polynomial();
    if (has_class_enumeration(k) || done()) {
        zs.complete = true;
        zs.limitation.clear();
    }
    return zs;
}

std::size_t zero_set_rank(const SkewPolynomial& f, const std::vector<Element>* domain) {
    ZeroSet zs = zero_set(f, domain);
    if (!zs.complete && !domain) throw Error(ErrorCode::DomainRequired, zs.limitation);
    return zs.basis.size();
}

std::string to_string(WCertificate::Verdict v) {
    switch (v) {
        case WCertificate::Verdict::IsW: return "IS_W";
        case WCertificate::Verdict::NotW: return "NOT_W";
        case WCertificate::Verdict::NotSplit: return "NOT_SPLIT";
        case WCertificate::Verdict::Undecided: return "UNDECIDED";
    }
    return "?";
}

WCertificate is_wedderburn(const SkewPolynomial& f, const std::vector<Element>* domain) {
    require_monic(f, "is_wedderburn");
    ZeroSet zs = zero_set(f, domain);
    WCertificate cert{WCertificate::Verdict::Undecided, f, zs.basis, zs.polynomial, zs.limitation};
    if (zs.polynomial.degree() == f.degree()) cert.verdict = WCertificate::Verdict::IsW;
    else if (zs.complete) cert.verdict = WCertificate::Verdict::NotW;
    else if (zs.basis.empty()) cert.verdict = WCertificate::Verdict::NotSplit;
    return cert;
}

bool verify_certificate(const WCertificate& cert) {
    const SkewPolynomial& f = cert.polynomial;
    for (const auto& r : cert.roots)
        if (!evaluate(f, r).is_zero()) return false;
    MinimalPolynomialResult m = minimal_polynomial(f.context(), cert.roots);
    if (m.rank() != cert.roots.size() || m.polynomial != cert.zero_set_polynomial) return false;
    switch (cert.verdict) {
        case WCertificate::Verdict::IsW: return m.polynomial == f;
        case WCertificate::Verdict::NotW:
            return cert.zero_set_polynomial.degree() < f.degree() && right_divides(cert.zero_set_polynomial, f);
        default: return right_divides(cert.zero_set_polynomial, f);
    }
}

namespace {

std::optional<Element> first_root(const SkewPolynomial& g, const std::vector<Element>* domain) {
    const RingContext& k = g.ring();
    if (k.capabilities().finitely_enumerable) {
        for (const auto& x : k.enumerate())
            if (evaluate(g, x).is_zero()) return x;
        return std::nullopt;
    }
    if (k.backend() == Backend::Rationals) {
        auto reps = candidate_classes(g);
        if (reps.empty()) return std::nullopt;
        return reps.front();
    }
    if (k.backend() == Backend::Quaternions) {
        for (const auto& a : candidate_classes(g)) {
            auto e = exponential_space(g, a);
            if (!e.base_basis.empty()) return conjugate(k, a, e.base_basis.front());
        }
        return std::nullopt;
    }
    ZeroSet zs = zero_set(g, domain);
    if (zs.basis.empty()) return std::nullopt;
    return zs.basis.front();
}

}  // namespace

SplitResult split(const SkewPolynomial& f, const std::vector<Element>* domain) {
    require_monic(f, "split");
    if (f.degree() == 0) throw Error(ErrorCode::InvalidArgument, "split needs degree >= 1");
    const ContextPtr& ctx = f.context();
    SplitResult r;
    SkewPolynomial g = f;
    while (g.degree() > 0) {
        auto root = first_root(g, domain);
        if (!root) {
            r.reason = "no right root of " + g.to_string() +
                       (has_class_enumeration(*ctx) ? std::string(" in ") + ctx->ring_tag()
                                                    : std::string(" in the search domain"));
            return r;
        }
        g = right_divmod(g, SkewPolynomial::linear(ctx, *root)).quotient;
        r.roots.push_back(*root);
    }
    r.split = true;
    return r;
}

std::size_t exponential_dimension_sum(const SkewPolynomial& f) {
    std::size_t sum = 0;
    for (const auto& a : candidate_classes(f)) sum += exponential_space(f, a).dimension();
    return sum;
}

MatrixOverK::MatrixOverK(ContextPtr ctx, std::size_t rows, std::size_t cols)
    : ctx_(std::move(ctx)), rows_(rows), cols_(cols), a_(rows * cols, ctx_->zero()) {}

MatrixOverK operator*(const MatrixOverK& x, const MatrixOverK& y) {
    if (x.cols_ != y.rows_) throw Error(ErrorCode::InvalidArgument, "matrix dimensions do not match");
    MatrixOverK r(x.ctx_, x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
        for (std::size_t j = 0; j < y.cols_; ++j)
            for (std::size_t k = 0; k < x.cols_; ++k) r(i, j) += x(i, k) * y(k, j);
    return r;
}

MatrixOverK operator+(const MatrixOverK& x, const MatrixOverK& y) {
    if (x.rows_ != y.rows_ || x.cols_ != y.cols_) throw Error(ErrorCode::InvalidArgument, "matrix dimensions do not match");
    MatrixOverK r = x;
    for (std::size_t i = 0; i < r.a_.size(); ++i) r.a_[i] += y.a_[i];
    return r;
}

bool operator==(const MatrixOverK& x, const MatrixOverK& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.a_ == y.a_;
}

MatrixOverK MatrixOverK::apply_S() const {
    MatrixOverK r = *this;
    for (auto& e : r.a_) e = ctx_->apply_S(e);
    return r;
}

MatrixOverK MatrixOverK::apply_D() const {
    MatrixOverK r = *this;
    for (auto& e : r.a_) e = ctx_->apply_D(e);
    return r;
}

std::size_t MatrixOverK::rank() const {
    MatrixOverK m = *this;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t p = row;
        while (p < rows_ && m(p, col).is_zero()) ++p;
        if (p == rows_) continue;
        for (std::size_t c = 0; c < cols_; ++c) std::swap(m(p, c), m(row, c));
        const Element inv = m(row, col).inverse();
        for (std::size_t r = row + 1; r < rows_; ++r) {
            if (m(r, col).is_zero()) continue;
            const Element factor = m(r, col) * inv;
            for (std::size_t c = col; c < cols_; ++c) m(r, c) -= factor * m(row, c);
        }
        ++row;
    }
    return row;
}

std::string MatrixOverK::to_string() const {
    std::ostringstream out;
    out << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        if (i) out << "; ";
        for (std::size_t j = 0; j < cols_; ++j) out << (j ? ", " : "") << ctx_->format((*this)(i, j));
    }
    out << ']';
    return out.str();
}

MatrixOverK companion(const SkewPolynomial& f) {
    require_monic(f, "companion");
    const std::size_t n = f.degree().value();
    if (n == 0) throw Error(ErrorCode::InvalidArgument, "companion matrix needs degree >= 1");
    MatrixOverK c(f.context(), n, n);
    for (std::size_t i = 0; i + 1 < n; ++i) c(i, i + 1) = f.ring().one();
    for (std::size_t k = 0; k < n; ++k) c(n - 1, k) = -f.coeff(k);
    return c;
}

MatrixOverK vandermonde(const ContextPtr& ctx, const std::vector<Element>& c) {
    const std::size_t n = c.size();
    MatrixOverK v(ctx, n, n);
    for (std::size_t j = 0; j < n; ++j) {
        auto table = power_function(*ctx, c[j], n == 0 ? 0 : n - 1);
        for (std::size_t i = 0; i < n; ++i) v(i, j) = table.values[i];
    }
    return v;
}

bool diagonalization_check(const SkewPolynomial& f, const std::vector<Element>& roots) {
    if (f.is_zero() || roots.size() != f.degree().value())
        throw Error(ErrorCode::InvalidArgument, "need exactly deg f roots");
    const ContextPtr& ctx = f.context();
    MatrixOverK v = vandermonde(ctx, roots);
    if (!v.invertible()) return false;
    MatrixOverK lhs = companion(f) * v;
    MatrixOverK rhs = v.apply_D();
    for (std::size_t i = 0; i < v.rows(); ++i)
        for (std::size_t j = 0; j < v.cols(); ++j) rhs(i, j) += ctx->apply_S(v(i, j)) * roots[j];
    return lhs == rhs;
}

SkewPolynomial right_lcm_linear(const ContextPtr& ctx, const std::vector<Element>& b) {
    if (!ctx->capabilities().s_is_automorphism)
        throw Error(ErrorCode::CapabilityMissing, "right lcm needs an invertible S on " + ctx->name());
    SkewPolynomial g = SkewPolynomial::one(ctx);
    for (const auto& bi : b) {
        auto dm = left_divmod(g, SkewPolynomial::linear(ctx, bi));
        if (!dm) throw Error(ErrorCode::CapabilityMissing, "left division failed on " + ctx->name());
        if (dm->remainder.is_zero()) continue;
        // g (t - b') lies in (t - b_i) R for s = S^{-1}(r), b' = r^{-1}(b_i s - D(s)).
        const Element r = dm->remainder.coeff(0);
        const Element s = *ctx->s_preimage(r);
        const Element bp = r.inverse() * (bi * s - ctx->apply_D(s));
        g = g * SkewPolynomial::linear(ctx, bp);
    }
    return g;
}

DualRepresentation dual_representation(const ContextPtr& ctx, const std::vector<Element>& basis) {
    MinimalPolynomialResult m = minimal_polynomial(ctx, basis);
    if (m.rank() != basis.size()) throw Error(ErrorCode::NotPIndependent, "dual representation needs a P-independent set");
    DualRepresentation rep{m.polynomial, {}, false};
    for (std::size_t i = 0; i < basis.size(); ++i) {
        std::vector<Element> others;
        for (std::size_t j = 0; j < basis.size(); ++j)
            if (j != i) others.push_back(basis[j]);
        const SkewPolynomial h = minimal_polynomial(ctx, others).polynomial;
        rep.b.push_back(conjugate(*ctx, basis[i], evaluate(h, basis[i])));
    }
    rep.verified = std::all_of(rep.b.begin(), rep.b.end(),
                               [&](const Element& b) { return left_divides(SkewPolynomial::linear(ctx, b), rep.polynomial); }) &&
                   right_lcm_linear(ctx, rep.b) == rep.polynomial;
    return rep;
}

bool has_dual_right_representation(const SkewPolynomial& f, const std::vector<Element>* domain) {
    require_monic(f, "dual representation");
    const auto left = left_roots(f, domain);
    return right_lcm_linear(f.context(), left) == f;
}

std::string to_string(Check c) {
    switch (c) {
        case Check::True: return "true";
        case Check::False: return "false";
        case Check::Untested: return "UNTESTED";
    }
    return "?";
}

namespace {

bool agree_all(std::initializer_list<Check> checks) {
    std::optional<Check> seen;
    for (Check c : checks) {
        if (c == Check::Untested) continue;
        if (seen && *seen != c) return false;
        seen = c;
    }
    return true;
}

Check both(Check a, Check b) {
    if (a == Check::False || b == Check::False) return Check::False;
    if (a == Check::Untested || b == Check::Untested) return Check::Untested;
    return Check::True;
}

Check w_check(const SkewPolynomial& p, const std::vector<Element>* domain) {
    WCertificate c = is_wedderburn(p, domain);
    if (c.verdict == WCertificate::Verdict::IsW) return Check::True;
    if (c.verdict == WCertificate::Verdict::NotW) return Check::False;
    return Check::Untested;
}

std::vector<SkewPolynomial> monic_polynomials(const ContextPtr& ctx, std::size_t degree) {
    const auto all = ctx->enumerate();
    std::vector<SkewPolynomial> out;
    std::vector<std::size_t> idx(degree, 0);
    for (;;) {
        std::vector<Element> c;
        for (auto i : idx) c.push_back(all[i]);
        c.push_back(ctx->one());
        out.emplace_back(ctx, std::move(c));
        std::size_t pos = 0;
        while (pos < degree && ++idx[pos] == all.size()) idx[pos++] = 0;
        if (pos == degree) break;
    }
    return out;
}

}  // namespace

std::vector<SkewPolynomial> monic_right_divisors(const SkewPolynomial& f) {
    require_monic(f, "monic_right_divisors");
    const ContextPtr& ctx = f.context();
    if (!ctx->capabilities().finitely_enumerable)
        throw Error(ErrorCode::CapabilityMissing, "divisor enumeration needs a finite K");
    const std::size_t n = f.degree().value();
    std::vector<SkewPolynomial> out;
    for (std::size_t d = 1; d <= n; ++d) {
        if (d == n) {
            out.push_back(f);
        } else if (d == 1) {
            for (const auto& r : right_roots(f)) out.push_back(SkewPolynomial::linear(ctx, r));
        } else if (d + 1 == n) {
            // f = (t - e) q exactly when e is a left root.
            for (const auto& e : left_roots(f)) out.push_back(left_divmod(f, SkewPolynomial::linear(ctx, e))->quotient);
        } else {
            for (auto& p : monic_polynomials(ctx, d))
                if (right_divides(p, f)) out.push_back(std::move(p));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool FactorTheoremReport::agree() const { return agree_all({is_w, all_factors_w, quadratic_factors_w}); }

FactorTheoremReport factor_theorem_check(const SkewPolynomial& f, const std::vector<Element>* domain) {
    require_monic(f, "factor_theorem_check");
    const ContextPtr& ctx = f.context();
    FactorTheoremReport rep;
    rep.is_w = w_check(f, domain);
    if (f.degree() == 0) {
        rep.splits = true;
        rep.all_factors_w = rep.quadratic_factors_w = Check::True;
        return rep;
    }
    const SplitResult s = split(f, domain);
    rep.splits = s.split;
    const bool definitive = has_class_enumeration(*ctx);
    if (!s.split) {
        rep.note = s.reason;
        rep.all_factors_w = rep.quadratic_factors_w = definitive ? Check::False : Check::Untested;
        return rep;
    }
    std::vector<SkewPolynomial> factors;
    if (ctx->capabilities().finitely_enumerable) {
        std::vector<SkewPolynomial> right = monic_right_divisors(f);
        right.push_back(SkewPolynomial::one(ctx));
        for (const auto& p2 : right) {
            const SkewPolynomial q = right_divmod(f, p2).quotient;
            if (q.degree() == 0) continue;
            for (auto& p : monic_right_divisors(q)) factors.push_back(std::move(p));
        }
    } else {
        const std::size_t n = s.roots.size();
        for (std::size_t i = 0; i < n; ++i) {
            SkewPolynomial p = SkewPolynomial::one(ctx);
            for (std::size_t j = i; j < n; ++j) {
                p = SkewPolynomial::linear(ctx, s.roots[j]) * p;
                factors.push_back(p);
            }
        }
        rep.note = "factors restricted to consecutive subproducts of one splitting";
    }
    std::sort(factors.begin(), factors.end());
    factors.erase(std::unique(factors.begin(), factors.end()), factors.end());
    Check all = Check::True, quad = Check::True;
    for (const auto& p : factors) {
        Check c = w_check(p, domain);
        all = both(all, c);
        if (p.degree() == 2) quad = both(quad, c);
    }
    rep.all_factors_w = all;
    rep.quadratic_factors_w = quad;
    rep.factors_checked = std::move(factors);
    return rep;
}

bool unit_in_sum(const SkewPolynomial& g, const SkewPolynomial& h) {
    require_same_context(g.context(), h.context());
    const ContextPtr& ctx = g.context();
    if ((!g.is_zero() && g.degree() == 0) || (!h.is_zero() && h.degree() == 0)) return true;
    if (g.is_zero() || h.is_zero()) return false;
    if (!ctx->capabilities().s_is_automorphism)
        throw Error(ErrorCode::CapabilityMissing, "bounded-degree membership needs an invertible S");
    // With S invertible any 1 = u g + h v can be rewritten with deg u < deg h
    // by left division of u by h, which then forces deg v < deg g.
    const BaseField field = base_field_of(*ctx);
    const std::size_t dim = ctx->capabilities().central_dimension;
    const std::size_t r = g.degree().value(), s = h.degree().value();
    const std::size_t len = r + s;
    BaseMatrix m(field, len * dim, len * dim);
    std::size_t col = 0;
    auto put = [&](const SkewPolynomial& p) {
        BaseVector v(len * dim, mpq_class(0));
        for (std::size_t i = 0; i < len; ++i) {
            auto c = ctx->coordinates(p.coeff(i));
            for (std::size_t k = 0; k < dim; ++k) v[i * dim + k] = c[k];
        }
        m.set_column(col++, v);
    };
    for (std::size_t k = 0; k < dim; ++k) {
        BaseVector e(dim, mpq_class(0));
        e[k] = 1;
        const Element basis = ctx->from_coordinates(e);
        for (std::size_t i = 0; i < s; ++i) put(SkewPolynomial::monomial(ctx, basis, i) * g);
        for (std::size_t j = 0; j < r; ++j) put(h * SkewPolynomial::monomial(ctx, basis, j));
    }
    BaseVector target(len * dim, mpq_class(0));
    auto one = ctx->coordinates(ctx->one());
    for (std::size_t k = 0; k < dim; ++k) target[k] = one[k];
    return m.solve(target).has_value();
}

bool ProductTheoremReport::agree() const {
    Check gh = both(g_w, h_w);
    return agree_all({product_w, both(gh, unit_in_sum), both(gh, image_contains), both(gh, quadratics_w)});
}

ProductTheoremReport product_theorem_check(const SkewPolynomial& g, const SkewPolynomial& h,
                                           const std::vector<Element>* domain) {
    require_monic(g, "product_theorem_check");
    require_monic(h, "product_theorem_check");
    require_same_context(g.context(), h.context());
    const ContextPtr& ctx = g.context();
    const RingContext& k = *ctx;
    ProductTheoremReport rep;
    rep.product_w = w_check(g * h, domain);
    rep.g_w = w_check(g, domain);
    rep.h_w = w_check(h, domain);
    std::vector<std::string> notes;
    if (k.capabilities().central_dimension > 0 && k.capabilities().s_is_automorphism) {
        rep.unit_in_sum = to_check(unit_in_sum(g, h));
    } else {
        notes.push_back("1 in Rg + hR UNTESTED on " + k.ring_tag());
    }
    auto quadratic_w = [&](const Element& a, const Element& b) -> Check {
        SkewPolynomial q = SkewPolynomial::linear(ctx, a) * SkewPolynomial::linear(ctx, b);
        if (k.capabilities().finitely_enumerable) return to_check(right_roots(q).size() >= 2);
        return w_check(q, domain);
    };
    if (k.capabilities().finitely_enumerable) {
        std::set<Element> image;
        for (const auto& x : k.enumerate())
            if (auto y = phi_transform(h, x)) image.insert(*y);
        const auto vg = right_roots(g);
        rep.image_contains = to_check(std::all_of(vg.begin(), vg.end(), [&](const Element& a) { return image.count(a) > 0; }));
        Check q = Check::True;
        const auto vh = left_roots(h);
        for (const auto& a : vg)
            for (const auto& b : vh) q = both(q, quadratic_w(a, b));
        rep.quadratics_w = q;
    } else {
        notes.push_back("V(g) in im(Phi_h) UNTESTED on " + k.ring_tag());
        if (g.degree() == 1 && h.degree() == 1) {
            rep.quadratics_w = quadratic_w(-g.coeff(0), -h.coeff(0));
        } else if (domain && k.capabilities().s_preimage_decidable) {
            Check q = Check::True;
            for (const auto& a : right_roots(g, domain))
                for (const auto& b : left_roots(h, domain)) q = both(q, quadratic_w(a, b));
            rep.quadratics_w = q;
            notes.push_back("quadratic criterion restricted to the search domain");
        } else {
            notes.push_back("quadratic criterion UNTESTED without a search domain");
        }
    }
    for (std::size_t i = 0; i < notes.size(); ++i) rep.note += (i ? "; " : "") + notes[i];
    return rep;
}

namespace {

std::vector<Element> closure_space(const ContextPtr& ctx, const std::vector<Element>* domain) {
    if (domain) return *domain;
    if (ctx->capabilities().finitely_enumerable) return ctx->enumerate();
    return {};
}

/// rk of V(f1) n V(f2) = V(rgcd(f1, f2)), by enumeration of a domain when
/// given or K is finite, exactly otherwise.
std::size_t common_zero_rank(const SkewPolynomial& f1, const SkewPolynomial& f2, const std::vector<Element>* domain) {
    const ContextPtr& ctx = f1.context();
    if (domain || ctx->capabilities().finitely_enumerable) {
        std::vector<Element> common;
        for (const auto& x : closure_space(ctx, domain))
            if (evaluate(f1, x).is_zero() && evaluate(f2, x).is_zero()) common.push_back(x);
        return minimal_polynomial(ctx, common).rank();
    }
    return zero_set_rank(rgcd(f1, f2));
}

}  // namespace

RankSides rank_union_check(const AlgebraicSet& delta, const AlgebraicSet& gamma, const std::vector<Element>* domain) {
    require_same_context(delta.context(), gamma.context());
    const ContextPtr& ctx = delta.context();
    const auto fd = minimal_polynomial(delta), fg = minimal_polynomial(gamma);
    std::vector<Element> uni = delta.elements();
    for (const auto& x : gamma.elements())
        if (!delta.contains(x)) uni.push_back(x);
    RankSides r;
    r.lhs = fd.rank() + fg.rank();
    r.rhs = minimal_polynomial(ctx, uni).rank() + common_zero_rank(fd.polynomial, fg.polynomial, domain);
    return r;
}

RankSides phi_rank_check(const SkewPolynomial& h, const AlgebraicSet& delta, const std::vector<Element>* domain) {
    require_same_context(h.context(), delta.context());
    const ContextPtr& ctx = delta.context();
    std::vector<Element> image;
    for (const auto& x : delta.elements()) {
        auto y = phi_transform(h, x);
        if (!y) throw Error(ErrorCode::DisjointnessViolated, ctx->format(x) + " is a root of " + h.to_string());
        image.push_back(*y);
    }
    std::sort(image.begin(), image.end());
    image.erase(std::unique(image.begin(), image.end()), image.end());
    const auto fd = minimal_polynomial(delta);
    RankSides r;
    r.lhs = minimal_polynomial(ctx, image).rank();
    r.rhs = fd.rank() - common_zero_rank(fd.polynomial, h, domain);
    return r;
}

RankSides product_rank_bound(const SkewPolynomial& g, const SkewPolynomial& h, const std::vector<Element>* domain) {
    RankSides r;
    r.lhs = zero_set_rank(g * h, domain);
    r.rhs = zero_set_rank(g, domain) + zero_set_rank(h, domain);
    return r;
}

}  // namespace ore
