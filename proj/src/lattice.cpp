#include "ore/lattice.hpp"

#include "ore/error.hpp"
#include "ore/evaluation.hpp"
#include "ore/wedderburn.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <sstream>

namespace ore {

SubsetTable::SubsetTable(ContextPtr ctx) : ctx_(std::move(ctx)) {
    if (!ctx_->capabilities().finitely_enumerable)
        throw Error(ErrorCode::CapabilityMissing, "subset tables need a finite K, not " + ctx_->name());
    elements_ = ctx_->enumerate();
    if (elements_.size() > 16) throw Error(ErrorCode::CapabilityMissing, "subset tables are limited to 16 elements");
    const std::size_t count = std::size_t(1) << elements_.size();
    poly_.reserve(count);
    poly_.push_back(SkewPolynomial::one(ctx_));
    closure_.assign(count, 0);
    for (std::size_t m = 1; m < count; ++m) {
        const Element& a = elements_[static_cast<std::size_t>(std::countr_zero(m))];
        const SkewPolynomial& g = poly_[m & (m - 1)];
        Element v = evaluate(g, a);
        poly_.push_back(v.is_zero() ? g : SkewPolynomial::linear(ctx_, conjugate(*ctx_, a, v)) * g);
    }
    for (std::size_t m = 0; m < count; ++m) {
        Mask c = 0;
        for (std::size_t i = 0; i < elements_.size(); ++i)
            if (evaluate(poly_[m], elements_[i]).is_zero()) c |= Mask(1) << i;
        closure_[m] = c;
    }
}

Mask SubsetTable::mask_of(const std::vector<Element>& set) const {
    Mask m = 0;
    for (const auto& x : set) {
        auto it = std::find(elements_.begin(), elements_.end(), x);
        if (it == elements_.end()) throw Error(ErrorCode::ContextMismatch, "element outside " + ctx_->ring_tag());
        m |= Mask(1) << (it - elements_.begin());
    }
    return m;
}

std::vector<Element> SubsetTable::elements_of(Mask m) const {
    std::vector<Element> out;
    for (std::size_t i = 0; i < elements_.size(); ++i)
        if (m >> i & 1) out.push_back(elements_[i]);
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t FiniteLattice::bottom() const {
    for (std::size_t i = 0; i < size(); ++i)
        if (std::all_of(leq[i].begin(), leq[i].end(), [](char c) { return c != 0; })) return i;
    return npos;
}

std::size_t FiniteLattice::top() const {
    for (std::size_t j = 0; j < size(); ++j) {
        bool all = true;
        for (std::size_t i = 0; i < size() && all; ++i) all = leq[i][j] != 0;
        if (all) return j;
    }
    return npos;
}

std::vector<std::pair<std::size_t, std::size_t>> FiniteLattice::covering_edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    const std::size_t n = size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j || !leq[i][j]) continue;
            bool between = false;
            for (std::size_t k = 0; k < n && !between; ++k)
                between = k != i && k != j && leq[i][k] && leq[k][j];
            if (!between) out.emplace_back(i, j);
        }
    return out;
}

std::string FiniteLattice::node_label(std::size_t i) const {
    if (marker[i]) return i == 0 ? "BOTTOM" : "TOP";
    if (kind == Kind::WPolynomials) return polynomials[i].to_string();
    std::string s = "{";
    for (std::size_t k = 0; k < sets[i].size(); ++k) s += (k ? ", " : "") + ctx->format(sets[i][k]);
    return s + "}";
}

std::string FiniteLattice::to_dot() const {
    std::ostringstream out;
    out << "digraph lattice {\n  rankdir=BT;\n";
    for (std::size_t i = 0; i < size(); ++i) out << "  n" << i << " [label=\"" << node_label(i) << "\"];\n";
    for (const auto& [lo, hi] : covering_edges()) out << "  n" << lo << " -> n" << hi << ";\n";
    out << "}\n";
    return out.str();
}

std::string to_string(FiniteLattice::Kind k) {
    return k == FiniteLattice::Kind::FullSets ? "full-sets" : "w-polynomials";
}

namespace {

struct NodeKey {
    std::size_t rank;
    std::vector<Element> set;
    bool operator<(const NodeKey& o) const {
        if (rank != o.rank) return rank < o.rank;
        return std::lexicographical_compare(set.begin(), set.end(), o.set.begin(), o.set.end());
    }
};

void init_tables(FiniteLattice& l) {
    const std::size_t n = l.sets.size();
    l.leq.assign(n, std::vector<char>(n, 0));
    l.meet.assign(n, std::vector<std::size_t>(n, FiniteLattice::npos));
    l.join.assign(n, std::vector<std::size_t>(n, FiniteLattice::npos));
    l.marker.assign(n, 0);
}

}  // namespace

FiniteLattice build_full_lattice(const ContextPtr& ctx) {
    SubsetTable table(ctx);
    std::vector<std::pair<NodeKey, Mask>> nodes;
    for (Mask m = 0; m <= table.universe(); ++m) {
        if (table.full(m)) nodes.push_back({{table.minimal_polynomial(m).degree().value(), table.elements_of(m)}, m});
        if (m == table.universe()) break;
    }
    std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    FiniteLattice l;
    l.kind = FiniteLattice::Kind::FullSets;
    l.ctx = ctx;
    std::map<Mask, std::size_t> index;
    for (const auto& [key, m] : nodes) {
        index[m] = l.sets.size();
        l.sets.push_back(key.set);
        l.polynomials.push_back(table.minimal_polynomial(m));
    }
    init_tables(l);
    for (std::size_t i = 0; i < nodes.size(); ++i)
        for (std::size_t j = 0; j < nodes.size(); ++j) {
            const Mask a = nodes[i].second, b = nodes[j].second;
            l.leq[i][j] = (a & ~b) == 0;
            auto mi = index.find(a & b);
            if (mi != index.end()) l.meet[i][j] = mi->second;
            auto ji = index.find(table.closure(a | b));
            if (ji != index.end()) l.join[i][j] = ji->second;
        }
    return l;
}

FiniteLattice build_w_lattice(const ContextPtr& ctx) {
    SubsetTable table(ctx);
    std::set<SkewPolynomial> polys;
    for (Mask m = 0;; ++m) {
        polys.insert(table.minimal_polynomial(m));
        if (m == table.universe()) break;
    }
    std::vector<std::pair<NodeKey, SkewPolynomial>> nodes;
    for (const auto& p : polys) nodes.push_back({{p.degree().value(), right_roots(p)}, p});
    std::sort(nodes.begin(), nodes.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    FiniteLattice l;
    l.kind = FiniteLattice::Kind::WPolynomials;
    l.ctx = ctx;
    std::map<SkewPolynomial, std::size_t> index;
    for (const auto& [key, p] : nodes) {
        index.emplace(p, l.sets.size());
        l.sets.push_back(key.set);
        l.polynomials.push_back(p);
    }
    init_tables(l);
    const std::size_t n = nodes.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            l.leq[i][j] = right_divides(l.polynomials[j], l.polynomials[i]);
            if (j < i) {
                l.meet[i][j] = l.meet[j][i];
                l.join[i][j] = l.join[j][i];
                continue;
            }
            GcdLcm gl = rgcd_llcm(l.polynomials[i], l.polynomials[j]);
            auto mi = index.find(gl.llcm);
            if (mi != index.end()) l.meet[i][j] = mi->second;
            auto ji = index.find(gl.rgcd);
            if (ji != index.end()) l.join[i][j] = ji->second;
        }
    return l;
}

FiniteLattice with_markers(const FiniteLattice& l) {
    const std::size_t n = l.size(), npos = FiniteLattice::npos;
    FiniteLattice m;
    m.kind = l.kind;
    m.ctx = l.ctx;
    m.sets.push_back({});
    m.polynomials.push_back(SkewPolynomial::one(l.ctx));
    for (std::size_t i = 0; i < n; ++i) {
        m.sets.push_back(l.sets[i]);
        m.polynomials.push_back(l.polynomials[i]);
    }
    m.sets.push_back({});
    m.polynomials.push_back(SkewPolynomial::one(l.ctx));
    init_tables(m);
    const std::size_t bot = 0, top = n + 1;
    m.marker[bot] = m.marker[top] = 1;
    auto shift = [&](std::size_t x) { return x == npos ? npos : x + 1; };
    for (std::size_t i = 0; i < n + 2; ++i)
        for (std::size_t j = 0; j < n + 2; ++j) {
            if (i == bot || j == top) {
                m.leq[i][j] = 1;
            } else if (i != top && j != bot) {
                m.leq[i][j] = l.leq[i - 1][j - 1];
            }
            if (i == bot || j == bot) {
                m.meet[i][j] = bot;
                m.join[i][j] = i == bot ? j : i;
            } else if (i == top || j == top) {
                m.join[i][j] = top;
                m.meet[i][j] = i == top ? j : i;
            } else {
                m.meet[i][j] = shift(l.meet[i - 1][j - 1]);
                m.join[i][j] = shift(l.join[i - 1][j - 1]);
            }
        }
    return m;
}

std::vector<std::string> lattice_violations(const FiniteLattice& l) {
    std::vector<std::string> v;
    const std::size_t n = l.size(), npos = FiniteLattice::npos;
    auto name = [&](std::size_t i) { return l.node_label(i); };
    for (std::size_t i = 0; i < n; ++i) {
        if (!l.leq[i][i]) v.push_back("not reflexive at " + name(i));
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j && l.leq[i][j] && l.leq[j][i]) v.push_back("not antisymmetric: " + name(i) + ", " + name(j));
            for (std::size_t k = 0; k < n; ++k)
                if (l.leq[i][j] && l.leq[j][k] && !l.leq[i][k]) v.push_back("not transitive: " + name(i) + " " + name(k));
            const std::size_t m = l.meet[i][j], s = l.join[i][j];
            if (m == npos || s == npos) {
                v.push_back("meet or join of " + name(i) + ", " + name(j) + " is not a node");
                continue;
            }
            if (!l.leq[m][i] || !l.leq[m][j]) v.push_back("meet is not a lower bound: " + name(i) + ", " + name(j));
            if (!l.leq[i][s] || !l.leq[j][s]) v.push_back("join is not an upper bound: " + name(i) + ", " + name(j));
            for (std::size_t k = 0; k < n; ++k) {
                if (l.leq[k][i] && l.leq[k][j] && !l.leq[k][m]) v.push_back("meet is not greatest: " + name(i) + ", " + name(j));
                if (l.leq[i][k] && l.leq[j][k] && !l.leq[s][k]) v.push_back("join is not least: " + name(i) + ", " + name(j));
            }
        }
    }
    if (!v.empty()) return v;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t c = 0; c < n; ++c) {
            if (!l.leq[a][c]) continue;
            for (std::size_t b = 0; b < n; ++b)
                if (l.join[a][l.meet[b][c]] != l.meet[l.join[a][b]][c])
                    v.push_back("modular law fails for " + name(a) + ", " + name(b) + ", " + name(c));
        }
    return v;
}

DualityReport duality_check(const FiniteLattice& full, const FiniteLattice& w) {
    DualityReport rep;
    rep.full_nodes = full.size();
    rep.w_nodes = w.size();
    for (auto& s : lattice_violations(full)) rep.violations.push_back("full sets: " + s);
    for (auto& s : lattice_violations(w)) rep.violations.push_back("W: " + s);
    if (!rep.violations.empty()) return rep;
    const ContextPtr& ctx = full.ctx;
    const std::size_t n = full.size(), npos = FiniteLattice::npos;
    rep.triples_checked = n * n * n + w.size() * w.size() * w.size();

    std::map<SkewPolynomial, std::size_t> w_index;
    for (std::size_t j = 0; j < w.size(); ++j) w_index.emplace(w.polynomials[j], j);
    std::map<std::vector<Element>, std::size_t> f_index;
    for (std::size_t i = 0; i < n; ++i) f_index.emplace(full.sets[i], i);

    std::vector<std::size_t> phi(n, npos), psi(w.size(), npos);
    for (std::size_t i = 0; i < n; ++i) {
        auto it = w_index.find(minimal_polynomial(ctx, full.sets[i]).polynomial);
        if (it == w_index.end()) rep.violations.push_back("no W node for " + full.node_label(i));
        else phi[i] = it->second;
    }
    for (std::size_t j = 0; j < w.size(); ++j) {
        auto it = f_index.find(right_roots(w.polynomials[j]));
        if (it == f_index.end()) rep.violations.push_back("V(f) is not a full-set node for " + w.node_label(j));
        else psi[j] = it->second;
    }
    if (!rep.violations.empty()) return rep;
    for (std::size_t i = 0; i < n; ++i)
        if (psi[phi[i]] != i) rep.violations.push_back("V(f_Delta) != Delta for " + full.node_label(i));
    for (std::size_t j = 0; j < w.size(); ++j)
        if (phi[psi[j]] != j) rep.violations.push_back("f_V(f) != f for " + w.node_label(j));
    if (n != w.size()) rep.violations.push_back("node counts differ");

    auto rank = [&](std::size_t i) { return full.polynomials[i].degree().value(); };
    auto deg = [&](std::size_t j) { return w.polynomials[j].degree().value(); };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            ++rep.pairs_checked;
            if ((full.leq[i][k] != 0) != (w.leq[phi[k]][phi[i]] != 0))
                rep.violations.push_back("order not reversed: " + full.node_label(i) + ", " + full.node_label(k));
            if (rank(full.join[i][k]) + rank(full.meet[i][k]) != rank(i) + rank(k))
                rep.violations.push_back("rank is not a dimension function at " + full.node_label(i) + ", " +
                                         full.node_label(k));
        }
    for (std::size_t i = 0; i < w.size(); ++i)
        for (std::size_t k = 0; k < w.size(); ++k)
            if (deg(w.join[i][k]) + deg(w.meet[i][k]) != deg(i) + deg(k))
                rep.violations.push_back("degree is not a dual dimension function at " + w.node_label(i) + ", " +
                                         w.node_label(k));
    for (const auto& [lo, hi] : full.covering_edges())
        if (rank(hi) != rank(lo) + 1) rep.violations.push_back("rank jumps along " + full.node_label(lo));
    for (const auto& [lo, hi] : w.covering_edges())
        if (deg(lo) != deg(hi) + 1) rep.violations.push_back("degree jumps along " + w.node_label(hi));

    std::set<std::vector<Element>> atoms, singletons;
    const std::size_t fb = full.bottom(), wt = w.top();
    for (const auto& [lo, hi] : full.covering_edges())
        if (lo == fb) atoms.insert(full.sets[hi]);
    for (const auto& x : ctx->enumerate()) singletons.insert({x});
    rep.atoms = atoms.size();
    if (atoms != singletons) rep.violations.push_back("atoms are not the singletons");
    std::set<SkewPolynomial> maximal, linear;
    for (const auto& [lo, hi] : w.covering_edges())
        if (hi == wt) maximal.insert(w.polynomials[lo]);
    for (const auto& x : ctx->enumerate()) linear.insert(SkewPolynomial::linear(ctx, x));
    rep.maximal_w = maximal.size();
    if (maximal != linear) rep.violations.push_back("maximal W-polynomials are not the monic linear ones");

    std::map<SkewPolynomial, std::vector<SkewPolynomial>> divisors;
    auto divisors_of = [&](const SkewPolynomial& f) -> const std::vector<SkewPolynomial>& {
        auto it = divisors.find(f);
        if (it != divisors.end()) return it->second;
        std::vector<SkewPolynomial> d;
        if (f.degree() > 0) d = monic_right_divisors(f);
        d.push_back(SkewPolynomial::one(ctx));
        std::sort(d.begin(), d.end());
        return divisors.emplace(f, std::move(d)).first->second;
    };
    for (std::size_t a = 0; a < w.size(); ++a)
        for (std::size_t b = 0; b < w.size(); ++b) {
            if (!w.leq[a][b]) continue;
            ++rep.intervals_checked;
            std::vector<SkewPolynomial> interval, submodules;
            for (std::size_t g = 0; g < w.size(); ++g)
                if (w.leq[a][g] && w.leq[g][b]) interval.push_back(w.polynomials[g]);
            for (const auto& g : divisors_of(w.polynomials[a]))
                if (right_divides(w.polynomials[b], g)) submodules.push_back(g);
            std::sort(interval.begin(), interval.end());
            if (interval != submodules)
                rep.violations.push_back("interval [" + w.node_label(a) + ", " + w.node_label(b) +
                                         "] differs from the submodules between them");
        }
    return rep;
}

bool set_is_full(const AlgebraicSet& set, const std::vector<Element>* domain) {
    const ContextPtr& ctx = set.context();
    if (domain || ctx->capabilities().finitely_enumerable) return is_full(set, domain);
    if (ctx->backend() != Backend::Quaternions && ctx->backend() != Backend::Rationals)
        throw Error(ErrorCode::DomainRequired, "fullness needs a search domain on " + ctx->name());
    // Centralizers are infinite here, so a class holds finitely many roots
    // exactly when dim E(f, a) <= 1, and then it holds dim E(f, a) of them.
    const SkewPolynomial f = minimal_polynomial(set).polynomial;
    std::size_t roots = 0;
    for (const auto& a : candidate_classes(f)) {
        const std::size_t d = exponential_space(f, a).dimension();
        if (d > 1) return false;
        roots += d;
    }
    return roots == set.size();
}

IntersectionReport intersection_minpoly(const std::vector<AlgebraicSet>& sets, const std::vector<Element>* domain,
                                        bool strict) {
    if (sets.empty()) throw Error(ErrorCode::InvalidArgument, "intersection of no sets");
    const ContextPtr& ctx = sets.front().context();
    for (const auto& s : sets) require_same_context(ctx, s.context());
    IntersectionReport rep{minimal_polynomial(sets.front()).polynomial, SkewPolynomial(ctx), {}, false};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (!set_is_full(sets[i], domain)) rep.not_full.push_back(i);
        if (i > 0) rep.rgcd = rgcd(rep.rgcd, minimal_polynomial(sets[i]).polynomial);
    }
    if (strict && !rep.not_full.empty())
        throw Error(ErrorCode::NotFull, "set " + std::to_string(rep.not_full.front()) + " is not full");
    std::vector<Element> common;
    for (const auto& x : sets.front().elements())
        if (std::all_of(sets.begin(), sets.end(), [&](const AlgebraicSet& s) { return s.contains(x); }))
            common.push_back(x);
    rep.intersection_polynomial = minimal_polynomial(ctx, common).polynomial;
    rep.identity_holds = rep.rgcd == rep.intersection_polynomial;
    return rep;
}

ModularLawReport modular_law_check(const AlgebraicSet& gamma, const AlgebraicSet& pi, const AlgebraicSet& delta) {
    const ContextPtr& ctx = gamma.context();
    require_same_context(ctx, pi.context());
    require_same_context(ctx, delta.context());
    ModularLawReport rep;
    if (!set_is_full(gamma)) rep.precondition_issue = "Gamma is not full";
    else if (!set_is_full(pi)) rep.precondition_issue = "Pi is not full";
    else if (!std::all_of(delta.elements().begin(), delta.elements().end(),
                          [&](const Element& x) { return gamma.contains(x); }))
        rep.precondition_issue = "Delta is not inside Gamma";
    if (!rep.precondition_issue.empty()) {
        rep.preconditions_ok = false;
        return rep;
    }
    auto merged = [&](std::vector<Element> a, const std::vector<Element>& b) {
        for (const auto& x : b)
            if (std::find(a.begin(), a.end(), x) == a.end()) a.push_back(x);
        return a;
    };
    std::vector<Element> meet;
    for (const auto& x : gamma.elements())
        if (pi.contains(x)) meet.push_back(x);
    const SkewPolynomial big = minimal_polynomial(ctx, merged(pi.elements(), delta.elements())).polynomial;
    const SkewPolynomial small = minimal_polynomial(ctx, merged(meet, delta.elements())).polynomial;
    for (const auto& x : gamma.elements()) {
        if (!evaluate(big, x).is_zero()) continue;
        ++rep.checked;
        if (!evaluate(small, x).is_zero()) rep.violations.push_back(x);
    }
    return rep;
}

ModularLawSweep modular_law_exhaustive(const SubsetTable& table) {
    ModularLawSweep s;
    std::vector<Mask> fulls;
    for (Mask m = 0;; ++m) {
        if (table.full(m)) fulls.push_back(m);
        if (m == table.universe()) break;
    }
    for (Mask g : fulls)
        for (Mask p : fulls)
            for (Mask d = g;; d = (d - 1) & g) {
                ++s.triples;
                const Mask dependent = g & table.closure(p | d);
                s.elements_checked += static_cast<std::size_t>(std::popcount(dependent));
                if (dependent & ~table.closure((g & p) | d)) ++s.violations;
                if (d == 0) break;
            }
    return s;
}

}  // namespace ore
