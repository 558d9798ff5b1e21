#include "cli.hpp"

#include "ore/algebraic_set.hpp"
#include "ore/error.hpp"
#include "ore/evaluation.hpp"
#include "ore/lattice.hpp"
#include "ore/metro.hpp"
#include "ore/wedderburn.hpp"
#include "ore/worked_examples.hpp"

#include <CLI11.hpp>
#include <boost/tokenizer.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

namespace ore::cli {

namespace {

using json = nlohmann::json;

struct RingOptions {
    std::string ring = "Q";
    std::string s = "id";
    std::string d = "zero";
    std::string domain;
    bool json = false;
    bool strict = false;
};

/// What a command produced; `negative` marks a "no" answer for --strict.
struct Outcome {
    json inputs = json::object();
    json result = json::object();
    json certificate;
    std::string text;
    bool negative = false;
};

class Usage : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

const GaloisField& field_of(const std::string& ring) {
    return ring == "F4" ? RingContext::f4() : RingContext::f8();
}

ContextPtr build_ring(const std::string& ring, Endomorphism s, Derivation d) {
    if (ring == "Q") {
        if (!s.is_identity()) throw Usage("--S must be id on Q");
        if (d.kind == Derivation::Kind::Inner) return RingContext::rationals();
        if (d.kind != Derivation::Kind::Zero) throw Usage("--D ddx needs a rational function field");
        return RingContext::rationals();
    }
    if (ring == "F4" || ring == "F8") return RingContext::finite_field(field_of(ring), s, std::move(d));
    if (ring == "Qx") return RingContext::rational_functions('x', s, std::move(d));
    if (ring == "Qu") return RingContext::rational_functions('u', s, std::move(d));
    if (ring == "HQ") {
        if (!s.is_identity()) throw Usage("--S must be id on HQ");
        return RingContext::quaternions(std::move(d));
    }
    throw Usage("unknown ring '" + ring + "' (expected Q, F4, F8, Qx, Qu or HQ)");
}

Endomorphism parse_s(const std::string& text) {
    if (text == "id") return Endomorphism::identity();
    if (text == "xsq") return Endomorphism::square_variable();
    if (text == "frob") return Endomorphism::frobenius();
    if (text.rfind("frob:", 0) == 0) {
        try {
            return Endomorphism::frobenius(static_cast<unsigned>(std::stoul(text.substr(5))));
        } catch (const std::logic_error&) {
            throw Usage("bad Frobenius exponent in '" + text + "'");
        }
    }
    throw Usage("unknown --S '" + text + "' (expected id, frob[:e] or xsq)");
}

ContextPtr make_ring(const RingOptions& o) {
    Endomorphism s = parse_s(o.s);
    if (s.kind == Endomorphism::Kind::SquareVariable && o.ring != "Qx") throw Usage("--S xsq requires --ring Qx");
    if (o.d == "zero") return build_ring(o.ring, s, Derivation::zero());
    if (o.d == "ddx") return build_ring(o.ring, s, Derivation::formal_derivative());
    if (o.d.rfind("inner:", 0) == 0) {
        ContextPtr base = build_ring(o.ring, s, Derivation::zero());
        Element d = base->parse(o.d.substr(6));
        if (o.ring == "Q") return base;  // inner derivations vanish on a commutative K with S = id
        return build_ring(o.ring, s, Derivation::inner(std::move(d)));
    }
    throw Usage("unknown --D '" + o.d + "' (expected zero, ddx or inner:<element>)");
}

/// Polynomial literal, or a product of parenthesized literals such as
/// `(t - [j])*(t - [i])`, multiplied left to right.
SkewPolynomial parse_polynomial(const ContextPtr& ctx, const std::string& text) {
    std::size_t first = text.find_first_not_of(" \t");
    if (first == std::string::npos || text[first] != '(') return SkewPolynomial::parse(ctx, text);
    SkewPolynomial product = SkewPolynomial::one(ctx);
    std::size_t pos = first;
    while (pos < text.size()) {
        if (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == '*') {
            ++pos;
            continue;
        }
        if (text[pos] != '(') throw SyntaxError(pos, "expected '(' to start a factor");
        int depth = 0, bracket = 0;
        std::size_t close = pos;
        for (; close < text.size(); ++close) {
            char c = text[close];
            if (c == '[') ++bracket;
            if (c == ']') --bracket;
            if (bracket == 0 && c == '(') ++depth;
            if (bracket == 0 && c == ')' && --depth == 0) break;
        }
        if (close == text.size()) throw SyntaxError(pos, "unbalanced '('");
        try {
            product = product * SkewPolynomial::parse(ctx, text.substr(pos + 1, close - pos - 1));
        } catch (const SyntaxError& e) {
            throw SyntaxError(pos + 1 + e.position(), "bad factor");
        }
        pos = close + 1;
    }
    return product;
}

std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ','))
        if (cur.find_first_not_of(" \t") != std::string::npos) out.push_back(cur);
    return out;
}

std::vector<Element> parse_elements(const ContextPtr& ctx, const std::vector<std::string>& texts) {
    std::vector<Element> out;
    for (const auto& t : texts)
        for (const auto& piece : split_list(t)) out.push_back(ctx->parse(piece));
    return out;
}

json to_json(const ContextPtr& ctx, const std::vector<Element>& v) {
    json a = json::array();
    for (const auto& e : v) a.push_back(ctx->format(e));
    return a;
}

std::string braces(const ContextPtr& ctx, const std::vector<Element>& v) {
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + ctx->format(v[i]);
    return s + "}";
}

json polys_json(const std::vector<SkewPolynomial>& v) {
    json a = json::array();
    for (const auto& p : v) a.push_back(p.to_string());
    return a;
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

json check_json(Check c) {
    if (c == Check::Untested) return "UNTESTED";
    return c == Check::True;
}

json lattice_json(const FiniteLattice& l) {
    json nodes = json::array();
    for (std::size_t i = 0; i < l.size(); ++i) {
        json n{{"id", i}, {"label", l.node_label(i)}};
        if (!l.marker[i]) {
            n["set"] = to_json(l.ctx, l.sets[i]);
            n["polynomial"] = l.polynomials[i].to_string();
        }
        nodes.push_back(n);
    }
    json edges = json::array();
    for (const auto& [lo, hi] : l.covering_edges()) edges.push_back({lo, hi});
    return {{"kind", to_string(l.kind)}, {"nodes", nodes}, {"edges", edges}};
}

std::string lattice_text(const FiniteLattice& l) {
    std::ostringstream s;
    s << to_string(l.kind) << " lattice, " << l.size() << " nodes\n";
    for (std::size_t i = 0; i < l.size(); ++i) {
        s << "  " << i << ": ";
        if (l.kind == FiniteLattice::Kind::FullSets)
            s << l.node_label(i) << "  f = " << l.polynomials[i].to_string();
        else
            s << l.node_label(i) << "  V = " << braces(l.ctx, l.sets[i]);
        s << "\n";
    }
    s << "  covers:";
    for (const auto& [lo, hi] : l.covering_edges()) s << " " << lo << "<" << hi;
    return s.str();
}

json metro_json(const ContextPtr& ctx, const MetroSolutionReport& r) {
    json j{{"status", to_string(r.status)},
           {"uniqueness", to_string(r.uniqueness)},
           {"strategy", r.strategy},
           {"reason", r.reason}};
    j["x"] = r.x ? json(ctx->format(*r.x)) : json(nullptr);
    j["other"] = r.other ? json(ctx->format(*r.other)) : json(nullptr);
    return j;
}

std::string metro_text(const ContextPtr& ctx, const MetroSolutionReport& r) {
    std::string s = r.x ? "x = " + ctx->format(*r.x) : to_string(r.status);
    s += "\nstatus: " + to_string(r.status) + "\nuniqueness: " + to_string(r.uniqueness);
    if (r.other) s += " (also x = " + ctx->format(*r.other) + ")";
    s += "\nstrategy: " + r.strategy;
    if (!r.reason.empty()) s += "\nreason: " + r.reason;
    return s;
}

class Runner {
public:
    Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err) {}

    int run(const std::vector<std::string>& args);

private:
    void setup();
    /// Registers a subcommand whose handler runs against the selected ring.
    CLI::App* command(CLI::App* parent, const std::string& name, const std::string& help,
                      std::function<Outcome(const ContextPtr&)> handler);
    const std::vector<Element>* domain(const ContextPtr& ctx);
    int emit(const std::string& name, const ContextPtr& ctx, const Outcome& o);
    int fail(const std::string& code, const std::string& message, int status);

    std::ostream& out_;
    std::ostream& err_;
    CLI::App app_{"Exact computations with Wedderburn polynomials over Ore extensions K[t,S,D]", "ore"};
    RingOptions opt_;
    std::optional<std::vector<Element>> domain_;
    std::vector<std::pair<CLI::App*, std::function<Outcome(const ContextPtr&)>>> handlers_;
    std::vector<std::string> a_, b_, list_;
    std::string x_, y_, z_, kind_ = "both", file_;
    bool dot_ = false;
};

CLI::App* Runner::command(CLI::App* parent, const std::string& name, const std::string& help,
                          std::function<Outcome(const ContextPtr&)> handler) {
    CLI::App* sub = parent->add_subcommand(name, help);
    sub->fallthrough();
    handlers_.emplace_back(sub, std::move(handler));
    return sub;
}

const std::vector<Element>* Runner::domain(const ContextPtr& ctx) {
    if (opt_.domain.empty()) return nullptr;
    domain_ = parse_elements(ctx, {opt_.domain});
    return &*domain_;
}

void Runner::setup() {
    app_.fallthrough();
    app_.require_subcommand(1);
    app_.add_option("--ring", opt_.ring, "Q, F4, F8, Qx, Qu or HQ")->capture_default_str();
    app_.add_option("--S", opt_.s, "id, frob[:e] or xsq")->capture_default_str();
    app_.add_option("--D", opt_.d, "zero, ddx or inner:<element>")->capture_default_str();
    app_.add_option("--domain", opt_.domain, "comma-separated search domain for roots");
    app_.add_flag("--json", opt_.json, "structured output");
    app_.add_flag("--strict", opt_.strict, "exit 1 when the answer is negative");

    auto poly = [](const ContextPtr& ctx, const std::string& t) { return parse_polynomial(ctx, t); };

    command(&app_, "eval", "f(a)", [this, poly](const ContextPtr& ctx) {
        Outcome o;
        auto f = poly(ctx, x_);
        Element a = ctx->parse(y_);
        Element v = evaluate(f, a);
        o.inputs = {{"f", f.to_string()}, {"a", ctx->format(a)}};
        o.result = {{"value", ctx->format(v)}};
        o.text = ctx->format(v);
        return o;
    })->add_option("F", x_)->required();
    handlers_.back().first->add_option("A", y_)->required();

    command(&app_, "conj", "a^c = S(c) a c^-1 + D(c) c^-1", [this](const ContextPtr& ctx) {
        Outcome o;
        Element a = ctx->parse(x_), c = ctx->parse(y_);
        Element v = conjugate(*ctx, a, c);
        o.inputs = {{"a", ctx->format(a)}, {"c", ctx->format(c)}};
        o.result = {{"value", ctx->format(v)}};
        o.text = ctx->format(v);
        return o;
    })->add_option("A", x_)->required();
    handlers_.back().first->add_option("C", y_)->required();

    command(&app_, "phi", "Phi_h(x) = x^{h(x)}", [this, poly](const ContextPtr& ctx) {
        Outcome o;
        auto h = poly(ctx, x_);
        Element x = ctx->parse(y_);
        auto v = phi_transform(h, x);
        o.inputs = {{"h", h.to_string()}, {"x", ctx->format(x)}};
        o.result = {{"value", v ? json(ctx->format(*v)) : json(nullptr)}, {"defined", v.has_value()}};
        o.text = v ? ctx->format(*v) : "undefined: h(x) = 0";
        o.negative = !v;
        return o;
    })->add_option("H", x_)->required();
    handlers_.back().first->add_option("X", y_)->required();

    command(&app_, "roots", "right roots V(f)", [this, poly](const ContextPtr& ctx) {
        Outcome o;
        auto f = poly(ctx, x_);
        o.inputs = {{"f", f.to_string()}};
        const auto* dom = domain(ctx);
        if (dom || ctx->capabilities().finitely_enumerable) {
            auto r = right_roots(f, dom);
            o.result = {{"roots", to_json(ctx, r)}, {"search", dom ? "domain" : "all of K"}};
            o.text = braces(ctx, r);
            o.negative = r.empty();
            return o;
        }
        ZeroSet zs = zero_set(f);
        o.result = {{"p_basis", to_json(ctx, zs.basis)},
                    {"zero_set_polynomial", zs.polynomial.to_string()},
                    {"complete", zs.complete}};
        if (!zs.limitation.empty()) o.result["limitation"] = zs.limitation;
        o.text = "P-basis of V(f): " + braces(ctx, zs.basis) + "\nf_V = " + zs.polynomial.to_string() +
                 "\ncomplete: " + yes_no(zs.complete);
        o.negative = zs.basis.empty();
        return o;
    })->add_option("F", x_)->required();

    command(&app_, "left-roots", "left roots V'(f)", [this, poly](const ContextPtr& ctx) {
        Outcome o;
        auto f = poly(ctx, x_);
        auto r = left_roots(f, domain(ctx));
        o.inputs = {{"f", f.to_string()}};
        o.result = {{"left_roots", to_json(ctx, r)}};
        o.text = braces(ctx, r);
        o.negative = r.empty();
        return o;
    })->add_option("F", x_)->required();

    auto set_command = [this](const std::string& name, const std::string& help,
                              std::function<void(const ContextPtr&, const MinimalPolynomialResult&, Outcome&)> fill) {
        command(&app_, name, help, [this, fill](const ContextPtr& ctx) {
            Outcome o;
            auto elems = parse_elements(ctx, list_);
            o.inputs = {{"set", to_json(ctx, elems)}};
            fill(ctx, minimal_polynomial(AlgebraicSet(ctx, elems)), o);
            return o;
        })->add_option("ELEMENTS", list_, "elements (separate arguments or comma-separated)");
    };
    set_command("minpoly", "minimal polynomial f_Delta", [](const ContextPtr&, const MinimalPolynomialResult& m, Outcome& o) {
        o.result = {{"polynomial", m.polynomial.to_string()}};
        o.text = m.polynomial.to_string();
    });
    set_command("rank", "rank of an algebraic set", [](const ContextPtr&, const MinimalPolynomialResult& m, Outcome& o) {
        o.result = {{"rank", m.rank()}};
        o.text = std::to_string(m.rank());
    });
    set_command("pbasis", "P-basis in input order", [](const ContextPtr& ctx, const MinimalPolynomialResult& m, Outcome& o) {
        o.result = {{"basis", to_json(ctx, m.basis)}, {"polynomial", m.polynomial.to_string()}};
        o.text = braces(ctx, m.basis);
    });

    command(&app_, "closure-member", "whether d is P-dependent on a set", [this](const ContextPtr& ctx) {
        Outcome o;
        Element d = ctx->parse(x_);
        AlgebraicSet set(ctx, parse_elements(ctx, list_));
        bool dep = is_p_dependent(d, set);
        o.inputs = {{"d", ctx->format(d)}, {"set", to_json(ctx, set.elements())}};
        o.result = {{"dependent", dep}, {"minimal_polynomial", minimal_polynomial(set).polynomial.to_string()}};
        o.text = dep ? "P-dependent" : "not P-dependent";
        o.negative = !dep;
        return o;
    })->add_option("D", x_)->required();
    handlers_.back().first->add_option("ELEMENTS", list_);

    command(&app_, "is-wedderburn", "W-polynomial recognition with certificate", [this, poly](const ContextPtr& ctx) {
        Outcome o;
        auto f = poly(ctx, x_);
        WCertificate c = is_wedderburn(f, domain(ctx));
        bool verified = verify_certificate(c);
        o.inputs = {{"f", f.to_string()}};
        o.result = {{"verdict", to_string(c.verdict)}};
        o.certificate = {{"roots", to_json(ctx, c.roots)},
                         {"zero_set_polynomial", c.zero_set_polynomial.to_string()},
                         {"verified", verified}};
        if (!c.note.empty()) o.certificate["note"] = c.note;
        o.text = to_string(c.verdict) + "\nroots: " + braces(ctx, c.roots) + "\nf_V = " +
                 c.zero_set_polynomial.to_string() + "\ncertificate verified: " + yes_no(verified);
        if (!c.note.empty()) o.text += "\nnote: " + c.note;
        o.negative = c.verdict != WCertificate::Verdict::IsW;
        return o;
    })->add_option("F", x_)->required();

    command(&app_, "split", "f = (t - c_n)...(t - c_1)", [this, poly](const ContextPtr& ctx) {
        Outcome o;
        auto f = poly(ctx, x_);
        SplitResult s = split(f, domain(ctx));
        o.inputs = {{"f", f.to_string()}};
        o.result = {{"split", s.split}, {"roots", to_json(ctx, s.roots)}};
        if (!s.reason.empty()) o.result["reason"] = s.reason;
        if (s.split) {
            for (std::size_t i = s.roots.size(); i-- > 0;) o.text += "(" + SkewPolynomial::linear(ctx, s.roots[i]).to_string() + ")";
        } else {
            o.text = "does not split: " + s.reason;
        }
        o.negative = !s.split;
        return o;
    })->add_option("F", x_)->required();

    command(&app_, "dual", "dual left representation of a P-independent set", [this](const ContextPtr& ctx) {
        Outcome o;
        auto elems = parse_elements(ctx, list_);
        DualRepresentation d = dual_representation(ctx, elems);
        o.inputs = {{"set", to_json(ctx, elems)}};
        o.result = {{"polynomial", d.polynomial.to_string()}, {"b", to_json(ctx, d.b)}, {"verified", d.verified}};
        o.text = d.polynomial.to_string() + "\nb: " + braces(ctx, d.b) + "\nverified: " + yes_no(d.verified);
        o.negative = !d.verified;
        return o;
    })->add_option("ELEMENTS", list_);

    command(&app_, "expspace", "exponential space E(f, a)", [this, poly](const ContextPtr& ctx) {
        Outcome o;
        auto f = poly(ctx, x_);
        Element a = ctx->parse(y_);
        ExponentialSpace e = exponential_space(f, a);
        o.inputs = {{"f", f.to_string()}, {"a", ctx->format(a)}};
        o.result = {{"dimension", e.dimension()},
                    {"basis", to_json(ctx, e.basis)},
                    {"base_basis", to_json(ctx, e.base_basis)},
                    {"centralizer", to_json(ctx, centralizer(*ctx, a))}};
        o.text = "dimension over C_a: " + std::to_string(e.dimension()) + "\nbasis: " + braces(ctx, e.basis) +
                 "\nbase-field basis: " + braces(ctx, e.base_basis);
        o.negative = e.dimension() == 0;
        return o;
    })->add_option("F", x_)->required();
    handlers_.back().first->add_option("A", y_)->required();

    command(&app_, "vandermonde-check", "C(f) V = S(V) diag(c) + D(V) for roots c", [this, poly](const ContextPtr& ctx) {
        Outcome o;
        auto f = poly(ctx, x_);
        std::vector<Element> roots = parse_elements(ctx, list_);
        if (roots.empty()) {
            WCertificate c = is_wedderburn(f, domain(ctx));
            if (c.verdict != WCertificate::Verdict::IsW) {
                o.inputs = {{"f", f.to_string()}};
                o.result = {{"holds", false}, {"reason", "no P-independent roots: " + to_string(c.verdict)}};
                o.text = "no P-independent roots: " + to_string(c.verdict);
                o.negative = true;
                return o;
            }
            roots = c.roots;
        }
        bool holds = diagonalization_check(f, roots);
        o.inputs = {{"f", f.to_string()}, {"roots", to_json(ctx, roots)}};
        o.result = {{"holds", holds},
                    {"vandermonde", vandermonde(ctx, roots).to_string()},
                    {"companion", companion(f).to_string()}};
        o.text = std::string(holds ? "holds" : "fails") + "\nV = " + vandermonde(ctx, roots).to_string() +
                 "\nC = " + companion(f).to_string();
        o.negative = !holds;
        return o;
    })->add_option("F", x_)->required();
    handlers_.back().first->add_option("ROOTS", list_);

    CLI::App* ranks = app_.add_subcommand("rank-theorems", "rank identities for unions, Phi-images and products");
    ranks->fallthrough();
    ranks->require_subcommand(1);
    auto sides = [](Outcome& o, RankSides r, bool equality) {
        bool holds = equality ? r.lhs == r.rhs : r.lhs <= r.rhs;
        o.result = {{"lhs", r.lhs}, {"rhs", r.rhs}, {"holds", holds}};
        o.text = std::to_string(r.lhs) + (equality ? " = " : " <= ") + std::to_string(r.rhs) + (holds ? "" : "  FAILS");
        o.negative = !holds;
    };
    command(ranks, "union", "rk D + rk G = rk(D u G) + rk(closure(D) n closure(G))", [this, sides](const ContextPtr& ctx) {
        Outcome o;
        AlgebraicSet d(ctx, parse_elements(ctx, {x_})), g(ctx, parse_elements(ctx, {y_}));
        o.inputs = {{"delta", to_json(ctx, d.elements())}, {"gamma", to_json(ctx, g.elements())}};
        sides(o, rank_union_check(d, g, domain(ctx)), true);
        return o;
    })->add_option("DELTA", x_, "comma-separated set")->required();
    handlers_.back().first->add_option("GAMMA", y_, "comma-separated set")->required();
    command(ranks, "phi", "rk Phi_h(D) = rk D - rk(closure(D) n V(h))", [this, sides, poly](const ContextPtr& ctx) {
        Outcome o;
        auto h = poly(ctx, x_);
        AlgebraicSet d(ctx, parse_elements(ctx, {y_}));
        o.inputs = {{"h", h.to_string()}, {"delta", to_json(ctx, d.elements())}};
        sides(o, phi_rank_check(h, d, domain(ctx)), true);
        return o;
    })->add_option("H", x_)->required();
    handlers_.back().first->add_option("DELTA", y_, "comma-separated set")->required();
    command(ranks, "product", "rk V(gh) <= rk V(g) + rk V(h)", [this, sides, poly](const ContextPtr& ctx) {
        Outcome o;
        auto g = poly(ctx, x_), h = poly(ctx, y_);
        o.inputs = {{"g", g.to_string()}, {"h", h.to_string()}};
        sides(o, product_rank_bound(g, h, domain(ctx)), false);
        return o;
    })->add_option("G", x_)->required();
    handlers_.back().first->add_option("H", y_)->required();

    command(&app_, "factor-theorem", "W, all factors W, quadratic factors W", [this, poly](const ContextPtr& ctx) {
        Outcome o;
        auto f = poly(ctx, x_);
        FactorTheoremReport r = factor_theorem_check(f, domain(ctx));
        o.inputs = {{"f", f.to_string()}};
        o.result = {{"is_w", check_json(r.is_w)},
                    {"all_factors_w", check_json(r.all_factors_w)},
                    {"quadratic_factors_w", check_json(r.quadratic_factors_w)},
                    {"splits", r.splits},
                    {"factors_checked", polys_json(r.factors_checked)},
                    {"agree", r.agree()}};
        o.text = "is W: " + to_string(r.is_w) + "\nall factors W: " + to_string(r.all_factors_w) +
                 "\nquadratic factors W: " + to_string(r.quadratic_factors_w) + "\nagree: " + yes_no(r.agree());
        if (!r.note.empty()) o.text += "\nnote: " + r.note;
        o.negative = !r.agree();
        return o;
    })->add_option("F", x_)->required();

    command(&app_, "product-theorem", "conditions for g h to be W", [this, poly](const ContextPtr& ctx) {
        Outcome o;
        auto g = poly(ctx, x_), h = poly(ctx, y_);
        ProductTheoremReport r = product_theorem_check(g, h, domain(ctx));
        o.inputs = {{"g", g.to_string()}, {"h", h.to_string()}};
        o.result = {{"product_w", check_json(r.product_w)},     {"g_w", check_json(r.g_w)},
                    {"h_w", check_json(r.h_w)},                 {"unit_in_sum", check_json(r.unit_in_sum)},
                    {"image_contains", check_json(r.image_contains)}, {"quadratics_w", check_json(r.quadratics_w)},
                    {"agree", r.agree()}};
        o.text = "gh W: " + to_string(r.product_w) + "\ng W: " + to_string(r.g_w) + "\nh W: " + to_string(r.h_w) +
                 "\n1 in Rg + hR: " + to_string(r.unit_in_sum) + "\nV(g) in im Phi_h: " + to_string(r.image_contains) +
                 "\nquadratics W: " + to_string(r.quadratics_w) + "\nagree: " + yes_no(r.agree());
        if (!r.note.empty()) o.text += "\nnote: " + r.note;
        o.negative = !r.agree();
        return o;
    })->add_option("G", x_)->required();
    handlers_.back().first->add_option("H", y_)->required();

    for (const char* name : {"llcm", "rgcd"}) {
        const bool is_llcm = std::string(name) == "llcm";
        command(&app_, name, is_llcm ? "least left common multiple" : "right greatest common divisor",
                [this, poly, is_llcm](const ContextPtr& ctx) {
                    Outcome o;
                    auto f = poly(ctx, x_), g = poly(ctx, y_);
                    auto r = is_llcm ? llcm(f, g) : rgcd(f, g);
                    o.inputs = {{"f", f.to_string()}, {"g", g.to_string()}};
                    o.result = {{"polynomial", r.to_string()}};
                    o.text = r.to_string();
                    return o;
                })
            ->add_option("F", x_)
            ->required();
        handlers_.back().first->add_option("G", y_)->required();
    }

    CLI::App* lattice = app_.add_subcommand("lattice", "lattices of full sets and W-polynomials over F4/F8");
    lattice->fallthrough();
    lattice->require_subcommand(1);
    CLI::App* build = command(lattice, "build", "build and print the lattices", [this](const ContextPtr& ctx) {
        Outcome o;
        o.inputs = {{"kind", kind_}};
        std::vector<FiniteLattice> ls;
        if (kind_ == "full" || kind_ == "both") ls.push_back(build_full_lattice(ctx));
        if (kind_ == "w" || kind_ == "both") ls.push_back(build_w_lattice(ctx));
        for (const auto& l : ls) {
            o.result[l.kind == FiniteLattice::Kind::FullSets ? "full" : "w"] = lattice_json(l);
            if (!o.text.empty()) o.text += "\n";
            o.text += dot_ ? l.to_dot() : lattice_text(l);
        }
        if (dot_ && !o.text.empty() && o.text.back() == '\n') o.text.pop_back();
        return o;
    });
    build->add_option("--kind", kind_, "full, w or both")->check(CLI::IsMember({"full", "w", "both"}));
    build->add_flag("--dot", dot_, "emit Graphviz Hasse diagrams");
    command(lattice, "check", "duality, lattice axioms and the modular law", [](const ContextPtr& ctx) {
        Outcome o;
        FiniteLattice full = build_full_lattice(ctx), w = build_w_lattice(ctx);
        DualityReport d = duality_check(full, w);
        auto fv = lattice_violations(full), wv = lattice_violations(w);
        ModularLawSweep m = modular_law_exhaustive(SubsetTable(ctx));
        std::vector<std::string> all = d.violations;
        all.insert(all.end(), fv.begin(), fv.end());
        all.insert(all.end(), wv.begin(), wv.end());
        o.result = {{"full_nodes", d.full_nodes},
                    {"w_nodes", d.w_nodes},
                    {"atoms", d.atoms},
                    {"maximal_w", d.maximal_w},
                    {"pairs_checked", d.pairs_checked},
                    {"triples_checked", d.triples_checked},
                    {"intervals_checked", d.intervals_checked},
                    {"modular_law_triples", m.triples},
                    {"modular_law_violations", m.violations},
                    {"violations", all},
                    {"ok", all.empty() && m.violations == 0}};
        std::ostringstream s;
        s << (all.empty() && m.violations == 0 ? "OK" : "VIOLATIONS") << "\n"
          << d.full_nodes << " full sets, " << d.w_nodes << " W-polynomials, " << d.atoms << " atoms, "
          << d.maximal_w << " maximal W-polynomials\n"
          << d.pairs_checked << " pairs, " << d.triples_checked << " triples, " << d.intervals_checked
          << " intervals checked\n"
          << m.triples << " modular-law triples, " << m.violations << " violations";
        for (const auto& v : all) s << "\n  " << v;
        o.text = s.str();
        o.negative = !all.empty() || m.violations != 0;
        return o;
    });

    CLI::App* metro = app_.add_subcommand("metro", "a x - S(x) b - D(x) = c");
    metro->fallthrough();
    metro->require_subcommand(1);
    auto metro_inputs = [this](const ContextPtr& ctx, Outcome& o) {
        MetroProblem p(ctx->parse(x_), ctx->parse(y_), ctx->parse(z_));
        o.inputs = {{"a", ctx->format(p.a)}, {"b", ctx->format(p.b)}, {"c", ctx->format(p.c)}};
        return p;
    };
    CLI::App* solve = command(metro, "solve", "solve the metro equation", [metro_inputs](const ContextPtr& ctx) {
        Outcome o;
        MetroProblem p = metro_inputs(ctx, o);
        MetroSolutionReport r = solve_metro(*ctx, p);
        o.result = metro_json(ctx, r);
        o.text = metro_text(ctx, r);
        o.negative = r.status != MetroSolutionReport::Status::Solution;
        return o;
    });
    CLI::App* equiv = command(metro, "equiv", "solvability versus (t - b^c)(t - a) being W",
                              [this, metro_inputs](const ContextPtr& ctx) {
                                  Outcome o;
                                  MetroProblem p = metro_inputs(ctx, o);
                                  MetroEquivalenceReport r = metro_wedderburn_equivalence(ctx, p, domain(ctx));
                                  o.result = {{"solution", metro_json(ctx, r.solution)},
                                              {"quadratic", r.quadratic.to_string()},
                                              {"quadratic_roots", to_json(ctx, r.quadratic_roots)},
                                              {"second_root_verified", r.second_root_verified},
                                              {"decided", r.decided()},
                                              {"agree", r.agree()}};
                                  o.result["quadratic_is_w"] = r.quadratic_is_w ? json(*r.quadratic_is_w) : json(nullptr);
                                  o.result["unit_in_sum"] = r.unit_in_sum ? json(*r.unit_in_sum) : json(nullptr);
                                  o.result["second_root"] =
                                      r.second_root ? json(ctx->format(*r.second_root)) : json(nullptr);
                                  auto tri = [](const std::optional<bool>& b) {
                                      return b ? yes_no(*b) : std::string("undecided");
                                  };
                                  o.text = metro_text(ctx, r.solution) + "\nquadratic: " + r.quadratic.to_string() +
                                           "\nquadratic is W: " + tri(r.quadratic_is_w) +
                                           "\nroots found: " + braces(ctx, r.quadratic_roots);
                                  if (r.unit_in_sum) o.text += "\n1 in R(t - b^c) + (t - a)R: " + tri(r.unit_in_sum);
                                  if (r.second_root) o.text += "\nsecond root: " + ctx->format(*r.second_root);
                                  o.text += "\nagree: " + yes_no(r.agree());
                                  o.negative = !r.agree();
                                  return o;
                              });
    for (CLI::App* sub : {solve, equiv}) {
        sub->add_option("--a", x_)->required();
        sub->add_option("--b", y_)->required();
        sub->add_option("--c", z_)->required();
    }
}

int Runner::fail(const std::string& code, const std::string& message, int status) {
    if (opt_.json) out_ << json{{"error", {{"code", code}, {"message", message}}}}.dump() << "\n";
    err_ << "error: " << message << "\n";
    return status;
}

int Runner::emit(const std::string& name, const ContextPtr& ctx, const Outcome& o) {
    if (opt_.json) {
        json doc{{"command", name}, {"ring", ctx ? json(ctx->name()) : json(nullptr)}, {"inputs", o.inputs},
                 {"result", o.result}};
        if (!o.certificate.is_null()) doc["certificate"] = o.certificate;
        out_ << doc.dump(2) << "\n";
    } else {
        out_ << o.text << "\n";
    }
    return opt_.strict && o.negative ? 1 : 0;
}

int Runner::run(const std::vector<std::string>& args) {
    setup();
    CLI::App* examples = app_.add_subcommand("paper-examples", "replay the worked examples");
    examples->fallthrough();
    CLI::App* batch = app_.add_subcommand("batch", "run one command per line of FILE");
    batch->fallthrough();
    batch->add_option("FILE", file_)->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app_.parse(reversed);
    } catch (const CLI::ParseError& e) {
        int code = app_.exit(e, out_, err_);
        return code == 0 ? 0 : 2;
    }

    if (*examples) {
        auto all = worked_examples();
        bool ok = true;
        Outcome o;
        json list = json::array();
        for (const auto& ex : all) {
            ok = ok && ex.passed;
            list.push_back({{"name", ex.name}, {"passed", ex.passed}, {"detail", ex.detail}});
            o.text += std::string(ex.passed ? "PASS  " : "FAIL  ") + ex.name + "\n      " + ex.detail + "\n";
        }
        o.result = {{"examples", list}, {"all_passed", ok}};
        o.text += ok ? "all examples pass" : "some examples FAIL";
        emit("paper-examples", nullptr, o);
        return ok ? 0 : 1;
    }

    if (*batch) {
        std::ifstream in(file_);
        if (!in) return fail("USAGE", "cannot read " + file_, 2);
        int worst = 0;
        std::string line;
        while (std::getline(in, line)) {
            auto words = split_command_line(line);
            if (words.empty() || words.front().rfind("#", 0) == 0) continue;
            if (opt_.json && std::find(words.begin(), words.end(), "--json") == words.end()) words.push_back("--json");
            if (opt_.strict && std::find(words.begin(), words.end(), "--strict") == words.end())
                words.push_back("--strict");
            worst = std::max(worst, ore::cli::run(words, out_, err_));
        }
        return worst;
    }

    for (const auto& [sub, handler] : handlers_) {
        if (!sub->parsed()) continue;
        std::string name = sub->get_name();
        if (sub->get_parent() != &app_) name = sub->get_parent()->get_name() + " " + name;
        try {
            ContextPtr ctx = make_ring(opt_);
            Outcome o = handler(ctx);
            return emit(name, ctx, o);
        } catch (const SyntaxError& e) {
            return fail(std::string(to_string(e.code())), e.what(), 2);
        } catch (const Error& e) {
            return fail(std::string(to_string(e.code())), e.what(), 2);
        } catch (const Usage& e) {
            return fail("USAGE", e.what(), 2);
        }
    }
    return fail("USAGE", "no command given", 2);
}

}  // namespace

std::vector<std::string> split_command_line(const std::string& line) {
    boost::escaped_list_separator<char> sep('\\', ' ', '"');
    boost::tokenizer<boost::escaped_list_separator<char>> tokens(line, sep);
    std::vector<std::string> out;
    for (const auto& t : tokens)
        if (!t.empty()) out.push_back(t);
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        Runner runner(out, err);
        return runner.run(args);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace ore::cli
