// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only when
// every criterion passes.

#include "ore/error.hpp"
#include "ore/lattice.hpp"
#include "ore/sweeps.hpp"
#include "ore/wedderburn.hpp"
#include "ore/worked_examples.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

using namespace ore;

namespace {

constexpr Execution kMode = Execution::Parallel;

struct Outcome {
    bool ok = true;
    std::string detail;

    void record(const std::string& label, const SweepResult& r) {
        if (!detail.empty()) detail += "; ";
        detail += label + " " + std::to_string(r.trials - r.failures) + "/" + std::to_string(r.trials);
        if (!r.ok()) {
            ok = false;
            detail += " [" + r.first_failure + "]";
        }
    }
    void require(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            if (!detail.empty()) detail += "; ";
            detail += "failed: " + what;
        }
    }
};

ContextPtr field(const GaloisField& f, bool inner) {
    auto w = *RingContext::finite_field(f, Endomorphism::identity(), Derivation::zero())->symbol("w");
    return RingContext::finite_field(f, Endomorphism::frobenius(), inner ? Derivation::inner(w) : Derivation::zero());
}

AlgebraicSet set_of(const ContextPtr& ctx, std::vector<std::string> names) {
    std::vector<Element> v;
    for (const auto& n : names) v.push_back(ctx->parse(n));
    return AlgebraicSet(ctx, v);
}

int criterion(int id, const std::string& title, double limit_seconds, const std::function<Outcome()>& body) {
    auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
        out = body();
    } catch (const std::exception& e) {
        out.ok = false;
        out.detail += std::string(" exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (limit_seconds > 0 && secs >= limit_seconds) {
        out.ok = false;
        out.detail += "; over time limit of " + std::to_string(static_cast<int>(limit_seconds)) + " s";
    }
    std::printf("AC%-2d %s  %s (%.2f s): %s\n", id, out.ok ? "PASS" : "FAIL", title.c_str(), secs, out.detail.c_str());
    std::fflush(stdout);
    return out.ok ? 0 : 1;
}

}  // namespace

int main() {
    const auto backends = standard_backends();
    int failed = 0;

    failed += criterion(1, "remainder theorem, 1000 per backend", 10, [&] {
        Outcome o;
        for (const auto& b : backends) o.record(b.label, sweep_remainder(b.ctx, 101, 1000, kMode));
        return o;
    });
    failed += criterion(2, "product formula, 1000 per backend", 0, [&] {
        Outcome o;
        for (const auto& b : backends) {
            auto r = sweep_product_formula(b.ctx, 202, 1000, kMode);
            o.record(b.label, r);
            o.require(r.special > 0, b.label + " exercised h(a) = 0");
        }
        return o;
    });
    failed += criterion(3, "conjugation law, 1000 per backend", 0, [&] {
        Outcome o;
        for (const auto& b : backends) o.record(b.label, sweep_conjugation(b.ctx, 303, 1000, kMode));
        return o;
    });
    failed += criterion(4, "degree identity for rgcd and llcm, 1000 per backend", 0, [&] {
        Outcome o;
        for (const auto& b : backends) o.record(b.label, sweep_degree_identity(b.ctx, 404, 1000, kMode));
        return o;
    });
    failed += criterion(5, "worked examples", 0, [&] {
        Outcome o;
        std::size_t passed = 0;
        auto all = worked_examples();
        for (const auto& ex : all) {
            if (ex.passed) ++passed;
            o.require(ex.passed, ex.name + " (" + ex.detail + ")");
        }
        if (o.ok) o.detail = std::to_string(passed) + "/" + std::to_string(all.size()) + " examples";
        return o;
    });
    failed += criterion(6, "four W-verdicts agree, F4 and F8, degree <= 3", 60, [&] {
        Outcome o;
        for (const auto* f : {&RingContext::f4(), &RingContext::f8()})
            for (bool inner : {false, true}) {
                auto ctx = field(*f, inner);
                o.record(ctx->name(), sweep_w_verdicts(ctx, 3, kMode));
            }
        return o;
    });
    failed += criterion(7, "rank theorems, exhaustive over F4 plus quaternion instances", 0, [&] {
        Outcome o;
        for (bool inner : {false, true}) {
            auto ctx = field(RingContext::f4(), inner);
            o.record(ctx->name() + " union", sweep_rank_union(ctx, kMode));
            o.record(ctx->name() + " phi", sweep_phi_rank(ctx, 2, kMode));
            o.record(ctx->name() + " product", sweep_product_rank(ctx, 2, kMode));
        }
        auto h = RingContext::quaternions();
        std::vector<Element> domain;
        for (const char* s : {"i", "-i", "j", "-j", "k", "-k"}) domain.push_back(h->parse(s));
        auto u = rank_union_check(set_of(h, {"i"}), set_of(h, {"j", "k"}), &domain);
        o.require(u.lhs == 3 && u.rhs == 3, "HQ rank of {i} u {j, k}");
        auto p = phi_rank_check(SkewPolynomial::linear(h, h->parse("i")), set_of(h, {"j", "k"}), &domain);
        o.require(p.lhs == 1 && p.rhs == 1, "HQ rank of Phi_{t-i}({j, k})");
        auto g = product_rank_bound(SkewPolynomial::linear(h, h->parse("j")), SkewPolynomial::linear(h, h->parse("i")));
        o.require(g.lhs == 1 && g.rhs == 2 && g.lhs <= g.rhs, "HQ rank bound for (t - j)(t - i)");
        return o;
    });
    failed += criterion(8, "metro equation versus W-quadratics, F8 exhaustive and HQ random", 0, [&] {
        Outcome o;
        for (bool inner : {false, true}) {
            auto ctx = field(RingContext::f8(), inner);
            o.record(ctx->name(), sweep_metro_exhaustive(ctx, kMode));
        }
        auto h = RingContext::quaternions();
        o.record("HQ random", sweep_metro_random(h, 808, 200, kMode));
        o.record("HQ uniqueness", sweep_class_uniqueness(h, 809, 100, kMode));
        return o;
    });
    failed += criterion(9, "lattice duality and modular law, F4 and F8", 120, [&] {
        Outcome o;
        for (const auto* f : {&RingContext::f4(), &RingContext::f8()}) {
            auto ctx = field(*f, false);
            auto report = duality_check(build_full_lattice(ctx), build_w_lattice(ctx));
            o.require(report.ok(), ctx->name() + " duality" +
                                       (report.violations.empty() ? "" : ": " + report.violations.front()));
            auto modular = modular_law_exhaustive(SubsetTable(ctx));
            o.require(modular.violations == 0, ctx->name() + " modular law");
            if (!o.detail.empty()) o.detail += "; ";
            o.detail += ctx->name() + " " + std::to_string(report.full_nodes) + " nodes, " +
                        std::to_string(report.intervals_checked) + " intervals, " +
                        std::to_string(modular.triples) + " modular triples";
        }
        return o;
    });
    failed += criterion(10, "left roots over Q(x) with S: x -> x^2", 0, [&] {
        Outcome o;
        auto ctx = RingContext::rational_functions('x', Endomorphism::square_variable(), Derivation::zero());
        o.record("monic", sweep_left_root_cosets(ctx, 1010, 100, false, kMode));
        o.record("scaled", sweep_left_root_cosets(ctx, 1011, 100, true, kMode));
        return o;
    });
    failed += criterion(11, "central quadratics over HQ are W", 0, [&] {
        Outcome o;
        o.record("HQ", sweep_central_quadratics(RingContext::quaternions(), 1111, 100, kMode));
        return o;
    });

    std::printf("%d of 11 criteria failed\n", failed);
    return failed == 0 ? 0 : 1;
}
