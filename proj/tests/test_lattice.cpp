#include "doctest.h"
#include "support.hpp"

#include "ore/error.hpp"
#include "ore/lattice.hpp"

#include <algorithm>

using namespace testing_support;

TEST_CASE("classical F4 lattices") {
    auto k = f4(false, false);
    auto full = build_full_lattice(k);
    CHECK(full.size() == 16);
    auto w = build_w_lattice(k);
    CHECK(w.size() == 16);
    for (std::size_t i = 0; i < w.size(); ++i) {
        CHECK(w.sets[i].size() == w.polynomials[i].degree().value());
        SkewPolynomial prod = SkewPolynomial::one(k);
        for (const auto& a : w.sets[i]) prod = prod * SkewPolynomial::linear(k, a);
        CHECK(prod == w.polynomials[i]);
    }
    CHECK(duality_check(full, w).ok());
}

TEST_CASE("Frobenius F4 lattices") {
    auto k = f4();
    SubsetTable table(k);
    Mask m = table.mask_of(els(k, {"1", "w"}));
    CHECK_FALSE(table.full(m));
    CHECK(table.elements_of(table.closure(m)) == els(k, {"1", "w", "w^2"}));
    auto full = build_full_lattice(k);
    auto w = build_w_lattice(k);
    CHECK(full.sets[full.bottom()].empty());
    CHECK(w.polynomials[w.top()] == SkewPolynomial::one(k));
    CHECK(full.size() == 10);
    CHECK(lattice_violations(full).empty());
    CHECK(lattice_violations(w).empty());
    auto rep = duality_check(full, w);
    CHECK(rep.ok());
    CHECK(rep.atoms == 4);
    CHECK(rep.maximal_w == 4);
    CHECK(rep.intervals_checked > 0);
    CHECK(full.to_dot().find("->") != std::string::npos);

    auto inner = f4(true, true);
    CHECK(duality_check(build_full_lattice(inner), build_w_lattice(inner)).ok());
}

TEST_CASE("Frobenius F8 duality") {
    auto k = f8();
    auto rep = duality_check(build_full_lattice(k), build_w_lattice(k));
    CHECK(rep.ok());
    CHECK(rep.atoms == 8);
    CHECK(rep.maximal_w == 8);
}

TEST_CASE("marker nodes") {
    auto full = build_full_lattice(f4());
    auto m = with_markers(full);
    CHECK(m.size() == full.size() + 2);
    CHECK(m.bottom() == 0);
    CHECK(m.top() == m.size() - 1);
    CHECK(m.node_label(0) == "BOTTOM");
    CHECK(lattice_violations(m).empty());
}

TEST_CASE("broken tables are reported") {
    auto full = build_full_lattice(f4());
    std::swap(full.meet[1][2], full.join[1][2]);
    CHECK_FALSE(lattice_violations(full).empty());
}

TEST_CASE("intersections of full sets") {
    auto h = hq();
    std::vector<AlgebraicSet> sets{AlgebraicSet(h, els(h, {"i"})), AlgebraicSet(h, els(h, {"j", "k"}))};
    auto rep = intersection_minpoly(sets);
    CHECK(rep.rgcd == poly(h, "t - [i]"));
    CHECK(rep.intersection_polynomial == SkewPolynomial::one(h));
    CHECK(rep.not_full == std::vector<std::size_t>{1});
    CHECK_FALSE(rep.identity_holds);
    try {
        intersection_minpoly(sets, nullptr, true);
        FAIL("expected NOT_FULL");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::NotFull);
    }
    CHECK(set_is_full(AlgebraicSet(h, els(h, {"i", "1+j"}))));
    CHECK_FALSE(set_is_full(AlgebraicSet(h, els(h, {"i", "-i"}))));

    auto single = intersection_minpoly({AlgebraicSet(h, els(h, {"i", "1+j"}))});
    CHECK(single.identity_holds);

    auto k = f4();
    SubsetTable table(k);
    std::size_t pairs = 0;
    for (Mask a = 0; a < 16; ++a)
        for (Mask b = 0; b < 16; ++b) {
            if (!table.full(a) || !table.full(b)) continue;
            ++pairs;
            auto r = intersection_minpoly({AlgebraicSet(k, table.elements_of(a)), AlgebraicSet(k, table.elements_of(b))});
            CHECK(r.not_full.empty());
            CHECK(r.identity_holds);
        }
    CHECK(pairs == 100);
}

TEST_CASE("modular law for P-dependence") {
    auto k = f4();
    auto s = modular_law_exhaustive(SubsetTable(k));
    CHECK(s.violations == 0);
    CHECK(s.triples > 0);
    auto s8 = modular_law_exhaustive(SubsetTable(f8()));
    CHECK(s8.violations == 0);

    AlgebraicSet gamma(k, els(k, {"1", "w", "w^2"}));
    auto r = modular_law_check(gamma, AlgebraicSet(k, els(k, {"0"})), gamma);
    CHECK(r.holds());
    CHECK(r.checked == 3);
    r = modular_law_check(AlgebraicSet(k, els(k, {"1", "w"})), gamma, AlgebraicSet::empty(k));
    CHECK_FALSE(r.preconditions_ok);
    r = modular_law_check(gamma, gamma, AlgebraicSet(k, els(k, {"0"})));
    CHECK_FALSE(r.preconditions_ok);
}
