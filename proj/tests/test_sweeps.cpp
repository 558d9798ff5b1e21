#include "doctest.h"
#include "support.hpp"

#include "ore/sweeps.hpp"
#include "ore/worked_examples.hpp"

#include <stdexcept>

using namespace testing_support;

TEST_CASE("run_sweep combines trials in index order") {
    Trial trial = [](std::size_t i, bool& special) -> std::optional<std::string> {
        special = i % 3 == 0;
        if (i == 7 || i == 11) return "bad " + std::to_string(i);
        if (i == 13) throw std::runtime_error("boom");
        return std::nullopt;
    };
    auto serial = run_sweep(20, Execution::Serial, trial);
    auto parallel = run_sweep(20, Execution::Parallel, trial);
    CHECK(serial.trials == 20);
    CHECK(serial.failures == 3);
    CHECK(serial.special == 7);
    CHECK(serial.first_failure.find("bad 7") != std::string::npos);
    CHECK(serial == parallel);
    CHECK_FALSE(serial.ok());
}

TEST_CASE("small random sweeps pass and agree across execution modes") {
    for (const auto& [label, ctx] : standard_backends()) {
        CAPTURE(label);
        auto a = sweep_remainder(ctx, 5, 30, Execution::Serial);
        CHECK(a.ok());
        CHECK(a == sweep_remainder(ctx, 5, 30, Execution::Parallel));
        auto b = sweep_product_formula(ctx, 6, 30, Execution::Serial);
        CHECK(b.ok());
        CHECK(b.special > 0);
        CHECK(b == sweep_product_formula(ctx, 6, 30, Execution::Parallel));
        CHECK(sweep_conjugation(ctx, 7, 30, Execution::Parallel).ok());
        CHECK(sweep_degree_identity(ctx, 8, 20, Execution::Parallel).ok());
    }
}

TEST_CASE("all_monic_polynomials counts") {
    CHECK(all_monic_polynomials(f4(), 2).size() == 1 + 4 + 16);
    CHECK(all_monic_polynomials(f8(), 1).size() == 1 + 8);
}

TEST_CASE("exhaustive sweeps on F4") {
    auto k = f4(true, true);
    CHECK(sweep_w_verdicts(k, 2, Execution::Serial) == sweep_w_verdicts(k, 2, Execution::Parallel));
    CHECK(sweep_w_verdicts(k, 2, Execution::Parallel).ok());
    CHECK(sweep_rank_union(f4(), Execution::Parallel).ok());
    CHECK(sweep_phi_rank(f4(), 2, Execution::Parallel).ok());
    CHECK(sweep_product_rank(f4(), 1, Execution::Parallel).ok());
    auto m = sweep_metro_exhaustive(k, Execution::Parallel);
    CHECK(m.ok());
    CHECK(m.trials == 4 * 4 * 3);
}

TEST_CASE("quaternion and rational-function sweeps") {
    CHECK(sweep_metro_random(hq(), 3, 12, Execution::Parallel).ok());
    CHECK(sweep_class_uniqueness(hq(), 4, 8, Execution::Parallel).ok());
    CHECK(sweep_central_quadratics(hq(), 5, 10, Execution::Parallel).ok());
    CHECK(sweep_left_root_cosets(qx_square(), 6, 8, false, Execution::Parallel).ok());
    CHECK(sweep_left_root_cosets(qx_square(), 7, 8, true, Execution::Parallel).ok());
}

TEST_CASE("worked examples replay") {
    for (const auto& ex : worked_examples()) {
        CAPTURE(ex.name);
        CAPTURE(ex.detail);
        CHECK(ex.passed);
    }
}
