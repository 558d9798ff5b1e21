#pragma once

#include "ore/skewpoly.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace ore {

enum class Execution { Serial, Parallel };

struct SweepResult {
    std::size_t trials = 0;
    std::size_t failures = 0;
    /// Message of the lowest-index failing trial.
    std::string first_failure;
    /// Trials that took a branch worth counting (e.g. h(a) = 0).
    std::size_t special = 0;
    bool ok() const { return failures == 0; }
    friend bool operator==(const SweepResult&, const SweepResult&) = default;
};

/// One trial: nothing on success, a message on failure. `special` may be set.
using Trial = std::function<std::optional<std::string>(std::size_t index, bool& special)>;

/// Runs trials 0..count-1, serially or with OpenMP; results are combined in
/// index order so both modes report the same thing. Exceptions count as
/// failures.
SweepResult run_sweep(std::size_t count, Execution mode, const Trial& trial);

struct NamedContext {
    std::string label;
    ContextPtr ctx;
};

/// Q; F4 with Frobenius and D = inner(w); F8 with Frobenius; Q(x) with
/// x -> x^2; Q(u) with d/du; quaternions with D = 0 and D = inner(i).
std::vector<NamedContext> standard_backends();

/// All monic polynomials of degree <= max_degree over a finite K.
std::vector<SkewPolynomial> all_monic_polynomials(const ContextPtr& ctx, std::size_t max_degree);

/// f = q (t - a) + f(a) for random f, a.
SweepResult sweep_remainder(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode);
/// (gh)(a) = g(a^{h(a)}) h(a), or 0 when h(a) = 0; every other trial forces h(a) = 0.
SweepResult sweep_product_formula(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode);
/// (a^c)^d = a^{dc}
SweepResult sweep_conjugation(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode);
/// deg f + deg g = deg rgcd + deg llcm, with f*rgcd-divisibility and llcm-multiple checks.
SweepResult sweep_degree_identity(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode);

/// For every monic f of degree <= max_degree over a finite K: brute-force
/// rank of V(f), the quadratic-factor criterion, the exponential dimension
/// sum, and a verified dual right representation give one W verdict.
SweepResult sweep_w_verdicts(const ContextPtr& ctx, std::size_t max_degree, Execution mode);

/// Rank identities over a finite K: all pairs of subsets for the union
/// formula, all (h, Delta) with deg h <= max_degree and Delta outside V(h),
/// all monic g, h of degree <= max_degree for the product bound.
SweepResult sweep_rank_union(const ContextPtr& ctx, Execution mode);
SweepResult sweep_phi_rank(const ContextPtr& ctx, std::size_t max_degree, Execution mode);
SweepResult sweep_product_rank(const ContextPtr& ctx, std::size_t max_degree, Execution mode);

/// Solvability of a x - S(x) b - D(x) = c against W-ness of (t - b^c)(t - a):
/// all triples over a finite K, or `count` random ones.
SweepResult sweep_metro_exhaustive(const ContextPtr& ctx, Execution mode);
SweepResult sweep_metro_random(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode);
/// Random b, a outside the class of b, c != 0: unique solution and W quadratic.
SweepResult sweep_class_uniqueness(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode);

/// Left roots of random (t - a)(t - b), scaled on the left by x when
/// `scaled`, classified by additive S(K)-cosets.
SweepResult sweep_left_root_cosets(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, bool scaled,
                                   Execution mode);

/// t^2 - tr(a) t + N(a) is certified W for random non-central quaternions a.
SweepResult sweep_central_quadratics(const ContextPtr& ctx, std::uint64_t seed, std::size_t count, Execution mode);

}  // namespace ore
