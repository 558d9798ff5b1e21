#pragma once

#include "ore/skewpoly.hpp"

#include <cstdint>
#include <random>

namespace ore {

using Rng = std::mt19937_64;

/// Per-index generator for reproducible sweeps: the stream for trial i does
/// not depend on which thread runs it.
Rng trial_rng(std::uint64_t seed, std::uint64_t index);

/// Small random element; `nonzero` retries until the value is nonzero.
Element random_element(const RingContext& ctx, Rng& rng, bool nonzero = false);

/// Random polynomial of exact degree `degree` (monic when asked).
SkewPolynomial random_polynomial(const ContextPtr& ctx, Rng& rng, std::size_t degree, bool monic = false);

/// Random polynomial with degree drawn uniformly from [0, max_degree].
SkewPolynomial random_polynomial_upto(const ContextPtr& ctx, Rng& rng, std::size_t max_degree);

}  // namespace ore
