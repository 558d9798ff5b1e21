#pragma once

#include "ore/qpoly.hpp"

#include <gmpxx.h>

#include <array>
#include <optional>
#include <utility>
#include <vector>

namespace ore {

/// Monic rational factors of degree <= 2 of a nonzero polynomial over Q.
struct LowDegreeFactors {
    /// r with (t - r) | p, ascending.
    std::vector<mpq_class> roots;
    /// (s, n) with t^2 - s t + n | p irreducible over Q with s^2 < 4n, sorted.
    std::vector<std::pair<mpq_class, mpq_class>> definite_quadratics;
};

/// Roots are isolated numerically (Aberth iteration at 300 bits on the
/// squarefree part) and every candidate is confirmed by exact division.
LowDegreeFactors low_degree_factors(const QPoly& p);

/// Integers (x, y, z) with x^2 + y^2 + z^2 = n, smallest z first, then
/// smallest y, and x > 0 when n > 0; nothing when n has the form
/// 4^a (8b + 7).
std::optional<std::array<mpz_class, 3>> three_squares(const mpz_class& n);

}  // namespace ore
