#include "ore/random.hpp"

namespace ore {

Rng trial_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

namespace {

long uniform(Rng& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

mpq_class small_rational(Rng& rng) {
    long num = uniform(rng, -6, 6);
    long den = uniform(rng, 1, 3);
    mpq_class q(num, den);
    q.canonicalize();
    return q;
}

QPoly small_poly(Rng& rng, long max_degree) {
    long d = uniform(rng, 0, max_degree);
    std::vector<mpq_class> c;
    for (long i = 0; i <= d; ++i) c.emplace_back(uniform(rng, -3, 3));
    return QPoly(std::move(c));
}

}  // namespace

Element random_element(const RingContext& ctx, Rng& rng, bool nonzero) {
    for (;;) {
        Element e;
        switch (ctx.backend()) {
            case Backend::Rationals: e = small_rational(rng); break;
            case Backend::FiniteField: {
                auto order = static_cast<long>(ctx.field()->order());
                e = GfElem{ctx.field(), static_cast<GaloisField::Code>(uniform(rng, 0, order - 1))};
                break;
            }
            case Backend::RationalFunctions: {
                QPoly num = small_poly(rng, 1);
                QPoly den(1);
                if (uniform(rng, 0, 3) == 0) den = QPoly(std::vector<mpq_class>{uniform(rng, -2, 2), 1});
                e = RatFunc(num, den);
                break;
            }
            case Backend::Quaternions:
                e = Quaternion(small_rational(rng), small_rational(rng), small_rational(rng), small_rational(rng));
                break;
        }
        if (!nonzero || !e.is_zero()) return e;
    }
}

SkewPolynomial random_polynomial(const ContextPtr& ctx, Rng& rng, std::size_t degree, bool monic) {
    std::vector<Element> c;
    c.reserve(degree + 1);
    for (std::size_t i = 0; i < degree; ++i) c.push_back(random_element(*ctx, rng));
    c.push_back(monic ? ctx->one() : random_element(*ctx, rng, true));
    return SkewPolynomial(ctx, std::move(c));
}

SkewPolynomial random_polynomial_upto(const ContextPtr& ctx, Rng& rng, std::size_t max_degree) {
    auto d = static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(max_degree)));
    return random_polynomial(ctx, rng, d);
}

}  // namespace ore
