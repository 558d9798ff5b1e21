#include "ore/context.hpp"

#include "ore/error.hpp"

namespace ore {

const GaloisField& RingContext::f2() { return GaloisField::get(2, {0, 1}); }
const GaloisField& RingContext::f4() { return GaloisField::get(2, {1, 1, 1}); }
const GaloisField& RingContext::f8() { return GaloisField::get(2, {1, 1, 0, 1}); }

ContextPtr RingContext::rationals() {
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->backend_ = Backend::Rationals;
    ctx->caps_ = {.finitely_enumerable = false,
                  .s_is_automorphism = true,
                  .s_preimage_decidable = true,
                  .commutative = true,
                  .central_dimension = 1,
                  .characteristic = 0};
    return ctx;
}

ContextPtr RingContext::finite_field(const GaloisField& field, Endomorphism s, Derivation d) {
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->backend_ = Backend::FiniteField;
    ctx->field_ = &field;
    if (s.kind == Endomorphism::Kind::SquareVariable)
        throw Error(ErrorCode::InvalidArgument, "x -> x^2 is only defined on Q(x)");
    if (s.kind == Endomorphism::Kind::FrobeniusPower) s.exponent %= field.degree();
    if (s.kind == Endomorphism::Kind::FrobeniusPower && s.exponent == 0) s = Endomorphism::identity();
    if (d.kind == Derivation::Kind::FormalDerivative)
        throw Error(ErrorCode::InvalidArgument, "d/dx is only defined on rational function fields");
    ctx->s_ = s;
    ctx->d_ = std::move(d);
    ctx->caps_ = {.finitely_enumerable = true,
                  .s_is_automorphism = true,
                  .s_preimage_decidable = true,
                  .commutative = true,
                  .central_dimension = field.degree(),
                  .characteristic = field.characteristic()};
    if (ctx->d_.kind == Derivation::Kind::Inner) ctx->require_member(*ctx->d_.d);
    ctx->validate_laws();
    return ctx;
}

ContextPtr RingContext::rational_functions(char var, Endomorphism s, Derivation d) {
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->backend_ = Backend::RationalFunctions;
    ctx->var_ = var;
    if (s.kind == Endomorphism::Kind::FrobeniusPower)
        throw Error(ErrorCode::InvalidArgument, "Frobenius requires a finite field");
    if (d.kind == Derivation::Kind::FormalDerivative && !s.is_identity())
        throw Error(ErrorCode::InvalidArgument, "d/dx requires S = identity");
    ctx->s_ = s;
    ctx->d_ = std::move(d);
    ctx->caps_ = {.finitely_enumerable = false,
                  .s_is_automorphism = s.is_identity(),
                  .s_preimage_decidable = true,
                  .commutative = true,
                  .central_dimension = 0,
                  .characteristic = 0};
    if (ctx->d_.kind == Derivation::Kind::Inner) ctx->require_member(*ctx->d_.d);
    ctx->validate_laws();
    return ctx;
}

ContextPtr RingContext::quaternions(Derivation d) {
    auto ctx = std::shared_ptr<RingContext>(new RingContext());
    ctx->backend_ = Backend::Quaternions;
    if (d.kind == Derivation::Kind::FormalDerivative)
        throw Error(ErrorCode::InvalidArgument, "d/dx is only defined on rational function fields");
    ctx->d_ = std::move(d);
    ctx->caps_ = {.finitely_enumerable = false,
                  .s_is_automorphism = true,
                  .s_preimage_decidable = true,
                  .commutative = false,
                  .central_dimension = 4,
                  .characteristic = 0};
    if (ctx->d_.kind == Derivation::Kind::Inner) ctx->require_member(*ctx->d_.d);
    ctx->validate_laws();
    return ctx;
}

Element RingContext::zero() const { return from_int(0); }
Element RingContext::one() const { return from_int(1); }

Element RingContext::from_int(long v) const { return from_rational(mpq_class(v)); }

Element RingContext::from_rational(const mpq_class& q) const {
    switch (backend_) {
        case Backend::Rationals: return q;
        case Backend::RationalFunctions: return RatFunc(QPoly(q));
        case Backend::Quaternions: return Quaternion(q);
        case Backend::FiniteField: {
            mpz_class p = field_->characteristic();
            mpz_class den = q.get_den() % p;
            if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes in characteristic p");
            mpz_class inv;
            mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
            mpz_class r = (q.get_num() * inv) % p;
            if (r < 0) r += p;
            return GfElem{field_, static_cast<GaloisField::Code>(r.get_ui())};
        }
    }
    throw Error(ErrorCode::InvalidArgument, "unknown backend");
}

std::optional<Element> RingContext::symbol(std::string_view name) const {
    switch (backend_) {
        case Backend::FiniteField:
            if (name == "w" && field_->degree() > 1) return GfElem{field_, field_->characteristic()};
            break;
        case Backend::RationalFunctions:
            if (name.size() == 1 && name[0] == var_) return RatFunc(QPoly::variable());
            break;
        case Backend::Quaternions:
            if (name == "i") return Quaternion::i();
            if (name == "j") return Quaternion::j();
            if (name == "k") return Quaternion::k();
            break;
        case Backend::Rationals: break;
    }
    return std::nullopt;
}

bool RingContext::contains(const Element& a) const {
    switch (backend_) {
        case Backend::Rationals: return a.holds<mpq_class>();
        case Backend::FiniteField: return a.holds<GfElem>() && a.as<GfElem>().field == field_;
        case Backend::RationalFunctions: return a.holds<RatFunc>();
        case Backend::Quaternions: return a.holds<Quaternion>();
    }
    return false;
}

void RingContext::require_member(const Element& a) const {
    if (!contains(a)) throw Error(ErrorCode::ContextMismatch, "element does not belong to " + ring_tag());
}

Element RingContext::apply_S(const Element& a) const {
    require_member(a);
    switch (s_.kind) {
        case Endomorphism::Kind::Identity: return a;
        case Endomorphism::Kind::FrobeniusPower: {
            GfElem g = a.as<GfElem>();
            for (unsigned e = 0; e < s_.exponent; ++e) g.code = field_->frobenius(g.code);
            return g;
        }
        case Endomorphism::Kind::SquareVariable: return a.as<RatFunc>().compose_square();
    }
    return a;
}

Element RingContext::apply_D(const Element& a) const {
    require_member(a);
    switch (d_.kind) {
        case Derivation::Kind::Zero: return zero();
        case Derivation::Kind::Inner: return (*d_.d) * a - apply_S(a) * (*d_.d);
        case Derivation::Kind::FormalDerivative: return a.as<RatFunc>().derivative();
    }
    return zero();
}

std::optional<Element> RingContext::s_preimage(const Element& a) const {
    if (!caps_.s_preimage_decidable)
        throw Error(ErrorCode::CapabilityMissing, "S-image membership is undecidable on " + name());
    require_member(a);
    switch (s_.kind) {
        case Endomorphism::Kind::Identity: return a;
        case Endomorphism::Kind::FrobeniusPower: {
            GfElem g = a.as<GfElem>();
            unsigned back = field_->degree() - s_.exponent;
            for (unsigned e = 0; e < back; ++e) g.code = field_->frobenius(g.code);
            return Element(g);
        }
        case Endomorphism::Kind::SquareVariable: {
            auto r = a.as<RatFunc>().square_preimage();
            if (!r) return std::nullopt;
            return Element(*r);
        }
    }
    return std::nullopt;
}

std::vector<Element> RingContext::enumerate() const {
    if (!caps_.finitely_enumerable)
        throw Error(ErrorCode::CapabilityMissing, name() + " is not finitely enumerable");
    std::vector<Element> out;
    out.reserve(field_->order());
    for (GaloisField::Code c = 0; c < field_->order(); ++c) out.emplace_back(GfElem{field_, c});
    return out;
}

std::vector<mpq_class> RingContext::coordinates(const Element& a) const {
    require_member(a);
    switch (backend_) {
        case Backend::Rationals: return {a.as<mpq_class>()};
        case Backend::Quaternions: {
            auto c = a.as<Quaternion>().components();
            return {c.begin(), c.end()};
        }
        case Backend::FiniteField: {
            std::vector<mpq_class> out;
            for (auto d : field_->digits(a.as<GfElem>().code)) out.emplace_back(d);
            return out;
        }
        case Backend::RationalFunctions: break;
    }
    throw Error(ErrorCode::CapabilityMissing, name() + " is not finite-dimensional over its base field");
}

Element RingContext::from_coordinates(const std::vector<mpq_class>& coords) const {
    if (coords.size() != caps_.central_dimension || caps_.central_dimension == 0)
        throw Error(ErrorCode::InvalidArgument, "coordinate vector has the wrong length");
    switch (backend_) {
        case Backend::Rationals: return coords[0];
        case Backend::Quaternions: return Quaternion(coords[0], coords[1], coords[2], coords[3]);
        case Backend::FiniteField: {
            std::vector<std::uint32_t> d;
            for (const auto& c : coords) {
                auto e = from_rational(c);
                d.push_back(e.as<GfElem>().code);
            }
            return GfElem{field_, field_->from_digits(d)};
        }
        case Backend::RationalFunctions: break;
    }
    throw Error(ErrorCode::CapabilityMissing, name() + " is not finite-dimensional over its base field");
}

std::string RingContext::ring_tag() const {
    switch (backend_) {
        case Backend::Rationals: return "Q";
        case Backend::Quaternions: return "HQ";
        case Backend::RationalFunctions: return std::string("Q") + var_;
        case Backend::FiniteField: return "F" + std::to_string(field_->order());
    }
    return "?";
}

std::string RingContext::name() const {
    std::string out = ring_tag() + "[S=";
    switch (s_.kind) {
        case Endomorphism::Kind::Identity: out += "id"; break;
        case Endomorphism::Kind::FrobeniusPower:
            out += "frob";
            if (s_.exponent != 1) out += ":" + std::to_string(s_.exponent);
            break;
        case Endomorphism::Kind::SquareVariable: out += "xsq"; break;
    }
    out += ",D=";
    switch (d_.kind) {
        case Derivation::Kind::Zero: out += "zero"; break;
        case Derivation::Kind::Inner: out += "inner(" + format(*d_.d) + ")"; break;
        case Derivation::Kind::FormalDerivative: out += "d/d"; out += var_; break;
    }
    return out + "]";
}

bool operator==(const RingContext& a, const RingContext& b) {
    return a.backend_ == b.backend_ && a.field_ == b.field_ && a.var_ == b.var_ && a.s_ == b.s_ &&
           a.d_ == b.d_;
}

bool same_context(const ContextPtr& a, const ContextPtr& b) {
    return a == b || (a && b && *a == *b);
}

void require_same_context(const ContextPtr& a, const ContextPtr& b) {
    if (!same_context(a, b))
        throw Error(ErrorCode::ContextMismatch,
                    "operands live over " + (a ? a->name() : "?") + " and " + (b ? b->name() : "?"));
}

void RingContext::validate_laws() const {
    std::vector<Element> samples;
    switch (backend_) {
        case Backend::FiniteField: {
            auto all = enumerate();
            std::size_t n = std::min<std::size_t>(all.size(), 16);
            samples.assign(all.begin(), all.begin() + static_cast<long>(n));
            break;
        }
        case Backend::Rationals:
            samples = {from_int(0), from_int(1), from_int(-2), from_rational(mpq_class(3, 4))};
            break;
        case Backend::RationalFunctions: {
            RatFunc x(QPoly::variable());
            RatFunc one(QPoly(1));
            samples = {zero(), one, x, x + one, x.inverse(),
                       RatFunc(QPoly(std::vector<mpq_class>{1, 0, 1}), QPoly(std::vector<mpq_class>{-1, 1})),
                       RatFunc(QPoly(std::vector<mpq_class>{mpq_class(1, 2), -3}))};
            break;
        }
        case Backend::Quaternions:
            samples = {zero(), one(), Quaternion::i(), Quaternion::j(), Quaternion::k(),
                       Quaternion(1, 2, mpq_class(-1, 2), 3), Quaternion(mpq_class(2, 3), 0, 1, -1)};
            break;
    }
    auto fail = [&](const std::string& what) {
        throw Error(ErrorCode::InvalidArgument, name() + ": " + what);
    };
    if (!apply_S(one()).is_one()) fail("S(1) != 1");
    if (!apply_D(one()).is_zero()) fail("D(1) != 0");
    for (const auto& a : samples) {
        for (const auto& b : samples) {
            if (apply_S(a + b) != apply_S(a) + apply_S(b)) fail("S is not additive");
            if (apply_S(a * b) != apply_S(a) * apply_S(b)) fail("S is not multiplicative");
            if (apply_D(a + b) != apply_D(a) + apply_D(b)) fail("D is not additive");
            if (apply_D(a * b) != apply_S(a) * apply_D(b) + apply_D(a) * b) fail("D violates the S-derivation law");
        }
    }
}

}  // namespace ore
