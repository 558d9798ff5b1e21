#pragma once

#include "ore/element.hpp"

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ore {

enum class Backend { Rationals, FiniteField, RationalFunctions, Quaternions };

struct Endomorphism {
    enum class Kind { Identity, FrobeniusPower, SquareVariable };
    Kind kind = Kind::Identity;
    /// For FrobeniusPower: S(x) = x^(p^exponent).
    unsigned exponent = 0;

    static Endomorphism identity() { return {}; }
    static Endomorphism frobenius(unsigned e = 1) { return {Kind::FrobeniusPower, e}; }
    static Endomorphism square_variable() { return {Kind::SquareVariable, 0}; }
    bool is_identity() const { return kind == Kind::Identity; }
    friend bool operator==(const Endomorphism&, const Endomorphism&) = default;
};

struct Derivation {
    enum class Kind { Zero, Inner, FormalDerivative };
    Kind kind = Kind::Zero;
    /// For Inner: D(x) = d*x - S(x)*d.
    std::optional<Element> d;

    static Derivation zero() { return {}; }
    static Derivation inner(Element d) { return {Kind::Inner, std::move(d)}; }
    static Derivation formal_derivative() { return {Kind::FormalDerivative, std::nullopt}; }
    friend bool operator==(const Derivation& a, const Derivation& b) {
        return a.kind == b.kind && a.d == b.d;
    }
};

struct Capabilities {
    bool finitely_enumerable = false;
    bool s_is_automorphism = false;
    bool s_preimage_decidable = false;
    bool commutative = false;
    /// Dimension over the central base field on which S and D act linearly;
    /// 0 when K is not finite-dimensional over it.
    unsigned central_dimension = 0;
    /// Characteristic of K (and of the base field).
    std::uint32_t characteristic = 0;
};

class RingContext;
using ContextPtr = std::shared_ptr<const RingContext>;

/// A computable division ring K with an endomorphism S and an
/// S-derivation D. Immutable; shared by every value built over it.
class RingContext {
public:
    static ContextPtr rationals();
    static ContextPtr finite_field(const GaloisField& field, Endomorphism s, Derivation d);
    /// Q(var); `var` is the printed variable name (x or u).
    static ContextPtr rational_functions(char var, Endomorphism s, Derivation d);
    static ContextPtr quaternions(Derivation d = Derivation::zero());

    static const GaloisField& f2();
    static const GaloisField& f4();  // F_2[w]/(w^2+w+1)
    static const GaloisField& f8();  // F_2[w]/(w^3+w+1)

    Backend backend() const noexcept { return backend_; }
    const Endomorphism& endomorphism() const noexcept { return s_; }
    const Derivation& derivation() const noexcept { return d_; }
    const Capabilities& capabilities() const noexcept { return caps_; }
    const GaloisField* field() const noexcept { return field_; }
    char variable() const noexcept { return var_; }
    bool is_classical() const noexcept { return s_.is_identity() && d_.kind == Derivation::Kind::Zero; }
    bool derivation_is_zero() const noexcept { return d_.kind == Derivation::Kind::Zero; }

    Element zero() const;
    Element one() const;
    Element from_int(long v) const;
    Element from_rational(const mpq_class& q) const;
    /// The generator w, x/u, or the unit i/j/k by name.
    std::optional<Element> symbol(std::string_view name) const;
    bool contains(const Element& a) const;

    Element apply_S(const Element& a) const;
    Element apply_D(const Element& a) const;
    /// b with S(b) = a, or nothing when a is not in S(K). Throws
    /// CapabilityMissing when membership is undecidable.
    std::optional<Element> s_preimage(const Element& a) const;

    /// All elements, zero first then in code order. CapabilityMissing
    /// unless finitely enumerable.
    std::vector<Element> enumerate() const;

    /// Coordinates over the central base field (Q or F_p).
    std::vector<mpq_class> coordinates(const Element& a) const;
    Element from_coordinates(const std::vector<mpq_class>& coords) const;

    std::string format(const Element& a) const;
    /// Throws SyntaxError / WrongRing.
    Element parse(std::string_view text) const;

    /// Short description such as `F4[S=frob,D=inner(w)]`.
    std::string name() const;
    /// CLI-style ring tag: Q, F4, F8, Qx, Qu, HQ (or Fq for other fields).
    std::string ring_tag() const;

    friend bool operator==(const RingContext& a, const RingContext& b);

private:
    RingContext() = default;
    void validate_laws() const;
    void require_member(const Element& a) const;

    Backend backend_ = Backend::Rationals;
    const GaloisField* field_ = nullptr;
    char var_ = 'x';
    Endomorphism s_;
    Derivation d_;
    Capabilities caps_;
};

/// Same ring (pointer or structural equality); throws ContextMismatch otherwise.
void require_same_context(const ContextPtr& a, const ContextPtr& b);
bool same_context(const ContextPtr& a, const ContextPtr& b);

}  // namespace ore
