#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ore {

/// GF(p^k) presented as F_p[w]/(modulus). Elements are coded as integers
/// sum c_i p^i over their coefficient sequence, so code order is the
/// lexicographic order on (c_{k-1}, ..., c_0). All arithmetic is table
/// driven; instances are interned and live for the whole program, which
/// lets elements refer to their field by plain pointer.
class GaloisField {
public:
    using Code = std::uint32_t;

    static constexpr std::uint32_t kMaxOrder = 1024;

    /// `modulus` is ascending, monic, of length k+1, with entries in [0, p).
    static const GaloisField& get(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t characteristic() const noexcept { return p_; }
    std::uint32_t degree() const noexcept { return k_; }
    std::uint32_t order() const noexcept { return q_; }
    const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }

    Code add(Code a, Code b) const { return add_[a * q_ + b]; }
    Code mul(Code a, Code b) const { return mul_[a * q_ + b]; }
    Code neg(Code a) const { return neg_[a]; }
    Code sub(Code a, Code b) const { return add(a, neg(b)); }
    /// Precondition: a != 0.
    Code inv(Code a) const { return inv_[a]; }
    /// x -> x^p
    Code frobenius(Code a) const { return frob_[a]; }
    Code from_integer(long long v) const;

    std::vector<std::uint32_t> digits(Code a) const;
    Code from_digits(const std::vector<std::uint32_t>& digits) const;

    /// Generator symbol is `w`.
    std::string format(Code a) const;

private:
    GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus);

    std::uint32_t p_;
    std::uint32_t k_;
    std::uint32_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<Code> add_, mul_, neg_, inv_, frob_;
};

}  // namespace ore
