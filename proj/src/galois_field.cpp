#include "ore/galois_field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace ore {

namespace {

bool is_prime(std::uint32_t p) {
    if (p < 2) return false;
    for (std::uint32_t d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

}  // namespace

const GaloisField& GaloisField::get(std::uint32_t p, std::vector<std::uint32_t> modulus) {
    static std::mutex mutex;
    static std::map<std::pair<std::uint32_t, std::vector<std::uint32_t>>,
                    std::unique_ptr<GaloisField>>
        registry;
    std::lock_guard lock(mutex);
    auto key = std::make_pair(p, modulus);
    auto it = registry.find(key);
    if (it == registry.end()) {
        auto field = std::unique_ptr<GaloisField>(new GaloisField(p, std::move(modulus)));
        it = registry.emplace(std::move(key), std::move(field)).first;
    }
    return *it->second;
}

GaloisField::GaloisField(std::uint32_t p, std::vector<std::uint32_t> modulus)
    : p_(p), modulus_(std::move(modulus)) {
    if (!is_prime(p)) throw std::invalid_argument("GaloisField: characteristic must be prime");
    if (modulus_.size() < 2 || modulus_.back() != 1)
        throw std::invalid_argument("GaloisField: modulus must be monic of degree >= 1");
    for (auto c : modulus_)
        if (c >= p) throw std::invalid_argument("GaloisField: modulus coefficient out of range");
    k_ = static_cast<std::uint32_t>(modulus_.size() - 1);
    std::uint64_t q = 1;
    for (std::uint32_t i = 0; i < k_; ++i) {
        q *= p;
        if (q > kMaxOrder) throw std::invalid_argument("GaloisField: field too large for tables");
    }
    q_ = static_cast<std::uint32_t>(q);

    add_.resize(std::size_t(q_) * q_);
    mul_.resize(std::size_t(q_) * q_);
    neg_.resize(q_);
    inv_.assign(q_, 0);
    frob_.resize(q_);

    std::vector<std::vector<std::uint32_t>> dig(q_);
    for (Code a = 0; a < q_; ++a) dig[a] = digits(a);

    for (Code a = 0; a < q_; ++a) {
        std::vector<std::uint32_t> n(k_);
        for (std::uint32_t i = 0; i < k_; ++i) n[i] = (p_ - dig[a][i]) % p_;
        neg_[a] = from_digits(n);
        for (Code b = 0; b < q_; ++b) {
            std::vector<std::uint32_t> s(k_);
            for (std::uint32_t i = 0; i < k_; ++i) s[i] = (dig[a][i] + dig[b][i]) % p_;
            add_[a * q_ + b] = from_digits(s);

            // schoolbook product then reduction by the monic modulus
            std::vector<std::uint64_t> prod(2 * k_ - 1, 0);
            for (std::uint32_t i = 0; i < k_; ++i)
                for (std::uint32_t j = 0; j < k_; ++j) prod[i + j] += std::uint64_t(dig[a][i]) * dig[b][j];
            for (auto& c : prod) c %= p_;
            for (std::size_t top = prod.size(); top-- > k_;) {
                std::uint64_t c = prod[top];
                if (c == 0) continue;
                for (std::uint32_t i = 0; i <= k_; ++i) {
                    std::size_t idx = top - k_ + i;
                    prod[idx] = (prod[idx] + (p_ - c) * modulus_[i]) % p_;
                }
            }
            std::vector<std::uint32_t> r(k_);
            for (std::uint32_t i = 0; i < k_; ++i) r[i] = static_cast<std::uint32_t>(prod[i]);
            mul_[a * q_ + b] = from_digits(r);
        }
    }
    for (Code a = 1; a < q_; ++a)
        for (Code b = 1; b < q_; ++b)
            if (mul(a, b) == 1) {
                inv_[a] = b;
                break;
            }
    for (Code a = 1; a < q_; ++a)
        if (inv_[a] == 0) throw std::invalid_argument("GaloisField: modulus is not irreducible");
    for (Code a = 0; a < q_; ++a) {
        Code r = 1;
        for (std::uint32_t i = 0; i < p_; ++i) r = mul(r, a);
        frob_[a] = r;
    }
}

std::vector<std::uint32_t> GaloisField::digits(Code a) const {
    std::vector<std::uint32_t> d(k_);
    for (std::uint32_t i = 0; i < k_; ++i) {
        d[i] = a % p_;
        a /= p_;
    }
    return d;
}

GaloisField::Code GaloisField::from_digits(const std::vector<std::uint32_t>& digits) const {
    Code code = 0;
    for (std::size_t i = digits.size(); i-- > 0;) code = code * p_ + digits[i] % p_;
    return code;
}

GaloisField::Code GaloisField::from_integer(long long v) const {
    long long r = v % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<Code>(r);
}

std::string GaloisField::format(Code a) const {
    if (a == 0) return "0";
    auto d = digits(a);
    std::string out;
    for (std::size_t i = d.size(); i-- > 0;) {
        if (d[i] == 0) continue;
        if (!out.empty()) out += "+";
        if (i == 0 || d[i] != 1) out += std::to_string(d[i]);
        if (i > 0) {
            out += "w";
            if (i > 1) out += "^" + std::to_string(i);
        }
    }
    return out;
}

}  // namespace ore
