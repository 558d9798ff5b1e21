#include "ore/base_linear.hpp"

#include "ore/error.hpp"

namespace ore {

mpq_class BaseField::normalize(const mpq_class& v) const {
    if (p_ == 0) return v;
    mpz_class p = p_;
    mpz_class den = v.get_den() % p;
    if (den == 0) throw Error(ErrorCode::DivisionByZero, "denominator vanishes modulo p");
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), p.get_mpz_t());
    mpz_class r = (v.get_num() * inv) % p;
    if (r < 0) r += p;
    return mpq_class(r);
}

mpq_class BaseField::inv(const mpq_class& a) const {
    if (a == 0) throw Error(ErrorCode::DivisionByZero, "base-field inverse of zero");
    if (p_ == 0) return 1 / a;
    return normalize(mpq_class(1, 1) / a);
}

BaseMatrix::BaseMatrix(BaseField field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), a_(rows * cols, mpq_class(0)) {}

void BaseMatrix::set_column(std::size_t c, const BaseVector& v) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = field_.normalize(v[r]);
}

std::vector<std::size_t> BaseMatrix::rref() {
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols_ && row < rows_; ++col) {
        std::size_t pivot = row;
        while (pivot < rows_ && (*this)(pivot, col) == 0) ++pivot;
        if (pivot == rows_) continue;
        if (pivot != row)
            for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(pivot, c), (*this)(row, c));
        mpq_class inv = field_.inv((*this)(row, col));
        for (std::size_t c = col; c < cols_; ++c) (*this)(row, c) = field_.mul((*this)(row, c), inv);
        for (std::size_t r = 0; r < rows_; ++r) {
            if (r == row || (*this)(r, col) == 0) continue;
            mpq_class factor = (*this)(r, col);
            for (std::size_t c = col; c < cols_; ++c)
                (*this)(r, c) = field_.sub((*this)(r, c), field_.mul(factor, (*this)(row, c)));
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

std::size_t BaseMatrix::rank() const {
    BaseMatrix m = *this;
    return m.rref().size();
}

std::vector<BaseVector> BaseMatrix::kernel() const {
    BaseMatrix m = *this;
    auto pivots = m.rref();
    std::vector<bool> is_pivot(cols_, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<BaseVector> basis;
    for (std::size_t free = 0; free < cols_; ++free) {
        if (is_pivot[free]) continue;
        BaseVector v(cols_, mpq_class(0));
        v[free] = 1;
        for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = field_.normalize(-m(r, free));
        basis.push_back(std::move(v));
    }
    return basis;
}

std::optional<BaseVector> BaseMatrix::solve(const BaseVector& b) const {
    BaseMatrix aug(field_, rows_, cols_ + 1);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) aug(r, c) = (*this)(r, c);
        aug(r, cols_) = field_.normalize(b[r]);
    }
    auto pivots = aug.rref();
    if (!pivots.empty() && pivots.back() == cols_) return std::nullopt;
    BaseVector x(cols_, mpq_class(0));
    for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug(r, cols_);
    return x;
}

bool in_span(const BaseField& field, const std::vector<BaseVector>& basis, const BaseVector& v) {
    if (basis.empty()) {
        for (const auto& c : v)
            if (field.normalize(c) != 0) return false;
        return true;
    }
    BaseMatrix m(field, v.size(), basis.size());
    for (std::size_t c = 0; c < basis.size(); ++c) m.set_column(c, basis[c]);
    return m.solve(v).has_value();
}

BaseField base_field_of(const RingContext& ctx) {
    if (ctx.capabilities().central_dimension == 0)
        throw Error(ErrorCode::CapabilityMissing, ctx.name() + " is not finite-dimensional over its base field");
    return BaseField(ctx.capabilities().characteristic);
}

BaseMatrix matrix_of_map(const RingContext& ctx, const std::function<Element(const Element&)>& map) {
    BaseField field = base_field_of(ctx);
    const std::size_t n = ctx.capabilities().central_dimension;
    BaseMatrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) {
        BaseVector e(n, mpq_class(0));
        e[i] = 1;
        m.set_column(i, ctx.coordinates(map(ctx.from_coordinates(e))));
    }
    return m;
}

std::vector<Element> kernel_of_map(const RingContext& ctx, const std::function<Element(const Element&)>& map) {
    std::vector<Element> out;
    for (const auto& v : matrix_of_map(ctx, map).kernel()) out.push_back(ctx.from_coordinates(v));
    return out;
}

}  // namespace ore
