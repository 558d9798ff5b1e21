#pragma once

#include "ore/context.hpp"

#include <gmpxx.h>

#include <functional>
#include <optional>
#include <vector>

namespace ore {

/// Q (p = 0) or F_p, with F_p residues stored as integral mpq values in [0, p).
class BaseField {
public:
    explicit BaseField(std::uint32_t p = 0) : p_(p) {}

    std::uint32_t characteristic() const noexcept { return p_; }
    mpq_class normalize(const mpq_class& v) const;
    mpq_class add(const mpq_class& a, const mpq_class& b) const { return normalize(a + b); }
    mpq_class sub(const mpq_class& a, const mpq_class& b) const { return normalize(a - b); }
    mpq_class mul(const mpq_class& a, const mpq_class& b) const { return normalize(a * b); }
    mpq_class inv(const mpq_class& a) const;

private:
    std::uint32_t p_;
};

using BaseVector = std::vector<mpq_class>;

/// Dense matrix over a BaseField with exact elimination.
class BaseMatrix {
public:
    BaseMatrix(BaseField field, std::size_t rows, std::size_t cols);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    const BaseField& field() const noexcept { return field_; }
    mpq_class& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
    const mpq_class& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }
    void set_column(std::size_t c, const BaseVector& v);

    std::size_t rank() const;
    /// Basis of {x : M x = 0} in reduced form: one vector per free column,
    /// ordered by free-column index.
    std::vector<BaseVector> kernel() const;
    /// Some x with M x = b, or nothing.
    std::optional<BaseVector> solve(const BaseVector& b) const;

private:
    /// Reduced row echelon form in place; returns pivot columns.
    std::vector<std::size_t> rref();

    BaseField field_;
    std::size_t rows_, cols_;
    std::vector<mpq_class> a_;
};

/// Whether `v` lies in the span of `basis`.
bool in_span(const BaseField& field, const std::vector<BaseVector>& basis, const BaseVector& v);

/// Base field of a finite-dimensional context (Q or F_p).
BaseField base_field_of(const RingContext& ctx);

/// Matrix of a base-linear additive map K -> K in the coordinates of `ctx`;
/// column i is the image of the i-th basis element.
BaseMatrix matrix_of_map(const RingContext& ctx, const std::function<Element(const Element&)>& map);

/// Basis of the kernel of a base-linear map, as elements of K.
std::vector<Element> kernel_of_map(const RingContext& ctx, const std::function<Element(const Element&)>& map);

}  // namespace ore
