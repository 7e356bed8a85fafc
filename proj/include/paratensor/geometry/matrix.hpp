#pragma once

#include <cstddef>
#include <vector>

#include "paratensor/symexpr/expr.hpp"

namespace paratensor::geometry {

using symexpr::Expr;

/// Dense row-major matrix of Exprs.
class ExprMatrix {
public:
    ExprMatrix() = default;
    ExprMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    static ExprMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }
    bool is_square() const noexcept { return rows_ == cols_; }

    Expr& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Expr& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    ExprMatrix transpose() const;
    ExprMatrix operator*(const ExprMatrix& o) const;
    ExprMatrix operator+(const ExprMatrix& o) const;
    ExprMatrix operator-(const ExprMatrix& o) const;
    ExprMatrix scaled(const Expr& s) const;
    std::vector<Expr> apply(const std::vector<Expr>& v) const;

    bool is_zero() const;
    bool is_symmetric() const;

    /// Fraction-free (Bareiss) determinant.
    Expr determinant() const;
    /// Classical adjoint: adj(A) * A = det(A) * I.
    ExprMatrix adjugate() const;

    friend bool operator==(const ExprMatrix& a, const ExprMatrix& b) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Expr> data_;
};

}  // namespace paratensor::geometry
