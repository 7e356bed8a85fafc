#include "paratensor/geometry/matrix.hpp"

#include <utility>

#include "paratensor/error.hpp"

namespace paratensor::geometry {

ExprMatrix ExprMatrix::identity(std::size_t n) {
    ExprMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Expr(1);
    return m;
}

ExprMatrix ExprMatrix::transpose() const {
    ExprMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

ExprMatrix ExprMatrix::operator*(const ExprMatrix& o) const {
    if (cols_ != o.rows_) throw DomainError("matrix shape mismatch in product");
    ExprMatrix out(rows_, o.cols_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < o.cols_; ++c) {
            Expr s;
            for (std::size_t k = 0; k < cols_; ++k) {
                if ((*this)(r, k).is_zero() || o(k, c).is_zero()) continue;
                s += (*this)(r, k) * o(k, c);
            }
            out(r, c) = std::move(s);
        }
    return out;
}

ExprMatrix ExprMatrix::operator+(const ExprMatrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch in sum");
    ExprMatrix out(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) out.data_[i] += o.data_[i];
    return out;
}

ExprMatrix ExprMatrix::operator-(const ExprMatrix& o) const { return *this + o.scaled(Expr(-1)); }

ExprMatrix ExprMatrix::scaled(const Expr& s) const {
    ExprMatrix out(*this);
    for (auto& e : out.data_) e *= s;
    return out;
}

std::vector<Expr> ExprMatrix::apply(const std::vector<Expr>& v) const {
    if (v.size() != cols_) throw DomainError("vector length mismatch in matrix application");
    std::vector<Expr> out(rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c)
            if (!v[c].is_zero() && !(*this)(r, c).is_zero()) out[r] += (*this)(r, c) * v[c];
    return out;
}

bool ExprMatrix::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

bool ExprMatrix::is_symmetric() const {
    if (!is_square()) return false;
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = r + 1; c < cols_; ++c)
            if ((*this)(r, c) != (*this)(c, r)) return false;
    return true;
}

Expr ExprMatrix::determinant() const {
    if (!is_square()) throw DomainError("determinant of a non-square matrix");
    const std::size_t n = rows_;
    if (n == 0) return Expr(1);
    ExprMatrix a(*this);
    Expr sign(1);
    Expr prev(1);
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k).is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a(p, k).is_zero()) ++p;
            if (p == n) return Expr();
            for (std::size_t c = 0; c < n; ++c) std::swap(a(k, c), a(p, c));
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
            a(i, k) = Expr();
        }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

ExprMatrix ExprMatrix::adjugate() const {
    if (!is_square()) throw DomainError("adjugate of a non-square matrix");
    const std::size_t n = rows_;
    ExprMatrix adj(n, n);
    if (n == 1) {
        adj(0, 0) = Expr(1);
        return adj;
    }
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
            ExprMatrix minor(n - 1, n - 1);
            for (std::size_t i = 0, mi = 0; i < n; ++i) {
                if (i == r) continue;
                for (std::size_t j = 0, mj = 0; j < n; ++j) {
                    if (j == c) continue;
                    minor(mi, mj++) = (*this)(i, j);
                }
                ++mi;
            }
            Expr cof = minor.determinant();
            adj(c, r) = (r + c) % 2 == 0 ? cof : -cof;
        }
    return adj;
}

}  // namespace paratensor::geometry
