#include "paratensor/geometry/linear_solve.hpp"

#include <utility>

#include "paratensor/error.hpp"

namespace paratensor::geometry {

LinearSolution solve_linear(const ExprMatrix& A, const std::vector<Expr>& b) {
    const std::size_t m = A.rows();
    const std::size_t n = A.cols();
    if (b.size() != m) throw DomainError("solve_linear: right-hand side length mismatch");

    ExprMatrix aug(m, n + 1);
    for (std::size_t r = 0; r < m; ++r) {
        for (std::size_t c = 0; c < n; ++c) aug(r, c) = A(r, c);
        aug(r, n) = b[r];
    }

    std::vector<std::size_t> pivot_cols;
    Expr prev(1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n && row < m; ++col) {
        std::size_t p = row;
        while (p < m && aug(p, col).is_zero()) ++p;
        if (p == m) continue;
        if (p != row)
            for (std::size_t c = 0; c <= n; ++c) std::swap(aug(p, c), aug(row, c));
        const Expr pivot = aug(row, col);
        for (std::size_t r = row + 1; r < m; ++r) {
            const Expr factor = aug(r, col);
            for (std::size_t c = col + 1; c <= n; ++c) {
                if (factor.is_zero()) {
                    aug(r, c) = (pivot * aug(r, c)) / prev;
                } else {
                    aug(r, c) = (pivot * aug(r, c) - factor * aug(row, c)) / prev;
                }
            }
            aug(r, col) = Expr();
        }
        prev = pivot;
        pivot_cols.push_back(col);
        ++row;
    }

    LinearSolution sol;
    sol.values.assign(n, Expr());
    for (std::size_t c = 0, k = 0; c < n; ++c) {
        if (k < pivot_cols.size() && pivot_cols[k] == c) {
            ++k;
        } else {
            sol.free_unknowns.push_back(c);
        }
    }
    for (std::size_t k = pivot_cols.size(); k-- > 0;) {
        const std::size_t col = pivot_cols[k];
        Expr rhs = aug(k, n);
        for (std::size_t c = col + 1; c < n; ++c)
            if (!aug(k, c).is_zero() && !sol.values[c].is_zero()) rhs -= aug(k, c) * sol.values[c];
        sol.values[col] = rhs / aug(k, col);
    }

    // Residual on the original equations decides consistency.
    for (std::size_t r = 0; r < m; ++r) {
        Expr res = -b[r];
        for (std::size_t c = 0; c < n; ++c)
            if (!A(r, c).is_zero() && !sol.values[c].is_zero()) res += A(r, c) * sol.values[c];
        if (!res.is_zero()) {
            sol.status = LinearSolution::Status::Inconsistent;
            sol.witness_equation = r;
            sol.witness_residual = res;
            return sol;
        }
    }
    sol.status = sol.free_unknowns.empty() ? LinearSolution::Status::Unique : LinearSolution::Status::Underdetermined;
    return sol;
}

}  // namespace paratensor::geometry
