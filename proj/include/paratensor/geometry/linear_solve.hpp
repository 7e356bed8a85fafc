#pragma once

#include <optional>
#include <vector>

#include "paratensor/geometry/matrix.hpp"

namespace paratensor::geometry {

/// Outcome of an exact linear solve A x = b over the field of Exprs.
struct LinearSolution {
    enum class Status { Unique, Underdetermined, Inconsistent };

    Status status = Status::Inconsistent;
    /// Unique solution, or the particular solution with every free unknown
    /// set to zero. For an inconsistent system it is the best effort value
    /// from the pivot rows, used to produce the residual witness.
    std::vector<Expr> values;
    std::vector<std::size_t> free_unknowns;
    /// First equation whose residual A x - b is nonzero (inconsistent case).
    std::optional<std::size_t> witness_equation;
    Expr witness_residual;

    bool solvable() const noexcept { return status != Status::Inconsistent; }
};

/// Fraction-free (Bareiss) elimination followed by back substitution. A
/// pivot is any entry that is not identically zero, so the answer holds on
/// the open dense set where the chosen pivots do not vanish.
LinearSolution solve_linear(const ExprMatrix& A, const std::vector<Expr>& b);

}  // namespace paratensor::geometry
