#pragma once

#include "paratensor/conditions/common.hpp"

namespace paratensor::conditions {

/// (nabla_X S)(Y,Z) = A(X) S(Y,Z) + B(X) g(Y,Z).
struct RecurrenceSolution {
    bool exists = false;
    bool unique = true;  // false when S is pointwise proportional to g; B is then taken as 0
    FrameVector A;       // A(e_i); entries for unsolvable directions are best-effort
    FrameVector B;
    FrameVector zeta1;  // g(X, zeta1) = A(X)
    FrameVector zeta2;  // g(X, zeta2) = B(X)
    /// Per direction: the residual witness when nabla_{e_i}S is outside span{S, g}.
    std::vector<std::optional<Witness>> residuals;
    /// 2nk A + B = 0 (only set when k is known and a solution exists).
    std::optional<bool> theorem_holds;
    /// zeta2 = factor * zeta1 with factor = -2nk, verified exactly.
    std::optional<Expr> proportionality;
    bool proportionality_verified = false;
};

/// Throws DomainError when S vanishes identically.
RecurrenceSolution generalized_ricci_recurrence_solve(const Geometry& geom, const std::optional<Expr>& k, int n);

/// Residual of the recurrence for given A, B with an optional factor on B
/// (to test a relation written with c B(X) g(Y,Z)); layout (i, j, k).
FrameTensor recurrence_residual(const Geometry& geom, const FrameVector& A, const FrameVector& B,
                                const Expr& b_factor = Expr(1));

}  // namespace paratensor::conditions
