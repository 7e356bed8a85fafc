#include "paratensor/conditions/recurrence.hpp"

#include "paratensor/error.hpp"
#include "paratensor/geometry/linear_solve.hpp"

namespace paratensor::conditions {

namespace {

FrameTensor nabla_ricci(const Geometry& geom) {
    return geometry::covariant_derivative(geom.frame, geom.connection, geom.ricci);
}

}  // namespace

FrameTensor recurrence_residual(const Geometry& geom, const FrameVector& A, const FrameVector& B,
                                const Expr& b_factor) {
    const std::size_t d = geom.dim();
    const FrameTensor dS = nabla_ricci(geom);
    FrameTensor out(d, 0, 3);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k)
                out({i, j, k}) = dS({i, j, k}) - A[i] * geom.ricci({j, k}) - b_factor * B[i] * geom.metric(j, k);
    return out;
}

RecurrenceSolution generalized_ricci_recurrence_solve(const Geometry& geom, const std::optional<Expr>& k, int n) {
    if (geom.ricci.is_zero()) throw DomainError("recurrence: the Ricci tensor vanishes identically");
    const std::size_t d = geom.dim();
    const FrameTensor dS = nabla_ricci(geom);

    // Both S and g are symmetric, so the upper triangle carries all equations.
    std::vector<std::pair<std::size_t, std::size_t>> slots;
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t l = j; l < d; ++l) slots.emplace_back(j, l);
    geometry::ExprMatrix M(slots.size(), 2);
    for (std::size_t r = 0; r < slots.size(); ++r) {
        M(r, 0) = geom.ricci({slots[r].first, slots[r].second});
        M(r, 1) = geom.metric(slots[r].first, slots[r].second);
    }

    RecurrenceSolution sol;
    sol.exists = true;
    sol.A.resize(d);
    sol.B.resize(d);
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Expr> rhs(slots.size());
        for (std::size_t r = 0; r < slots.size(); ++r) rhs[r] = dS({i, slots[r].first, slots[r].second});
        const auto s = geometry::solve_linear(M, rhs);
        sol.A[i] = s.values[0];
        sol.B[i] = s.values[1];
        if (s.status == geometry::LinearSolution::Status::Underdetermined) sol.unique = false;
        if (!s.solvable()) {
            sol.exists = false;
            const auto& slot = slots[*s.witness_equation];
            const std::size_t idx[3] = {i, slot.first, slot.second};
            sol.residuals.emplace_back(Witness{slot_label(idx, 0), s.witness_residual});
        } else {
            sol.residuals.emplace_back(std::nullopt);
        }
    }
    sol.zeta1 = geom.metric.raise(sol.A);
    sol.zeta2 = geom.metric.raise(sol.B);

    if (k && sol.exists) {
        const Expr two_nk = Expr(2 * n) * *k;
        bool ok = true;
        for (std::size_t i = 0; i < d && ok; ++i) ok = (two_nk * sol.A[i] + sol.B[i]).is_zero();
        sol.theorem_holds = ok;
        sol.proportionality = -two_nk;
        bool prop = true;
        for (std::size_t i = 0; i < d && prop; ++i) prop = (sol.zeta2[i] + two_nk * sol.zeta1[i]).is_zero();
        sol.proportionality_verified = prop;
    }
    return sol;
}

}  // namespace paratensor::conditions
