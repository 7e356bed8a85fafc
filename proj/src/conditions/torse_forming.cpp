#include "paratensor/conditions/torse_forming.hpp"

#include <algorithm>
#include <cmath>

#include "paratensor/error.hpp"
#include "paratensor/geometry/linear_solve.hpp"

namespace paratensor::conditions {

namespace {

double rel_error(double a, double b) { return std::abs(a - b) / std::max({1.0, std::abs(a), std::abs(b)}); }

void run_unit_analysis(const Geometry& geom, TorseFormingReport& rep, const FrameTensor& nabla_omega,
                       const NumericOptions& numeric) {
    const std::size_t d = geom.dim();
    const auto& frame = geom.frame;
    const auto& g = geom.metric;
    const FrameVector& w = rep.omega;

    UnitAnalysis u;
    Expr q;
    for (std::size_t j = 0; j < d; ++j) q += w[j] * g.raise(w)[j];
    u.norm_squared = q;

    std::vector<Expr> dq(d);
    for (std::size_t i = 0; i < d; ++i) dq[i] = frame.derivative(i, q);

    bool relation = true;
    for (std::size_t i = 0; i < d && relation; ++i)
        relation = (Expr(2) * q * rep.beta[i] - dq[i] + Expr(2) * rep.rho * w[i]).is_zero();
    u.beta_relation = relation;
    u.beta_closed = geometry::exterior_derivative_frame_oneform(frame, rep.beta).is_zero();

    std::vector<Expr> guards{q, frame.determinant(), g.determinant()};
    const auto points = sample_points(d, numeric.samples, numeric.seed, guards);

    // e_i(w_j) for dT
    std::vector<Expr> dw(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) dw[i * d + j] = frame.derivative(i, w[j]);

    bool form_ok = true;
    bool closed_ok = true;
    int sign = 0;
    bool sign_consistent = true;
    for (const auto& p : points) {
        const double qv = symexpr::to_double(q.eval(p));
        const int s = qv > 0 ? 1 : -1;
        if (sign == 0) sign = s;
        if (s != sign) sign_consistent = false;
        const double f = std::sqrt(std::abs(qv));
        const double lambda = symexpr::to_double(rep.rho.eval(p)) / f;
        u.lambda_samples.push_back(lambda);
        std::vector<double> T(d), dqv(d);
        for (std::size_t j = 0; j < d; ++j) {
            T[j] = symexpr::to_double(w[j].eval(p)) / f;
            dqv[j] = symexpr::to_double(dq[j].eval(p));
        }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                // nabla T = nabla w / f - (e_i q) w_j / (2 q f)
                const double nT = symexpr::to_double(nabla_omega({i, j}).eval(p)) / f - dqv[i] * T[j] / (2.0 * qv);
                const double rhs = lambda * (symexpr::to_double(g(i, j).eval(p)) - s * T[i] * T[j]);
                const double e = rel_error(nT, rhs);
                u.max_relative_error = std::max(u.max_relative_error, e);
                if (e > numeric.relative_tolerance) form_ok = false;
            }
        // dT(e_i,e_j) = 1/2 (e_i T_j - e_j T_i - C^m_ij T_m)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i + 1; j < d; ++j) {
                auto eT = [&](std::size_t a, std::size_t b) {
                    return symexpr::to_double(dw[a * d + b].eval(p)) / f - dqv[a] * T[b] / (2.0 * qv);
                };
                double v = eT(i, j) - eT(j, i);
                for (std::size_t m = 0; m < d; ++m) v -= symexpr::to_double(frame.structure(m, i, j).eval(p)) * T[m];
                if (std::abs(v) > numeric.relative_tolerance * std::max(1.0, std::abs(eT(i, j)))) closed_ok = false;
            }
    }
    u.sign = sign == 0 ? 1 : sign;
    u.lambda_squared = rep.rho * rep.rho / q * Expr(u.sign);
    u.samples = points.size();
    u.satisfies_concircular_form = form_ok && sign_consistent;
    u.t_closed = closed_ok;
    rep.unit = std::move(u);
}

}  // namespace

TorseFormingReport torse_forming_analyze(const Geometry& geom, const geometry::VectorField& field,
                                         const NumericOptions& numeric, bool require_unit) {
    const std::size_t d = geom.dim();
    const auto& g = geom.metric;
    TorseFormingReport rep;
    const FrameVector v = geom.frame.to_frame(field);
    const Expr q = g.inner(v, v);
    if (require_unit && q.is_zero())
        throw DomainError("unit analysis needs a non-null field: g(v,v) vanishes identically");
    rep.omega = g.lower(v);
    const FrameTensor nabla_omega =
        geometry::covariant_derivative(geom.frame, geom.connection, geometry::oneform_tensor(rep.omega));

    // Unknowns [rho, beta_0 .. beta_{d-1}]; equation (i, j).
    geometry::ExprMatrix A(d * d, d + 1);
    std::vector<Expr> b(d * d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            A(i * d + j, 0) = g(i, j);
            A(i * d + j, 1 + i) = rep.omega[j];
            b[i * d + j] = nabla_omega({i, j});
        }
    const auto sol = geometry::solve_linear(A, b);
    rep.rho = sol.values[0];
    rep.beta.assign(sol.values.begin() + 1, sol.values.end());
    rep.unique = sol.status == geometry::LinearSolution::Status::Unique;
    rep.is_torse_forming = sol.solvable();
    if (!rep.is_torse_forming) {
        const std::size_t eq = *sol.witness_equation;
        const std::size_t idx[2] = {eq / d, eq % d};
        rep.witness = Witness{slot_label(idx, 0), sol.witness_residual};
        return rep;
    }

    if (!q.is_zero()) run_unit_analysis(geom, rep, nabla_omega, numeric);
    rep.concircular = geometry::exterior_derivative_frame_oneform(geom.frame, rep.beta).is_zero();
    return rep;
}

}  // namespace paratensor::conditions
