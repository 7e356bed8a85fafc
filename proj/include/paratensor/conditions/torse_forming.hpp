#pragma once

#include <optional>

#include "paratensor/conditions/common.hpp"

namespace paratensor::conditions {

/// Sampled analysis of the unit field v/sqrt|w(v)| for a non-null torse-forming
/// field v. T = w/sqrt|q| and lambda = rho/sqrt|q| with q = w(v) leave the
/// polynomial ring, so they are checked in floating point at sample points.
struct UnitAnalysis {
    Expr norm_squared;    // q = w(v) = g(v, v)
    Expr lambda_squared;  // rho^2 / |q| up to the sign of q: rho^2 / q * sign
    int sign = 1;         // sign of q on the samples (+1 spacelike, -1 timelike)
    /// beta_T(X) = -sign * lambda * T(X) with beta_T = beta - d(log sqrt|q|),
    /// checked exactly in the cleared form 2q beta - dq + 2 rho w = 0.
    bool beta_relation = false;
    /// (nabla_X T)(Y) = lambda [g(X,Y) - sign T(X)T(Y)] at every sample.
    bool satisfies_concircular_form = false;
    bool beta_closed = false;  // d(beta) = 0, exact
    bool t_closed = false;     // dT = 0 at every sample
    std::size_t samples = 0;
    double max_relative_error = 0.0;
    std::vector<double> lambda_samples;
};

struct TorseFormingReport {
    bool is_torse_forming = false;
    Expr rho;
    FrameVector beta;
    bool unique = true;  // false when (rho, beta) is not determined
    FrameVector omega;   // w(e_j) = g(e_j, v)
    std::optional<Witness> witness;  // residual slot when not torse-forming
    std::optional<UnitAnalysis> unit;
    /// Torse-forming with a closed 1-form beta.
    bool concircular = false;
};

/// Solves (nabla_X w)(Y) = rho g(X,Y) + beta(X) w(Y) exactly for rho and
/// beta(e_1..e_d). The unit analysis runs when v is not null; a null field
/// with `require_unit` set raises DomainError.
TorseFormingReport torse_forming_analyze(const Geometry& geom, const geometry::VectorField& field,
                                         const NumericOptions& numeric = {}, bool require_unit = false);

}  // namespace paratensor::conditions
