#pragma once

#include "paratensor/conditions/common.hpp"

namespace paratensor::conditions {

/// g((R(xi,X).R)(Y,Z)W, xi) = L g(((xi wedge_S X).R)(Y,Z)W, xi) and the
/// three ways it can be satisfied on an N(k) manifold.
struct RicciPseudoSymmetryReport {
    std::optional<Expr> L;
    bool holds = false;        // some single L satisfies the relation
    bool rhs_zero = false;     // (xi wedge_S X).R vanishes on the tested slots
    std::optional<Witness> witness;

    bool semi_symmetric = false;  // R.R = 0 (full tensor)
    bool k_zero = false;
    bool einstein_branch = false;  // S = 2nk g
    /// k (2nk g - S): the relation forces L times this to vanish.
    FrameTensor constraint;
    std::optional<Witness> constraint_witness;
    bool applicable = false;  // structure is strict N(k)
    /// holds implies at least one branch; false means a counterexample to the
    /// trichotomy (only meaningful when applicable).
    bool trichotomy_consistent = true;
};

RicciPseudoSymmetryReport ricci_generalized_ps_check(const Geometry& geom, const FrameVector& xi, const Expr& k, int n,
                                                     bool strict_nk);

}  // namespace paratensor::conditions
