#pragma once

#include <vector>

#include "paratensor/checks.hpp"
#include "paratensor/geometry/geometry.hpp"

namespace paratensor::paracontact {

using geometry::Expr;
using geometry::FrameTensor;
using geometry::FrameVector;
using geometry::Geometry;

/// (phi, xi, eta) on a frame. phi({a, j}) is the e_a component of phi(e_j),
/// i.e. column j of the phi matrix holds phi(e_j).
struct ParacontactStructure {
    FrameTensor phi;
    FrameVector xi;
    FrameVector eta;                 // eta(e_j)
    std::vector<Expr> eta_coordinates;  // coordinate cobasis, empty if unknown
    int n = 1;

    /// eta given in the coordinate cobasis (as in "eta = 2y dx + dz").
    static ParacontactStructure from_coordinate_eta(const Geometry& geom, FrameTensor phi, FrameVector xi,
                                                    std::vector<Expr> eta_coords);
    static ParacontactStructure from_frame_eta(const Geometry& geom, FrameTensor phi, FrameVector xi,
                                               FrameVector eta);

    FrameVector apply_phi(std::span<const Expr> X) const;
};

/// Matrix-like (1,1) helpers.
FrameTensor compose(const FrameTensor& A, const FrameTensor& B);
FrameVector apply(const FrameTensor& A, std::span<const Expr> X);
FrameTensor identity_endomorphism(std::size_t d);

/// Exact verdicts for phi^2 = I - eta(x)xi, eta(xi) = 1, phi xi = 0,
/// eta o phi = 0, g(phiX, phiY) = -g(X,Y) + eta(X)eta(Y), g(X, xi) = eta(X),
/// g(phiX, Y) = -g(X, phiY), and the contact condition dEta(X,Y) = g(X, phiY).
std::vector<IdentityCheck> verify_apc_axioms(const Geometry& geom, const ParacontactStructure& s);

/// h = 1/2 Lie_xi(phi) with the checks hxi = 0, h phi + phi h = 0, tr h = 0,
/// g(hX, Y) = g(X, hY) and nabla_X xi = -phi X + phi h X.
struct HTensor {
    FrameTensor h;
    std::vector<IdentityCheck> checks;

    bool all_invariants_hold() const;
    bool is_zero() const { return h.is_zero(); }
};

HTensor compute_h(const Geometry& geom, const ParacontactStructure& s);

}  // namespace paratensor::paracontact
