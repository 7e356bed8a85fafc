#pragma once

#include <vector>

#include "paratensor/paracontact/nullity.hpp"

namespace paratensor::paracontact {

/// Checks h^2 = (1+k)phi^2, (nabla_X eta)Y = g(X,phiY) - g(hX,phiY),
/// R(xi,X)Y = k{g(X,Y)xi - eta(Y)X}, S(X,xi) = 2nk eta(X) with the classified
/// k, plus the para-Sasakian curvature condition R(X,Y)xi = -{eta(Y)X - eta(X)Y}.
/// A verdict is `expected` only when the class makes the identity a
/// consequence (strict N(k) classes; para-Sasakian for the last one).
std::vector<IdentityCheck> verify_nk_identities(const Geometry& geom, const ParacontactStructure& s,
                                                const HTensor& h, const NullityClassification& cls);

}  // namespace paratensor::paracontact
