#pragma once

#include <optional>
#include <string>

#include "paratensor/conditions/common.hpp"

namespace paratensor::conditions {

enum class TensorKind { Riemann, Ricci };

std::string to_string(TensorKind k);

/// R(X,Y).I = L [(X wedge_g Y).I] for I = R or S.
struct PseudoSymmetryReport {
    TensorKind kind = TensorKind::Riemann;
    bool restricted = false;  // first slot fixed to a given field (xi)
    std::optional<Expr> L;    // unset when (X wedge_g Y).I vanishes
    bool holds = false;
    bool constant_type = false;
    bool semi_symmetric = false;  // R.I = 0 on the tested slots
    std::optional<Witness> witness;
};

/// Full test over all frame tuples, or with X fixed to `first_slot` when
/// given (the restricted form R(xi, Y).I = L (xi wedge_g Y).I).
PseudoSymmetryReport pseudo_symmetry_analyze(const Geometry& geom, TensorKind kind,
                                             const std::optional<FrameVector>& first_slot = std::nullopt);

}  // namespace paratensor::conditions
