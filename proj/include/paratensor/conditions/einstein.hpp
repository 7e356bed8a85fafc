#pragma once

#include "paratensor/conditions/common.hpp"

namespace paratensor::conditions {

struct EinsteinVerdict {
    bool einstein = false;  // S = c g with constant c
    std::optional<Expr> c;  // proportionality function when S is pointwise proportional to g
    bool proportional = false;
    std::optional<Witness> witness;
};

/// Decides S = c g exactly.
EinsteinVerdict is_einstein(const FrameTensor& S, const geometry::FrameMetric& g);

/// R.R = 0 on every frame tuple.
bool is_semi_symmetric(const Geometry& geom);

}  // namespace paratensor::conditions
