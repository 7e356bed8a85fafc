#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "paratensor/checks.hpp"
#include "paratensor/geometry/geometry.hpp"

namespace paratensor::conditions {

using geometry::Expr;
using geometry::FrameTensor;
using geometry::FrameVector;
using geometry::Geometry;

/// Result of solving lhs = L * rhs for one scalar function L over all slots.
struct ScalarFit {
    bool rhs_zero = false;
    std::optional<Expr> L;  // candidate from the first nonzero rhs slot; unset when rhs = 0
    bool holds = false;     // lhs - L rhs = 0 everywhere (or both sides zero)
    std::optional<Witness> witness;
};

ScalarFit fit_scalar(const FrameTensor& lhs, const FrameTensor& rhs);

bool has_zero_differential(const Expr& e, std::size_t dim);

/// `count` pseudo-random rational points (small numerators and
/// denominators) at which none of `nonvanishing` evaluates to zero.
std::vector<std::vector<symexpr::Rational>> sample_points(std::size_t dim, std::size_t count, std::uint64_t seed,
                                                          const std::vector<Expr>& nonvanishing);

/// Settings for the sampled floating-point checks.
struct NumericOptions {
    std::size_t samples = 10;
    std::uint64_t seed = 1;
    double relative_tolerance = 1e-9;
};

}  // namespace paratensor::conditions
