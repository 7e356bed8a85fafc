#pragma once

#include "paratensor/geometry/connection.hpp"
#include "paratensor/geometry/curvature.hpp"
#include "paratensor/geometry/forms.hpp"

namespace paratensor::geometry {

/// Everything derived from (chart, frame, metric), computed once.
struct Geometry {
    Chart chart;
    Frame frame;
    FrameMetric metric;
    Connection connection;
    FrameTensor riemann;  // (1,3), R(a, i, j, k) = e_a part of R(e_i,e_j)e_k
    FrameTensor ricci;    // (0,2)
    Expr scalar;

    std::size_t dim() const noexcept { return frame.dim(); }
    std::span<const std::string> names() const noexcept { return chart.names(); }

    static Geometry build(Chart chart, Frame frame, FrameMetric metric);

    /// R(X,Y)Z for frame-component vectors.
    FrameVector curvature(std::span<const Expr> X, std::span<const Expr> Y, std::span<const Expr> Z) const;
    /// S(X,Y) for frame-component vectors.
    Expr ricci_of(std::span<const Expr> X, std::span<const Expr> Y) const;
};

}  // namespace paratensor::geometry
