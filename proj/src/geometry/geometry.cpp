#include "paratensor/geometry/geometry.hpp"

#include "paratensor/error.hpp"

namespace paratensor::geometry {

Geometry Geometry::build(Chart chart, Frame frame, FrameMetric metric) {
    if (chart.dim() != frame.dim() || metric.dim() != frame.dim())
        throw DomainError("chart, frame and metric dimensions disagree");
    Connection conn = koszul_connection(frame, metric);
    FrameTensor R = geometry::riemann(frame, conn);
    FrameTensor S = geometry::ricci(R, metric);
    Expr r = scalar_curvature(S, metric);
    return Geometry{std::move(chart), std::move(frame), std::move(metric), std::move(conn),
                    std::move(R),     std::move(S),     std::move(r)};
}

FrameVector Geometry::curvature(std::span<const Expr> X, std::span<const Expr> Y, std::span<const Expr> Z) const {
    const std::size_t d = dim();
    FrameVector out(d);
    for (std::size_t i = 0; i < d; ++i) {
        if (X[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (Y[j].is_zero()) continue;
            for (std::size_t k = 0; k < d; ++k) {
                if (Z[k].is_zero()) continue;
                const Expr c = X[i] * Y[j] * Z[k];
                for (std::size_t a = 0; a < d; ++a)
                    if (!riemann({a, i, j, k}).is_zero()) out[a] += c * riemann({a, i, j, k});
            }
        }
    }
    return out;
}

Expr Geometry::ricci_of(std::span<const Expr> X, std::span<const Expr> Y) const {
    Expr s;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (X[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!Y[j].is_zero() && !ricci({i, j}).is_zero()) s += X[i] * Y[j] * ricci({i, j});
    }
    return s;
}

}  // namespace paratensor::geometry
