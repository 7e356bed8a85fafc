#include "paratensor/conditions/einstein.hpp"

namespace paratensor::conditions {

EinsteinVerdict is_einstein(const FrameTensor& S, const geometry::FrameMetric& g) {
    EinsteinVerdict v;
    const ScalarFit fit = fit_scalar(S, geometry::metric_tensor(g));
    v.proportional = fit.holds;
    v.c = fit.L;
    v.witness = fit.witness;
    v.einstein = fit.holds && fit.L && has_zero_differential(*fit.L, g.dim());
    return v;
}

bool is_semi_symmetric(const Geometry& geom) {
    return geometry::curvature_action(geom.riemann, geom.riemann).is_zero();
}

}  // namespace paratensor::conditions
