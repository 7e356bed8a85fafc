#include "paratensor/conditions/pseudo_symmetry.hpp"

namespace paratensor::conditions {

std::string to_string(TensorKind k) { return k == TensorKind::Riemann ? "R" : "S"; }

PseudoSymmetryReport pseudo_symmetry_analyze(const Geometry& geom, TensorKind kind,
                                             const std::optional<FrameVector>& first_slot) {
    const FrameTensor& T = kind == TensorKind::Riemann ? geom.riemann : geom.ricci;
    FrameTensor lhs = geometry::curvature_action(geom.riemann, T);
    FrameTensor rhs = geometry::curvature_action(geometry::wedge_family(geometry::metric_tensor(geom.metric)), T);
    if (first_slot) {
        lhs = geometry::restrict_first_slot(lhs, *first_slot);
        rhs = geometry::restrict_first_slot(rhs, *first_slot);
    }
    PseudoSymmetryReport rep;
    rep.kind = kind;
    rep.restricted = first_slot.has_value();
    rep.semi_symmetric = lhs.is_zero();
    const ScalarFit fit = fit_scalar(lhs, rhs);
    rep.L = fit.L;
    rep.holds = fit.holds;
    rep.witness = fit.witness;
    rep.constant_type = fit.holds && fit.L && has_zero_differential(*fit.L, geom.dim());
    return rep;
}

}  // namespace paratensor::conditions
