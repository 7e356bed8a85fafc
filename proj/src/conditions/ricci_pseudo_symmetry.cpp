#include "paratensor/conditions/ricci_pseudo_symmetry.hpp"

#include "paratensor/conditions/einstein.hpp"

namespace paratensor::conditions {

namespace {

// sum_a eta_a F(a, ...) with eta = g(., xi): contracts the leading
// contravariant slot of a (1, s) tensor against xi.
FrameTensor pair_with(const FrameTensor& F, const FrameVector& eta) {
    const std::size_t d = F.dim();
    FrameTensor out(d, 0, F.down());
    const std::size_t block = out.size();
    for (std::size_t a = 0; a < d; ++a) {
        if (eta[a].is_zero()) continue;
        for (std::size_t f = 0; f < block; ++f) {
            const Expr& t = F.flat_at(a * block + f);
            if (!t.is_zero()) out.flat_at(f) += eta[a] * t;
        }
    }
    return out;
}

}  // namespace

RicciPseudoSymmetryReport ricci_generalized_ps_check(const Geometry& geom, const FrameVector& xi, const Expr& k, int n,
                                                     bool strict_nk) {
    RicciPseudoSymmetryReport rep;
    const FrameVector eta = geom.metric.lower(xi);
    const FrameTensor RR = geometry::curvature_action(geom.riemann, geom.riemann);
    rep.semi_symmetric = RR.is_zero();
    const FrameTensor lhs = pair_with(geometry::restrict_first_slot(RR, xi), eta);
    const FrameTensor rhs = pair_with(
        geometry::restrict_first_slot(geometry::curvature_action(geometry::wedge_family(geom.ricci), geom.riemann), xi),
        eta);
    const ScalarFit fit = fit_scalar(lhs, rhs);
    rep.L = fit.L;
    rep.holds = fit.holds;
    rep.rhs_zero = fit.rhs_zero;
    rep.witness = fit.witness;

    const FrameTensor G = geometry::metric_tensor(geom.metric);
    const Expr two_nk = Expr(2 * n) * k;
    const FrameTensor einstein_gap = G.scaled(two_nk) - geom.ricci;
    rep.k_zero = k.is_zero();
    rep.einstein_branch = einstein_gap.is_zero();
    rep.constraint = einstein_gap.scaled(k);
    rep.constraint_witness = find_witness(rep.constraint);
    rep.applicable = strict_nk;
    rep.trichotomy_consistent = !rep.holds || rep.semi_symmetric || rep.k_zero || rep.einstein_branch;
    return rep;
}

}  // namespace paratensor::conditions
