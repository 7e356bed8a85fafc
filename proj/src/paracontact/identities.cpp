#include "paratensor/paracontact/identities.hpp"

namespace paratensor::paracontact {

std::vector<IdentityCheck> verify_nk_identities(const Geometry& geom, const ParacontactStructure& s, const HTensor& ht,
                                                const NullityClassification& cls) {
    const std::size_t d = geom.dim();
    const auto& g = geom.metric;
    const FrameTensor& h = ht.h;
    const Expr& k = cls.k;
    const bool nk = is_strict_nk(cls.cls);
    std::vector<IdentityCheck> out;

    const FrameTensor phi2 = compose(s.phi, s.phi);
    out.push_back(make_check("nk.h_squared", "Eq (2.4) h^2=(1+k)phi^2",
                             compose(h, h) - phi2.scaled(Expr(1) + k), nk));

    // (nabla_X eta)(Y) = g(X, phiY) - g(hX, phiY)
    const FrameTensor neta = geometry::covariant_derivative(geom.frame, geom.connection, geometry::oneform_tensor(s.eta));
    FrameTensor r5(d, 0, 2);
    for (std::size_t i = 0; i < d; ++i) {
        const FrameVector ei = geometry::basis_vector(d, i);
        const FrameVector hei = paracontact::apply(h, ei);
        for (std::size_t j = 0; j < d; ++j) {
            const FrameVector phiej = s.apply_phi(geometry::basis_vector(d, j));
            r5({i, j}) = neta({i, j}) - g.inner(ei, phiej) + g.inner(hei, phiej);
        }
    }
    out.push_back(make_check("nk.nabla_eta", "Eq (2.5) (nabla_X eta)Y = g(X,phiY) - g(hX,phiY)", r5, nk));

    // R(xi, X)Y = k{g(X,Y)xi - eta(Y)X}, layout (a, X, Y)
    FrameTensor r6(d, 1, 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const FrameVector rv = geom.curvature(s.xi, geometry::basis_vector(d, i), geometry::basis_vector(d, j));
            for (std::size_t a = 0; a < d; ++a) {
                Expr rhs = g(i, j) * s.xi[a];
                if (a == i) rhs -= s.eta[j];
                r6({a, i, j}) = rv[a] - k * rhs;
            }
        }
    out.push_back(make_check("nk.R_xi_X", "Eq (2.6) R(xi,X)Y = k{g(X,Y)xi - eta(Y)X}", r6, nk));

    FrameTensor r10(d, 0, 1);
    const Expr two_nk = Expr(2 * s.n) * k;
    for (std::size_t i = 0; i < d; ++i)
        r10({i}) = geom.ricci_of(geometry::basis_vector(d, i), s.xi) - two_nk * s.eta[i];
    out.push_back(make_check("nk.S_X_xi", "Eq (2.10) S(X,xi) = 2nk eta(X)", r10, nk));

    out.push_back(make_check("nk.para_sasakian_curvature", "Eq (2.3a) R(X,Y)xi = -{eta(Y)X - eta(X)Y}",
                             nullity_residual(geom, s, h, Expr(-1), Expr()),
                             cls.cls == NullityClass::ParaSasakian));
    return out;
}

}  // namespace paratensor::paracontact
