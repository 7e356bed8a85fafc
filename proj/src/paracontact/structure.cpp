#include "paratensor/paracontact/structure.hpp"

#include "paratensor/error.hpp"

namespace paratensor::paracontact {

namespace {

void check_shapes(const Geometry& geom, const FrameTensor& phi, const FrameVector& xi) {
    const std::size_t d = geom.dim();
    if (phi.dim() != d || phi.up() != 1 || phi.down() != 1) throw DomainError("phi must be a (1,1) tensor on the frame");
    if (xi.size() != d) throw DomainError("xi has the wrong number of frame components");
}

}  // namespace

ParacontactStructure ParacontactStructure::from_coordinate_eta(const Geometry& geom, FrameTensor phi, FrameVector xi,
                                                               std::vector<Expr> eta_coords) {
    check_shapes(geom, phi, xi);
    ParacontactStructure s;
    s.eta = geometry::coordinate_oneform_to_frame(geom.frame, eta_coords);
    s.phi = std::move(phi);
    s.xi = std::move(xi);
    s.eta_coordinates = std::move(eta_coords);
    s.n = geom.chart.half_dim();
    return s;
}

ParacontactStructure ParacontactStructure::from_frame_eta(const Geometry& geom, FrameTensor phi, FrameVector xi,
                                                          FrameVector eta) {
    check_shapes(geom, phi, xi);
    if (eta.size() != geom.dim()) throw DomainError("eta has the wrong number of frame components");
    ParacontactStructure s;
    s.phi = std::move(phi);
    s.xi = std::move(xi);
    s.eta = std::move(eta);
    s.n = geom.chart.half_dim();
    return s;
}

FrameVector ParacontactStructure::apply_phi(std::span<const Expr> X) const { return paracontact::apply(phi, X); }

FrameTensor compose(const FrameTensor& A, const FrameTensor& B) {
    const std::size_t d = A.dim();
    FrameTensor C(d, 1, 1);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t b = 0; b < d; ++b) {
            Expr s;
            for (std::size_t m = 0; m < d; ++m)
                if (!A({a, m}).is_zero() && !B({m, b}).is_zero()) s += A({a, m}) * B({m, b});
            C({a, b}) = std::move(s);
        }
    return C;
}

FrameVector apply(const FrameTensor& A, std::span<const Expr> X) {
    const std::size_t d = A.dim();
    FrameVector out(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < d; ++j)
            if (!X[j].is_zero() && !A({a, j}).is_zero()) out[a] += A({a, j}) * X[j];
    return out;
}

FrameTensor identity_endomorphism(std::size_t d) {
    FrameTensor I(d, 1, 1);
    for (std::size_t i = 0; i < d; ++i) I({i, i}) = Expr(1);
    return I;
}

std::vector<IdentityCheck> verify_apc_axioms(const Geometry& geom, const ParacontactStructure& s) {
    const std::size_t d = geom.dim();
    const auto& g = geom.metric;
    std::vector<IdentityCheck> out;

    // phi^2 = I - eta (x) xi
    FrameTensor r1 = compose(s.phi, s.phi) - identity_endomorphism(d);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < d; ++j) r1({a, j}) += s.eta[j] * s.xi[a];
    out.push_back(make_check("apc.phi_squared", "Eq (2.1) phi^2 = I - eta(x)xi", r1));

    FrameTensor r2(d, 0, 0);
    Expr eta_xi;
    for (std::size_t j = 0; j < d; ++j) eta_xi += s.eta[j] * s.xi[j];
    r2.flat_at(0) = eta_xi - Expr(1);
    out.push_back(make_check("apc.eta_xi", "Eq (2.1) eta(xi) = 1", r2));

    FrameTensor r3(d, 1, 0);
    const FrameVector phixi = s.apply_phi(s.xi);
    for (std::size_t a = 0; a < d; ++a) r3({a}) = phixi[a];
    out.push_back(make_check("apc.phi_xi", "Eq (2.1) phi xi = 0", r3));

    FrameTensor r4(d, 0, 1);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t a = 0; a < d; ++a)
            if (!s.eta[a].is_zero()) r4({j}) += s.eta[a] * s.phi({a, j});
    out.push_back(make_check("apc.eta_phi", "Eq (2.1) eta o phi = 0", r4));

    std::vector<FrameVector> phie(d);
    for (std::size_t j = 0; j < d; ++j) phie[j] = s.apply_phi(geometry::basis_vector(d, j));

    FrameTensor r5(d, 0, 2);
    FrameTensor r7(d, 0, 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            r5({i, j}) = g.inner(phie[i], phie[j]) + g(i, j) - s.eta[i] * s.eta[j];
            r7({i, j}) = g.inner(phie[i], geometry::basis_vector(d, j)) + g.inner(geometry::basis_vector(d, i), phie[j]);
        }
    out.push_back(make_check("apc.g_phi_phi", "Eq (2.2) g(phiX,phiY) = -g(X,Y) + eta(X)eta(Y)", r5));

    FrameTensor r6(d, 0, 1);
    const FrameVector xi_flat = g.lower(s.xi);
    for (std::size_t i = 0; i < d; ++i) r6({i}) = xi_flat[i] - s.eta[i];
    out.push_back(make_check("apc.g_xi", "Eq (2.2) g(X,xi) = eta(X)", r6));
    out.push_back(make_check("apc.g_phi_skew", "Eq (2.2) g(phiX,Y) = -g(X,phiY)", r7));

    FrameTensor deta = geometry::exterior_derivative_frame_oneform(geom.frame, s.eta);
    FrameTensor r8(d, 0, 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            r8({i, j}) = deta({i, j}) - g.inner(geometry::basis_vector(d, i), phie[j]);
    out.push_back(make_check("apc.contact", "contact condition deta(X,Y) = g(X,phiY)", r8));
    return out;
}

bool HTensor::all_invariants_hold() const {
    for (const auto& c : checks)
        if (!c.holds) return false;
    return true;
}

HTensor compute_h(const Geometry& geom, const ParacontactStructure& s) {
    const std::size_t d = geom.dim();
    const auto& frame = geom.frame;
    const auto& g = geom.metric;
    const Expr half(symexpr::Rational(1, 2));

    HTensor out{FrameTensor(d, 1, 1), {}};
    for (std::size_t j = 0; j < d; ++j) {
        const FrameVector ej = geometry::basis_vector(d, j);
        const FrameVector a = frame.bracket(s.xi, s.apply_phi(ej));
        const FrameVector b = s.apply_phi(frame.bracket(s.xi, ej));
        for (std::size_t k = 0; k < d; ++k) out.h({k, j}) = (a[k] - b[k]) * half;
    }
    const FrameTensor& h = out.h;

    FrameTensor c1(d, 1, 0);
    const FrameVector hxi = paracontact::apply(h, s.xi);
    for (std::size_t a = 0; a < d; ++a) c1({a}) = hxi[a];
    out.checks.push_back(make_check("h.h_xi", "Eq (2.3) h xi = 0", c1));

    out.checks.push_back(
        make_check("h.anticommutes", "Eq (2.3) h phi + phi h = 0", compose(h, s.phi) + compose(s.phi, h)));

    FrameTensor c3(d, 0, 0);
    for (std::size_t i = 0; i < d; ++i) c3.flat_at(0) += h({i, i});
    out.checks.push_back(make_check("h.trace_free", "trace(h) = 0", c3));

    FrameTensor c4(d, 0, 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const FrameVector hei = paracontact::apply(h, geometry::basis_vector(d, i));
            const FrameVector hej = paracontact::apply(h, geometry::basis_vector(d, j));
            c4({i, j}) = g.inner(hei, geometry::basis_vector(d, j)) - g.inner(geometry::basis_vector(d, i), hej);
        }
    out.checks.push_back(make_check("h.symmetric", "g(hX,Y) = g(X,hY)", c4));

    // nabla_{e_i} xi = -phi e_i + phi h e_i
    FrameTensor c5(d, 1, 1);
    const FrameTensor phih = compose(s.phi, h);
    for (std::size_t i = 0; i < d; ++i) {
        const FrameVector ei = geometry::basis_vector(d, i);
        const FrameVector nxi = geometry::nabla_vector(frame, geom.connection, ei, s.xi);
        for (std::size_t a = 0; a < d; ++a) c5({a, i}) = nxi[a] + s.phi({a, i}) - phih({a, i});
    }
    out.checks.push_back(make_check("h.nabla_xi", "Eq (2.3) nabla_X xi = -phi X + phi h X", c5));
    return out;
}

}  // namespace paratensor::paracontact
