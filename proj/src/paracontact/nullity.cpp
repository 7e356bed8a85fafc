#include "paratensor/paracontact/nullity.hpp"

#include "paratensor/geometry/linear_solve.hpp"

namespace paratensor::paracontact {

namespace {

bool has_zero_differential(const Expr& e, std::size_t dim) {
    for (std::size_t a = 0; a < dim; ++a)
        if (!e.diff(a).is_zero()) return false;
    return true;
}

}  // namespace

std::string to_string(NullityClass c) {
    switch (c) {
        case NullityClass::FlatXiCurvature: return "flat-xi-curvature";
        case NullityClass::ParaSasakian: return "para-Sasakian";
        case NullityClass::Nk: return "N(k)";
        case NullityClass::KMu: return "(k,mu)";
        case NullityClass::Unclassified: return "unclassified";
    }
    return "unclassified";
}

bool is_strict_nk(NullityClass c) {
    return c == NullityClass::FlatXiCurvature || c == NullityClass::ParaSasakian || c == NullityClass::Nk;
}

FrameTensor nullity_residual(const Geometry& geom, const ParacontactStructure& s, const FrameTensor& h, const Expr& k,
                             const Expr& mu) {
    const std::size_t d = geom.dim();
    FrameTensor res(d, 1, 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            const FrameVector ei = geometry::basis_vector(d, i);
            const FrameVector ej = geometry::basis_vector(d, j);
            const FrameVector rxi = geom.curvature(ei, ej, s.xi);
            for (std::size_t a = 0; a < d; ++a) {
                Expr v = rxi[a];
                const Expr x_part = (a == i ? s.eta[j] : Expr()) - (a == j ? s.eta[i] : Expr());
                if (!x_part.is_zero()) v -= k * x_part;
                const Expr h_part = s.eta[j] * h({a, i}) - s.eta[i] * h({a, j});
                if (!h_part.is_zero() && !mu.is_zero()) v -= mu * h_part;
                res({a, i, j}) = std::move(v);
            }
        }
    return res;
}

NullityClassification classify_nullity(const Geometry& geom, const ParacontactStructure& s, const HTensor& ht) {
    const std::size_t d = geom.dim();
    const FrameTensor& h = ht.h;
    NullityClassification out;
    out.k_paracontact = ht.is_zero();

    // Unknowns (k, mu): for v_j = e_j - eta(e_j) xi, R(v_j, xi)xi = k v_j + mu h v_j.
    geometry::ExprMatrix A(d * d, 2);
    std::vector<Expr> b(d * d);
    for (std::size_t j = 0; j < d; ++j) {
        FrameVector v = geometry::basis_vector(d, j);
        for (std::size_t a = 0; a < d; ++a) v[a] -= s.eta[j] * s.xi[a];
        const FrameVector hv = paracontact::apply(h, v);
        const FrameVector rhs = geom.curvature(v, s.xi, s.xi);
        for (std::size_t a = 0; a < d; ++a) {
            A(j * d + a, 0) = v[a];
            A(j * d + a, 1) = hv[a];
            b[j * d + a] = rhs[a];
        }
    }
    const auto sol = geometry::solve_linear(A, b);
    out.k = sol.values[0];
    out.mu = sol.values[1];
    if (out.k_paracontact) out.mu = Expr();

    out.residual = nullity_residual(geom, s, h, out.k, out.mu);
    out.strict_residual = nullity_residual(geom, s, h, out.k, Expr());
    out.constants = has_zero_differential(out.k, d) && has_zero_differential(out.mu, d);

    if (!sol.solvable()) {
        out.note = "R(X,xi)xi is not of the form kX + mu hX on ker(eta)";
        return out;
    }
    if (!out.constants) {
        out.note = "k or mu is not constant";
        return out;
    }
    if (!out.residual.is_zero()) {
        out.note = "the (k,mu) nullity equation fails away from (X, xi) slots";
        return out;
    }
    if (out.k_paracontact && out.k == Expr(-1)) {
        out.cls = NullityClass::ParaSasakian;
    } else if (out.mu.is_zero() && out.k.is_zero()) {
        out.cls = NullityClass::FlatXiCurvature;
    } else if (out.mu.is_zero()) {
        out.cls = NullityClass::Nk;
    } else {
        out.cls = NullityClass::KMu;
    }
    return out;
}

}  // namespace paratensor::paracontact
