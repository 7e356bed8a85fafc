#include "paratensor/geometry/curvature.hpp"

#include "paratensor/error.hpp"

namespace paratensor::geometry {

FrameTensor riemann(const Frame& frame, const Connection& conn) {
    const std::size_t d = frame.dim();
    FrameTensor R(d, 1, 3);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            if (i == j) continue;
            if (j < i) {
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t a = 0; a < d; ++a) R({a, i, j, k}) = -R({a, j, i, k});
                continue;
            }
            const FrameVector ei = basis_vector(d, i);
            const FrameVector ej = basis_vector(d, j);
            const FrameVector bij = frame.bracket(i, j);
            for (std::size_t k = 0; k < d; ++k) {
                const FrameVector ek = basis_vector(d, k);
                const FrameVector a = nabla_vector(frame, conn, ei, conn.nabla_basis(j, k));
                const FrameVector b = nabla_vector(frame, conn, ej, conn.nabla_basis(i, k));
                const FrameVector c = nabla_vector(frame, conn, bij, ek);
                for (std::size_t l = 0; l < d; ++l) R({l, i, j, k}) = a[l] - b[l] - c[l];
            }
        }
    return R;
}

FrameTensor ricci(const FrameTensor& R, const FrameMetric& g) {
    const std::size_t d = R.dim();
    FrameTensor S(d, 0, 2);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Expr s;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t m = 0; m < d; ++m) {
                    if (g.inverse(i, m).is_zero()) continue;
                    // g(R(e_i, e_j) e_k, e_m)
                    Expr gr;
                    for (std::size_t a = 0; a < d; ++a)
                        if (!R({a, i, j, k}).is_zero() && !g(a, m).is_zero()) gr += R({a, i, j, k}) * g(a, m);
                    if (!gr.is_zero()) s += g.inverse(i, m) * gr;
                }
            S({j, k}) = std::move(s);
        }
    return S;
}

FrameTensor orthonormal_style_ricci(const FrameTensor& R, const FrameMetric& g) {
    const std::size_t d = R.dim();
    FrameTensor S(d, 0, 2);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
            Expr s;
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t a = 0; a < d; ++a)
                    if (!R({a, i, j, k}).is_zero() && !g(a, i).is_zero()) s += R({a, i, j, k}) * g(a, i);
            S({j, k}) = std::move(s);
        }
    return S;
}

Expr scalar_curvature(const FrameTensor& S, const FrameMetric& g) {
    Expr r;
    for (std::size_t i = 0; i < S.dim(); ++i)
        for (std::size_t j = 0; j < S.dim(); ++j)
            if (!g.inverse(i, j).is_zero() && !S({i, j}).is_zero()) r += g.inverse(i, j) * S({i, j});
    return r;
}

FrameTensor curvature_action(const FrameTensor& F, const FrameTensor& T) {
    if (F.up() != 1 || F.down() != 3) throw DomainError("curvature_action: endomorphism family must be (1,3)");
    if (F.dim() != T.dim()) throw DomainError("curvature_action: dimension mismatch");
    const std::size_t d = T.dim();
    const std::size_t r = T.up();
    const std::size_t s = T.down();
    FrameTensor out(d, r, s + 2);
    std::vector<std::size_t> tidx(r + s);
    for (std::size_t f = 0; f < out.size(); ++f) {
        const std::vector<std::size_t> idx = out.unflatten(f);
        const std::size_t x = idx[r];
        const std::size_t y = idx[r + 1];
        for (std::size_t m = 0; m < r; ++m) tidx[m] = idx[m];
        for (std::size_t m = 0; m < s; ++m) tidx[r + m] = idx[r + 2 + m];
        Expr v;
        for (std::size_t m = 0; m < r + s; ++m) {
            const std::size_t orig = tidx[m];
            for (std::size_t c = 0; c < d; ++c) {
                // Upper slot: + F^{a}_{x y c} T^{..c..}; lower slot: - F^{c}_{x y b} T_{..c..}.
                const Expr& coeff = m < r ? F({orig, x, y, c}) : F({c, x, y, orig});
                if (coeff.is_zero()) continue;
                tidx[m] = c;
                const Expr& t = T.at(tidx);
                if (!t.is_zero()) {
                    if (m < r)
                        v += coeff * t;
                    else
                        v -= coeff * t;
                }
            }
            tidx[m] = orig;
        }
        out.flat_at(f) = std::move(v);
    }
    return out;
}

FrameTensor wedge_family(const FrameTensor& B) {
    if (B.up() != 0 || B.down() != 2) throw DomainError("wedge_family expects a (0,2) tensor");
    const std::size_t d = B.dim();
    FrameTensor F(d, 1, 3);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t b = 0; b < d; ++b) {
                F({i, i, j, b}) += B({j, b});
                F({j, i, j, b}) -= B({i, b});
            }
    return F;
}

ExprMatrix evaluate_family(const FrameTensor& F, std::span<const Expr> X, std::span<const Expr> Y) {
    const std::size_t d = F.dim();
    ExprMatrix M(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (X[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (Y[j].is_zero()) continue;
            const Expr xy = X[i] * Y[j];
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b)
                    if (!F({a, i, j, b}).is_zero()) M(a, b) += xy * F({a, i, j, b});
        }
    }
    return M;
}

ExprMatrix endo_wedge_g(const FrameMetric& g, std::span<const Expr> X, std::span<const Expr> Y) {
    return evaluate_family(wedge_family(metric_tensor(g)), X, Y);
}

ExprMatrix endo_wedge_S(const FrameTensor& S, std::span<const Expr> X, std::span<const Expr> Y) {
    return evaluate_family(wedge_family(S), X, Y);
}

FrameTensor restrict_action(const FrameTensor& action, std::span<const Expr> X, std::span<const Expr> Y) {
    return restrict_first_slot(restrict_first_slot(action, X), Y);
}

FrameTensor restrict_first_slot(const FrameTensor& action, std::span<const Expr> X) {
    if (action.down() < 1) throw DomainError("restrict_first_slot: no covariant slot");
    const std::size_t d = action.dim();
    const std::size_t r = action.up();
    FrameTensor out(d, r, action.down() - 1);
    std::vector<std::size_t> src(action.rank());
    for (std::size_t f = 0; f < out.size(); ++f) {
        const std::vector<std::size_t> idx = out.unflatten(f);
        for (std::size_t m = 0; m < r; ++m) src[m] = idx[m];
        for (std::size_t m = r; m < idx.size(); ++m) src[m + 1] = idx[m];
        Expr v;
        for (std::size_t i = 0; i < d; ++i) {
            if (X[i].is_zero()) continue;
            src[r] = i;
            const Expr& t = action.at(src);
            if (!t.is_zero()) v += X[i] * t;
        }
        out.flat_at(f) = std::move(v);
    }
    return out;
}

}  // namespace paratensor::geometry
