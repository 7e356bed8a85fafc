#include "paratensor/geometry/connection.hpp"

#include "paratensor/error.hpp"

namespace paratensor::geometry {

FrameVector Connection::nabla_basis(std::size_t i, std::size_t j) const {
    FrameVector v(dim());
    for (std::size_t k = 0; k < dim(); ++k) v[k] = gamma(k, i, j);
    return v;
}

Connection koszul_connection(const Frame& frame, const FrameMetric& g) {
    const std::size_t d = frame.dim();
    if (g.dim() != d) throw DomainError("metric and frame dimensions differ");

    // g([e_a, e_b], e_c)
    auto bracket_dot = [&](std::size_t a, std::size_t b, std::size_t c) {
        Expr s;
        for (std::size_t m = 0; m < d; ++m)
            if (!frame.structure(m, a, b).is_zero() && !g(m, c).is_zero()) s += frame.structure(m, a, b) * g(m, c);
        return s;
    };

    // K(i, j, k) = g(nabla_{e_i} e_j, e_k)
    FrameTensor lowered(d, 0, 3);
    const Expr half = Expr(symexpr::Rational(1, 2));
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t k = 0; k < d; ++k) {
                Expr s = frame.derivative(i, g(j, k)) + frame.derivative(j, g(i, k)) - frame.derivative(k, g(i, j)) +
                         bracket_dot(i, j, k) - bracket_dot(i, k, j) - bracket_dot(j, k, i);
                lowered({i, j, k}) = s * half;
            }

    FrameTensor gamma(d, 1, 2);
    for (std::size_t l = 0; l < d; ++l)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                Expr s;
                for (std::size_t k = 0; k < d; ++k)
                    if (!g.inverse(l, k).is_zero() && !lowered({i, j, k}).is_zero())
                        s += g.inverse(l, k) * lowered({i, j, k});
                gamma({l, i, j}) = std::move(s);
            }
    return Connection(std::move(gamma));
}

FrameVector nabla_vector(const Frame& frame, const Connection& conn, std::span<const Expr> X, std::span<const Expr> Y) {
    const std::size_t d = frame.dim();
    FrameVector out(d);
    for (std::size_t k = 0; k < d; ++k) out[k] = frame.derivative(X, Y[k]);
    for (std::size_t i = 0; i < d; ++i) {
        if (X[i].is_zero()) continue;
        for (std::size_t j = 0; j < d; ++j) {
            if (Y[j].is_zero()) continue;
            const Expr xy = X[i] * Y[j];
            for (std::size_t k = 0; k < d; ++k)
                if (!conn.gamma(k, i, j).is_zero()) out[k] += xy * conn.gamma(k, i, j);
        }
    }
    return out;
}

FrameTensor covariant_derivative(const Frame& frame, const Connection& conn, const FrameTensor& T) {
    if (T.up() != 0) throw DomainError("covariant_derivative expects a (0,s) tensor");
    const std::size_t d = frame.dim();
    const std::size_t s = T.down();
    FrameTensor out(d, 0, s + 1);
    std::vector<std::size_t> idx(s + 1);
    for (std::size_t f = 0; f < out.size(); ++f) {
        idx = out.unflatten(f);
        const std::size_t i = idx[0];
        std::span<const std::size_t> slots(idx.data() + 1, s);
        Expr v = frame.derivative(i, T.at(slots));
        std::vector<std::size_t> moved(slots.begin(), slots.end());
        for (std::size_t m = 0; m < s; ++m) {
            const std::size_t jm = slots[m];
            for (std::size_t l = 0; l < d; ++l) {
                const Expr& c = conn.gamma(l, i, jm);
                if (c.is_zero()) continue;
                moved[m] = l;
                const Expr& t = T.at(moved);
                if (!t.is_zero()) v -= c * t;
            }
            moved[m] = jm;
        }
        out.flat_at(f) = std::move(v);
    }
    return out;
}

FrameTensor metric_tensor(const FrameMetric& g) {
    FrameTensor t(g.dim(), 0, 2);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) t({i, j}) = g(i, j);
    return t;
}

}  // namespace paratensor::geometry
