#include "paratensor/geometry/forms.hpp"

#include "paratensor/error.hpp"

namespace paratensor::geometry {

FrameVector coordinate_oneform_to_frame(const Frame& frame, std::span<const Expr> coords) {
    const std::size_t d = frame.dim();
    if (coords.size() != d) throw DomainError("1-form has the wrong number of components");
    FrameVector w(d);
    for (std::size_t j = 0; j < d; ++j)
        for (std::size_t a = 0; a < d; ++a)
            if (!coords[a].is_zero() && !frame.matrix()(j, a).is_zero()) w[j] += frame.matrix()(j, a) * coords[a];
    return w;
}

FrameTensor exterior_derivative_oneform(const Frame& frame, std::span<const Expr> coords) {
    const FrameVector w = coordinate_oneform_to_frame(frame, coords);
    return exterior_derivative_frame_oneform(frame, w);
}

FrameTensor exterior_derivative_frame_oneform(const Frame& frame, std::span<const Expr> w) {
    const std::size_t d = frame.dim();
    if (w.size() != d) throw DomainError("1-form has the wrong number of components");
    const Expr half(symexpr::Rational(1, 2));
    FrameTensor out(d, 0, 2);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            Expr v = frame.derivative(i, w[j]) - frame.derivative(j, w[i]);
            for (std::size_t m = 0; m < d; ++m)
                if (!frame.structure(m, i, j).is_zero() && !w[m].is_zero()) v -= frame.structure(m, i, j) * w[m];
            v *= half;
            out({j, i}) = -v;
            out({i, j}) = std::move(v);
        }
    return out;
}

std::vector<Expr> differential(const Expr& f, std::size_t dim) {
    std::vector<Expr> df(dim);
    for (std::size_t a = 0; a < dim; ++a) df[a] = f.diff(a);
    return df;
}

FrameTensor oneform_tensor(std::span<const Expr> w) {
    FrameTensor t(w.size(), 0, 1);
    for (std::size_t i = 0; i < w.size(); ++i) t({i}) = w[i];
    return t;
}

}  // namespace paratensor::geometry
