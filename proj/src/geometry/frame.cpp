#include "paratensor/geometry/frame.hpp"

#include <algorithm>
#include <set>

#include "paratensor/error.hpp"

namespace paratensor::geometry {

Chart::Chart(std::vector<std::string> names, std::optional<int> half_dim)
    : names_(std::move(names)), half_dim_(half_dim) {
    if (names_.empty()) throw DomainError("chart needs at least one coordinate");
    std::set<std::string> seen;
    for (const auto& n : names_)
        if (!seen.insert(n).second) throw DomainError("duplicate coordinate name '" + n + "'");
    if (half_dim_ && static_cast<std::size_t>(2 * *half_dim_ + 1) != names_.size())
        throw DomainError("declared n does not satisfy dim = 2n + 1");
}

std::optional<std::size_t> Chart::index_of(std::string_view name) const {
    auto it = std::find(names_.begin(), names_.end(), name);
    if (it == names_.end()) return std::nullopt;
    return static_cast<std::size_t>(it - names_.begin());
}

int Chart::half_dim() const {
    if (half_dim_) return *half_dim_;
    if (names_.size() % 2 == 0) throw DomainError("paracontact checks need an odd-dimensional chart");
    return static_cast<int>((names_.size() - 1) / 2);
}

Expr apply(const VectorField& X, const Expr& f) {
    Expr out;
    for (std::size_t a = 0; a < X.dim(); ++a)
        if (!X.components[a].is_zero()) out += X.components[a] * f.diff(a);
    return out;
}

VectorField lie_bracket(const VectorField& X, const VectorField& Y) {
    if (X.dim() != Y.dim()) throw DomainError("lie_bracket: fields live on different charts");
    VectorField out{std::vector<Expr>(X.dim())};
    for (std::size_t i = 0; i < X.dim(); ++i) out.components[i] = apply(X, Y.components[i]) - apply(Y, X.components[i]);
    return out;
}

FrameVector basis_vector(std::size_t dim, std::size_t i) {
    FrameVector v(dim);
    v.at(i) = Expr(1);
    return v;
}

Frame::Frame(std::vector<VectorField> fields) : fields_(std::move(fields)) {
    const std::size_t d = fields_.size();
    if (d == 0) throw DomainError("empty frame");
    matrix_ = ExprMatrix(d, d);
    for (std::size_t i = 0; i < d; ++i) {
        if (fields_[i].dim() != d) throw DomainError("frame field has the wrong number of components");
        for (std::size_t a = 0; a < d; ++a) matrix_(i, a) = fields_[i].components[a];
    }
    det_ = matrix_.determinant();
    if (det_.is_zero()) throw DomainError("frame is singular: determinant vanishes identically");
    adj_ = matrix_.adjugate();

    structure_.assign(d * d * d, Expr());
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            const FrameVector c = to_frame(lie_bracket(fields_[i], fields_[j]));
            for (std::size_t k = 0; k < d; ++k) {
                structure_[(k * d + i) * d + j] = c[k];
                structure_[(k * d + j) * d + i] = -c[k];
            }
        }
}

FrameVector Frame::to_frame(const VectorField& X) const {
    // X^a = sum_i c^i E(i, a)  =>  c^i = sum_a X^a adj(a, i) / det.
    const std::size_t d = dim();
    if (X.dim() != d) throw DomainError("vector field dimension does not match the frame");
    FrameVector c(d);
    for (std::size_t i = 0; i < d; ++i) {
        Expr s;
        for (std::size_t a = 0; a < d; ++a)
            if (!X.components[a].is_zero() && !adj_(a, i).is_zero()) s += X.components[a] * adj_(a, i);
        c[i] = s / det_;
    }
    return c;
}

VectorField Frame::to_coordinates(std::span<const Expr> c) const {
    const std::size_t d = dim();
    VectorField X{std::vector<Expr>(d)};
    for (std::size_t i = 0; i < d; ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t a = 0; a < d; ++a)
            if (!matrix_(i, a).is_zero()) X.components[a] += c[i] * matrix_(i, a);
    }
    return X;
}

Expr Frame::derivative(std::size_t i, const Expr& f) const {
    if (f.is_constant()) return Expr();
    return apply(fields_.at(i), f);
}

Expr Frame::derivative(std::span<const Expr> X, const Expr& f) const {
    if (f.is_constant()) return Expr();
    Expr out;
    for (std::size_t i = 0; i < dim(); ++i)
        if (!X[i].is_zero()) out += X[i] * derivative(i, f);
    return out;
}

FrameVector Frame::bracket(std::size_t i, std::size_t j) const {
    FrameVector v(dim());
    for (std::size_t k = 0; k < dim(); ++k) v[k] = structure(k, i, j);
    return v;
}

FrameVector Frame::bracket(std::span<const Expr> X, std::span<const Expr> Y) const {
    // [X^i e_i, Y^j e_j] = X(Y^k) e_k - Y(X^k) e_k + X^i Y^j C(k, i, j) e_k
    const std::size_t d = dim();
    FrameVector out(d);
    for (std::size_t k = 0; k < d; ++k) {
        out[k] = derivative(X, Y[k]) - derivative(Y, X[k]);
        for (std::size_t i = 0; i < d; ++i) {
            if (X[i].is_zero()) continue;
            for (std::size_t j = 0; j < d; ++j)
                if (!Y[j].is_zero() && !structure(k, i, j).is_zero()) out[k] += X[i] * Y[j] * structure(k, i, j);
        }
    }
    return out;
}

FrameMetric::FrameMetric(ExprMatrix g) : g_(std::move(g)) {
    if (!g_.is_square()) throw DomainError("metric matrix is not square");
    if (!g_.is_symmetric()) throw DomainError("metric matrix is not symmetric");
    det_ = g_.determinant();
    if (det_.is_zero()) throw DomainError("metric is degenerate: determinant vanishes identically");
    adj_ = g_.adjugate();
    inv_ = adj_.scaled(Expr(1) / det_);
}

Expr FrameMetric::inner(std::span<const Expr> X, std::span<const Expr> Y) const {
    Expr s;
    for (std::size_t i = 0; i < dim(); ++i) {
        if (X[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j)
            if (!Y[j].is_zero() && !g_(i, j).is_zero()) s += X[i] * g_(i, j) * Y[j];
    }
    return s;
}

FrameVector FrameMetric::lower(std::span<const Expr> X) const {
    FrameVector w(dim());
    for (std::size_t j = 0; j < dim(); ++j)
        for (std::size_t i = 0; i < dim(); ++i)
            if (!X[i].is_zero() && !g_(j, i).is_zero()) w[j] += g_(j, i) * X[i];
    return w;
}

FrameVector FrameMetric::raise(std::span<const Expr> w) const {
    FrameVector X(dim());
    for (std::size_t i = 0; i < dim(); ++i)
        for (std::size_t j = 0; j < dim(); ++j)
            if (!w[j].is_zero() && !inv_(i, j).is_zero()) X[i] += inv_(i, j) * w[j];
    return X;
}

}  // namespace paratensor::geometry
