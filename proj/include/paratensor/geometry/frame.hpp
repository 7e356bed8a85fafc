#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "paratensor/geometry/matrix.hpp"

namespace paratensor::geometry {

/// Coordinate chart: ordered coordinate names. `half_dim` is n when the
/// dimension is 2n + 1 and the caller asked for it.
class Chart {
public:
    Chart() = default;
    explicit Chart(std::vector<std::string> names, std::optional<int> half_dim = std::nullopt);

    std::size_t dim() const noexcept { return names_.size(); }
    std::span<const std::string> names() const noexcept { return names_; }
    std::optional<std::size_t> index_of(std::string_view name) const;
    /// n with dim = 2n + 1; throws DomainError for even dimension.
    int half_dim() const;

private:
    std::vector<std::string> names_;
    std::optional<int> half_dim_;
};

/// Vector field by its components in the coordinate basis.
struct VectorField {
    std::vector<Expr> components;

    std::size_t dim() const noexcept { return components.size(); }
    friend bool operator==(const VectorField&, const VectorField&) = default;
};

/// X(f) = sum_a X^a d_a f.
Expr apply(const VectorField& X, const Expr& f);

/// [X, Y]^i = sum_j (X^j d_j Y^i - Y^j d_j X^i).
VectorField lie_bracket(const VectorField& X, const VectorField& Y);

/// Frame components are plain vectors of Exprs indexed by frame slot.
using FrameVector = std::vector<Expr>;

FrameVector basis_vector(std::size_t dim, std::size_t i);

/// Ordered frame e_1..e_d of vector fields. The component matrix has the
/// fields as rows; its determinant must not vanish identically.
class Frame {
public:
    explicit Frame(std::vector<VectorField> fields);

    std::size_t dim() const noexcept { return fields_.size(); }
    const VectorField& field(std::size_t i) const { return fields_.at(i); }
    const std::vector<VectorField>& fields() const noexcept { return fields_; }
    const ExprMatrix& matrix() const noexcept { return matrix_; }
    const Expr& determinant() const noexcept { return det_; }
    const ExprMatrix& adjugate() const noexcept { return adj_; }

    /// Frame components c with sum_i c^i e_i = X.
    FrameVector to_frame(const VectorField& X) const;
    VectorField to_coordinates(std::span<const Expr> c) const;

    /// e_i(f).
    Expr derivative(std::size_t i, const Expr& f) const;
    /// X(f) for X given in frame components.
    Expr derivative(std::span<const Expr> X, const Expr& f) const;

    /// Structure functions: [e_i, e_j] = sum_k C(k, i, j) e_k.
    const Expr& structure(std::size_t k, std::size_t i, std::size_t j) const {
        return structure_[(k * dim() + i) * dim() + j];
    }
    FrameVector bracket(std::size_t i, std::size_t j) const;
    /// Lie bracket of two fields given in frame components.
    FrameVector bracket(std::span<const Expr> X, std::span<const Expr> Y) const;

private:
    std::vector<VectorField> fields_;
    ExprMatrix matrix_;
    Expr det_;
    ExprMatrix adj_;
    std::vector<Expr> structure_;
};

/// g(e_i, e_j) on a frame; symmetric with a determinant that is not
/// identically zero. No definiteness is assumed.
class FrameMetric {
public:
    explicit FrameMetric(ExprMatrix g);

    std::size_t dim() const noexcept { return g_.rows(); }
    const ExprMatrix& matrix() const noexcept { return g_; }
    const Expr& operator()(std::size_t i, std::size_t j) const { return g_(i, j); }
    const Expr& determinant() const noexcept { return det_; }
    const ExprMatrix& adjugate() const noexcept { return adj_; }
    /// g^{ij} = adj(G)_{ij} / det(G).
    const Expr& inverse(std::size_t i, std::size_t j) const { return inv_(i, j); }
    const ExprMatrix& inverse() const noexcept { return inv_; }

    Expr inner(std::span<const Expr> X, std::span<const Expr> Y) const;
    /// Metric dual 1-form: w_j = g(e_j, X).
    FrameVector lower(std::span<const Expr> X) const;
    /// Vector dual to a 1-form: g(., raise(w)) = w.
    FrameVector raise(std::span<const Expr> w) const;

private:
    ExprMatrix g_;
    Expr det_;
    ExprMatrix adj_;
    ExprMatrix inv_;
};

}  // namespace paratensor::geometry
