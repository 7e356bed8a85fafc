#pragma once

#include <vector>

#include "paratensor/geometry/frame.hpp"
#include "paratensor/geometry/tensor.hpp"

namespace paratensor::geometry {

/// Levi-Civita connection coefficients on a frame:
/// nabla_{e_i} e_j = sum_k gamma(k, i, j) e_k.
class Connection {
public:
    Connection() = default;
    explicit Connection(FrameTensor gamma) : gamma_(std::move(gamma)) {}

    std::size_t dim() const noexcept { return gamma_.dim(); }
    const Expr& gamma(std::size_t k, std::size_t i, std::size_t j) const { return gamma_({k, i, j}); }
    /// Gamma as a (1,2) tensor, index order (k, i, j).
    const FrameTensor& coefficients() const noexcept { return gamma_; }
    /// Frame components of nabla_{e_i} e_j.
    FrameVector nabla_basis(std::size_t i, std::size_t j) const;

private:
    FrameTensor gamma_;
};

/// Solves Koszul's formula on frame triples and raises the last index with
/// the inverse frame metric.
Connection koszul_connection(const Frame& frame, const FrameMetric& g);

/// nabla_X Y for X, Y in frame components (Leibniz in Y, tensorial in X).
FrameVector nabla_vector(const Frame& frame, const Connection& conn, std::span<const Expr> X, std::span<const Expr> Y);

/// Covariant derivative of a (0,s) tensor. The new differentiation slot is
/// the first covariant index of the result.
FrameTensor covariant_derivative(const Frame& frame, const Connection& conn, const FrameTensor& T);

/// Metric as a (0,2) tensor.
FrameTensor metric_tensor(const FrameMetric& g);

}  // namespace paratensor::geometry
