#pragma once

#include "paratensor/geometry/connection.hpp"

namespace paratensor::geometry {

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z on frame
/// triples; R(a, i, j, k) is the e_a component of R(e_i, e_j) e_k.
FrameTensor riemann(const Frame& frame, const Connection& conn);

/// S(Y,Z) = sum_{i,j} g^{ij} g(R(e_i, Y)Z, e_j), using the true inverse
/// frame metric.
FrameTensor ricci(const FrameTensor& R, const FrameMetric& g);

/// sum_i g(R(e_i, Y)Z, e_i): the trace one gets by treating the frame as if
/// it were orthonormal. Only meaningful for comparison with values computed
/// that way; it is not a tensor contraction on a general frame.
FrameTensor orthonormal_style_ricci(const FrameTensor& R, const FrameMetric& g);

/// r = sum_{i,j} g^{ij} S(e_i, e_j).
Expr scalar_curvature(const FrameTensor& S, const FrameMetric& g);

/// Derivation action of an endomorphism family F(X,Y) (a (1,3) tensor laid
/// out like the curvature tensor) on a tensor T of valence (r,s). The result
/// has valence (r, s+2) with covariant slots ordered (X, Y, slots of T):
/// contravariant slots pick up +F(X,Y) and covariant slots -T(.., F(X,Y)., ..).
FrameTensor curvature_action(const FrameTensor& F, const FrameTensor& T);

/// Endomorphism family (X wedge_B Y)Z = B(Y,Z)X - B(X,Z)Y for a (0,2) tensor B.
FrameTensor wedge_family(const FrameTensor& B);

/// Matrix of the endomorphism F(X,Y): column b holds F(X,Y)e_b.
ExprMatrix evaluate_family(const FrameTensor& F, std::span<const Expr> X, std::span<const Expr> Y);

/// (X wedge_g Y) as a matrix (column b = image of e_b).
ExprMatrix endo_wedge_g(const FrameMetric& g, std::span<const Expr> X, std::span<const Expr> Y);
/// (X wedge_S Y) as a matrix.
ExprMatrix endo_wedge_S(const FrameTensor& S, std::span<const Expr> X, std::span<const Expr> Y);

/// Contracts the first two covariant slots of an action result with X and Y,
/// leaving a tensor with the remaining slots: (F(X,Y).T).
FrameTensor restrict_action(const FrameTensor& action, std::span<const Expr> X, std::span<const Expr> Y);

/// Contracts only the first covariant slot with X (the second stays free).
FrameTensor restrict_first_slot(const FrameTensor& action, std::span<const Expr> X);

}  // namespace paratensor::geometry
