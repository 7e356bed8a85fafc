#pragma once

#include "paratensor/geometry/frame.hpp"
#include "paratensor/geometry/tensor.hpp"

namespace paratensor::geometry {

/// Frame components w(e_j) of a 1-form given in the coordinate cobasis.
FrameVector coordinate_oneform_to_frame(const Frame& frame, std::span<const Expr> coords);

/// dw(X,Y) = 1/2 { X(w(Y)) - Y(w(X)) - w([X,Y]) } for a 1-form given in the
/// coordinate cobasis; returned on frame pairs.
FrameTensor exterior_derivative_oneform(const Frame& frame, std::span<const Expr> coords);

/// Same convention for a 1-form given by its frame components.
FrameTensor exterior_derivative_frame_oneform(const Frame& frame, std::span<const Expr> w);

/// Coordinate components of df.
std::vector<Expr> differential(const Expr& f, std::size_t dim);

/// 1-form as a (0,1) tensor.
FrameTensor oneform_tensor(std::span<const Expr> w);

}  // namespace paratensor::geometry
