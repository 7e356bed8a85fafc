#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "paratensor/symexpr/expr.hpp"

namespace paratensor::geometry {

using symexpr::Expr;

/// Frame-indexed tensor of valence (r, s), stored densely. Index order is the
/// r contravariant slots followed by the s covariant slots; for the curvature
/// tensor R(a, i, j, k) is the e_a component of R(e_i, e_j) e_k.
class FrameTensor {
public:
    FrameTensor() = default;
    FrameTensor(std::size_t dim, std::size_t up, std::size_t down);

    std::size_t dim() const noexcept { return dim_; }
    std::size_t up() const noexcept { return up_; }
    std::size_t down() const noexcept { return down_; }
    std::size_t rank() const noexcept { return up_ + down_; }
    std::size_t size() const noexcept { return data_.size(); }

    Expr& at(std::span<const std::size_t> idx) { return data_[flat(idx)]; }
    const Expr& at(std::span<const std::size_t> idx) const { return data_[flat(idx)]; }
    Expr& operator()(std::initializer_list<std::size_t> idx) { return data_[flat({idx.begin(), idx.size()})]; }
    const Expr& operator()(std::initializer_list<std::size_t> idx) const {
        return data_[flat({idx.begin(), idx.size()})];
    }

    Expr& flat_at(std::size_t i) { return data_[i]; }
    const Expr& flat_at(std::size_t i) const { return data_[i]; }
    /// Multi-index of a flat position.
    std::vector<std::size_t> unflatten(std::size_t i) const;

    bool is_zero() const;
    /// Multi-index of the first nonzero component in storage order.
    std::optional<std::vector<std::size_t>> first_nonzero() const;

    FrameTensor operator+(const FrameTensor& o) const;
    FrameTensor operator-(const FrameTensor& o) const;
    FrameTensor scaled(const Expr& s) const;

    friend bool operator==(const FrameTensor&, const FrameTensor&) = default;

private:
    std::size_t flat(std::span<const std::size_t> idx) const;
    void check_shape(const FrameTensor& o) const;

    std::size_t dim_ = 0;
    std::size_t up_ = 0;
    std::size_t down_ = 0;
    std::vector<Expr> data_;
};

}  // namespace paratensor::geometry
