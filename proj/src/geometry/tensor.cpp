#include "paratensor/geometry/tensor.hpp"

#include "paratensor/error.hpp"

namespace paratensor::geometry {

FrameTensor::FrameTensor(std::size_t dim, std::size_t up, std::size_t down) : dim_(dim), up_(up), down_(down) {
    std::size_t n = 1;
    for (std::size_t i = 0; i < up + down; ++i) n *= dim;
    data_.assign(n, Expr());
}

std::size_t FrameTensor::flat(std::span<const std::size_t> idx) const {
    if (idx.size() != rank()) throw DomainError("tensor index has the wrong rank");
    std::size_t f = 0;
    for (auto i : idx) {
        if (i >= dim_) throw DomainError("tensor index out of range");
        f = f * dim_ + i;
    }
    return f;
}

std::vector<std::size_t> FrameTensor::unflatten(std::size_t i) const {
    std::vector<std::size_t> idx(rank());
    for (std::size_t m = rank(); m-- > 0;) {
        idx[m] = i % dim_;
        i /= dim_;
    }
    return idx;
}

bool FrameTensor::is_zero() const {
    for (const auto& e : data_)
        if (!e.is_zero()) return false;
    return true;
}

std::optional<std::vector<std::size_t>> FrameTensor::first_nonzero() const {
    for (std::size_t i = 0; i < data_.size(); ++i)
        if (!data_[i].is_zero()) return unflatten(i);
    return std::nullopt;
}

void FrameTensor::check_shape(const FrameTensor& o) const {
    if (dim_ != o.dim_ || up_ != o.up_ || down_ != o.down_) throw DomainError("tensor valence mismatch");
}

FrameTensor FrameTensor::operator+(const FrameTensor& o) const {
    check_shape(o);
    FrameTensor r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] += o.data_[i];
    return r;
}

FrameTensor FrameTensor::operator-(const FrameTensor& o) const {
    check_shape(o);
    FrameTensor r(*this);
    for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] -= o.data_[i];
    return r;
}

FrameTensor FrameTensor::scaled(const Expr& s) const {
    FrameTensor r(*this);
    for (auto& e : r.data_) e *= s;
    return r;
}

}  // namespace paratensor::geometry
