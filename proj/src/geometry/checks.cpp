#include "paratensor/checks.hpp"

namespace paratensor {

std::string slot_label(std::span<const std::size_t> idx, std::size_t up) {
    if (idx.empty()) return "scalar";
    std::string cov = "(";
    for (std::size_t m = up; m < idx.size(); ++m) {
        if (m > up) cov += ',';
        cov += "e" + std::to_string(idx[m] + 1);
    }
    cov += ')';
    std::string contra;
    for (std::size_t m = 0; m < up; ++m) contra += "[e" + std::to_string(idx[m] + 1) + "]";
    return cov + contra;
}

std::optional<Witness> find_witness(const geometry::FrameTensor& residual) {
    auto idx = residual.first_nonzero();
    if (!idx) return std::nullopt;
    return Witness{slot_label(*idx, residual.up()), residual.at(*idx)};
}

IdentityCheck make_check(std::string id, std::string label, const geometry::FrameTensor& residual, bool expected) {
    IdentityCheck c{std::move(id), std::move(label), true, expected, find_witness(residual)};
    c.holds = !c.witness.has_value();
    return c;
}

}  // namespace paratensor
