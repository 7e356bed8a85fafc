#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "paratensor/geometry/tensor.hpp"

namespace paratensor {

/// Where an exact identity failed: a human-readable frame slot such as
/// "(e1,e3)[e2]" and the nonzero residual found there.
struct Witness {
    std::string location;
    symexpr::Expr residual;
};

/// Exact verdict for one identity evaluated on every frame slot.
struct IdentityCheck {
    std::string id;
    std::string label;
    bool holds = false;
    /// False when the hypotheses under which the identity is expected are not
    /// met; the verdict is then informational.
    bool expected = true;
    std::optional<Witness> witness;
};

/// "(e1,e3)[e2]": covariant slots in parentheses, contravariant in brackets.
std::string slot_label(std::span<const std::size_t> idx, std::size_t up);

/// First nonzero component of `residual`, if any.
std::optional<Witness> find_witness(const geometry::FrameTensor& residual);

IdentityCheck make_check(std::string id, std::string label, const geometry::FrameTensor& residual,
                         bool expected = true);

}  // namespace paratensor
