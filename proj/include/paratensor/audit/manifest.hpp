#pragma once

#include <array>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "paratensor/geometry/geometry.hpp"
#include "paratensor/paracontact/structure.hpp"

namespace paratensor::audit {

using geometry::Expr;
using geometry::FrameVector;

struct StructureSpec {
    geometry::ExprMatrix phi;  // phi(a, j): e_a component of phi(e_j)
    FrameVector xi;
    std::vector<Expr> eta;     // coordinate cobasis unless eta_in_frame
    bool eta_in_frame = false;
};

struct NamedField {
    std::string name;
    geometry::VectorField field;  // coordinate components
};

/// A generalized recurrence statement written in the components of
/// X = sum a_i e_i and Y = sum b_i e_i.
struct RecurrenceClaim {
    geometry::Chart parameters;  // a_1..a_d, b_1..b_d
    Expr ricci_form;
    Expr metric_form;
    std::vector<Expr> nabla_ricci;  // per direction e_i
    std::vector<Expr> A;
    std::vector<Expr> B;
    Expr b_factor{1};
};

/// Published values to compare against the engine.
struct Claims {
    std::optional<std::string> cls;
    std::optional<Expr> k;
    std::vector<std::pair<std::array<std::size_t, 2>, FrameVector>> brackets;
    std::vector<std::pair<std::array<std::size_t, 2>, FrameVector>> connection;
    std::vector<std::pair<std::array<std::size_t, 3>, FrameVector>> curvature;
    std::vector<std::pair<std::size_t, FrameVector>> h;
    std::vector<std::pair<std::array<std::size_t, 2>, Expr>> ricci;
    std::optional<RecurrenceClaim> recurrence;
};

struct ManifoldManifest {
    std::string name;
    std::string description;
    geometry::Chart chart;
    std::vector<geometry::VectorField> frame;
    geometry::ExprMatrix metric;
    std::optional<StructureSpec> structure;
    std::vector<NamedField> fields;
    std::optional<Claims> claims;

    geometry::Geometry build_geometry() const;
    std::optional<paracontact::ParacontactStructure> build_structure(const geometry::Geometry& geom) const;
};

/// Parses and validates a manifest. Errors carry the source name and the
/// line of the offending value.
ManifoldManifest parse_manifest(std::string_view text, const std::string& source = "<string>");
ManifoldManifest load_manifest(const std::filesystem::path& path);

}  // namespace paratensor::audit
