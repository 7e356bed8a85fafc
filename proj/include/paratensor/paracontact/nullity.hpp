#pragma once

#include <optional>
#include <string>

#include "paratensor/paracontact/structure.hpp"

namespace paratensor::paracontact {

enum class NullityClass { FlatXiCurvature, ParaSasakian, Nk, KMu, Unclassified };

std::string to_string(NullityClass c);

/// Classes that satisfy R(X,Y)xi = k{eta(Y)X - eta(X)Y} exactly.
bool is_strict_nk(NullityClass c);

struct NullityClassification {
    Expr k;
    Expr mu;
    bool constants = false;  // k and mu have zero differential
    /// R(X,Y)xi - k{eta(Y)X - eta(X)Y} - mu{eta(Y)hX - eta(X)hY} on frame
    /// pairs; layout (a, i, j) = e_a part at (X,Y) = (e_i, e_j).
    FrameTensor residual;
    /// Same with mu forced to zero: the strict N(k) condition.
    FrameTensor strict_residual;
    NullityClass cls = NullityClass::Unclassified;
    bool k_paracontact = false;  // h = 0
    std::string note;

    std::optional<Witness> strict_witness() const { return find_witness(strict_residual); }
};

/// Extracts k and mu from R(X, xi)xi = kX + mu hX on X in ker(eta), then
/// re-verifies the full (k,mu) equation on every frame pair.
NullityClassification classify_nullity(const Geometry& geom, const ParacontactStructure& s, const HTensor& h);

/// Residual of R(X,Y)xi - k{eta(Y)X - eta(X)Y} - mu{eta(Y)hX - eta(X)hY}.
FrameTensor nullity_residual(const Geometry& geom, const ParacontactStructure& s, const FrameTensor& h, const Expr& k,
                             const Expr& mu);

}  // namespace paratensor::paracontact
