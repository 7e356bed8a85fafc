#pragma once

#include <string>
#include <utility>
#include <vector>

#include "paratensor/audit/manifest.hpp"
#include "paratensor/conditions/common.hpp"

namespace paratensor::audit {

/// PASS: the property holds. FAIL: a property that must hold (an engine
/// invariant, a structure axiom, or a theorem whose hypotheses are met) is
/// violated. FLAGGED: a noteworthy finding that is not a failure, such as a
/// disagreement with a stated value or an identity outside its hypotheses.
/// INAPPLICABLE: hypotheses unmet; findings are recorded for information.
enum class Verdict { Pass, Fail, Flagged, Inapplicable };

std::string to_string(Verdict v);

struct WitnessEntry {
    std::string location;
    std::string value;
};

struct CheckRecord {
    std::string section;
    std::string id;
    std::string reference;  // equation or statement the check refers to; may be empty
    std::string label;
    Verdict verdict = Verdict::Pass;
    std::vector<WitnessEntry> witnesses;
    std::vector<std::pair<std::string, std::string>> values;
    std::vector<std::string> notes;
};

enum class AuditScope { Structure, Classify, Full };

struct AuditOptions {
    conditions::NumericOptions numeric;
    AuditScope scope = AuditScope::Full;
};

struct AuditReport {
    std::string manifold;
    std::string description;
    std::vector<std::string> coordinates;
    AuditOptions options;
    std::vector<CheckRecord> checks;

    std::size_t count(Verdict v) const;
    bool any_fail() const { return count(Verdict::Fail) > 0; }
    const CheckRecord* find(std::string_view id) const;
};

/// Runs the checks in a fixed order: geometry invariants and stated tables,
/// structure axioms, h, nullity classification, the N(k) identity suite,
/// pseudo-symmetry, Ricci-generalized pseudo-symmetry, recurrence, and the
/// torse-forming analysis of each declared field.
AuditReport run_audit(const ManifoldManifest& manifest, const AuditOptions& options = {});

}  // namespace paratensor::audit
