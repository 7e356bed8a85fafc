#include "paratensor/audit/audit.hpp"

#include <sstream>

#include "paratensor/conditions/einstein.hpp"
#include "paratensor/conditions/pseudo_symmetry.hpp"
#include "paratensor/conditions/recurrence.hpp"
#include "paratensor/conditions/ricci_pseudo_symmetry.hpp"
#include "paratensor/conditions/torse_forming.hpp"
#include "paratensor/error.hpp"
#include "paratensor/paracontact/identities.hpp"
#include "paratensor/paracontact/nullity.hpp"

namespace paratensor::audit {

using geometry::FrameTensor;
using geometry::Geometry;
using paracontact::NullityClass;

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "PASS";
        case Verdict::Fail: return "FAIL";
        case Verdict::Flagged: return "FLAGGED";
        case Verdict::Inapplicable: return "INAPPLICABLE";
    }
    return "FAIL";
}

std::size_t AuditReport::count(Verdict v) const {
    std::size_t n = 0;
    for (const auto& c : checks) n += c.verdict == v;
    return n;
}

const CheckRecord* AuditReport::find(std::string_view id) const {
    for (const auto& c : checks)
        if (c.id == id) return &c;
    return nullptr;
}

namespace {

std::string basis_name(std::size_t i) { return "e" + std::to_string(i + 1); }

/// "2*e2 - e1" style rendering of frame components.
std::string format_vector(const FrameVector& v, std::span<const std::string> names) {
    std::string out;
    for (std::size_t a = 0; a < v.size(); ++a) {
        const Expr& c = v[a];
        if (c.is_zero()) continue;
        std::string coeff;
        bool negative = false;
        if (c.is_constant()) {
            symexpr::Rational q = c.constant_value();
            negative = q < 0;
            if (negative) q = -q;
            if (q != 1) coeff = symexpr::to_string(q) + "*";
        } else {
            coeff = "(" + c.to_string(names) + ")*";
        }
        if (out.empty()) {
            out += negative ? "-" : "";
        } else {
            out += negative ? " - " : " + ";
        }
        out += coeff + basis_name(a);
    }
    return out.empty() ? "0" : out;
}

std::string slot_pair(std::size_t i, std::size_t j) { return "(" + basis_name(i) + "," + basis_name(j) + ")"; }

class Auditor {
public:
    Auditor(const ManifoldManifest& m, const AuditOptions& opt) : m_(m), opt_(opt), geom_(m.build_geometry()) {
        names_.assign(geom_.names().begin(), geom_.names().end());
        report_.manifold = m.name;
        report_.description = m.description;
        report_.coordinates = names_;
        report_.options = opt;
    }

    AuditReport run() {
        if (opt_.scope == AuditScope::Full) {
            geometry_invariants();
            geometry_claims();
        }
        structure_ = m_.build_structure(geom_);
        if (!structure_) {
            add("structure", "structure.present", "", "paracontact structure declared", Verdict::Inapplicable)
                .notes.push_back("no paracontact structure in the manifest; structure-dependent checks skipped");
        } else {
            structure_checks();
            if (opt_.scope != AuditScope::Structure) classification();
            if (opt_.scope == AuditScope::Full) identities();
        }
        if (opt_.scope == AuditScope::Full) {
            ricci_values();
            pseudo_symmetry();
            ricci_pseudo_symmetry();
            recurrence();
            torse_forming();
        }
        return std::move(report_);
    }

private:
    CheckRecord& add(std::string section, std::string id, std::string reference, std::string label, Verdict v) {
        CheckRecord r;
        r.section = std::move(section);
        r.id = std::move(id);
        r.reference = std::move(reference);
        r.label = std::move(label);
        r.verdict = v;
        report_.checks.push_back(std::move(r));
        return report_.checks.back();
    }

    std::string str(const Expr& e) const { return e.to_string(names_); }
    std::string vec(const FrameVector& v) const { return format_vector(v, names_); }

    static std::string reference_of(const std::string& label) {
        if (label.rfind("Eq (", 0) != 0) return "";
        return label.substr(0, label.find(')') + 1);
    }

    /// Exact identity with a hard verdict.
    CheckRecord& tensor_check(const std::string& section, const std::string& id, const std::string& label,
                              const FrameTensor& residual) {
        const auto w = find_witness(residual);
        CheckRecord& r = add(section, id, reference_of(label), label, w ? Verdict::Fail : Verdict::Pass);
        if (w) r.witnesses.push_back({w->location, str(w->residual)});
        return r;
    }

    CheckRecord& identity_record(const std::string& section, const IdentityCheck& c) {
        Verdict v = Verdict::Pass;
        if (!c.holds) v = c.expected ? Verdict::Fail : Verdict::Flagged;
        CheckRecord& r = add(section, c.id, reference_of(c.label), c.label, v);
        if (c.witness) r.witnesses.push_back({c.witness->location, str(c.witness->residual)});
        if (!c.holds && !c.expected) r.notes.push_back("identity fails, but its hypotheses are not met here");
        return r;
    }

    FrameVector literal_curvature(std::size_t i, std::size_t j, std::size_t k) const {
        const std::size_t d = geom_.dim();
        const auto& f = geom_.frame;
        const auto& c = geom_.connection;
        const FrameVector ei = geometry::basis_vector(d, i);
        const FrameVector ej = geometry::basis_vector(d, j);
        const FrameVector a = geometry::nabla_vector(f, c, ei, c.nabla_basis(j, k));
        const FrameVector b = geometry::nabla_vector(f, c, ej, c.nabla_basis(i, k));
        const FrameVector br = geometry::nabla_vector(f, c, f.bracket(i, j), geometry::basis_vector(d, k));
        FrameVector out(d);
        for (std::size_t m = 0; m < d; ++m) out[m] = a[m] - b[m] - br[m];
        return out;
    }

    void geometry_invariants() {
        const std::size_t d = geom_.dim();
        const auto& conn = geom_.connection;
        const auto& R = geom_.riemann;
        const auto& g = geom_.metric;

        FrameTensor torsion(d, 1, 2);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) {
                const FrameVector a = conn.nabla_basis(i, j);
                const FrameVector b = conn.nabla_basis(j, i);
                const FrameVector c = geom_.frame.bracket(i, j);
                for (std::size_t m = 0; m < d; ++m) torsion({m, i, j}) = a[m] - b[m] - c[m];
            }
        tensor_check("geometry", "geometry.torsion_free", "torsion-free: nabla_X Y - nabla_Y X = [X,Y]", torsion);
        tensor_check("geometry", "geometry.metric_compatible", "metric compatibility: nabla g = 0",
                     geometry::covariant_derivative(geom_.frame, conn, geometry::metric_tensor(g)));

        FrameTensor anti_xy(d, 1, 3);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < i; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    const FrameVector v = literal_curvature(i, j, k);
                    for (std::size_t a = 0; a < d; ++a) anti_xy({a, i, j, k}) = v[a] + R({a, j, i, k});
                }
        tensor_check("geometry", "geometry.riemann_skew_xy", "R(X,Y)Z = -R(Y,X)Z", anti_xy);

        FrameTensor Rm(d, 0, 4);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k)
                    for (std::size_t l = 0; l < d; ++l) {
                        Expr v;
                        for (std::size_t a = 0; a < d; ++a)
                            if (!R({a, i, j, k}).is_zero() && !g(a, l).is_zero()) v += R({a, i, j, k}) * g(a, l);
                        Rm({i, j, k, l}) = std::move(v);
                    }
        FrameTensor anti_zw(d, 0, 4), pair(d, 0, 4), bianchi(d, 1, 3);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j)
                for (std::size_t k = 0; k < d; ++k) {
                    for (std::size_t l = 0; l < d; ++l) {
                        anti_zw({i, j, k, l}) = Rm({i, j, k, l}) + Rm({i, j, l, k});
                        pair({i, j, k, l}) = Rm({i, j, k, l}) - Rm({k, l, i, j});
                    }
                    for (std::size_t a = 0; a < d; ++a)
                        bianchi({a, i, j, k}) = R({a, i, j, k}) + R({a, j, k, i}) + R({a, k, i, j});
                }
        tensor_check("geometry", "geometry.riemann_skew_zw", "g(R(X,Y)Z,W) = -g(R(X,Y)W,Z)", anti_zw);
        tensor_check("geometry", "geometry.riemann_pair", "g(R(X,Y)Z,W) = g(R(Z,W)X,Y)", pair);
        tensor_check("geometry", "geometry.bianchi_first", "first Bianchi identity R(X,Y)Z + R(Y,Z)X + R(Z,X)Y = 0",
                     bianchi);
        FrameTensor ricci_skew(d, 0, 2);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) ricci_skew({i, j}) = geom_.ricci({i, j}) - geom_.ricci({j, i});
        tensor_check("geometry", "geometry.ricci_symmetric", "S(X,Y) = S(Y,X)", ricci_skew);
        tensor_check("geometry", "geometry.curvature_g", "R(X,Y).g = 0",
                     geometry::curvature_action(R, geometry::metric_tensor(g)));
    }

    template <class Table, class Engine>
    void compare_table(const std::string& id, const std::string& label, const Table& table, Engine engine) {
        CheckRecord& r = add("geometry", id, "", label, Verdict::Pass);
        for (const auto& [key, claimed] : table) {
            const auto [where, value] = engine(key);
            r.values.emplace_back(where, vec(value));
            bool same = true;
            for (std::size_t a = 0; a < value.size(); ++a) same = same && (value[a] - claimed[a]).is_zero();
            if (!same) {
                r.verdict = Verdict::Flagged;
                r.witnesses.push_back({where, "engine " + vec(value) + ", stated " + vec(claimed)});
            }
        }
    }

    void geometry_claims() {
        if (!m_.claims) return;
        const auto& c = *m_.claims;
        const std::size_t d = geom_.dim();
        if (!c.brackets.empty())
            compare_table("claims.brackets", "Lie brackets [e_i,e_j] against the stated table", c.brackets,
                          [&](const std::array<std::size_t, 2>& k) {
                              return std::pair{"[" + basis_name(k[0]) + "," + basis_name(k[1]) + "]",
                                               geom_.frame.bracket(k[0], k[1])};
                          });
        if (!c.connection.empty())
            compare_table("claims.connection", "Koszul table nabla_{e_i}e_j against the stated table", c.connection,
                          [&](const std::array<std::size_t, 2>& k) {
                              return std::pair{"nabla_" + basis_name(k[0]) + " " + basis_name(k[1]),
                                               geom_.connection.nabla_basis(k[0], k[1])};
                          });
        if (!c.curvature.empty())
            compare_table("claims.curvature", "curvature R(e_i,e_j)e_k against the stated table", c.curvature,
                          [&](const std::array<std::size_t, 3>& k) {
                              FrameVector v(d);
                              for (std::size_t a = 0; a < d; ++a) v[a] = geom_.riemann({a, k[0], k[1], k[2]});
                              return std::pair{"R" + slot_pair(k[0], k[1]) + basis_name(k[2]), v};
                          });
    }

    void structure_checks() {
        for (const auto& c : paracontact::verify_apc_axioms(geom_, *structure_)) identity_record("structure", c);
        h_ = paracontact::compute_h(geom_, *structure_);
        for (const auto& c : h_->checks) identity_record("structure", c);
        const std::size_t d = geom_.dim();
        CheckRecord& r = add("structure", "h.tensor", "", "h = 1/2 Lie_xi phi", Verdict::Pass);
        for (std::size_t j = 0; j < d; ++j) {
            FrameVector col(d);
            for (std::size_t a = 0; a < d; ++a) col[a] = h_->h({a, j});
            r.values.emplace_back("h " + basis_name(j), vec(col));
        }
        if (m_.claims && !m_.claims->h.empty()) {
            CheckRecord& cr = add("structure", "claims.h", "", "h against the stated values", Verdict::Pass);
            for (const auto& [j, claimed] : m_.claims->h) {
                bool same = true;
                FrameVector col(d);
                for (std::size_t a = 0; a < d; ++a) {
                    col[a] = h_->h({a, j});
                    same = same && (col[a] - claimed[a]).is_zero();
                }
                if (!same) {
                    cr.verdict = Verdict::Flagged;
                    cr.witnesses.push_back({"h " + basis_name(j), "engine " + vec(col) + ", stated " + vec(claimed)});
                }
            }
        }
    }

    void classification() {
        cls_ = paracontact::classify_nullity(geom_, *structure_, *h_);
        const auto& c = *cls_;
        CheckRecord& r = add("classification", "nullity.classification", "Eq (2.3b)",
                             "nullity classification R(X,Y)xi = k{eta(Y)X - eta(X)Y} + mu{eta(Y)hX - eta(X)hY}",
                             c.cls == NullityClass::Unclassified ? Verdict::Flagged : Verdict::Pass);
        r.values.emplace_back("k", str(c.k));
        r.values.emplace_back("mu", str(c.mu));
        r.values.emplace_back("class", paracontact::to_string(c.cls));
        r.values.emplace_back("h = 0", c.k_paracontact ? "true" : "false");
        if (!c.note.empty()) r.notes.push_back(c.note);
        if (const auto w = find_witness(c.residual)) r.witnesses.push_back({w->location, str(w->residual)});
        if (c.cls == NullityClass::ParaSasakian)
            r.notes.push_back("h = 0 and k = -1: K-paracontact with para-Sasakian curvature; normality is not tested");

        // Strict N(k): the mu term dropped.
        const std::size_t d = geom_.dim();
        CheckRecord& s = add("classification", "nullity.strict_nk", "Eq (2.3b)",
                             "Eq (2.3b) strict N(k) condition R(X,Y)xi = k{eta(Y)X - eta(X)Y}", Verdict::Pass);
        if (const auto w = c.strict_witness()) {
            s.verdict = Verdict::Flagged;
            const auto idx = c.strict_residual.first_nonzero().value();
            FrameVector res(d);
            for (std::size_t a = 0; a < d; ++a) res[a] = c.strict_residual({a, idx[1], idx[2]});
            s.witnesses.push_back(
                {"(X,Y,xi) = (" + basis_name(idx[1]) + "," + basis_name(idx[2]) + ",xi)", vec(res)});
            s.notes.push_back("the strict N(k) condition fails with k = " + str(c.k) + "; the mu term is needed");
        }

        if (m_.claims && (m_.claims->cls || m_.claims->k)) {
            const auto& cl = *m_.claims;
            std::string stated = cl.cls.value_or("?");
            if (cl.k) stated += " with k = " + str(*cl.k);
            CheckRecord& x = add("classification", "claims.class", "", "stated class " + stated, Verdict::Pass);
            const bool k_ok = !cl.k || (*cl.k - c.k).is_zero();
            bool cls_ok = true;
            if (cl.cls) {
                if (*cl.cls == "N(k)") cls_ok = paracontact::is_strict_nk(c.cls);
                else cls_ok = *cl.cls == paracontact::to_string(c.cls);
            }
            if (!k_ok || !cls_ok) {
                x.verdict = Verdict::Flagged;
                x.notes.push_back("engine finds class " + paracontact::to_string(c.cls) + " with (k,mu) = (" +
                                  str(c.k) + ", " + str(c.mu) + ")");
            }
            x.values.emplace_back("k matches", k_ok ? "true" : "false");
            x.values.emplace_back("class matches", cls_ok ? "true" : "false");
        }
    }

    void identities() {
        for (const auto& c : paracontact::verify_nk_identities(geom_, *structure_, *h_, *cls_))
            identity_record("identities", c);
    }

    void ricci_values() {
        const std::size_t d = geom_.dim();
        const FrameTensor trace = geometry::orthonormal_style_ricci(geom_.riemann, geom_.metric);
        CheckRecord& r = add("identities", "ricci.values", "", "Ricci tensor S (inverse-metric contraction)",
                             Verdict::Pass);
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j) r.values.emplace_back("S" + slot_pair(i, j), str(geom_.ricci({i, j})));
        r.values.emplace_back("scalar curvature", str(geom_.scalar));
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = i; j < d; ++j)
                r.values.emplace_back("paper-style trace" + slot_pair(i, j), str(trace({i, j})));
        r.notes.push_back("paper-style trace: sum_i g(R(e_i,Y)Z,e_i), a contraction that ignores the frame metric");

        if (!m_.claims || m_.claims->ricci.empty()) return;
        CheckRecord& c = add("identities", "claims.ricci", "", "stated Ricci values", Verdict::Pass);
        bool trace_matches = true;
        for (const auto& [k, claimed] : m_.claims->ricci) {
            const Expr& eng = geom_.ricci({k[0], k[1]});
            const Expr& tr = trace({k[0], k[1]});
            trace_matches = trace_matches && (tr - claimed).is_zero();
            c.values.emplace_back("S" + slot_pair(k[0], k[1]),
                                  "engine " + str(eng) + ", stated " + str(claimed) + ", paper-style trace " + str(tr));
            if (!(eng - claimed).is_zero()) {
                c.verdict = Verdict::Flagged;
                c.witnesses.push_back({"S" + slot_pair(k[0], k[1]), "engine " + str(eng) + ", stated " + str(claimed)});
            }
        }
        if (c.verdict == Verdict::Flagged) {
            c.notes.push_back("stated values disagree with the inverse-metric Ricci contraction");
            if (trace_matches) c.notes.push_back("the paper-style trace reproduces every stated value");
            if (structure_ && cls_) {
                const Expr two_nk = Expr(2 * structure_->n) * cls_->k;
                c.notes.push_back("S(xi,xi) = " + str(geom_.ricci_of(structure_->xi, structure_->xi)) +
                                  " and 2nk = " + str(two_nk));
            }
        }
    }

    std::optional<FrameVector> xi() const {
        if (!structure_) return std::nullopt;
        return structure_->xi;
    }

    bool strict() const { return cls_ && paracontact::is_strict_nk(cls_->cls); }

    void pseudo_symmetry() {
        using conditions::TensorKind;
        auto fill = [&](CheckRecord& r, const conditions::PseudoSymmetryReport& p) {
            r.values.emplace_back("L", p.L ? str(*p.L) : "undetermined");
            r.values.emplace_back("holds", p.holds ? "true" : "false");
            r.values.emplace_back("constant type", p.constant_type ? "true" : "false");
            r.values.emplace_back("semi-symmetric", p.semi_symmetric ? "true" : "false");
            if (p.witness) r.witnesses.push_back({p.witness->location, str(p.witness->residual)});
        };
        if (const auto x = xi()) {
            const auto p = conditions::pseudo_symmetry_analyze(geom_, TensorKind::Riemann, *x);
            CheckRecord& r = add("conditions", "ps.R_xi", "Eq (I1)",
                                 "pseudo-symmetry R(xi,X).R = L_R (xi wedge_g X).R with L_R = k", Verdict::Pass);
            fill(r, p);
            if (strict()) {
                const bool both_zero = p.holds && !p.L;
                const bool ok = p.holds && (both_zero || (*p.L - cls_->k).is_zero());
                r.verdict = ok ? Verdict::Pass : Verdict::Fail;
                if (both_zero) r.notes.push_back("both sides vanish; L = k is admissible");
            } else {
                r.verdict = Verdict::Inapplicable;
                r.notes.push_back("hypotheses unmet: the structure is not strict N(k)");
            }
        }
        for (const auto kind : {TensorKind::Riemann, TensorKind::Ricci}) {
            const auto p = conditions::pseudo_symmetry_analyze(geom_, kind);
            const std::string t = conditions::to_string(kind);
            CheckRecord& r = add("conditions", "ps." + t + "_full", "Eq (I1)",
                                 "pseudo-symmetry R(X,Y)." + t + " = L_" + t + " (X wedge_g Y)." + t,
                                 p.holds ? Verdict::Pass : Verdict::Flagged);
            fill(r, p);
            if (!p.holds) r.notes.push_back("no single function L satisfies the relation on every frame tuple");
        }
    }

    void ricci_pseudo_symmetry() {
        const auto ev = conditions::is_einstein(geom_.ricci, geom_.metric);
        CheckRecord& e = add("conditions", "einstein", "", "Einstein S = c g with constant c",
                             ev.einstein ? Verdict::Pass : Verdict::Flagged);
        e.values.emplace_back("c", ev.c ? str(*ev.c) : "undetermined");
        e.values.emplace_back("proportional", ev.proportional ? "true" : "false");
        if (ev.witness) e.witnesses.push_back({ev.witness->location, str(ev.witness->residual)});

        if (!structure_ || !cls_) return;
        const auto rp = conditions::ricci_generalized_ps_check(geom_, structure_->xi, cls_->k, structure_->n, strict());
        CheckRecord& r = add("conditions", "rps.trichotomy", "Eq (II1)",
                             "Ricci-generalized pseudo-symmetry R(xi,X).R = L (xi wedge_S X).R: semi-symmetric, "
                             "k = 0 or Einstein",
                             Verdict::Pass);
        r.values.emplace_back("L", rp.L ? str(*rp.L) : "undetermined");
        r.values.emplace_back("relation holds", rp.holds ? "true" : "false");
        r.values.emplace_back("semi-symmetric", rp.semi_symmetric ? "true" : "false");
        r.values.emplace_back("k = 0", rp.k_zero ? "true" : "false");
        r.values.emplace_back("S = 2nk g", rp.einstein_branch ? "true" : "false");
        if (rp.constraint_witness)
            r.values.emplace_back("Eq (8.2) constraint",
                                  "L*(" + str(rp.constraint_witness->residual) + ") = 0 at " +
                                      rp.constraint_witness->location);
        else
            r.values.emplace_back("Eq (8.2) constraint", "satisfied for every L");
        if (rp.witness) r.witnesses.push_back({rp.witness->location, str(rp.witness->residual)});
        if (!rp.applicable) {
            r.verdict = Verdict::Inapplicable;
            r.notes.push_back("hypotheses unmet: the structure is " + paracontact::to_string(cls_->cls) +
                              ", not strict N(k)");
        } else if (!rp.trichotomy_consistent) {
            r.verdict = Verdict::Fail;
        }
    }

    void recurrence() {
        if (geom_.ricci.is_zero()) {
            add("conditions", "recurrence.solve", "Eq (5.1)", "generalized Ricci recurrence nabla S = A S + B g",
                Verdict::Inapplicable)
                .notes.push_back("the Ricci tensor vanishes identically");
            return;
        }
        std::optional<Expr> k;
        if (cls_ && cls_->constants) k = cls_->k;
        const int n = structure_ ? structure_->n : 1;
        const auto sol = conditions::generalized_ricci_recurrence_solve(geom_, k, n);
        CheckRecord& r = add("conditions", "recurrence.solve", "Eq (5.1)",
                             "generalized Ricci recurrence nabla S = A S + B g",
                             sol.exists ? Verdict::Pass : Verdict::Flagged);
        r.values.emplace_back("exists", sol.exists ? "true" : "false");
        if (sol.exists) {
            r.values.emplace_back("unique", sol.unique ? "true" : "false");
            r.values.emplace_back("A", vec(sol.A));
            r.values.emplace_back("B", vec(sol.B));
            r.values.emplace_back("zeta1", vec(sol.zeta1));
            r.values.emplace_back("zeta2", vec(sol.zeta2));
            if (!sol.unique) r.notes.push_back("S is proportional to g: A, B are not unique; B = 0 is reported");
        } else {
            r.notes.push_back("nabla_{e_i} S is not in the span of S and g for some direction");
        }
        for (std::size_t i = 0; i < sol.residuals.size(); ++i)
            if (sol.residuals[i])
                r.witnesses.push_back({"direction " + basis_name(i) + " " + sol.residuals[i]->location,
                                       str(sol.residuals[i]->residual)});

        if (structure_) {
            CheckRecord& t = add("conditions", "recurrence.theorem", "Eq (5.3)",
                                 "Eq (5.3) 2nk A + B = 0 and zeta2 = -2nk zeta1", Verdict::Inapplicable);
            if (sol.theorem_holds && sol.proportionality)
                t.values.emplace_back("zeta2 / zeta1 factor", str(*sol.proportionality));
            if (!sol.exists) {
                t.notes.push_back("no recurrence 1-forms exist");
            } else if (!strict()) {
                t.notes.push_back("hypotheses unmet: the structure is not strict N(k)");
                if (sol.theorem_holds) t.values.emplace_back("2nk A + B = 0", *sol.theorem_holds ? "true" : "false");
            } else {
                t.verdict = *sol.theorem_holds && sol.proportionality_verified ? Verdict::Pass : Verdict::Fail;
                t.values.emplace_back("2nk A + B = 0", *sol.theorem_holds ? "true" : "false");
            }
        }
        recurrence_claims();
    }

    /// Bilinear form sum T_jk a_j b_k in the claim's parameter chart.
    std::optional<Expr> engine_form(const FrameTensor& T, std::size_t slot_offset, std::size_t direction) const {
        const std::size_t d = geom_.dim();
        Expr out;
        for (std::size_t j = 0; j < d; ++j)
            for (std::size_t l = 0; l < d; ++l) {
                const Expr& c = T.rank() == 3 ? T({direction, j, l}) : T({j, l});
                if (c.is_zero()) continue;
                if (!c.is_constant()) return std::nullopt;
                out += Expr(c.constant_value()) * Expr::variable(slot_offset + j) * Expr::variable(slot_offset + d + l);
            }
        return out;
    }

    void recurrence_claims() {
        if (!m_.claims || !m_.claims->recurrence) return;
        const auto& rc = *m_.claims->recurrence;
        const std::size_t d = geom_.dim();
        const auto pn = rc.parameters.names();
        auto pstr = [&](const Expr& e) { return e.to_string(pn); };
        auto Avec = [&](const std::vector<Expr>& v) {
            std::string s;
            for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "; " : "") + basis_name(i) + ": " + pstr(v[i]);
            return s;
        };

        // Engine forms in the same parameters, when the engine components are constant.
        const auto S_eng = engine_form(geom_.ricci, 0, 0);
        const auto g_eng = engine_form(geometry::metric_tensor(geom_.metric), 0, 0);
        const FrameTensor dS = geometry::covariant_derivative(geom_.frame, geom_.connection, geom_.ricci);
        std::vector<Expr> dS_eng;
        bool dS_const = true;
        for (std::size_t i = 0; i < d; ++i) {
            auto f = engine_form(dS, 0, i);
            if (!f) dS_const = false;
            else dS_eng.push_back(*f);
        }

        CheckRecord& forms = add("conditions", "claims.recurrence.forms", "", "stated S(X,Y), g(X,Y) and (nabla_{e_i}S)(X,Y)",
                                 Verdict::Pass);
        if (!S_eng || !g_eng || !dS_const) {
            forms.verdict = Verdict::Inapplicable;
            forms.notes.push_back("engine components are not constant; the forms are not comparable");
        } else {
            auto cmp = [&](const std::string& what, const Expr& eng, const Expr& stated) {
                forms.values.emplace_back(what, "engine " + pstr(eng) + ", stated " + pstr(stated));
                if (!(eng - stated).is_zero()) {
                    forms.verdict = Verdict::Flagged;
                    forms.witnesses.push_back({what, "engine " + pstr(eng) + ", stated " + pstr(stated)});
                }
            };
            cmp("S(X,Y)", *S_eng, rc.ricci_form);
            cmp("g(X,Y)", *g_eng, rc.metric_form);
            for (std::size_t i = 0; i < d; ++i)
                cmp("(nabla_" + basis_name(i) + " S)(X,Y)", dS_eng[i], rc.nabla_ricci[i]);
        }

        // The stated 1-forms substituted in the recurrence relation, first with
        // the stated forms, then with the stated factor on B, then with the
        // engine's forms.
        auto relation = [&](const std::string& id, const std::string& label, const std::string& ref,
                            const std::vector<Expr>& dSf, const Expr& Sf, const Expr& gf, const Expr& factor) {
            CheckRecord& r = add("conditions", id, ref, label, Verdict::Pass);
            for (std::size_t i = 0; i < d; ++i) {
                const Expr res = dSf[i] - rc.A[i] * Sf - factor * rc.B[i] * gf;
                if (!res.is_zero()) {
                    r.verdict = Verdict::Flagged;
                    r.witnesses.push_back({"direction " + basis_name(i), pstr(res)});
                }
            }
            return std::ref(r);
        };
        relation("claims.recurrence.eq51", "Eq (5.1) with the stated A, B and the stated forms", "Eq (5.1)",
                 rc.nabla_ricci, rc.ricci_form, rc.metric_form, Expr(1));
        if (rc.b_factor != Expr(1)) {
            CheckRecord& r = relation("claims.recurrence.eq61",
                                      "Eq (6.1) with the stated A, B, the factor " + pstr(rc.b_factor) +
                                          " on B and the stated forms",
                                      "Eq (6.1)", rc.nabla_ricci, rc.ricci_form, rc.metric_form, rc.b_factor);
            if (r.verdict == Verdict::Flagged)
                r.notes.push_back("the factor " + pstr(rc.b_factor) + " on B is inconsistent with the stated 1-forms");
        }
        if (S_eng && g_eng && dS_const)
            relation("claims.recurrence.engine", "Eq (5.1) with the stated A, B and the engine's S, g, nabla S",
                     "Eq (5.1)", dS_eng, *S_eng, *g_eng, Expr(1));

        // 2nk A + B = 0 with the stated k.
        const std::optional<Expr> k = m_.claims->k ? m_.claims->k : (cls_ ? std::optional<Expr>(cls_->k) : std::nullopt);
        if (k) {
            const int n = structure_ ? structure_->n : 1;
            const Expr two_nk = Expr(2 * n) * *k;
            CheckRecord& r = add("conditions", "claims.recurrence.eq53", "Eq (5.3)",
                                 "Eq (5.3) 2nk A + B = 0 with the stated A, B and k = " + str(*k), Verdict::Pass);
            std::optional<Expr> ratio;
            bool common_ratio = true;
            for (std::size_t i = 0; i < d; ++i) {
                const Expr res = two_nk * rc.A[i] + rc.B[i];
                if (!res.is_zero()) {
                    r.verdict = Verdict::Flagged;
                    r.witnesses.push_back({"direction " + basis_name(i), pstr(res)});
                }
                if (!rc.A[i].is_zero()) {
                    const Expr q = rc.B[i] / rc.A[i];
                    if (ratio && *ratio != q) common_ratio = false;
                    ratio = q;
                }
            }
            r.values.emplace_back("stated A", Avec(rc.A));
            r.values.emplace_back("stated B", Avec(rc.B));
            if (ratio && common_ratio) r.values.emplace_back("stated B / A", pstr(*ratio));
            r.values.emplace_back("required B / A", str(-two_nk));
            if (r.verdict == Verdict::Flagged)
                r.notes.push_back("sign of B relative to 2nk A: the relation requires B = " + str(-two_nk) + " A");
        }
    }

    void torse_forming() {
        for (const auto& f : m_.fields) {
            const auto t = conditions::torse_forming_analyze(geom_, f.field, opt_.numeric);
            CheckRecord& r = add("conditions", "torse." + f.name, "Eq (3.1)",
                                 "torse-forming field " + f.name + ": (nabla_X w)(Y) = rho g(X,Y) + beta(X) w(Y)",
                                 t.is_torse_forming ? Verdict::Pass : Verdict::Flagged);
            r.values.emplace_back("torse-forming", t.is_torse_forming ? "true" : "false");
            if (t.witness) r.witnesses.push_back({t.witness->location, str(t.witness->residual)});
            if (!t.is_torse_forming) continue;
            r.values.emplace_back("rho", str(t.rho));
            r.values.emplace_back("beta", vec(t.beta));
            r.values.emplace_back("concircular", t.concircular ? "true" : "false");
            if (!t.unique) r.notes.push_back("rho and beta are not unique; free unknowns set to 0");
            if (t.unit) {
                const auto& u = *t.unit;
                r.values.emplace_back("g(v,v)", str(u.norm_squared));
                r.values.emplace_back("unit: sign of g(v,v)", std::to_string(u.sign));
                r.values.emplace_back("unit: beta = d log sqrt|g(v,v)| - sign lambda T", u.beta_relation ? "true" : "false");
                r.values.emplace_back("unit: nabla T = lambda (g - sign T x T)",
                                      u.satisfies_concircular_form ? "true" : "false");
                r.values.emplace_back("unit: beta closed", u.beta_closed ? "true" : "false");
                r.values.emplace_back("unit: T closed", u.t_closed ? "true" : "false");
                r.values.emplace_back("unit: samples", std::to_string(u.samples));
                std::ostringstream os;
                os.precision(6);
                os << u.max_relative_error;
                r.values.emplace_back("unit: max relative error", os.str());
            } else {
                r.notes.push_back("null field: unit analysis skipped");
            }
        }
    }

    const ManifoldManifest& m_;
    AuditOptions opt_;
    Geometry geom_;
    std::vector<std::string> names_;
    AuditReport report_;
    std::optional<paracontact::ParacontactStructure> structure_;
    std::optional<paracontact::HTensor> h_;
    std::optional<paracontact::NullityClassification> cls_;
};

}  // namespace

AuditReport run_audit(const ManifoldManifest& manifest, const AuditOptions& options) {
    return Auditor(manifest, options).run();
}

}  // namespace paratensor::audit
