// Acceptance suite: one PASS/FAIL line per criterion; exits 1 if any fails.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "coordinate_oracle.hpp"
#include "paratensor/audit/audit.hpp"
#include "paratensor/audit/corpus.hpp"
#include "paratensor/audit/report.hpp"
#include "paratensor/conditions/pseudo_symmetry.hpp"
#include "paratensor/conditions/recurrence.hpp"
#include "paratensor/conditions/torse_forming.hpp"
#include "paratensor/error.hpp"
#include "paratensor/geometry/curvature.hpp"
#include "paratensor/geometry/forms.hpp"
#include "paratensor/paracontact/identities.hpp"
#include "paratensor/paracontact/nullity.hpp"
#include "paratensor/symexpr/parser.hpp"

#ifndef PT_CLI_PATH
#error "PT_CLI_PATH must name the CLI executable"
#endif

using namespace paratensor;
using geometry::Expr;
using geometry::FrameVector;
using geometry::Geometry;
using symexpr::Rational;
using Clock = std::chrono::steady_clock;

namespace {

// Collects failed expectations for one criterion.
class Criterion {
public:
    void expect(bool ok, const std::string& what) {
        ++checked_;
        if (!ok) failures_.push_back(what);
    }
    bool passed() const { return failures_.empty() && checked_ > 0; }
    std::size_t checked() const { return checked_; }
    const std::vector<std::string>& failures() const { return failures_; }
    std::string detail;

private:
    std::size_t checked_ = 0;
    std::vector<std::string> failures_;
};

const std::vector<std::string> kChart{"x", "y", "z"};

FrameVector V(std::initializer_list<long> c) {
    FrameVector v;
    for (long x : c) v.emplace_back(x);
    return v;
}

FrameVector e(std::size_t i) { return geometry::basis_vector(3, i - 1); }

std::string str(const FrameVector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + v[i].to_string(kChart);
    return s + ")";
}

Geometry geometry_of(const std::string& name) { return audit::load_builtin(name).build_geometry(); }

struct Structured {
    Geometry geom;
    paracontact::ParacontactStructure s;
    paracontact::HTensor h;
    paracontact::NullityClassification cls;
};

Structured structured(const std::string& name) {
    auto m = audit::load_builtin(name);
    auto g = m.build_geometry();
    auto s = m.build_structure(g);
    if (!s) throw Error(name + " has no structure");
    auto h = paracontact::compute_h(g, *s);
    auto cls = paracontact::classify_nullity(g, *s, h);
    return {std::move(g), std::move(*s), std::move(h), std::move(cls)};
}

oracle::CoordinateGeometry oracle_for(const Geometry& g) {
    oracle::Matrix frame, G(g.dim(), std::vector<Expr>(g.dim()));
    for (const auto& f : g.frame.fields()) frame.push_back(f.components);
    for (std::size_t i = 0; i < g.dim(); ++i)
        for (std::size_t j = 0; j < g.dim(); ++j) G[i][j] = g.metric(i, j);
    return oracle::build(frame, G);
}

std::vector<Rational> coords_at(const Geometry& g, const FrameVector& v, const std::vector<Rational>& p) {
    std::vector<Rational> out;
    for (const auto& c : g.frame.to_coordinates(v).components) out.push_back(c.eval(p));
    return out;
}

// R(X,Y)Z from the oracle's coordinate tensor, all arguments in coordinates.
std::vector<Rational> oracle_curvature(const oracle::CoordinateGeometry& cg, const std::vector<Rational>& p,
                                       const std::vector<Rational>& X, const std::vector<Rational>& Y,
                                       const std::vector<Rational>& Z) {
    const std::size_t d = cg.dim;
    auto R = oracle::evaluate(cg.riemann, p);
    std::vector<Rational> out(d);
    for (std::size_t r = 0; r < d; ++r)
        for (std::size_t c = 0; c < d; ++c)
            for (std::size_t a = 0; a < d; ++a)
                for (std::size_t b = 0; b < d; ++b) out[r] += R[((r * d + c) * d + a) * d + b] * X[a] * Y[b] * Z[c];
    return out;
}

std::vector<std::vector<Rational>> rational_points(std::size_t dim, std::size_t count, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    std::vector<std::vector<Rational>> out(count, std::vector<Rational>(dim));
    for (auto& p : out)
        for (auto& v : p) v = symexpr::make_rational(num(rng), den(rng));
    return out;
}

const audit::CheckRecord* record(const audit::AuditReport& r, const std::string& id) { return r.find(id); }

bool has_verdict(const audit::AuditReport& r, const std::string& id, audit::Verdict v) {
    const auto* c = record(r, id);
    return c && c->verdict == v;
}

std::string value_of(const audit::CheckRecord* c, const std::string& name) {
    if (!c) return "<no record>";
    for (const auto& [k, v] : c->values)
        if (k == name) return v;
    return "<missing>";
}

bool any_note_contains(const audit::CheckRecord* c, const std::string& text) {
    if (!c) return false;
    for (const auto& n : c->notes)
        if (n.find(text) != std::string::npos) return true;
    return false;
}

const audit::AuditReport& sec7_audit() {
    static const audit::AuditReport r = audit::run_audit(audit::load_builtin("sec7"));
    return r;
}

// 1. Bracket table, exact, under one second.
void brackets(Criterion& c) {
    auto start = Clock::now();
    auto g = geometry_of("sec7");
    c.expect(g.frame.bracket(0, 1) == V({0, 0, 2}), "[e1,e2] = " + str(g.frame.bracket(0, 1)));
    c.expect(g.frame.bracket(0, 2) == V({0, -1, 0}), "[e1,e3] = " + str(g.frame.bracket(0, 2)));
    c.expect(g.frame.bracket(1, 2) == V({0, 0, 0}), "[e2,e3] = " + str(g.frame.bracket(1, 2)));
    double secs = std::chrono::duration<double>(Clock::now() - start).count();
    c.expect(secs < 1.0, "runtime " + std::to_string(secs) + " s");
    c.detail = "runtime " + std::to_string(secs) + " s";
}

// 2. Koszul table, torsion-free, metric-compatible.
void koszul(Criterion& c) {
    auto g = geometry_of("sec7");
    const std::array<std::array<FrameVector, 3>, 3> table{{
        {V({0, 0, 1}), V({0, 0, 1}), V({-1, -1, 0})},
        {V({0, 0, -1}), V({0, 0, 0}), V({0, 1, 0})},
        {V({-1, 0, 0}), V({0, 1, 0}), V({0, 0, 0})},
    }};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) {
            auto v = g.connection.nabla_basis(i, j);
            c.expect(v == table[i][j],
                     "nabla_e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) + " = " + str(v));
            auto br = g.frame.bracket(i, j);
            for (std::size_t k = 0; k < 3; ++k)
                c.expect((g.connection.gamma(k, i, j) - g.connection.gamma(k, j, i) - br[k]).is_zero(),
                         "torsion at (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
        }
    c.expect(geometry::covariant_derivative(g.frame, g.connection, geometry::metric_tensor(g.metric)).is_zero(),
             "nabla g != 0");
}

// 3. Curvature table, with the oracle confirming the engine tensor.
void curvature(Criterion& c) {
    auto g = geometry_of("sec7");
    struct Row {
        std::size_t i, j, k;
        FrameVector v;
    };
    const std::vector<Row> table{
        {1, 2, 3, V({0, 0, 0})},  {2, 3, 3, V({0, -1, 0})}, {1, 3, 3, V({-1, 2, 0})},
        {1, 2, 2, V({0, -3, 0})}, {2, 3, 2, V({0, 0, 0})},  {1, 3, 2, V({0, 0, 1})},
        {1, 2, 1, V({3, 0, 0})},  {2, 3, 1, V({0, 0, 1})},  {1, 3, 1, V({0, 0, -2})},
    };
    auto cg = oracle_for(g);
    for (const auto& row : table) {
        auto v = g.curvature(e(row.i), e(row.j), e(row.k));
        std::string slot = "R(e" + std::to_string(row.i) + ",e" + std::to_string(row.j) + ")e" + std::to_string(row.k);
        c.expect(v == row.v, slot + " = " + str(v));
        for (const auto& p : rational_points(3, 3, 100 + row.i * 9 + row.j * 3 + row.k)) {
            auto o = oracle_curvature(cg, p, coords_at(g, e(row.i), p), coords_at(g, e(row.j), p),
                                      coords_at(g, e(row.k), p));
            c.expect(o == coords_at(g, row.v, p), "oracle disagrees on " + slot);
        }
    }
}

// 4. k = -1, mu = 2 (oracle-confirmed), strict N(k) flagged on (e1,e3,xi).
void nullity(Criterion& c) {
    auto in = structured("sec7");
    c.expect(in.cls.k == Expr(-1), "k = " + in.cls.k.to_string(kChart));
    c.expect(!in.cls.mu.is_zero(), "mu = 0");
    c.expect(in.cls.mu == Expr(2), "mu = " + in.cls.mu.to_string(kChart));
    c.expect(paracontact::apply(in.h.h, e(1)) == V({0, 1, 0}), "h e1 != e2");
    // R(e1,e3)xi = k e1 + mu h e1 read off the oracle's curvature.
    auto cg = oracle_for(in.geom);
    for (const auto& p : rational_points(3, 5, 4)) {
        auto o = oracle_curvature(cg, p, coords_at(in.geom, e(1), p), coords_at(in.geom, e(3), p),
                                  coords_at(in.geom, e(3), p));
        c.expect(o == coords_at(in.geom, V({-1, 2, 0}), p), "oracle R(e1,e3)xi != -e1 + 2 e2");
    }
    const auto& r = sec7_audit();
    const auto* strict = record(r, "nullity.strict_nk");
    c.expect(strict && strict->verdict == audit::Verdict::Flagged, "nullity.strict_nk not flagged");
    c.expect(strict && !strict->witnesses.empty() &&
                 strict->witnesses[0].location.find("(e1,e3,xi)") != std::string::npos,
             "strict N(k) witness is not the slot (e1,e3,xi)");
    c.detail = "k = -1, mu = 2";
}

// 5. h^2 = (1+k) phi^2 exactly; Ricci discrepancy flagged with the paper-style trace.
void identities(Criterion& c) {
    auto in = structured("sec7");
    auto lhs = paracontact::compose(in.h.h, in.h.h);
    auto rhs = paracontact::compose(in.s.phi, in.s.phi).scaled(Expr(1) + in.cls.k);
    c.expect(lhs.is_zero() && rhs.is_zero(), "h^2 or (1+k) phi^2 nonzero");
    const auto& r = sec7_audit();
    c.expect(has_verdict(r, "nk.h_squared", audit::Verdict::Pass), "nk.h_squared not PASS");
    auto text = audit::render_text(r);
    c.expect(text.find("Eq (2.4) h^2=(1+k)phi^2: PASS") != std::string::npos, "report lacks the Eq (2.4) line");

    // S(e3,e3) from the oracle: e3 = d/dz, so it is the coordinate entry S(d_z, d_z).
    auto cg = oracle_for(in.geom);
    for (const auto& p : rational_points(3, 3, 5))
        c.expect(oracle::evaluate(cg.ricci, p)[2 * 3 + 2] == Rational(-2), "oracle S(e3,e3) != -2");
    c.expect(in.geom.ricci({2, 2}) == Expr(-2), "engine S(e3,e3) != -2");
    c.expect(in.geom.ricci({2, 2}) == Expr(2 * in.s.n) * in.cls.k, "S(xi,xi) != 2nk");

    const auto* values = record(r, "ricci.values");
    c.expect(value_of(values, "S(e3,e3)") == "-2", "report S(e3,e3) = " + value_of(values, "S(e3,e3)"));
    c.expect(value_of(values, "paper-style trace(e1,e1)") == "-1", "paper-style trace(e1,e1) != -1");
    c.expect(value_of(values, "paper-style trace(e2,e2)") == "-3", "paper-style trace(e2,e2) != -3");
    c.expect(text.find("paper-style trace") != std::string::npos, "text report lacks the paper-style trace");
    const auto* claimed = record(r, "claims.ricci");
    c.expect(claimed && claimed->verdict == audit::Verdict::Flagged, "claims.ricci not flagged");
    bool s33 = false;
    if (claimed)
        for (const auto& w : claimed->witnesses)
            s33 = s33 || (w.location == "S(e3,e3)" && w.value.find("engine -2, stated 2") != std::string::npos);
    c.expect(s33, "no flag for S(e3,e3): engine -2 against stated 2");
}

// 6. R(xi,X).R = k (xi ^_g X).R on strict N(k) instances.
void pseudo_symmetry(Criterion& c) {
    std::size_t instances = 0;
    auto check = [&](const std::string& name, const Geometry& g, const FrameVector& xi, const Expr& k) {
        auto lhs = geometry::restrict_first_slot(geometry::curvature_action(g.riemann, g.riemann), xi);
        auto wedge = geometry::wedge_family(geometry::metric_tensor(g.metric));
        auto rhs = geometry::restrict_first_slot(geometry::curvature_action(wedge, g.riemann), xi);
        c.expect((lhs - rhs.scaled(k)).is_zero(), name + ": R(xi,X).R != k (xi^X).R");
        auto ps = conditions::pseudo_symmetry_analyze(g, conditions::TensorKind::Riemann, xi);
        c.expect(ps.holds, name + ": restricted pseudo-symmetry does not hold");
        if (ps.L) c.expect(*ps.L == k, name + ": L_R != k");
        ++instances;
    };
    for (const auto& name : audit::builtin_names()) {
        auto m = audit::load_builtin(name);
        if (!m.structure) continue;
        auto in = structured(name);
        if (!paracontact::is_strict_nk(in.cls.cls)) continue;
        check(name, in.geom, in.s.xi, in.cls.k);
    }
    // Constant curvature c: R = c (X ^_g Y), so Eq (2.6) holds with xi = e1 and k = c.
    auto g = geometry_of("const-curv");
    Expr curv = g.scalar / Expr(6);
    auto wedge = geometry::wedge_family(geometry::metric_tensor(g.metric));
    c.expect((g.riemann - wedge.scaled(curv)).is_zero(), "const-curv: R != c (X ^ Y)");
    c.expect(curv == Expr(1), "const-curv: c != 1");
    check("const-curv", g, e(1), curv);
    c.expect(instances >= 3, "fewer than three strict instances");
    c.detail = std::to_string(instances) + " instances";
}

// 7. 2nk A + B = 0 wherever a recurrence exists on a strict instance; flags on the stated forms.
void recurrence(Criterion& c) {
    std::size_t solved = 0;
    for (const auto& name : audit::builtin_names()) {
        if (!audit::load_builtin(name).structure) continue;
        auto in = structured(name);
        if (!paracontact::is_strict_nk(in.cls.cls) || in.geom.ricci.is_zero()) continue;
        auto r = conditions::generalized_ricci_recurrence_solve(in.geom, in.cls.k, in.s.n);
        if (!r.exists) continue;
        ++solved;
        c.expect(conditions::recurrence_residual(in.geom, r.A, r.B).is_zero(), name + ": solution not certified");
        const Expr two_nk = Expr(2 * in.s.n) * in.cls.k;
        bool zero = true;
        for (std::size_t i = 0; i < r.A.size(); ++i) zero = zero && (two_nk * r.A[i] + r.B[i]).is_zero();
        c.expect(zero, name + ": 2nk A + B != 0");
        c.expect(r.theorem_holds && *r.theorem_holds, name + ": solver reports the theorem failing");
    }
    c.expect(solved >= 1, "no instance with a recurrence solution");

    const auto& a = sec7_audit();
    c.expect(has_verdict(a, "recurrence.solve", audit::Verdict::Flagged), "sec7 recurrence.solve not flagged");
    c.expect(has_verdict(a, "claims.recurrence.eq51", audit::Verdict::Flagged), "Eq (5.1) cross-check not flagged");
    const auto* eq61 = record(a, "claims.recurrence.eq61");
    c.expect(eq61 && eq61->verdict == audit::Verdict::Flagged, "Eq (6.1) cross-check not flagged");
    c.expect(any_note_contains(eq61, "factor 3"), "no note on the factor 3");
    const auto* eq53 = record(a, "claims.recurrence.eq53");
    c.expect(eq53 && eq53->verdict == audit::Verdict::Flagged, "Eq (5.3) cross-check not flagged");
    c.expect(value_of(eq53, "stated B / A") == "-2", "stated B / A = " + value_of(eq53, "stated B / A"));
    c.expect(any_note_contains(eq53, "B = 2 A"), "no note on the sign of B against 2nk A");
    c.detail = std::to_string(solved) + " solved instance(s)";
}

// 8. Torse-forming analyzer.
void torse_forming(Criterion& c) {
    auto m = audit::load_builtin("euclid3");
    auto g = m.build_geometry();
    const geometry::VectorField* position = nullptr;
    for (const auto& f : m.fields)
        if (f.name == "position") position = &f.field;
    c.expect(position != nullptr, "euclid3 lacks the position field");
    if (position) {
        auto r = conditions::torse_forming_analyze(g, *position);
        c.expect(r.is_torse_forming, "position field not torse-forming");
        c.expect(r.rho == Expr(1), "rho != 1");
        c.expect(r.beta == V({0, 0, 0}), "beta != 0");
        c.expect(r.concircular, "position field not concircular");
    }
    auto s = geometry_of("sec7");
    auto r = conditions::torse_forming_analyze(s, s.frame.to_coordinates(e(3)));
    c.expect(!r.is_torse_forming, "sec7 xi reported torse-forming");
    c.expect(r.witness && !r.witness->residual.is_zero(), "no nonzero residual witness for sec7 xi");
    if (r.witness) c.detail = "sec7 xi witness " + r.witness->location;
}

// 9. Frame pipeline against the coordinate oracle at 10 rational points.
void oracle_equivalence(Criterion& c) {
    for (const char* name : {"sec7", "flat3"}) {
        auto g = geometry_of(name);
        auto cg = oracle_for(g);
        std::vector<Expr> Rf(g.riemann.size()), Sf(g.ricci.size());
        for (std::size_t i = 0; i < Rf.size(); ++i) Rf[i] = g.riemann.flat_at(i);
        for (std::size_t i = 0; i < Sf.size(); ++i) Sf[i] = g.ricci.flat_at(i);
        std::size_t compared = 0;
        for (const auto& p : rational_points(g.dim(), 40, 2024)) {
            if (compared == 10) break;
            std::vector<Rational> oR, oS;
            try {
                oR = oracle::evaluate(cg.riemann, p);
                oS = oracle::evaluate(cg.ricci, p);
            } catch (const DomainError&) {
                continue;
            }
            c.expect(oracle::frame_riemann_in_coordinates(cg, Rf, p) == oR, std::string(name) + ": Riemann differs");
            c.expect(oracle::frame_ricci_in_coordinates(cg, Sf, p) == oS, std::string(name) + ": Ricci differs");
            ++compared;
        }
        c.expect(compared == 10, std::string(name) + ": fewer than 10 points compared");
    }
}

// 10. Exact invariants on the whole corpus.
void invariants(Criterion& c) {
    std::mt19937_64 rng(10);
    std::uniform_int_distribution<int> coef(-4, 4);
    std::size_t manifolds = 0;
    for (const auto& name : audit::builtin_names()) {
        auto g = geometry_of(name);
        const std::size_t d = g.dim();
        bool skew = true, pair = true, bianchi = true, sym = true;
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t i = 0; i < d; ++i)
                for (std::size_t j = 0; j < d; ++j)
                    for (std::size_t k = 0; k < d; ++k) {
                        skew = skew && (g.riemann({a, i, j, k}) + g.riemann({a, j, i, k})).is_zero();
                        bianchi = bianchi &&
                                  (g.riemann({a, i, j, k}) + g.riemann({a, j, k, i}) + g.riemann({a, k, i, j})).is_zero();
                        Expr lhs, rhs;
                        for (std::size_t b = 0; b < d; ++b) {
                            lhs += g.riemann({b, i, j, k}) * g.metric(b, a);
                            rhs += g.riemann({b, i, j, a}) * g.metric(b, k);
                        }
                        pair = pair && (lhs + rhs).is_zero();
                    }
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t j = 0; j < d; ++j) sym = sym && g.ricci({i, j}) == g.ricci({j, i});
        c.expect(skew, name + ": R(X,Y) + R(Y,X) != 0");
        c.expect(pair, name + ": g(R(X,Y)Z,W) not skew in Z,W");
        c.expect(bianchi, name + ": first Bianchi identity");
        c.expect(sym, name + ": Ricci not symmetric");
        c.expect(geometry::curvature_action(g.riemann, geometry::metric_tensor(g.metric)).is_zero(),
                 name + ": R.g != 0");
        Expr f = Expr(coef(rng));
        for (std::size_t v = 0; v < d; ++v)
            f += Expr(coef(rng)) * Expr::variable(v).pow(2) + Expr(coef(rng)) * Expr::variable(v) * Expr::variable((v + 1) % d);
        c.expect(geometry::exterior_derivative_oneform(g.frame, geometry::differential(f, d)).is_zero(),
                 name + ": d(df) != 0");
        ++manifolds;
    }
    // d eta(X,Y) = g(X, phi Y) on sec7, with eta = 2y dx + dz.
    auto in = structured("sec7");
    std::vector<Expr> eta{symexpr::parse_expr("2*y", kChart), Expr(0), Expr(1)};
    auto d_eta = geometry::exterior_derivative_oneform(in.geom.frame, eta);
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j)
            c.expect(d_eta({i, j}) == in.geom.metric.inner(e(i + 1), in.s.apply_phi(e(j + 1))),
                     "sec7: d eta != g(., phi .) at (e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + ")");
    c.detail = std::to_string(manifolds) + " manifolds";
}

// Runs a command, returning stdout and the exit status.
std::pair<std::string, int> run(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw Error("cannot run " + cmd);
    std::array<char, 4096> buf{};
    std::size_t n;
    while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), n);
    int status = pclose(pipe);
    return {out, WIFEXITED(status) ? WEXITSTATUS(status) : -1};
}

// 11. Two CLI runs agree once the timestamp is removed; each under 10 s.
void determinism(Criterion& c) {
    const std::string cmd = std::string("\"") + PT_CLI_PATH + "\" audit builtin sec7 --format json";
    std::vector<nlohmann::json> docs;
    double worst = 0;
    for (int i = 0; i < 2; ++i) {
        auto start = Clock::now();
        auto [out, status] = run(cmd);
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        worst = std::max(worst, secs);
        c.expect(status == 0, "exit status " + std::to_string(status));
        c.expect(secs < 10.0, "run took " + std::to_string(secs) + " s");
        auto doc = nlohmann::json::parse(out);
        c.expect(doc.contains("timestamp"), "report lacks a timestamp");
        doc.erase("timestamp");
        docs.push_back(std::move(doc));
    }
    c.expect(docs[0] == docs[1], "reports differ");
    c.expect(docs[0].dump() == docs[1].dump(), "serialized reports differ");
    std::ostringstream d;
    d.precision(3);
    d << "slowest run " << worst << " s";
    c.detail = d.str();
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> criteria{
        {"bracket table", brackets},
        {"Koszul table, torsion-free, nabla g = 0", koszul},
        {"curvature table", curvature},
        {"nullity classification", nullity},
        {"identity suite and Ricci discrepancy", identities},
        {"R(xi,X).R = k (xi ^ X).R on strict instances", pseudo_symmetry},
        {"2nk A + B = 0 and recurrence flags", recurrence},
        {"torse-forming analyzer", torse_forming},
        {"oracle equivalence", oracle_equivalence},
        {"corpus invariants", invariants},
        {"determinism and runtime", determinism},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Criterion c;
        auto start = Clock::now();
        try {
            criteria[i].second(c);
        } catch (const std::exception& ex) {
            c.expect(false, std::string("exception: ") + ex.what());
        }
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        std::ostringstream line;
        line.precision(3);
        line << "criterion " << (i + 1) << " (" << criteria[i].first << "): " << (c.passed() ? "PASS" : "FAIL")
             << " [" << c.checked() << " checks, " << secs << " s";
        if (!c.detail.empty()) line << ", " << c.detail;
        line << "]";
        std::cout << line.str() << "\n";
        for (const auto& f : c.failures()) std::cout << "    " << f << "\n";
        if (!c.passed()) ++failed;
    }
    std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
