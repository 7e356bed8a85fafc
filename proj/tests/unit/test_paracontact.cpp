#include <gtest/gtest.h>

#include "paratensor/geometry/connection.hpp"
#include "paratensor/paracontact/identities.hpp"
#include "paratensor/paracontact/nullity.hpp"
#include "test_support.hpp"

using namespace paratensor;
using namespace paratensor::paracontact;
using geometry::ExprMatrix;
using pt_test::V;

namespace {

struct Instance {
    audit::ManifoldManifest manifest;
    Geometry geom;
    ParacontactStructure s;
};

Instance load(const std::string& name) {
    auto m = audit::load_builtin(name);
    auto g = m.build_geometry();
    auto s = m.build_structure(g);
    if (!s) throw std::runtime_error(name + " has no structure");
    return {std::move(m), std::move(g), std::move(*s)};
}

std::vector<std::string> structured_corpus() {
    std::vector<std::string> out;
    for (const auto& name : audit::builtin_names())
        if (audit::load_builtin(name).structure) out.push_back(name);
    return out;
}

const IdentityCheck& find(const std::vector<IdentityCheck>& checks, const std::string& id) {
    for (const auto& c : checks)
        if (c.id == id) return c;
    throw std::runtime_error("missing check " + id);
}

FrameVector e(std::size_t i) { return geometry::basis_vector(3, i - 1); }

}  // namespace

TEST(Axioms, Sec7AllPass) {
    auto in = load("sec7");
    auto checks = verify_apc_axioms(in.geom, in.s);
    EXPECT_EQ(checks.size(), 8u);
    for (const auto& c : checks) EXPECT_TRUE(c.holds) << c.id;
    EXPECT_EQ(in.s.eta, V({0, 0, 1}));
    Expr eta_xi;
    for (std::size_t j = 0; j < 3; ++j) eta_xi += in.s.eta[j] * in.s.xi[j];
    EXPECT_EQ(eta_xi, Expr(1));
}

TEST(Axioms, Sec7PhiPhiIdentityByHand) {
    auto in = load("sec7");
    auto phi1 = in.s.apply_phi(e(1)), phi2 = in.s.apply_phi(e(2));
    Expr v = in.geom.metric.inner(phi1, phi2) + in.geom.metric(0, 1) - in.s.eta[0] * in.s.eta[1];
    EXPECT_TRUE(v.is_zero());
}

TEST(Axioms, FlippedPhiOnE2Fails) {
    auto m = audit::load_builtin("sec7");
    m.structure->phi(1, 1) = Expr(1);
    auto g = m.build_geometry();
    auto s = m.build_structure(g);
    auto checks = verify_apc_axioms(g, *s);
    const auto& c = find(checks, "apc.g_phi_phi");
    EXPECT_FALSE(c.holds);
    ASSERT_TRUE(c.witness.has_value());
    // g(phi e2, phi e2) + g(e2, e2) vanishes for either sign because g(e2,e2) = 0;
    // the first violated pair is (e1,e2): g(e1,e2) = 1 against -g(e1,e2) = -1.
    EXPECT_EQ(c.witness->location, "(e1,e2)");
    EXPECT_EQ(c.witness->residual, Expr(2));
    EXPECT_FALSE(find(checks, "apc.contact").holds);
    EXPECT_TRUE(find(checks, "apc.phi_squared").holds);
}

TEST(Axioms, ZeroPhiFailsPhiSquaredAtE1) {
    auto m = audit::load_builtin("sec7");
    m.structure->phi = ExprMatrix(3, 3);
    auto g = m.build_geometry();
    auto checks = verify_apc_axioms(g, *m.build_structure(g));
    const auto& c = find(checks, "apc.phi_squared");
    EXPECT_FALSE(c.holds);
    ASSERT_TRUE(c.witness.has_value());
    EXPECT_EQ(c.witness->location, "(e1)[e1]");
}

TEST(H, Sec7Values) {
    auto in = load("sec7");
    auto h = compute_h(in.geom, in.s);
    EXPECT_EQ(paracontact::apply(h.h, e(1)), V({0, 1, 0}));
    EXPECT_EQ(paracontact::apply(h.h, e(2)), V({0, 0, 0}));
    EXPECT_EQ(paracontact::apply(h.h, e(3)), V({0, 0, 0}));
    EXPECT_TRUE(h.all_invariants_hold());
}

TEST(H, NablaXiOnSec7) {
    auto in = load("sec7");
    auto h = compute_h(in.geom, in.s);
    auto lhs = geometry::nabla_vector(in.geom.frame, in.geom.connection, e(1), in.s.xi);
    auto phi_e1 = in.s.apply_phi(e(1));
    auto phi_h_e1 = in.s.apply_phi(paracontact::apply(h.h, e(1)));
    FrameVector rhs(3);
    for (std::size_t i = 0; i < 3; ++i) rhs[i] = -phi_e1[i] + phi_h_e1[i];
    EXPECT_EQ(lhs, V({-1, -1, 0}));
    EXPECT_EQ(rhs, lhs);
}

TEST(H, KParacontactHasZeroH) {
    for (const char* name : {"heisenberg", "sl2-ads"}) {
        auto in = load(name);
        EXPECT_TRUE(compute_h(in.geom, in.s).is_zero()) << name;
    }
}

TEST(Classification, Sec7IsKMu) {
    auto in = load("sec7");
    auto h = compute_h(in.geom, in.s);
    auto cls = classify_nullity(in.geom, in.s, h);
    EXPECT_EQ(cls.k, Expr(-1));
    EXPECT_EQ(cls.mu, Expr(2));
    EXPECT_EQ(cls.cls, NullityClass::KMu);
    EXPECT_TRUE(cls.residual.is_zero());
    auto w = cls.strict_witness();
    ASSERT_TRUE(w.has_value());
    EXPECT_EQ(w->location, "(e1,e3)[e2]");
    EXPECT_EQ(w->residual, Expr(2));
}

TEST(Classification, Corpus) {
    struct Expected {
        const char* name;
        long k;
        NullityClass cls;
    };
    const Expected table[] = {
        {"heisenberg", -1, NullityClass::ParaSasakian}, {"sl2-ads", -1, NullityClass::ParaSasakian},
        {"sl2-k-2", -2, NullityClass::Nk},             {"sl2-k-1", -1, NullityClass::Nk},
        {"sl2-k1", 1, NullityClass::Nk},               {"flat-para", 0, NullityClass::FlatXiCurvature},
    };
    for (const auto& row : table) {
        auto in = load(row.name);
        auto h = compute_h(in.geom, in.s);
        auto cls = classify_nullity(in.geom, in.s, h);
        EXPECT_EQ(cls.k, Expr(row.k)) << row.name;
        EXPECT_TRUE(cls.mu.is_zero()) << row.name;
        EXPECT_EQ(cls.cls, row.cls) << row.name;
        EXPECT_TRUE(is_strict_nk(cls.cls)) << row.name;
        EXPECT_EQ(cls.k_paracontact, h.is_zero()) << row.name;
    }
}

TEST(Identities, Sec7) {
    auto in = load("sec7");
    auto h = compute_h(in.geom, in.s);
    auto cls = classify_nullity(in.geom, in.s, h);
    auto ids = verify_nk_identities(in.geom, in.s, h, cls);
    EXPECT_TRUE(find(ids, "nk.h_squared").holds);
    EXPECT_TRUE(compose(h.h, h.h).is_zero());
    const auto& ricci = find(ids, "nk.S_X_xi");
    Expr two_nk = Expr(2 * in.s.n) * cls.k;
    EXPECT_EQ(two_nk, Expr(-2));
    EXPECT_EQ(ricci.holds, in.geom.ricci({2, 2}) == two_nk);
    EXPECT_TRUE(ricci.holds);
    EXPECT_FALSE(find(ids, "nk.R_xi_X").holds);
    EXPECT_FALSE(find(ids, "nk.R_xi_X").expected);
}

TEST(Identities, FlatCaseRxiVanishes) {
    auto in = load("flat-para");
    auto h = compute_h(in.geom, in.s);
    auto cls = classify_nullity(in.geom, in.s, h);
    auto ids = verify_nk_identities(in.geom, in.s, h, cls);
    EXPECT_TRUE(find(ids, "nk.R_xi_X").holds);
    EXPECT_TRUE(find(ids, "nk.h_squared").holds);
}

TEST(Properties, StructureInvariantsOnCorpus) {
    for (const auto& name : structured_corpus()) {
        auto in = load(name);
        for (const auto& c : verify_apc_axioms(in.geom, in.s)) EXPECT_TRUE(c.holds) << name << " " << c.id;
        // phi + eta(x)xi is invertible exactly when phi has rank d-1 on ker(eta).
        const std::size_t d = in.geom.dim();
        ExprMatrix m(d, d);
        for (std::size_t a = 0; a < d; ++a)
            for (std::size_t j = 0; j < d; ++j) m(a, j) = in.s.phi({a, j}) + in.s.xi[a] * in.s.eta[j];
        EXPECT_FALSE(m.determinant().is_zero()) << name;
        for (const auto& c : in.s.apply_phi(in.s.xi)) EXPECT_TRUE(c.is_zero()) << name;

        auto h = compute_h(in.geom, in.s);
        for (const auto& c : h.checks) EXPECT_TRUE(c.holds) << name << " " << c.id;

        auto cls = classify_nullity(in.geom, in.s, h);
        EXPECT_EQ(nullity_residual(in.geom, in.s, h.h, cls.k, cls.mu), cls.residual) << name;
        if (is_strict_nk(cls.cls)) {
            auto lhs = compose(h.h, h.h);
            auto rhs = compose(in.s.phi, in.s.phi).scaled(Expr(1) + cls.k);
            EXPECT_EQ(lhs, rhs) << name;
            for (const auto& c : verify_nk_identities(in.geom, in.s, h, cls))
                if (c.expected) EXPECT_TRUE(c.holds) << name << " " << c.id;
        }
    }
}
