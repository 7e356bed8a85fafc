#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include <nlohmann/json.hpp>

#include "paratensor/audit/audit.hpp"
#include "paratensor/audit/report.hpp"
#include "paratensor/error.hpp"
#include "test_support.hpp"

using namespace paratensor;
using namespace paratensor::audit;
using pt_test::P;

namespace {

std::string sec7_text() { return std::string(builtin_text("sec7")); }

std::string replace_once(std::string text, const std::string& from, const std::string& to) {
    auto pos = text.find(from);
    if (pos == std::string::npos) throw std::runtime_error("pattern not found: " + from);
    return text.replace(pos, from.size(), to);
}

// Message of the error raised while parsing `text`, or "" if none.
std::string parse_error(const std::string& text) {
    try {
        parse_manifest(text, "case.toml");
    } catch (const Error& e) {
        return e.what();
    }
    return "";
}

std::string value_of(const CheckRecord& c, const std::string& name) {
    for (const auto& [k, v] : c.values)
        if (k == name) return v;
    return "<missing>";
}

const CheckRecord& get(const AuditReport& r, const std::string& id) {
    const CheckRecord* c = r.find(id);
    if (!c) throw std::runtime_error("missing record " + id);
    return *c;
}

}  // namespace

TEST(Manifest, Sec7Contents) {
    auto m = load_builtin("sec7");
    EXPECT_EQ(m.chart.dim(), 3u);
    EXPECT_EQ(m.chart.half_dim(), 1);
    EXPECT_EQ(m.frame[0].components, (std::vector<Expr>{Expr(1), P("z"), P("-2*y")}));
    EXPECT_EQ(m.metric(0, 1), Expr(1));
    EXPECT_EQ(m.metric(2, 2), Expr(1));
    EXPECT_TRUE(m.metric(0, 0).is_zero());
    ASSERT_TRUE(m.structure.has_value());
    EXPECT_EQ(m.structure->phi(1, 1), Expr(-1));
    EXPECT_EQ(m.structure->eta, (std::vector<Expr>{P("2*y"), Expr(0), Expr(1)}));
    EXPECT_FALSE(m.structure->eta_in_frame);
    ASSERT_TRUE(m.claims.has_value());
    EXPECT_EQ(m.claims->k, Expr(-1));
}

TEST(Manifest, FlatLoadsWithoutStructure) {
    auto m = load_builtin("flat3");
    EXPECT_FALSE(m.structure.has_value());
    auto r = run_audit(m);
    EXPECT_EQ(get(r, "structure.present").verdict, Verdict::Inapplicable);
    EXPECT_FALSE(r.any_fail());
    for (const char* id : {"geometry.bianchi_first", "geometry.riemann_pair", "geometry.curvature_g"})
        EXPECT_EQ(get(r, id).verdict, Verdict::Pass) << id;
}

TEST(Manifest, AsymmetricMetricRejected) {
    auto text = replace_once(sec7_text(), "matrix = [\n  [\"0\", \"1\", \"0\"]", "matrix = [\n  [\"0\", \"5\", \"0\"]");
    auto msg = parse_error(text);
    EXPECT_NE(msg.find("not symmetric"), std::string::npos) << msg;
    EXPECT_NE(msg.find("case.toml:"), std::string::npos) << msg;
}

TEST(Manifest, ShapeMismatchRejected) {
    auto msg = parse_error(replace_once(sec7_text(), "[\"0\", \"1\", \"0\"],\n  [\"0\", \"0\", \"1\"],\n]\n\n[metric]",
                                        "[\"0\", \"1\"],\n  [\"0\", \"0\", \"1\"],\n]\n\n[metric]"));
    EXPECT_NE(msg.find("expected 3"), std::string::npos) << msg;
    EXPECT_NE(parse_error(replace_once(sec7_text(), "xi = [\"0\", \"0\", \"1\"]\n# Coord", "xi = [\"0\", \"1\"]\n# Coord"))
                  .find("expected 3"),
              std::string::npos);
}

TEST(Manifest, ExpressionErrorCarriesLine) {
    auto text = replace_once(sec7_text(), "[\"1\", \"z\", \"-2*y\"]", "[\"1\", \"z\", \"-2*y +\"]");
    auto msg = parse_error(text);
    EXPECT_NE(msg.find("case.toml:12:"), std::string::npos) << msg;
    auto unknown = parse_error(replace_once(sec7_text(), "[\"1\", \"z\", \"-2*y\"]", "[\"1\", \"w\", \"-2*y\"]"));
    EXPECT_NE(unknown.find("w"), std::string::npos) << unknown;
}

TEST(Manifest, TomlSyntaxErrorIsParseError) {
    try {
        parse_manifest("name = \"broken\n[chart]\n", "bad.toml");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.line(), 1u);
        EXPECT_NE(std::string(e.what()).find("bad.toml"), std::string::npos);
    }
}

TEST(Manifest, SingularFrameOrMetricRejected) {
    auto frame = parse_error(replace_once(sec7_text(), "  [\"0\", \"1\", \"0\"],\n  [\"0\", \"0\", \"1\"],\n]\n\n[metric]",
                                          "  [\"0\", \"1\", \"0\"],\n  [\"0\", \"2\", \"0\"],\n]\n\n[metric]"));
    EXPECT_NE(frame.find("frame"), std::string::npos) << frame;
    auto metric = parse_error(replace_once(sec7_text(), "  [\"0\", \"0\", \"1\"],\n]\n\n[structure]",
                                           "  [\"0\", \"0\", \"0\"],\n]\n\n[structure]"));
    EXPECT_NE(metric.find("metric"), std::string::npos) << metric;
}

TEST(Manifest, StructureNeedsOddDimensionAndOneEta) {
    std::string even = R"(name = "even"
[chart]
coordinates = ["x", "y"]
[frame]
fields = [["1", "0"], ["0", "1"]]
[metric]
matrix = [["1", "0"], ["0", "1"]]
[structure]
phi = [["0", "1"], ["1", "0"]]
xi = ["1", "0"]
eta_frame = ["1", "0"]
)";
    EXPECT_NE(parse_error(even).find("odd dimension"), std::string::npos);
    auto both = replace_once(sec7_text(), "eta = [\"2*y\", \"0\", \"1\"]", "eta = [\"2*y\", \"0\", \"1\"]\neta_frame = [\"0\", \"0\", \"1\"]");
    EXPECT_NE(parse_error(both).find("exactly one"), std::string::npos);
}

TEST(Manifest, LoadFromFileAndMissingFile) {
    auto path = std::filesystem::temp_directory_path() / "pt_sec7_copy.toml";
    {
        std::ofstream out(path);
        out << sec7_text();
    }
    EXPECT_EQ(load_manifest(path).name, "sec7");
    std::filesystem::remove(path);
    EXPECT_THROW(load_manifest(path), Error);
    EXPECT_THROW(load_builtin("no-such-manifold"), Error);
}

TEST(Corpus, ContainsRequiredEntries) {
    auto names = builtin_names();
    std::set<std::string> set(names.begin(), names.end());
    for (const char* n : {"sec7", "flat3", "sec7-scaled"}) EXPECT_TRUE(set.count(n)) << n;
    auto scaled = load_builtin("sec7-scaled");
    auto base = load_builtin("sec7");
    EXPECT_EQ(scaled.frame, base.frame);
    EXPECT_EQ(scaled.metric, base.metric.scaled(Expr(2)));
}

TEST(Audit, Sec7Findings) {
    auto r = run_audit(load_builtin("sec7"));
    EXPECT_FALSE(r.any_fail());
    for (const char* id : {"claims.brackets", "claims.connection", "claims.curvature", "claims.h", "apc.contact",
                           "nk.h_squared", "nk.S_X_xi"})
        EXPECT_EQ(get(r, id).verdict, Verdict::Pass) << id;

    const auto& cls = get(r, "nullity.classification");
    EXPECT_EQ(value_of(cls, "k"), "-1");
    EXPECT_EQ(value_of(cls, "mu"), "2");
    EXPECT_EQ(value_of(cls, "class"), "(k,mu)");

    const auto& strict = get(r, "nullity.strict_nk");
    EXPECT_EQ(strict.verdict, Verdict::Flagged);
    ASSERT_FALSE(strict.witnesses.empty());
    EXPECT_NE(strict.witnesses[0].location.find("(e1,e3,xi)"), std::string::npos);

    EXPECT_EQ(get(r, "claims.class").verdict, Verdict::Flagged);

    const auto& ricci = get(r, "ricci.values");
    EXPECT_EQ(value_of(ricci, "S(e3,e3)"), "-2");
    EXPECT_EQ(value_of(ricci, "paper-style trace(e2,e2)"), "-3");
    EXPECT_EQ(value_of(ricci, "paper-style trace(e1,e1)"), "-1");
    EXPECT_EQ(value_of(ricci, "paper-style trace(e3,e3)"), "2");
    const auto& claimed = get(r, "claims.ricci");
    EXPECT_EQ(claimed.verdict, Verdict::Flagged);
    bool s33 = false;
    for (const auto& w : claimed.witnesses) s33 = s33 || w.location == "S(e3,e3)";
    EXPECT_TRUE(s33);

    EXPECT_EQ(get(r, "torse.xi").verdict, Verdict::Flagged);
    EXPECT_EQ(get(r, "recurrence.solve").verdict, Verdict::Flagged);
    EXPECT_EQ(get(r, "claims.recurrence.eq61").verdict, Verdict::Flagged);
    EXPECT_EQ(get(r, "claims.recurrence.eq53").verdict, Verdict::Flagged);
}

TEST(Audit, OneRecordPerCheckInFixedOrder) {
    auto r = run_audit(load_builtin("sec7"));
    std::set<std::string> ids;
    for (const auto& c : r.checks) EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_EQ(r.checks.front().id, "geometry.torsion_free");
    EXPECT_EQ(r.checks.back().id, "torse.xi");
    auto again = run_audit(load_builtin("sec7"));
    ASSERT_EQ(again.checks.size(), r.checks.size());
    for (std::size_t i = 0; i < r.checks.size(); ++i) EXPECT_EQ(again.checks[i].id, r.checks[i].id);
}

TEST(Audit, FlippedPhiFails) {
    auto m = load_builtin("sec7");
    m.structure->phi(1, 1) = Expr(1);
    auto r = run_audit(m);
    EXPECT_TRUE(r.any_fail());
    const auto& c = get(r, "apc.g_phi_phi");
    EXPECT_EQ(c.verdict, Verdict::Fail);
    ASSERT_FALSE(c.witnesses.empty());
    EXPECT_EQ(c.witnesses[0].location, "(e1,e2)");
}

TEST(Audit, ScopesLimitTheChecks) {
    auto m = load_builtin("sec7");
    AuditOptions structure_only;
    structure_only.scope = AuditScope::Structure;
    auto s = run_audit(m, structure_only);
    EXPECT_NE(s.find("apc.contact"), nullptr);
    EXPECT_EQ(s.find("nullity.classification"), nullptr);
    AuditOptions classify;
    classify.scope = AuditScope::Classify;
    auto c = run_audit(m, classify);
    EXPECT_NE(c.find("nullity.classification"), nullptr);
    EXPECT_EQ(c.find("ps.R_xi"), nullptr);
}

TEST(Audit, CorpusHasNoFailures) {
    for (const auto& name : builtin_names()) {
        auto r = run_audit(load_builtin(name));
        EXPECT_FALSE(r.any_fail()) << name;
        EXPECT_EQ(r.count(Verdict::Pass) + r.count(Verdict::Fail) + r.count(Verdict::Flagged) +
                      r.count(Verdict::Inapplicable),
                  r.checks.size());
    }
}

TEST(Report, TextNamesEachEquation) {
    auto text = render_text(run_audit(load_builtin("sec7")));
    EXPECT_NE(text.find("Eq (2.4) h^2=(1+k)phi^2: PASS"), std::string::npos);
    EXPECT_NE(text.find("paper-style trace"), std::string::npos);
    EXPECT_NE(text.find("summary:"), std::string::npos);
}

TEST(Report, JsonIsDeterministicAndComplete) {
    auto r = run_audit(load_builtin("sec7"));
    auto a = render_json(r), b = render_json(run_audit(load_builtin("sec7")));
    EXPECT_EQ(a, b);
    auto doc = nlohmann::json::parse(render_json(r, std::string("2026-01-01T00:00:00Z")));
    EXPECT_EQ(doc["schema_version"], kReportSchemaVersion);
    EXPECT_EQ(doc["timestamp"], "2026-01-01T00:00:00Z");
    EXPECT_FALSE(nlohmann::json::parse(a).contains("timestamp"));
    ASSERT_EQ(doc["checks"].size(), r.checks.size());
    EXPECT_EQ(doc["summary"]["flagged"], r.count(Verdict::Flagged));
    for (std::size_t i = 0; i < r.checks.size(); ++i) {
        EXPECT_EQ(doc["checks"][i]["id"], r.checks[i].id);
        EXPECT_EQ(doc["checks"][i]["verdict"], to_string(r.checks[i].verdict));
    }
}

TEST(Report, EmitToFileAndBadPath) {
    auto r = run_audit(load_builtin("flat3"));
    auto path = std::filesystem::temp_directory_path() / "pt_report.json";
    emit_report(r, ReportFormat::Json, path.string());
    std::ifstream in(path);
    auto doc = nlohmann::json::parse(in);
    EXPECT_EQ(doc["manifold"]["name"], "flat3");
    EXPECT_TRUE(doc.contains("timestamp"));
    std::filesystem::remove(path);
    EXPECT_THROW(emit_report(r, ReportFormat::Text, "/nonexistent-dir/x/report.txt"), Error);
}
