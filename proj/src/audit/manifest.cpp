#include "paratensor/audit/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <toml.hpp>

#include "paratensor/error.hpp"
#include "paratensor/symexpr/parser.hpp"

namespace paratensor::audit {

namespace {

class Reader {
public:
    explicit Reader(std::string source) : source_(std::move(source)) {}

    [[noreturn]] void fail(const toml::node* node, const std::string& what) const {
        std::ostringstream os;
        os << source_;
        if (node && node->source().begin) os << ":" << node->source().begin.line << ":" << node->source().begin.column;
        os << ": " << what;
        throw Error(os.str());
    }

    const toml::table& table(const toml::table& parent, std::string_view key, const std::string& path) const {
        const toml::node* n = parent.get(key);
        if (!n) fail(&parent, "missing table [" + path + "]");
        if (!n->is_table()) fail(n, "[" + path + "] must be a table");
        return *n->as_table();
    }

    const toml::table* optional_table(const toml::table& parent, std::string_view key, const std::string& path) const {
        const toml::node* n = parent.get(key);
        if (!n) return nullptr;
        if (!n->is_table()) fail(n, "[" + path + "] must be a table");
        return n->as_table();
    }

    const toml::array& array(const toml::table& t, std::string_view key, const std::string& path) const {
        const toml::node* n = t.get(key);
        if (!n) fail(&t, "missing key '" + path + "'");
        if (!n->is_array()) fail(n, "'" + path + "' must be an array");
        return *n->as_array();
    }

    std::string string(const toml::node& n, const std::string& path) const {
        if (auto s = n.value<std::string>()) return *s;
        fail(&n, "'" + path + "' must be a string");
    }

    Expr expr(const toml::node& n, const std::string& path, const geometry::Chart& chart) const {
        std::string text;
        if (auto i = n.value_exact<std::int64_t>()) {
            text = std::to_string(*i);
        } else if (auto s = n.value_exact<std::string>()) {
            text = *s;
        } else {
            fail(&n, "'" + path + "' must be an expression string or an integer");
        }
        try {
            return symexpr::parse_expr(text, chart.names());
        } catch (const ParseError& e) {
            fail(&n, "'" + path + "': " + e.what());
        } catch (const DomainError& e) {
            fail(&n, "'" + path + "': " + e.what());
        }
    }

    std::vector<Expr> expr_list(const toml::node& n, const std::string& path, const geometry::Chart& chart,
                                std::size_t expected) const {
        const toml::array* arr = n.as_array();
        if (!arr) fail(&n, "'" + path + "' must be an array");
        if (arr->size() != expected)
            fail(&n, "'" + path + "' has " + std::to_string(arr->size()) + " entries, expected " +
                         std::to_string(expected));
        std::vector<Expr> out;
        for (std::size_t i = 0; i < arr->size(); ++i)
            out.push_back(expr(*arr->get(i), path + "[" + std::to_string(i) + "]", chart));
        return out;
    }

    geometry::ExprMatrix matrix(const toml::node& n, const std::string& path, const geometry::Chart& chart,
                                std::size_t d) const {
        const toml::array* rows = n.as_array();
        if (!rows) fail(&n, "'" + path + "' must be an array of rows");
        if (rows->size() != d)
            fail(&n, "'" + path + "' has " + std::to_string(rows->size()) + " rows, expected " + std::to_string(d));
        geometry::ExprMatrix M(d, d);
        for (std::size_t i = 0; i < d; ++i) {
            const auto row = expr_list(*rows->get(i), path + "[" + std::to_string(i) + "]", chart, d);
            for (std::size_t j = 0; j < d; ++j) M(i, j) = row[j];
        }
        return M;
    }

    /// "e1,e3" -> {0, 2}.
    template <std::size_t N>
    std::array<std::size_t, N> slots(std::string_view key, const toml::node* n, std::size_t d) const {
        std::array<std::size_t, N> out{};
        std::size_t count = 0;
        std::size_t pos = 0;
        while (pos <= key.size()) {
            std::size_t end = key.find(',', pos);
            if (end == std::string_view::npos) end = key.size();
            std::string_view part = key.substr(pos, end - pos);
            while (!part.empty() && part.front() == ' ') part.remove_prefix(1);
            while (!part.empty() && part.back() == ' ') part.remove_suffix(1);
            if (count >= N || part.size() < 2 || part[0] != 'e') fail(n, "bad frame slot key '" + std::string(key) + "'");
            std::size_t idx = 0;
            for (char ch : part.substr(1)) {
                if (ch < '0' || ch > '9') fail(n, "bad frame slot key '" + std::string(key) + "'");
                idx = idx * 10 + static_cast<std::size_t>(ch - '0');
            }
            if (idx < 1 || idx > d) fail(n, "frame slot out of range in '" + std::string(key) + "'");
            out[count++] = idx - 1;
            pos = end + 1;
        }
        if (count != N) fail(n, "key '" + std::string(key) + "' needs " + std::to_string(N) + " frame slots");
        return out;
    }

private:
    std::string source_;
};

Claims read_claims(const Reader& rd, const toml::table& t, const geometry::Chart& chart, std::size_t d) {
    Claims c;
    if (const toml::node* n = t.get("class")) c.cls = rd.string(*n, "claims.class");
    if (const toml::node* n = t.get("k")) c.k = rd.expr(*n, "claims.k", chart);
    auto vectors2 = [&](const char* key, auto& out) {
        if (const toml::table* sub = rd.optional_table(t, key, std::string("claims.") + key))
            for (const auto& [k, v] : *sub)
                out.emplace_back(rd.slots<2>(k.str(), &v, d),
                                 rd.expr_list(v, std::string("claims.") + key + "." + std::string(k.str()), chart, d));
    };
    vectors2("brackets", c.brackets);
    vectors2("connection", c.connection);
    if (const toml::table* sub = rd.optional_table(t, "curvature", "claims.curvature"))
        for (const auto& [k, v] : *sub)
            c.curvature.emplace_back(rd.slots<3>(k.str(), &v, d),
                                     rd.expr_list(v, "claims.curvature." + std::string(k.str()), chart, d));
    if (const toml::table* sub = rd.optional_table(t, "h", "claims.h"))
        for (const auto& [k, v] : *sub)
            c.h.emplace_back(rd.slots<1>(k.str(), &v, d)[0],
                             rd.expr_list(v, "claims.h." + std::string(k.str()), chart, d));
    if (const toml::table* sub = rd.optional_table(t, "ricci", "claims.ricci"))
        for (const auto& [k, v] : *sub)
            c.ricci.emplace_back(rd.slots<2>(k.str(), &v, d), rd.expr(v, "claims.ricci." + std::string(k.str()), chart));

    if (const toml::table* r = rd.optional_table(t, "recurrence", "claims.recurrence")) {
        RecurrenceClaim rc;
        std::vector<std::string> names;
        for (const auto& n : rd.array(*r, "parameters", "claims.recurrence.parameters"))
            names.push_back(rd.string(n, "claims.recurrence.parameters"));
        if (names.size() != 2 * d) rd.fail(r, "claims.recurrence.parameters needs " + std::to_string(2 * d) + " names");
        try {
            rc.parameters = geometry::Chart(names);
        } catch (const Error& e) {
            rd.fail(r, std::string("claims.recurrence.parameters: ") + e.what());
        }
        auto scalar = [&](const char* key) {
            const toml::node* n = r->get(key);
            if (!n) rd.fail(r, std::string("missing key 'claims.recurrence.") + key + "'");
            return rd.expr(*n, std::string("claims.recurrence.") + key, rc.parameters);
        };
        auto list = [&](const char* key) {
            const toml::node* n = r->get(key);
            if (!n) rd.fail(r, std::string("missing key 'claims.recurrence.") + key + "'");
            return rd.expr_list(*n, std::string("claims.recurrence.") + key, rc.parameters, d);
        };
        rc.ricci_form = scalar("ricci_form");
        rc.metric_form = scalar("metric_form");
        rc.nabla_ricci = list("nabla_ricci");
        const Expr den = scalar("denominator");
        if (den.is_zero()) rd.fail(r->get("denominator"), "claims.recurrence.denominator is zero");
        for (auto& e : list("A_numerators")) rc.A.push_back(e / den);
        for (auto& e : list("B_numerators")) rc.B.push_back(e / den);
        if (r->get("b_factor")) rc.b_factor = scalar("b_factor");
        c.recurrence = std::move(rc);
    }
    return c;
}

}  // namespace

ManifoldManifest parse_manifest(std::string_view text, const std::string& source) {
    toml::table root;
    try {
        root = toml::parse(text, source);
    } catch (const toml::parse_error& e) {
        const auto& b = e.source().begin;
        throw ParseError(std::string(e.description()) + " in " + source, static_cast<std::size_t>(b.column),
                         static_cast<std::size_t>(b.line));
    }
    const Reader rd(source);
    ManifoldManifest m;
    if (const toml::node* n = root.get("name")) m.name = rd.string(*n, "name");
    if (const toml::node* n = root.get("description")) m.description = rd.string(*n, "description");

    const toml::table& chart_t = rd.table(root, "chart", "chart");
    std::vector<std::string> names;
    for (const auto& n : rd.array(chart_t, "coordinates", "chart.coordinates"))
        names.push_back(rd.string(n, "chart.coordinates"));
    std::optional<int> half;
    if (const toml::node* n = chart_t.get("n")) {
        auto v = n->value_exact<std::int64_t>();
        if (!v || *v < 0) rd.fail(n, "'chart.n' must be a nonnegative integer");
        half = static_cast<int>(*v);
    }
    try {
        m.chart = geometry::Chart(names, half);
    } catch (const Error& e) {
        rd.fail(&chart_t, std::string("chart: ") + e.what());
    }
    const std::size_t d = m.chart.dim();

    const toml::table& frame_t = rd.table(root, "frame", "frame");
    const toml::array& rows = rd.array(frame_t, "fields", "frame.fields");
    if (rows.size() != d)
        rd.fail(&rows, "frame.fields has " + std::to_string(rows.size()) + " fields, expected " + std::to_string(d));
    std::vector<Expr> dens(d, Expr(1));
    if (frame_t.get("denominators")) {
        dens = rd.expr_list(*frame_t.get("denominators"), "frame.denominators", m.chart, d);
        for (std::size_t i = 0; i < d; ++i)
            if (dens[i].is_zero()) rd.fail(frame_t.get("denominators"), "frame.denominators has a zero entry");
    }
    for (std::size_t i = 0; i < d; ++i) {
        auto comps = rd.expr_list(*rows.get(i), "frame.fields[" + std::to_string(i) + "]", m.chart, d);
        for (auto& c : comps) c = c / dens[i];
        m.frame.push_back(geometry::VectorField{std::move(comps)});
    }

    const toml::table& metric_t = rd.table(root, "metric", "metric");
    const toml::node* mat = metric_t.get("matrix");
    if (!mat) rd.fail(&metric_t, "missing key 'metric.matrix'");
    m.metric = rd.matrix(*mat, "metric.matrix", m.chart, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j)
            if (m.metric(i, j) != m.metric(j, i))
                rd.fail(mat, "metric is not symmetric: entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                                 ") differs from (" + std::to_string(j + 1) + "," + std::to_string(i + 1) + ")");

    if (const toml::table* st = rd.optional_table(root, "structure", "structure")) {
        StructureSpec s;
        const toml::node* phi = st->get("phi");
        if (!phi) rd.fail(st, "missing key 'structure.phi'");
        s.phi = rd.matrix(*phi, "structure.phi", m.chart, d);
        const toml::node* xi = st->get("xi");
        if (!xi) rd.fail(st, "missing key 'structure.xi'");
        s.xi = rd.expr_list(*xi, "structure.xi", m.chart, d);
        const toml::node* eta = st->get("eta");
        const toml::node* eta_f = st->get("eta_frame");
        if ((eta != nullptr) == (eta_f != nullptr)) rd.fail(st, "structure needs exactly one of 'eta' and 'eta_frame'");
        s.eta_in_frame = eta_f != nullptr;
        s.eta = rd.expr_list(eta ? *eta : *eta_f, eta ? "structure.eta" : "structure.eta_frame", m.chart, d);
        if (d % 2 == 0) rd.fail(st, "a paracontact structure needs odd dimension, got " + std::to_string(d));
        m.structure = std::move(s);
    }

    if (const toml::table* ft = rd.optional_table(root, "fields", "fields"))
        for (const auto& [k, v] : *ft)
            m.fields.push_back({std::string(k.str()), {rd.expr_list(v, "fields." + std::string(k.str()), m.chart, d)}});

    if (const toml::table* ct = rd.optional_table(root, "claims", "claims")) m.claims = read_claims(rd, *ct, m.chart, d);

    // Singular frame or metric.
    try {
        (void)geometry::Frame(m.frame);
    } catch (const DomainError& e) {
        rd.fail(&frame_t, std::string("frame: ") + e.what());
    }
    try {
        (void)geometry::FrameMetric(m.metric);
    } catch (const DomainError& e) {
        rd.fail(mat, std::string("metric: ") + e.what());
    }
    return m;
}

ManifoldManifest load_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error("cannot open manifest " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_manifest(buf.str(), path.string());
}

geometry::Geometry ManifoldManifest::build_geometry() const {
    return geometry::Geometry::build(chart, geometry::Frame(frame), geometry::FrameMetric(metric));
}

std::optional<paracontact::ParacontactStructure> ManifoldManifest::build_structure(
    const geometry::Geometry& geom) const {
    if (!structure) return std::nullopt;
    const std::size_t d = geom.dim();
    geometry::FrameTensor phi(d, 1, 1);
    for (std::size_t a = 0; a < d; ++a)
        for (std::size_t j = 0; j < d; ++j) phi({a, j}) = structure->phi(a, j);
    if (structure->eta_in_frame)
        return paracontact::ParacontactStructure::from_frame_eta(geom, std::move(phi), structure->xi, structure->eta);
    return paracontact::ParacontactStructure::from_coordinate_eta(geom, std::move(phi), structure->xi, structure->eta);
}

}  // namespace paratensor::audit
