#include "paratensor/audit/report.hpp"

#include <chrono>
#include <ctime>
#include <fstream>
#include <iostream>
#include <sstream>

#include <json.hpp>

#include "paratensor/error.hpp"

namespace paratensor::audit {

namespace {

const char* kConventions[][2] = {
    {"curvature", "R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z"},
    {"ricci", "S(Y,Z) = sum_ij g^ij g(R(e_i,Y)Z, e_j)"},
    {"exterior_derivative", "d eta(X,Y) = 1/2 (X eta(Y) - Y eta(X) - eta([X,Y]))"},
    {"phi_matrix", "column j holds the frame components of phi(e_j)"},
    {"slots", "(X,Y,...)[a]: covariant frame slots, then the contravariant component"},
};

}  // namespace

std::string render_text(const AuditReport& r) {
    std::ostringstream os;
    os << "paratensor " << kEngineVersion << " audit report\n";
    os << "manifold: " << r.manifold;
    if (!r.description.empty()) os << " (" << r.description << ")";
    os << "\ncoordinates:";
    for (const auto& c : r.coordinates) os << " " << c;
    os << "\n";
    for (const auto& c : kConventions) os << "convention " << c[0] << ": " << c[1] << "\n";
    std::string section;
    for (const auto& c : r.checks) {
        if (c.section != section) {
            section = c.section;
            os << "\n[" << section << "]\n";
        }
        os << c.label << ": " << to_string(c.verdict) << "\n";
        for (const auto& [k, v] : c.values) os << "    " << k << " = " << v << "\n";
        for (const auto& w : c.witnesses) os << "    witness " << w.location << ": " << w.value << "\n";
        for (const auto& n : c.notes) os << "    note: " << n << "\n";
    }
    os << "\nsummary: " << r.count(Verdict::Pass) << " pass, " << r.count(Verdict::Fail) << " fail, "
       << r.count(Verdict::Flagged) << " flagged, " << r.count(Verdict::Inapplicable) << " inapplicable\n";
    return os.str();
}

std::string render_json(const AuditReport& r, const std::optional<std::string>& timestamp) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["schema_version"] = kReportSchemaVersion;
    j["engine"] = {{"name", "paratensor"}, {"version", kEngineVersion}};
    if (timestamp) j["timestamp"] = *timestamp;
    j["manifold"] = {{"name", r.manifold}, {"description", r.description}, {"coordinates", r.coordinates}};
    ordered_json conv = ordered_json::object();
    for (const auto& c : kConventions) conv[c[0]] = c[1];
    j["conventions"] = conv;
    j["options"] = {{"numeric_samples", r.options.numeric.samples},
                    {"seed", r.options.numeric.seed},
                    {"relative_tolerance", r.options.numeric.relative_tolerance}};
    j["summary"] = {{"pass", r.count(Verdict::Pass)},
                    {"fail", r.count(Verdict::Fail)},
                    {"flagged", r.count(Verdict::Flagged)},
                    {"inapplicable", r.count(Verdict::Inapplicable)}};
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
        ordered_json e;
        e["id"] = c.id;
        e["section"] = c.section;
        e["reference"] = c.reference;
        e["label"] = c.label;
        e["verdict"] = to_string(c.verdict);
        ordered_json values = ordered_json::array();
        for (const auto& [k, v] : c.values) values.push_back({{"name", k}, {"value", v}});
        e["values"] = values;
        ordered_json ws = ordered_json::array();
        for (const auto& w : c.witnesses) ws.push_back({{"location", w.location}, {"value", w.value}});
        e["witnesses"] = ws;
        e["notes"] = c.notes;
        checks.push_back(std::move(e));
    }
    j["checks"] = checks;
    return j.dump(2) + "\n";
}

std::string utc_timestamp() {
    const std::time_t t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

void emit_report(const AuditReport& report, ReportFormat format, const std::string& path) {
    const std::string text = format == ReportFormat::Text ? render_text(report) : render_json(report, utc_timestamp());
    if (path.empty()) {
        std::cout << text;
        std::cout.flush();
        if (!std::cout) throw Error("failed to write the report to stdout");
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path + " for writing");
    out << text;
    out.close();
    if (!out) throw Error("failed to write " + path);
}

}  // namespace paratensor::audit
