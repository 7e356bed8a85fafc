// Command-line front end: manifest audits and the built-in corpus.
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "paratensor/audit/corpus.hpp"
#include "paratensor/audit/report.hpp"
#include "paratensor/error.hpp"

namespace {

using namespace paratensor::audit;

constexpr int kExitFail = 1;
constexpr int kExitError = 2;

// "<file>" or "builtin <name>".
ManifoldManifest resolve(const std::vector<std::string>& source) {
    if (source.size() == 2 && source[0] == "builtin") return load_builtin(source[1]);
    if (source.size() == 1) return load_manifest(source[0]);
    throw paratensor::Error("expected a manifest path or 'builtin <name>'");
}

struct OutputOptions {
    std::string format = "text";
    std::string out;
    std::size_t samples = 10;
    std::uint64_t seed = 1;
};

void add_output_options(CLI::App* cmd, OutputOptions& o) {
    cmd->add_option("--format", o.format, "Report format")->check(CLI::IsMember({"text", "json"}));
    cmd->add_option("--out", o.out, "Write the report to PATH instead of stdout");
    cmd->add_option("--numeric-samples", o.samples, "Sample points for the floating-point checks")
        ->check(CLI::Range(std::size_t{1}, std::size_t{100000}));
    cmd->add_option("--seed", o.seed, "Seed for the sample points");
}

int run_and_emit(const ManifoldManifest& m, const OutputOptions& o, AuditScope scope) {
    AuditOptions opt;
    opt.scope = scope;
    opt.numeric.samples = o.samples;
    opt.numeric.seed = o.seed;
    const AuditReport report = run_audit(m, opt);
    emit_report(report, o.format == "json" ? ReportFormat::Json : ReportFormat::Text, o.out);
    return report.any_fail() ? kExitFail : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact tensor-calculus auditor for paracontact metric manifolds"};
    app.require_subcommand(1);

    std::vector<std::string> source;
    OutputOptions out;

    auto* audit = app.add_subcommand("audit", "Run the full audit of a manifest (a path or 'builtin <name>')");
    audit->add_option("source", source)->required()->expected(1, 2);
    add_output_options(audit, out);

    auto* structure = app.add_subcommand("check-structure", "Check the paracontact axioms and h");
    structure->add_option("source", source)->required()->expected(1, 2);
    add_output_options(structure, out);

    auto* classify = app.add_subcommand("classify", "Nullity classification");
    classify->add_option("source", source)->required()->expected(1, 2);
    add_output_options(classify, out);

    std::string builtin_name;
    bool builtin_audit = false;
    auto* builtin = app.add_subcommand("builtin", "Print a built-in manifest, or audit it with --audit");
    builtin->add_option("name", builtin_name)->required();
    builtin->add_flag("--audit", builtin_audit, "Audit instead of printing");
    add_output_options(builtin, out);

    app.add_subcommand("list-builtins", "List the built-in manifests");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitError;
    }

    try {
        if (*audit) return run_and_emit(resolve(source), out, AuditScope::Full);
        if (*structure) return run_and_emit(resolve(source), out, AuditScope::Structure);
        if (*classify) return run_and_emit(resolve(source), out, AuditScope::Classify);
        if (*builtin) {
            if (builtin_audit) return run_and_emit(load_builtin(builtin_name), out, AuditScope::Full);
            std::cout << builtin_text(builtin_name);
            return 0;
        }
        for (const auto& n : builtin_names()) std::cout << n << "\n";
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}
