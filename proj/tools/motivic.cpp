// motivic -- exact analyses of surface realizations: intersection-form
// projectors, dual-graph invariants of curve configurations, holonomy
// classes in k* tensor Q, and cusp-cycle generation.
//
// Subcommands: analyze, divisor, kce, cusp, selfcheck.
// Exit codes: 0 pass, 1 validation/parse failure, 2 computation error.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "motivic/commands.hpp"

namespace {

using namespace motivic;

void emit(const Report& report, const std::string& format) {
    if (format == "structured")
        std::cout << render_structured(report);
    else
        std::cout << render_text(report);
}

Walk parse_cycle_flag(const std::string& spec) {
    // "auto" defers to the unique fundamental cycle; otherwise a comma
    // separated edge list, '~' prefix meaning reverse traversal.
    Walk walk;
    if (spec.empty() || spec == "auto")
        return walk;
    std::string token;
    std::stringstream ss(spec);
    while (std::getline(ss, token, ',')) {
        bool forward = true;
        if (!token.empty() && token[0] == '~') {
            forward = false;
            token = token.substr(1);
        }
        try {
            const long e = std::stol(token);
            if (e < 0)
                throw ValidationError("--cycle: negative edge index");
            walk.push_back({static_cast<std::size_t>(e), forward});
        } catch (const std::invalid_argument&) {
            throw ValidationError("--cycle: bad edge index '" + token + "'");
        } catch (const std::out_of_range&) {
            throw ValidationError("--cycle: edge index out of range");
        }
    }
    if (walk.empty())
        throw ValidationError("--cycle: empty edge list");
    return walk;
}

int run(int argc, char** argv) {
    CLI::App app{"Exact intersection-form, divisor-configuration and "
                 "holonomy analyses"};
    app.require_subcommand(1);
    app.fallthrough(); // --format may follow the subcommand
    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "structured"}));

    auto* analyze = app.add_subcommand(
        "analyze", "Projector, IH^2 and Kunneth data of a surface document");
    std::string analyze_file;
    analyze->add_option("surface", analyze_file, "surface document")
        ->required();

    auto* divisor = app.add_subcommand(
        "divisor", "Dual graph and graded dimensions of a configuration");
    std::string divisor_file;
    long chi_smooth = 0;
    divisor->add_option("config", divisor_file, "config document")->required();
    divisor->add_option("--chi", chi_smooth,
                        "Euler characteristic of the smooth compactification "
                        "(enables the compactly supported value)");

    auto* kce = app.add_subcommand(
        "kce", "Kummer-Chern-Eisenstein holonomy class of a line bundle");
    std::string kce_surface, kce_config, kce_bundle, kce_combined;
    std::string cycle_spec = "auto";
    std::string orientation = "forward";
    kce->add_option("--surface", kce_surface, "surface document");
    kce->add_option("--config", kce_config, "config document");
    kce->add_option("--bundle", kce_bundle, "bundle document");
    kce->add_option("--input", kce_combined,
                    "combined kce document (alternative to the three parts)");
    kce->add_option("--cycle", cycle_spec,
                    "'auto' or comma separated edge list (~ reverses an edge)");
    kce->add_option("--orientation", orientation, "forward | reverse")
        ->check(CLI::IsMember({"forward", "reverse"}));

    auto* cusp = app.add_subcommand(
        "cusp", "Cusp cycle, fundamental unit and period checks");
    long cusp_d = 0;
    std::string emit_config;
    cusp->add_option("--d", cusp_d, "squarefree integer > 1")->required();
    cusp->add_option("--emit-config", emit_config,
                     "write the cycle as a config document");

    auto* selfcheck = app.add_subcommand(
        "selfcheck", "Run the full invariant suite on seeded random inputs");
    std::uint64_t seed = 20100129;
    selfcheck->add_option("--seed", seed, "master seed");

    CLI11_PARSE(app, argc, argv);

    if (*analyze) {
        const InputDocument doc = load_document(analyze_file, "surface");
        const Report report = cmd_analyze(surface_from_payload(doc.payload));
        emit(report, format);
        return report.status == "fail" ? 2 : 0;
    }

    if (*divisor) {
        const InputDocument doc = load_document(divisor_file, "config");
        const CurveConfiguration cfg = config_from_payload(doc.payload);
        std::optional<long> chi;
        if (divisor->count("--chi"))
            chi = chi_smooth;
        else if (doc.payload.contains("chi_smooth"))
            chi = io_detail::require_long(doc.payload, "chi_smooth", "config");
        const Report report = cmd_divisor(cfg, chi);
        emit(report, format);
        return report.status == "fail" ? 2 : 0;
    }

    if (*kce) {
        KCEInput input;
        Walk cycle = parse_cycle_flag(cycle_spec);
        if (!kce_combined.empty()) {
            const InputDocument doc = load_document(kce_combined, "kce");
            const json& p = doc.payload;
            const SurfaceDatum s = surface_from_payload(
                io_detail::require(p, "surface", "kce"));
            const CurveConfiguration cfg = config_from_payload(
                io_detail::require(p, "config", "kce"));
            const json& bp = io_detail::require(p, "bundle", "kce");
            const ConfigLineBundle bundle = bundle_from_payload(bp);
            if (cycle.empty() && p.contains("cycle"))
                cycle = walk_from_json(p["cycle"], "kce.cycle");
            if (orientation == "forward" && p.contains("orientation") &&
                p["orientation"].is_string())
                orientation = p["orientation"].get<std::string>();
            input = kce_from_parts(s, cfg, bundle, bp, cycle);
        } else {
            if (kce_surface.empty() || kce_config.empty() ||
                kce_bundle.empty())
                throw ValidationError(
                    "kce: need --surface, --config and --bundle (or --input)");
            const InputDocument sdoc = load_document(kce_surface, "surface");
            const InputDocument cdoc = load_document(kce_config, "config");
            const InputDocument bdoc = load_document(kce_bundle, "bundle");
            input = kce_from_parts(surface_from_payload(sdoc.payload),
                                   config_from_payload(cdoc.payload),
                                   bundle_from_payload(bdoc.payload),
                                   bdoc.payload, cycle);
        }
        const Report report = cmd_kce(input, orientation == "reverse");
        emit(report, format);
        return 0;
    }

    if (*cusp) {
        CuspCycle cycle;
        const Report report = cmd_cusp(cusp_d, &cycle);
        if (!emit_config.empty()) {
            std::ofstream out(emit_config);
            if (!out)
                throw ValidationError("--emit-config: cannot write '" +
                                      emit_config + "'");
            out << dump_document("config", config_to_payload(cycle.config));
        }
        emit(report, format);
        return report.status == "fail" ? 2 : 0;
    }

    const Report report = cmd_selfcheck(seed);
    emit(report, format);
    return report.status == "fail" ? 2 : 0;
}

} // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const motivic::ComputationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const motivic::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
