// Command-line driver: computes Nielsen sets, braid orbits, cusp/genus data
// and mod-p reduction reports for 4-point G-covers of the line, and prints
// the per-group summary table.
//
// Exit codes: 0 on success, 2 when an internal consistency invariant fails,
// 1 for usage or input errors.

#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "hurwitz/errors.hpp"
#include "hurwitz/reports.hpp"

namespace {

using namespace hurwitz;

RunConfig parse_common(const std::string& group_spec, const std::string& classes_spec,
                       const std::string& primes_spec, const std::string& format,
                       const std::string& cache_dir, int workers, int fusion_depth) {
    RunConfig cfg;
    auto colon = group_spec.find(':');
    check_pre(colon != std::string::npos, "group spec must look like psl2:11, dihedral:10 or perm:file");
    cfg.group_kind = group_spec.substr(0, colon);
    std::string arg = group_spec.substr(colon + 1);
    if (cfg.group_kind == "perm") {
        cfg.perm_file = arg;
    } else {
        try {
            cfg.group_param = std::stoi(arg);
        } catch (const std::exception&) {
            throw precondition_error("bad group parameter: " + arg);
        }
    }
    if (!classes_spec.empty()) {
        std::istringstream is(classes_spec);
        std::string label;
        int i = 0;
        while (std::getline(is, label, ',')) {
            check_pre(i < 4, "exactly four class labels expected");
            cfg.classes[static_cast<size_t>(i++)] = label;
        }
        check_pre(i == 4, "exactly four class labels expected");
    }
    if (!primes_spec.empty() && primes_spec != "auto") {
        std::istringstream is(primes_spec);
        std::string tok;
        while (std::getline(is, tok, ',')) cfg.primes.push_back(std::stoi(tok));
    }
    cfg.format = format;
    cfg.cache_dir = cache_dir;
    cfg.workers = workers;
    cfg.fusion_depth = fusion_depth;
    return cfg;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Hurwitz-space components, cusps and mod-p reduction for 4-point covers"};
    app.require_subcommand(1);

    std::string group_spec, classes_spec, primes_spec = "auto";
    std::string format = "pretty", cache_dir;
    int workers = 1, fusion_depth = 8;

    app.add_option("--group", group_spec, "group spec: psl2:<ell> | dihedral:<n> | perm:<file>");
    app.add_option("--classes", classes_spec, "four class labels, e.g. 11A,11A,11B,11B");
    app.add_option("--primes", primes_spec, "auto or a comma list, e.g. 3,5");
    app.add_option("--format", format, "output format: json | csv | pretty")
        ->check(CLI::IsMember({"json", "csv", "pretty"}));
    app.add_option("--cache-dir", cache_dir, "directory for Nielsen-set caching");
    app.add_option("--workers", workers, "worker threads for the enumeration")
        ->check(CLI::PositiveNumber);
    app.add_option("--fusion-depth", fusion_depth, "braid word length cap for component fusion")
        ->check(CLI::PositiveNumber);

    auto* cmd_group = app.add_subcommand("group", "group order and conjugacy classes");
    auto* cmd_nielsen = app.add_subcommand("nielsen", "enumerate the Nielsen set");
    auto* cmd_components = app.add_subcommand("components", "braid orbit decomposition");
    auto* cmd_cusps = app.add_subcommand("cusps", "cusps, ramification and genus per component");
    auto* cmd_reduce = app.add_subcommand("reduce", "mod-p reduction reports");
    auto* cmd_table = app.add_subcommand("table", "full summary table");

    CLI11_PARSE(app, argc, argv);

    try {
        braid_convention_self_test();
        check_pre(!group_spec.empty(), "--group is required");
        RunConfig cfg = parse_common(group_spec, classes_spec, primes_spec, format, cache_dir,
                                     workers, fusion_depth);

        if (cmd_group->parsed()) {
            GroupContext ctx = build_group_from_config(cfg);
            std::cout << emit_group_doc(ctx);
            return 0;
        }

        check_pre(!classes_spec.empty(), "--classes is required for this subcommand");
        Pipeline pipeline(cfg);
        if (cmd_nielsen->parsed()) {
            std::cout << emit_nielsen_doc(pipeline.context(), pipeline.nielsen());
        } else if (cmd_components->parsed()) {
            std::cout << emit_components_doc(pipeline.context(), pipeline.nielsen(),
                                             pipeline.components(), pipeline.fusion());
        } else if (cmd_cusps->parsed()) {
            std::cout << emit_cusps_doc(pipeline.context(), pipeline.component_reports());
        } else if (cmd_reduce->parsed()) {
            std::cout << emit_reduce_doc(pipeline);
        } else if (cmd_table->parsed()) {
            std::cout << emit_report(pipeline.table(), cfg.format);
        }
        return 0;
    } catch (const internal_error& e) {
        std::cerr << "internal inconsistency: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
