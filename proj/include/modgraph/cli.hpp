#pragma once

#include "error.hpp"
#include "export.hpp"
#include "graph.hpp"
#include "harness/suite.hpp"
#include "lattice.hpp"
#include "module.hpp"
#include "predicates.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace modgraph::cli {

enum ExitCode : int { ok = 0, suite_failed = 1, usage_error = 2, guard_exceeded = 3 };

struct CliConfig {
    std::string command;
    std::string module;
    std::optional<std::string> ring;
    std::string kind = "ssi";
    std::string format = "dot";
    std::optional<std::string> out;
    std::string family;
    std::string checks = "strict";
    bool strict = false;
    bool findings_fail = false;
    bool timing = false;
    SizeGuard guard{};
};

namespace detail {

inline const char* mark(bool b) { return b ? "yes" : "no"; }

inline void emit(const CliConfig& cfg, const std::string& text, std::ostream& out)
{
    if (!cfg.out) {
        out << text;
        return;
    }
    std::ofstream file(*cfg.out, std::ios::binary);
    if (!file)
        throw UsageError("cannot write '" + *cfg.out + "'");
    file << text;
}

inline SubmoduleLattice lattice_for(const CliConfig& cfg)
{
    auto [ring, module] = parse_descriptor(cfg.module, cfg.ring);
    return enumerate_submodules(module, cfg.guard);
}

inline int run_enumerate(const CliConfig& cfg, std::ostream& out)
{
    const auto lattice = lattice_for(cfg);
    std::ostringstream text;
    const auto& m = lattice.module();
    text << "# " << m.descriptor() << " over " << m.ring().descriptor() << ": " << lattice.size()
         << " submodules\n";
    for (const auto& n : lattice.all())
        text << n.label() << "\t" << n.order() << "\t" << n.elements_text() << "\n";
    emit(cfg, text.str(), out);
    return ok;
}

inline int run_classify(const CliConfig& cfg, std::ostream& out)
{
    const auto lattice = lattice_for(cfg);
    const auto& m = lattice.module();
    std::vector<std::string> labels;
    for (auto i : lattice.nonzero_proper())
        labels.push_back(lattice.at(i).label());
    std::size_t width = 9;
    for (const auto& l : labels)
        width = std::max(width, l.size());

    std::ostringstream text;
    text << "# " << m.descriptor() << " over " << m.ring().descriptor() << "\n";
    text << std::left << std::setw(static_cast<int>(width)) << "submodule"
         << "  order  prime  second  minimal  maximal  large  small  colon  annihilator\n";
    std::size_t row = 0;
    for (auto i : lattice.nonzero_proper()) {
        const auto& n = lattice.at(i);
        const auto& f = lattice.flags(i);
        text << std::left << std::setw(static_cast<int>(width)) << labels[row++] << "  " << std::setw(5)
             << n.order() << "  " << std::setw(5) << mark(f.prime) << "  " << std::setw(6) << mark(f.second)
             << "  " << std::setw(7) << mark(f.minimal) << "  " << std::setw(7) << mark(f.maximal) << "  "
             << std::setw(5) << mark(f.large) << "  " << std::setw(5) << mark(f.small) << "  " << std::setw(5)
             << colon_ideal(n, m).label() << "  " << annihilator(n).label() << "\n";
    }
    const auto p = module_properties(lattice);
    text << "coreduced=" << mark(p.coreduced) << " reduced=" << mark(p.reduced)
         << " multiplication=" << mark(p.multiplication) << " comultiplication=" << mark(p.comultiplication)
         << " dac=" << mark(p.dac) << " strong_comultiplication=" << mark(p.strong_comultiplication)
         << " faithful=" << mark(p.faithful) << " hollow=" << mark(p.hollow) << " uniform=" << mark(p.uniform)
         << "\n";
    text << "sec(M)=" << second_socle(whole_module(m), lattice).label() << " rad(M)=" << prime_radical(lattice).label()
         << "\n";
    emit(cfg, text.str(), out);
    return ok;
}

inline int run_graph(const CliConfig& cfg, std::ostream& out)
{
    const auto kind = parse_graph_kind(cfg.kind);
    const auto format = parse_export_format(cfg.format);
    auto [ring, module] = parse_descriptor(cfg.module, cfg.ring);
    const bool on_ring = kind == GraphKind::pis || kind == GraphKind::sii;
    if (on_ring && !module.is_regular())
        throw ModuleMismatchError(std::string(to_string(kind)) + " is defined on the ring itself; pass --module " +
                                  ring.descriptor() + " or omit --ring");
    const auto lattice = enumerate_submodules(module, cfg.guard);
    emit(cfg, export_graph(build_graph(kind, lattice), format), out);
    return ok;
}

inline int run_check_command(const CliConfig& cfg, std::ostream& out, std::ostream& err)
{
    SuiteOptions options;
    options.guard = cfg.guard;
    options.findings_fail = cfg.findings_fail;
    const auto ids = select_checks(cfg.checks);
    const auto report = run_suite(cfg.family, ids, options, cfg.checks);
    emit(cfg, report_json(report, cfg.timing).dump(2) + "\n", out);
    const auto& s = report.summary;
    err << "pass=" << s.pass << " fail=" << s.fail << " findings=" << s.findings
        << " not_applicable=" << s.not_applicable << "\n";
    return cfg.strict && !report.passed() ? suite_failed : ok;
}

} // namespace detail

/// Parses `args` (without the program name) and runs one command. Output goes
/// to `out` (or --out), diagnostics to `err`.
inline int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CliConfig cfg;
    CLI::App app{"Submodule lattices and their intersection/sum graphs over Z_n", "modgraph"};
    app.require_subcommand(1, 1);

    std::size_t max_order = cfg.guard.max_order;
    std::size_t max_lattice = cfg.guard.max_lattice;
    auto add_guard = [&](CLI::App* sub) {
        sub->add_option("--max-order", max_order, "Largest module order accepted")->capture_default_str();
        sub->add_option("--max-lattice", max_lattice, "Largest lattice size accepted")->capture_default_str();
    };
    auto add_module = [&](CLI::App* sub) {
        sub->add_option("--module", cfg.module, "Module descriptor, e.g. Z12 or Z2xZ4")->required();
        sub->add_option("--ring", cfg.ring, "Ring descriptor Z<n>; defaults to Z_lcm of the factors");
        sub->add_option("--out", cfg.out, "Write output to this file instead of stdout");
        add_guard(sub);
    };

    auto* enumerate = app.add_subcommand("enumerate", "List every submodule");
    add_module(enumerate);
    auto* classify = app.add_subcommand("classify", "Flags, colon ideal and annihilator per submodule");
    add_module(classify);
    auto* graph = app.add_subcommand("graph", "Export one of the graphs as DOT or JSON");
    add_module(graph);
    graph->add_option("--kind", cfg.kind, "ssi, pss, pis, sii, pss_tilde or ssi_tilde")->capture_default_str();
    graph->add_option("--format", cfg.format, "dot or json")->capture_default_str();
    auto* check = app.add_subcommand("check", "Run checks over a module family and print a JSON report");
    check->add_option("--family", cfg.family, "Family, e.g. cyclic:2..30,product:ab<=16")->required();
    check->add_option("--checks", cfg.checks, "strict, report, all, or ids like C6,D6")->capture_default_str();
    check->add_flag("--strict", cfg.strict, "Exit 1 when any strict check fails");
    check->add_flag("--findings-fail", cfg.findings_fail, "Count report-mode counterexamples as failures");
    check->add_flag("--timing", cfg.timing, "Record per-check milliseconds in the report");
    check->add_option("--out", cfg.out, "Write the report to this file instead of stdout");
    add_guard(check);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? ok : usage_error;
    }
    cfg.guard.max_order = max_order;
    cfg.guard.max_lattice = max_lattice;

    try {
        if (enumerate->parsed())
            return detail::run_enumerate(cfg, out);
        if (classify->parsed())
            return detail::run_classify(cfg, out);
        if (graph->parsed())
            return detail::run_graph(cfg, out);
        return detail::run_check_command(cfg, out, err);
    } catch (const SizeGuardError& e) {
        err << "error: " << e.what() << "\n";
        return guard_exceeded;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return usage_error;
    }
}

} // namespace modgraph::cli
