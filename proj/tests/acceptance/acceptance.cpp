// Acceptance gate: prints one PASS/FAIL line per criterion and exits nonzero
// when any criterion fails.

#include "support.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

using namespace modgraph;

namespace {

constexpr const char* default_family = "cyclic:2..60,product:ab<=64,vector:2^3,vector:3^3";

struct Criterion {
    Criterion(int n, std::string t) : number(n), title(std::move(t)) {}

    int number;
    std::string title;
    bool passed = true;
    std::vector<std::string> notes;

    void require(bool ok, const std::string& why)
    {
        if (!ok) {
            passed = false;
            if (notes.size() < 8)
                notes.push_back(why);
        }
    }
};

double seconds_since(std::chrono::steady_clock::time_point start)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

std::set<std::pair<std::string, std::string>> edge_set(const SimpleGraph& g)
{
    std::set<std::pair<std::string, std::string>> out;
    for (auto [i, j] : g.edges()) {
        auto a = g.vertex(i).label, b = g.vertex(j).label;
        out.insert(a < b ? std::pair{a, b} : std::pair{b, a});
    }
    return out;
}

std::set<std::pair<std::string, std::string>> pairs(std::vector<std::pair<std::string, std::string>> items)
{
    std::set<std::pair<std::string, std::string>> out;
    for (auto [a, b] : items)
        out.insert(a < b ? std::pair{a, b} : std::pair{b, a});
    return out;
}

std::vector<std::unique_ptr<Instance>> family_instances()
{
    std::vector<std::unique_ptr<Instance>> out;
    for (const auto& m : parse_family(default_family))
        out.push_back(std::make_unique<Instance>(m));
    return out;
}

Criterion lattice_correctness()
{
    Criterion c{1, "lattice equals closed-subset oracle for |M| <= 64"};
    const auto start = std::chrono::steady_clock::now();
    std::size_t compared = 0;
    for (const auto& m : parse_family(default_family)) {
        if (m.order() > 64)
            continue;
        auto lattice = enumerate_submodules(m);
        std::vector<oracle::Set> got;
        for (const auto& n : lattice.all())
            got.push_back(support::as_set(n));
        std::sort(got.begin(), got.end());
        c.require(got == support::naive(m).all_submodules(), "mismatch on " + m.descriptor());
        ++compared;
    }
    const double elapsed = seconds_since(start);
    c.require(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
    c.notes.push_back(std::to_string(compared) + " modules, " + std::to_string(elapsed) + " s");
    return c;
}

Criterion exact_graphs_z12()
{
    Criterion c{2, "exact SSI/PSS graphs and metrics on Z12"};
    Instance in(FiniteModule::regular(Ring(12)));
    const auto& ssi = in.graph(GraphKind::ssi);
    const auto& pss = in.graph(GraphKind::pss);
    c.require(edge_set(ssi) == pairs({{"2M", "3M"}, {"2M", "4M"}, {"2M", "6M"}, {"3M", "6M"}}), "SSI edges");
    c.require(edge_set(pss) == pairs({{"2M", "4M"}, {"2M", "6M"}, {"3M", "6M"}, {"4M", "6M"}}), "PSS edges");
    for (auto [kind, centre] : {std::pair{GraphKind::ssi, "2M"}, std::pair{GraphKind::pss, "6M"}}) {
        const auto& m = in.metrics(kind);
        const auto& g = in.graph(kind);
        const std::string name(to_string(kind));
        c.require(m.is_connected, name + " connected");
        c.require(m.diameter == ExtNat(2), name + " diameter " + m.diameter.to_string());
        c.require(m.girth == ExtNat(3), name + " girth " + m.girth.to_string());
        c.require(m.domination_number == 1, name + " domination");
        c.require(support::vertex_labels(g, m.universal_vertices) == std::vector<std::string>{centre},
                  name + " universal vertex");
    }
    return c;
}

Criterion isolated_z6()
{
    Criterion c{3, "SSI(Z6) and PSS(Z6) are empty graphs on two minimal-and-maximal vertices"};
    Instance in(FiniteModule::regular(Ring(6)));
    for (GraphKind kind : {GraphKind::ssi, GraphKind::pss}) {
        const auto& g = in.graph(kind);
        const auto& m = in.metrics(kind);
        const std::string name(to_string(kind));
        c.require(g.size() == 2 && m.is_empty_graph, name + " is not empty on 2 vertices");
        c.require(!m.is_connected, name + " should be disconnected");
        c.require(m.isolated_vertices.size() == 2, name + " isolated count");
        for (const auto& v : g.vertices()) {
            const auto& f = in.lattice().flags(*v.submodule);
            c.require(f.minimal && f.maximal, name + " " + v.label + " not minimal and maximal");
        }
    }
    for (const char* id : {"C4", "D4", "C8", "D8"})
        c.require(run_check(id, in).verdict == Verdict::pass, std::string(id) + " does not pass on Z6");
    return c;
}

Criterion star_analog()
{
    Criterion c{4, "SSI(Z_{p^k}) is a star centred at the unique minimal submodule"};
    for (Int p : {2u, 3u, 5u})
        for (int k = 3; k <= 6; ++k) {
            Int n = 1;
            for (int i = 0; i < k; ++i)
                n *= p;
            auto lattice = enumerate_submodules(FiniteModule::regular(Ring(n)), SizeGuard{n, 20000});
            auto g = build_graph(GraphKind::ssi, lattice);
            auto m = graph_metrics(g);
            const auto mins = lattice.minimal_indices();
            const std::string name = "Z" + std::to_string(n);
            c.require(mins.size() == 1, name + " minimal count");
            c.require(m.is_star, name + " is not a star");
            if (!mins.empty()) {
                auto centre = g.find_submodule(mins.front());
                c.require(centre && std::find(m.star_centers.begin(), m.star_centers.end(), *centre) !=
                                        m.star_centers.end(),
                          name + " centre is not the minimal submodule");
            }
        }
    return c;
}

Criterion strict_suite()
{
    Criterion c{5, "strict checks pass with zero failures over the default family"};
    const auto start = std::chrono::steady_clock::now();
    auto report = run_suite(default_family, select_checks("strict"), {}, "strict");
    const double elapsed = seconds_since(start);
    std::map<std::string, std::vector<std::string>> failures;
    for (const auto& r : report.results)
        if (r.is_failure())
            failures[r.check].push_back(r.instance);
    for (const auto& [id, where] : failures) {
        std::string list;
        for (std::size_t i = 0; i < where.size() && i < 4; ++i)
            list += (i ? ", " : "") + where[i];
        c.require(false, id + " fails on " + std::to_string(where.size()) + " instances (" + list +
                             (where.size() > 4 ? ", ..." : "") + ")");
    }
    c.require(elapsed < 60.0, "took " + std::to_string(elapsed) + " s");
    std::ostringstream summary;
    summary << "pass=" << report.summary.pass << " fail=" << report.summary.fail
            << " not_applicable=" << report.summary.not_applicable << ", " << elapsed << " s";
    c.notes.push_back(summary.str());
    return c;
}

Criterion findings(const std::vector<std::unique_ptr<Instance>>& family)
{
    Criterion c{6, "Z16 findings for C6/D6 replay; D9 records both readings"};
    Instance z16(FiniteModule::regular(Ring(16)));
    auto naive = support::naive(z16.module());
    for (auto [id, expected] : {std::pair{"C6", std::vector<std::string>{"2M", "4M"}},
                                std::pair{"D6", std::vector<std::string>{"4M", "8M"}}}) {
        auto r = run_check(id, z16);
        c.require(r.verdict == Verdict::fail && r.is_finding(), std::string(id) + " did not record a finding");
        std::vector<std::string> labels;
        std::vector<oracle::Set> sets;
        for (const auto& w : r.submodules) {
            labels.push_back(w.label);
            oracle::Set gens;
            for (const auto& g : w.generators)
                gens.insert(oracle::Tuple(g.begin(), g.end()));
            sets.push_back(naive.closure(gens));
        }
        c.require(labels == expected, std::string(id) + " witness labels");
        if (sets.size() == 2) {
            const bool replayed = std::string(id) == "C6"
                                      ? !naive.is_second(oracle::NaiveModule::meet(sets[0], sets[1]))
                                      : !naive.is_prime(naive.join(sets[0], sets[1]));
            c.require(replayed, std::string(id) + " witness does not replay");
        }
    }
    std::size_t literal = 0, proof = 0, recorded = 0;
    for (const auto& in : family) {
        const bool connected = in->graph(GraphKind::pss).size() >= 2 && in->metrics(GraphKind::pss).is_connected;
        auto r = run_check("D9", *in);
        if (!connected) {
            c.require(r.verdict == Verdict::not_applicable, "D9 applied to " + r.instance);
            continue;
        }
        ++recorded;
        const bool has_both = r.detail.find("literal reading") != std::string::npos &&
                              r.detail.find("proof reading") != std::string::npos;
        c.require(has_both || r.detail.rfind("vacuous", 0) == 0, "D9 detail missing on " + r.instance);
        literal += r.detail.find("(sum = M): holds") != std::string::npos;
        proof += r.detail.find("(sum != M): holds") != std::string::npos;
    }
    c.notes.push_back("D9 on " + std::to_string(recorded) + " connected-PSS instances: literal holds on " +
                      std::to_string(literal) + ", proof reading holds on " + std::to_string(proof) +
                      " (others vacuous)");
    return c;
}

Criterion transfers(const std::vector<std::unique_ptr<Instance>>& family)
{
    Criterion c{7, "duality transfers hold on every applicable instance"};
    std::map<std::string, std::size_t> applied;
    for (const auto& in : family) {
        if (in->module().is_regular()) {
            const auto& p = in->properties();
            c.require(p.strong_comultiplication && p.faithful && p.multiplication,
                      in->descriptor() + " lacks an expected property");
        }
        for (const char* id : {"C7", "D7", "C14", "D14"}) {
            auto r = run_check(id, *in);
            if (r.verdict == Verdict::not_applicable)
                continue;
            ++applied[id];
            c.require(r.verdict == Verdict::pass, std::string(id) + " fails on " + r.instance + ": " + r.detail);
        }
    }
    std::string counts;
    for (const auto& [id, n] : applied)
        counts += (counts.empty() ? "" : ", ") + id + " on " + std::to_string(n);
    c.notes.push_back("applicable: " + counts);
    return c;
}

Criterion metric_oracles(const std::vector<std::unique_ptr<Instance>>& family)
{
    Criterion c{8, "diameter/girth/domination match exhaustive oracles"};
    auto size_of = [](const ExtNat& x) { return x.is_finite() ? x.value() : oracle::infinite; };
    std::size_t small = 0, medium = 0;
    for (const auto& in : family)
        for (GraphKind kind : all_graph_kinds) {
            const auto& g = in->graph(kind);
            const auto& m = in->metrics(kind);
            const auto adj = support::as_adj(g);
            const std::string where = in->descriptor() + " " + std::string(to_string(kind));
            if (g.size() <= 10) {
                ++small;
                c.require(size_of(m.diameter) == oracle::diameter(adj), "diameter on " + where);
                c.require(size_of(m.girth) == oracle::girth(adj), "girth on " + where);
            }
            if (g.size() <= 15) {
                ++medium;
                c.require(m.domination_number == oracle::domination(adj), "domination on " + where);
            }
        }
    c.notes.push_back(std::to_string(small) + " graphs for diameter/girth, " + std::to_string(medium) +
                      " for domination");
    return c;
}

std::string capture(const std::string& args)
{
    const std::string cmd = std::string(MODGRAPH_CLI_PATH) + " " + args + " 2>/dev/null";
    std::string out;
    if (FILE* pipe = popen(cmd.c_str(), "r")) {
        std::array<char, 4096> buf{};
        std::size_t got;
        while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
            out.append(buf.data(), got);
        pclose(pipe);
    }
    return out;
}

Criterion determinism()
{
    Criterion c{9, "repeated graph and check runs are byte-identical"};
    for (const char* args : {"graph --kind ssi --module Z12 --format json", "graph --kind pss --module Z2xZ8",
                             "graph --kind ssi_tilde --module Z60 --format json",
                             "check --family 'cyclic:2..30,product:ab<=16' --checks all"}) {
        const auto a = capture(args), b = capture(args);
        c.require(!a.empty() && a == b, std::string("differs: ") + args);
    }
    return c;
}

} // namespace

int main()
{
    const auto family = family_instances();
    std::vector<Criterion> results;
    results.push_back(lattice_correctness());
    results.push_back(exact_graphs_z12());
    results.push_back(isolated_z6());
    results.push_back(star_analog());
    results.push_back(strict_suite());
    results.push_back(findings(family));
    results.push_back(transfers(family));
    results.push_back(metric_oracles(family));
    results.push_back(determinism());

    int failed = 0;
    for (const auto& c : results) {
        std::cout << (c.passed ? "PASS" : "FAIL") << " criterion " << c.number << ": " << c.title << "\n";
        for (const auto& note : c.notes)
            std::cout << "    " << note << "\n";
        failed += !c.passed;
    }
    std::cout << (results.size() - static_cast<std::size_t>(failed)) << "/" << results.size()
              << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
