#pragma once

#include "../error.hpp"
#include "instance.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace modgraph {

enum class CheckMode { strict, report };
enum class Verdict { pass, fail, not_applicable };

inline std::string_view to_string(CheckMode m) { return m == CheckMode::strict ? "strict" : "report"; }

inline std::string_view to_string(Verdict v)
{
    switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_applicable: return "not_applicable";
    }
    return "?";
}

/// Result of evaluating a claim: whether it holds, and the submodules (lattice
/// indices) or ideals that demonstrate a violation.
struct Outcome {
    bool holds = true;
    std::vector<std::size_t> submodules;
    std::vector<Ideal> ideals;
    std::string detail;
};

inline Outcome holds(std::string detail = {}) { return Outcome{true, {}, {}, std::move(detail)}; }

inline Outcome violated(std::vector<std::size_t> submodules, std::string detail)
{
    return Outcome{false, std::move(submodules), {}, std::move(detail)};
}

struct Check {
    std::string id;
    std::string name;
    CheckMode mode;
    std::function<bool(const Instance&)> applies;
    std::function<Outcome(const Instance&)> claim;
};

struct WitnessSubmodule {
    std::string label;
    std::size_t order = 0;
    std::vector<std::vector<Int>> generators;
};

struct CheckResult {
    std::string check;
    CheckMode mode = CheckMode::strict;
    std::string instance;
    Verdict verdict = Verdict::not_applicable;
    std::vector<WitnessSubmodule> submodules;
    std::vector<std::string> ideals;
    std::string detail;
    double millis = 0.0;

    bool is_failure() const { return verdict == Verdict::fail && mode == CheckMode::strict; }
    bool is_finding() const { return verdict == Verdict::fail && mode == CheckMode::report; }
};

namespace checks {

using Ix = std::size_t;

inline std::string set_text(const Instance& in, const std::vector<Ix>& xs)
{
    std::string s = "{";
    for (std::size_t i = 0; i < xs.size(); ++i)
        s += (i ? "," : "") + in.label(xs[i]);
    return s + "}";
}

inline std::size_t vertex_count(const Instance& in) { return in.lattice().nonzero_proper().size(); }

inline bool adjacent(const Instance& in, GraphKind kind, Ix a, Ix b)
{
    const auto& g = in.graph(kind);
    return g.adjacent(*g.find_submodule(a), *g.find_submodule(b));
}

inline bool is_universal(const Instance& in, GraphKind kind, Ix a)
{
    const auto& g = in.graph(kind);
    auto v = g.find_submodule(a);
    return v && g.degree(*v) + 1 == g.size();
}

inline std::vector<Ix> vertex_indices(const Instance& in, GraphKind kind, const std::vector<std::size_t>& vs)
{
    std::vector<Ix> out;
    for (auto v : vs)
        out.push_back(*in.graph(kind).vertex(v).submodule);
    return out;
}

/// Two minimal submodules whose sum is maximal with every nonzero submodule
/// strictly below the sum second.
inline bool two_minimal_clause(const Instance& in)
{
    const auto& L = in.lattice();
    if (in.minimal().size() != 2)
        return false;
    const Ix sum = L.join(in.minimal()[0], in.minimal()[1]);
    if (!L.flags(sum).maximal)
        return false;
    for (Ix k = 0; k < L.size(); ++k)
        if (k != sum && k != L.zero_index() && L.includes(sum, k) && !L.flags(k).second)
            return false;
    return true;
}

/// Two maximal submodules whose intersection is minimal with every proper
/// submodule strictly above it prime.
inline bool two_maximal_clause(const Instance& in)
{
    const auto& L = in.lattice();
    if (in.maximal().size() != 2)
        return false;
    const Ix meet = L.meet(in.maximal()[0], in.maximal()[1]);
    if (!L.flags(meet).minimal)
        return false;
    for (Ix k = 0; k < L.size(); ++k)
        if (k != meet && k != L.top_index() && L.includes(k, meet) && !L.flags(k).prime)
            return false;
    return true;
}

/// Shared shape of the SSI and PSS results; the PSS side is the lattice dual.
struct Side {
    GraphKind kind;
    const char* special;   // "minimal" / "maximal"
    const char* vertex_kind; // "second" / "prime"
    const std::vector<Ix>& (Instance::*specials)() const;
    const std::vector<Ix>& (Instance::*typed)() const;
    bool (*clause)(const Instance&);
    bool (*is_typed)(const SubmoduleFlags&);
    Ix (*combine)(const SubmoduleLattice&, Ix, Ix);
    const char* combine_text;
};

inline const Side ssi_side{GraphKind::ssi,
                           "minimal",
                           "second",
                           &Instance::minimal,
                           &Instance::seconds,
                           &two_minimal_clause,
                           [](const SubmoduleFlags& f) { return f.second; },
                           [](const SubmoduleLattice& L, Ix a, Ix b) { return L.meet(a, b); },
                           "∩"};

inline const Side pss_side{GraphKind::pss,
                           "maximal",
                           "prime",
                           &Instance::maximal,
                           &Instance::primes,
                           &two_maximal_clause,
                           [](const SubmoduleFlags& f) { return f.prime; },
                           [](const SubmoduleLattice& L, Ix a, Ix b) { return L.join(a, b); },
                           "+"};

// Universal vertex iff one special submodule or the two-special clause.
inline Outcome universal_vertex_claim(const Side& s, const Instance& in)
{
    const auto& m = in.metrics(s.kind);
    const auto& specials = (in.*s.specials)();
    const bool has_universal = !m.universal_vertices.empty();
    const bool condition = specials.size() == 1 || s.clause(in);
    if (has_universal == condition)
        return holds();
    std::vector<Ix> witness = vertex_indices(in, s.kind, m.universal_vertices);
    witness.insert(witness.end(), specials.begin(), specials.end());
    return violated(witness, std::string(has_universal ? "universal vertex " : "no universal vertex ") +
                                 set_text(in, vertex_indices(in, s.kind, m.universal_vertices)) + " but " +
                                 s.special + " submodules " + set_text(in, specials) +
                                 (condition ? " satisfy" : " do not satisfy") + " the characterization");
}

// The distinguished submodule D (sec(M) or rad(M)) is adjacent to every
// typed submodule, and is itself nonzero proper.
inline Outcome distinguished_adjacent_claim(const Side& s, const Instance& in, Ix d, const char* name)
{
    const auto& L = in.lattice();
    if (!L.is_nonzero_proper(d))
        return violated({d}, std::string(name) + " = " + in.label(d) + " is not a nonzero proper submodule");
    for (Ix t : (in.*s.typed)())
        if (t != d && L.is_nonzero_proper(t) && !adjacent(in, s.kind, d, t))
            return violated({d, t}, std::string(name) + " = " + in.label(d) + " is not adjacent to the " +
                                        s.vertex_kind + " submodule " + in.label(t));
    return holds();
}

// D is the only special submodule iff D is universal.
inline Outcome distinguished_universal_claim(const Side& s, const Instance& in, Ix d, const char* name)
{
    const auto& specials = (in.*s.specials)();
    const bool only = specials.size() == 1 && specials[0] == d;
    const bool universal = is_universal(in, s.kind, d);
    if (only == universal)
        return holds();
    std::vector<Ix> witness{d};
    witness.insert(witness.end(), specials.begin(), specials.end());
    return violated(witness, std::string(name) + " = " + in.label(d) + (universal ? " is" : " is not") +
                                 " a universal vertex, " + s.special + " submodules are " + set_text(in, specials));
}

// Isolated iff minimal and maximal.
inline Outcome isolated_claim(const Side& s, const Instance& in)
{
    const auto& L = in.lattice();
    const auto& g = in.graph(s.kind);
    for (std::size_t v = 0; v < g.size(); ++v) {
        const Ix n = *g.vertex(v).submodule;
        const bool isolated = g.degree(v) == 0;
        const bool both = L.flags(n).minimal && L.flags(n).maximal;
        if (isolated != both)
            return violated({n}, in.label(n) + (isolated ? " is isolated" : " is not isolated") +
                                     (both ? " but is minimal and maximal" : " but is not both minimal and maximal"));
    }
    return holds();
}

// Complete graph implies one special submodule, and every non-typed nonzero
// proper submodule is special of the opposite kind (maximal for SSI,
// minimal for PSS).
inline Outcome complete_forces_claim(const Side& s, const Instance& in)
{
    const auto& L = in.lattice();
    const auto& specials = (in.*s.specials)();
    if (specials.size() != 1)
        return violated(specials, std::string("complete graph but ") + s.special + " submodules are " +
                                      set_text(in, specials));
    for (Ix k : L.nonzero_proper()) {
        const auto& f = L.flags(k);
        const bool opposite = s.kind == GraphKind::ssi ? f.maximal : f.minimal;
        if (!s.is_typed(f) && !opposite)
            return violated({k}, in.label(k) + " is neither " + s.vertex_kind + " nor " +
                                     (s.kind == GraphKind::ssi ? "maximal" : "minimal"));
    }
    return holds();
}

inline Outcome first_missing_edge(const Side& s, const Instance& in, GraphKind kind)
{
    const auto& g = in.graph(kind);
    for (auto i = std::size_t{0}; i < g.size(); ++i)
        for (auto j = i + 1; j < g.size(); ++j)
            if (!g.adjacent(i, j)) {
                if (g.vertex(i).submodule) {
                    const Ix a = *g.vertex(i).submodule, b = *g.vertex(j).submodule;
                    const Ix c = s.combine(in.lattice(), a, b);
                    return violated({a, b}, in.label(a) + " and " + in.label(b) + " are not adjacent: " +
                                                in.label(a) + " " + s.combine_text + " " + in.label(b) + " = " +
                                                in.label(c) + " is not " + s.vertex_kind);
                }
                Outcome o = violated({}, g.vertex(i).label + " and " + g.vertex(j).label +
                                             " are not adjacent: their sum is not a prime ideal");
                o.ideals = {*g.vertex(i).ideal, *g.vertex(j).ideal};
                return o;
            }
    return holds();
}

// Adjacency transfer to PIS(R) through an ideal-valued map.
inline Outcome transfer_claim(const Side& s, const Instance& in, Ideal (*to_ideal)(const Instance&, Ix),
                              bool (*pair_filter)(const Instance&, Ix, Ix), const char* map_name)
{
    const auto& g = in.graph(s.kind);
    const auto& pis = in.graph(GraphKind::pis);
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = i + 1; j < g.size(); ++j) {
            const Ix a = *g.vertex(i).submodule, b = *g.vertex(j).submodule;
            if (!pair_filter(in, a, b))
                continue;
            const Ideal ia = to_ideal(in, a), ib = to_ideal(in, b);
            auto va = pis.find_ideal(ia), vb = pis.find_ideal(ib);
            const bool pis_adjacent = va && vb && *va != *vb && pis.adjacent(*va, *vb);
            if (g.adjacent(i, j) != pis_adjacent) {
                Outcome o = violated({a, b}, in.label(a) + " and " + in.label(b) +
                                                 (g.adjacent(i, j) ? " are" : " are not") + " adjacent in " +
                                                 std::string(to_string(s.kind)) + " but " + map_name + " values " +
                                                 ia.label() + ", " + ib.label() +
                                                 (pis_adjacent ? " are" : " are not") + " adjacent in PIS(R)");
                o.ideals = {ia, ib};
                return o;
            }
        }
    return holds();
}

// Connected iff M is not the direct sum of two special submodules; connected
// implies diameter at most 2.
inline Outcome connectivity_claim(const Side& s, const Instance& in)
{
    const auto& L = in.lattice();
    const auto& m = in.metrics(s.kind);
    const auto& specials = (in.*s.specials)();
    std::vector<Ix> split;
    for (std::size_t i = 0; i < specials.size() && split.empty(); ++i)
        for (std::size_t j = i + 1; j < specials.size(); ++j)
            if (L.join(specials[i], specials[j]) == L.top_index() &&
                L.meet(specials[i], specials[j]) == L.zero_index()) {
                split = {specials[i], specials[j]};
                break;
            }
    if (m.is_connected == !split.empty())
        return violated(split, std::string(m.is_connected ? "connected" : "disconnected") + " but M " +
                                   (split.empty() ? "is not" : "is") + " a direct sum of two " + s.special +
                                   " submodules " + set_text(in, split));
    if (m.is_connected && m.diameter > ExtNat(2))
        return violated({}, "connected with diameter " + m.diameter.to_string());
    return holds();
}

// Adjacent non-comparable pair forces girth 3; otherwise every edge is a
// comparable pair whose lower (SSI) / upper (PSS) end is typed.
inline Outcome triangle_claim(const Side& s, const Instance& in)
{
    const auto& L = in.lattice();
    const auto& g = in.graph(s.kind);
    const auto girth = in.metrics(s.kind).girth;
    for (auto [i, j] : g.edges()) {
        const Ix a = *g.vertex(i).submodule, b = *g.vertex(j).submodule;
        const bool comparable = L.includes(a, b) || L.includes(b, a);
        if (!comparable && girth != ExtNat(3))
            return violated({a, b}, "non-comparable adjacent pair " + in.label(a) + ", " + in.label(b) +
                                        " but girth is " + girth.to_string());
        if (girth != ExtNat(3) && !s.is_typed(L.flags(a)) && !s.is_typed(L.flags(b)))
            return violated({a, b}, "girth " + girth.to_string() + " and edge " + in.label(a) + "-" + in.label(b) +
                                        " has no " + s.vertex_kind + " end");
    }
    return holds();
}

inline Outcome girth_count_claim(const Side& s, const Instance& in)
{
    const auto girth = in.metrics(s.kind).girth;
    const auto count = (in.*s.typed)().size();
    if (count >= girth.value() / 2)
        return holds();
    return violated((in.*s.typed)(), "girth " + girth.to_string() + " but only " + std::to_string(count) + " " +
                                         s.vertex_kind + " submodules");
}

inline Outcome girth_bound_claim(const Side& s, const Instance& in)
{
    const auto girth = in.metrics(s.kind).girth;
    const auto count = (in.*s.typed)().size();
    if (girth.value() <= 2 * count)
        return holds();
    return violated((in.*s.typed)(), "girth " + girth.to_string() + " exceeds twice the " +
                                         std::to_string(count) + " " + s.vertex_kind + " submodules");
}

inline Outcome complete_claim(const Side& s, const Instance& in, GraphKind kind)
{
    return in.metrics(kind).is_complete ? holds() : first_missing_edge(s, in, kind);
}

// The special submodules form a minimal dominating set; gamma <= their count;
// gamma = 1 iff one special or the two-special clause; two specials failing
// the clause give gamma = 2.
inline Outcome domination_claim(const Side& s, const Instance& in)
{
    const auto& g = in.graph(s.kind);
    const auto& m = in.metrics(s.kind);
    const auto& specials = (in.*s.specials)();
    std::vector<std::size_t> as_vertices;
    for (Ix x : specials)
        as_vertices.push_back(*g.find_submodule(x));
    if (!dominates(g, as_vertices))
        return violated(specials, std::string(s.special) + " submodules " + set_text(in, specials) +
                                      " do not dominate");
    for (std::size_t drop = 0; drop < as_vertices.size(); ++drop) {
        auto rest = as_vertices;
        rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(drop));
        if (dominates(g, rest))
            return violated(specials, std::string(s.special) + " submodules " + set_text(in, specials) +
                                          " still dominate without " + in.label(specials[drop]));
    }
    const std::size_t gamma = m.domination_number;
    if (gamma > specials.size())
        return violated(specials, "domination number " + std::to_string(gamma) + " exceeds " +
                                      std::to_string(specials.size()));
    const bool clause = s.clause(in);
    const bool condition = specials.size() == 1 || clause;
    if ((gamma == 1) != condition)
        return violated(specials, "domination number " + std::to_string(gamma) + " but " + s.special +
                                      " submodules " + set_text(in, specials) +
                                      (condition ? " satisfy" : " do not satisfy") + " the characterization");
    if (specials.size() == 2 && !clause && gamma != 2)
        return violated(specials, "two " + std::string(s.special) + " submodules failing the clause but domination number " +
                                      std::to_string(gamma));
    return holds();
}

inline bool at_least(const Instance& in, std::size_t n) { return vertex_count(in) >= n; }

inline Ideal annihilator_at(const Instance& in, Ix i) { return annihilator(in.lattice().at(i)); }
inline Ideal colon_at(const Instance& in, Ix i) { return colon_ideal(in.lattice().at(i), in.module()); }

inline bool galois_equality(const Instance& in, Ix a, Ix b)
{
    return annihilator_at(in, in.lattice().meet(a, b)) == annihilator_at(in, a) + annihilator_at(in, b);
}

inline bool colons_distinct_nontrivial(const Instance& in, Ix a, Ix b)
{
    const Ideal ia = colon_at(in, a), ib = colon_at(in, b);
    return ia.is_nontrivial() && ib.is_nontrivial() && !(ia == ib);
}

// Minimal pairs of a connected PSS: the literal reading says every pair sums
// to M, the reading the argument supports says none does.
inline Outcome minimal_sum_readings(const Instance& in)
{
    const auto& L = in.lattice();
    const auto& mins = in.minimal();
    if (mins.size() < 2)
        return holds("vacuous: fewer than two minimal submodules; both readings hold");
    bool all_equal = true, none_equal = true;
    std::vector<Ix> counter;
    for (std::size_t i = 0; i < mins.size(); ++i)
        for (std::size_t j = i + 1; j < mins.size(); ++j) {
            const bool is_top = L.join(mins[i], mins[j]) == L.top_index();
            if (!is_top && all_equal) {
                all_equal = false;
                counter = {mins[i], mins[j]};
            }
            if (is_top)
                none_equal = false;
        }
    std::string detail = std::string("literal reading (sum = M): ") + (all_equal ? "holds" : "fails") +
                         "; proof reading (sum != M): " + (none_equal ? "holds" : "fails");
    if (all_equal)
        return holds(detail);
    return violated(counter, detail + "; " + in.label(counter[0]) + " + " + in.label(counter[1]) + " = " +
                                 in.label(L.join(counter[0], counter[1])));
}

inline std::vector<Check> build_registry()
{
    const Side& S = ssi_side;
    const Side& P = pss_side;
    auto conn = [](GraphKind k) {
        return [k](const Instance& in) { return at_least(in, 2) && in.metrics(k).is_connected; };
    };
    auto complete = [](GraphKind k) {
        return [k](const Instance& in) { return at_least(in, 2) && in.metrics(k).is_complete; };
    };
    auto finite_girth = [](GraphKind k) {
        return [k](const Instance& in) { return in.metrics(k).girth.is_finite(); };
    };
    auto nonempty = [](const Instance& in) { return at_least(in, 1); };
    auto pair = [](const Instance& in) { return at_least(in, 2); };

    std::vector<Check> r;
    r.push_back({"C1", "universal vertex of SSI(M) characterized by minimal submodules", CheckMode::strict, nonempty,
                 [&S](const Instance& in) { return universal_vertex_claim(S, in); }});
    r.push_back({"C2", "sec(M) adjacent to every second submodule when M is not coreduced", CheckMode::strict,
                 [](const Instance& in) { return !in.properties().coreduced; },
                 [&S](const Instance& in) {
                     return distinguished_adjacent_claim(S, in, in.second_socle_index(), "sec(M)");
                 }});
    r.push_back({"C3", "sec(M) is the only minimal submodule iff it is universal in SSI(M)", CheckMode::strict,
                 [](const Instance& in) { return !in.properties().coreduced; },
                 [&S](const Instance& in) {
                     return distinguished_universal_claim(S, in, in.second_socle_index(), "sec(M)");
                 }});
    r.push_back({"C4", "isolated vertices of SSI(M) are exactly the minimal-and-maximal submodules",
                 CheckMode::strict, nonempty, [&S](const Instance& in) { return isolated_claim(S, in); }});
    r.push_back({"C5", "complete SSI(M) forces one minimal submodule and non-second submodules maximal",
                 CheckMode::strict, complete(GraphKind::ssi),
                 [&S](const Instance& in) { return complete_forces_claim(S, in); }});
    r.push_back({"C6", "one minimal submodule makes SSI(M) complete", CheckMode::report,
                 [](const Instance& in) { return at_least(in, 2) && in.minimal().size() == 1; },
                 [&S](const Instance& in) { return complete_claim(S, in, GraphKind::ssi); }});
    r.push_back({"C7", "comultiplication: SSI(M) adjacency transfers to PIS(R) via annihilators", CheckMode::strict,
                 [](const Instance& in) { return at_least(in, 2) && in.properties().comultiplication; },
                 [&S](const Instance& in) {
                     return transfer_claim(S, in, &annihilator_at, &galois_equality, "annihilator");
                 }});
    r.push_back({"C8", "SSI(M) connected iff M is not a sum of two minimal submodules; diameter <= 2",
                 CheckMode::strict, pair, [&S](const Instance& in) { return connectivity_claim(S, in); }});
    r.push_back({"C9", "connected SSI(M): maximal submodules meet nontrivially", CheckMode::strict,
                 conn(GraphKind::ssi), [](const Instance& in) {
                     const auto& L = in.lattice();
                     const auto& maxs = in.maximal();
                     for (std::size_t i = 0; i < maxs.size(); ++i)
                         for (std::size_t j = i + 1; j < maxs.size(); ++j)
                             if (L.meet(maxs[i], maxs[j]) == L.zero_index())
                                 return violated({maxs[i], maxs[j]}, "maximal submodules " + in.label(maxs[i]) +
                                                                         " and " + in.label(maxs[j]) +
                                                                         " intersect in 0");
                     return holds();
                 }});
    r.push_back({"C10", "adjacent non-comparable pair gives girth(SSI(M)) = 3", CheckMode::strict,
                 [](const Instance& in) { return in.graph(GraphKind::ssi).edge_count() > 0; },
                 [&S](const Instance& in) { return triangle_claim(S, in); }});
    r.push_back({"C11", "girth(SSI(M)) = n gives at least floor(n/2) second submodules", CheckMode::strict,
                 finite_girth(GraphKind::ssi), [&S](const Instance& in) { return girth_count_claim(S, in); }});
    r.push_back({"C12", "k second submodules bound girth(SSI(M)) by 2k", CheckMode::strict,
                 finite_girth(GraphKind::ssi), [&S](const Instance& in) { return girth_bound_claim(S, in); }});
    r.push_back({"C13", "uniform with all nonzero submodules second makes SSI(M) complete", CheckMode::strict,
                 [](const Instance& in) {
                     const auto& L = in.lattice();
                     for (std::size_t i = 0; i < L.size(); ++i)
                         if (i != L.zero_index() && !L.flags(i).second)
                             return false;
                     return at_least(in, 2) && in.properties().uniform;
                 },
                 [&S](const Instance& in) { return complete_claim(S, in, GraphKind::ssi); }});
    r.push_back({"C14", "strong comultiplication with complete SSI(M) makes PSS(M)~ complete", CheckMode::strict,
                 [](const Instance& in) {
                     return at_least(in, 2) && in.properties().strong_comultiplication &&
                            in.metrics(GraphKind::ssi).is_complete;
                 },
                 [&S](const Instance& in) { return complete_claim(S, in, GraphKind::pss_tilde); }});
    r.push_back({"C15", "minimal submodules form a minimal dominating set of SSI(M)", CheckMode::strict, nonempty,
                 [&S](const Instance& in) { return domination_claim(S, in); }});

    r.push_back({"D1", "universal vertex of PSS(M) characterized by maximal submodules", CheckMode::strict, nonempty,
                 [&P](const Instance& in) { return universal_vertex_claim(P, in); }});
    r.push_back({"D2", "rad(M) adjacent to every prime submodule when M is not reduced", CheckMode::strict,
                 [](const Instance& in) { return !in.properties().reduced; },
                 [&P](const Instance& in) {
                     return distinguished_adjacent_claim(P, in, in.prime_radical_index(), "rad(M)");
                 }});
    r.push_back({"D3", "rad(M) is the only maximal submodule iff it is universal in PSS(M)", CheckMode::strict,
                 [](const Instance& in) { return !in.properties().reduced; },
                 [&P](const Instance& in) {
                     return distinguished_universal_claim(P, in, in.prime_radical_index(), "rad(M)");
                 }});
    r.push_back({"D4", "isolated vertices of PSS(M) are exactly the minimal-and-maximal submodules",
                 CheckMode::strict, nonempty, [&P](const Instance& in) { return isolated_claim(P, in); }});
    r.push_back({"D5", "complete PSS(M) forces one maximal submodule and non-prime submodules minimal",
                 CheckMode::strict, complete(GraphKind::pss),
                 [&P](const Instance& in) { return complete_forces_claim(P, in); }});
    r.push_back({"D6", "one maximal submodule makes PSS(M) complete", CheckMode::report,
                 [](const Instance& in) { return at_least(in, 2) && in.maximal().size() == 1; },
                 [&P](const Instance& in) { return complete_claim(P, in, GraphKind::pss); }});
    r.push_back({"D7", "multiplication: PSS(M) adjacency transfers to PIS(R) via colon ideals", CheckMode::strict,
                 [](const Instance& in) { return at_least(in, 2) && in.properties().multiplication; },
                 [&P](const Instance& in) {
                     return transfer_claim(P, in, &colon_at, &colons_distinct_nontrivial, "colon ideal");
                 }});
    r.push_back({"D8", "PSS(M) connected iff M is not a sum of two maximal submodules; diameter <= 2",
                 CheckMode::strict, pair, [&P](const Instance& in) { return connectivity_claim(P, in); }});
    r.push_back({"D9", "connected PSS(M): sums of two minimal submodules (both readings)", CheckMode::report,
                 conn(GraphKind::pss), [](const Instance& in) { return minimal_sum_readings(in); }});
    r.push_back({"D10", "adjacent non-comparable pair gives girth(PSS(M)) = 3", CheckMode::strict,
                 [](const Instance& in) { return in.graph(GraphKind::pss).edge_count() > 0; },
                 [&P](const Instance& in) { return triangle_claim(P, in); }});
    r.push_back({"D11", "girth(PSS(M)) = n gives at least floor(n/2) prime submodules", CheckMode::strict,
                 finite_girth(GraphKind::pss), [&P](const Instance& in) { return girth_count_claim(P, in); }});
    r.push_back({"D12", "k prime submodules bound girth(PSS(M)) by 2k", CheckMode::strict,
                 finite_girth(GraphKind::pss), [&P](const Instance& in) { return girth_bound_claim(P, in); }});
    r.push_back({"D13", "hollow with all proper submodules prime makes PSS(M) complete", CheckMode::strict,
                 [](const Instance& in) {
                     const auto& L = in.lattice();
                     for (std::size_t i = 0; i < L.size(); ++i)
                         if (i != L.top_index() && !L.flags(i).prime)
                             return false;
                     return at_least(in, 2) && in.properties().hollow;
                 },
                 [&P](const Instance& in) { return complete_claim(P, in, GraphKind::pss); }});
    r.push_back({"D14", "faithful multiplication module with complete PSS(M) makes SSI(M)~ complete",
                 CheckMode::strict,
                 [](const Instance& in) {
                     return at_least(in, 2) && in.properties().faithful && in.properties().multiplication &&
                            in.metrics(GraphKind::pss).is_complete;
                 },
                 [&P](const Instance& in) { return complete_claim(P, in, GraphKind::ssi_tilde); }});
    r.push_back({"D15", "maximal submodules form a minimal dominating set of PSS(M)", CheckMode::strict, nonempty,
                 [&P](const Instance& in) { return domination_claim(P, in); }});
    return r;
}

} // namespace checks

/// The registry: C1-C15 for SSI(M), D1-D15 for PSS(M), in that order.
inline const std::vector<Check>& list_checks()
{
    static const std::vector<Check> registry = checks::build_registry();
    return registry;
}

inline const Check& find_check(std::string_view id)
{
    for (const auto& c : list_checks())
        if (c.id == id)
            return c;
    throw UsageError("unknown check id '" + std::string(id) + "'");
}

inline CheckResult run_check(const Check& check, const Instance& instance)
{
    const auto start = std::chrono::steady_clock::now();
    CheckResult result;
    result.check = check.id;
    result.mode = check.mode;
    result.instance = instance.descriptor();
    if (!check.applies(instance)) {
        result.verdict = Verdict::not_applicable;
    } else {
        Outcome o = check.claim(instance);
        result.verdict = o.holds ? Verdict::pass : Verdict::fail;
        result.detail = std::move(o.detail);
        for (std::size_t i : o.submodules) {
            const Submodule& n = instance.lattice().at(i);
            WitnessSubmodule w{n.label(), n.order(), {}};
            for (Element g : n.generators())
                w.generators.push_back(n.module().digits(g));
            result.submodules.push_back(std::move(w));
        }
        for (const Ideal& ideal : o.ideals)
            result.ideals.push_back(ideal.label());
    }
    result.millis =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return result;
}

inline CheckResult run_check(std::string_view id, const Instance& instance)
{
    return run_check(find_check(id), instance);
}

} // namespace modgraph
