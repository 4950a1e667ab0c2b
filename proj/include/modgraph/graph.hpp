#pragma once

#include "error.hpp"
#include "lattice.hpp"
#include "module.hpp"
#include "predicates.hpp"
#include "ring.hpp"
#include "submodule.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace modgraph {

enum class GraphKind { ssi, pss, pis, sii, pss_tilde, ssi_tilde };

inline constexpr GraphKind all_graph_kinds[] = {GraphKind::ssi, GraphKind::pss, GraphKind::pis,
                                                GraphKind::sii, GraphKind::pss_tilde, GraphKind::ssi_tilde};

inline std::string_view to_string(GraphKind kind)
{
    switch (kind) {
    case GraphKind::ssi: return "SSI";
    case GraphKind::pss: return "PSS";
    case GraphKind::pis: return "PIS";
    case GraphKind::sii: return "SII";
    case GraphKind::pss_tilde: return "PSS_TILDE";
    case GraphKind::ssi_tilde: return "SSI_TILDE";
    }
    return "?";
}

/// Accepts "ssi", "PSS", "pss-tilde", "pss_tilde", ...
inline GraphKind parse_graph_kind(std::string_view text)
{
    std::string norm;
    for (char c : text)
        norm += c == '-' ? '_' : static_cast<char>(c >= 'a' && c <= 'z' ? c - 'a' + 'A' : c);
    for (GraphKind k : all_graph_kinds)
        if (to_string(k) == norm)
            return k;
    throw UsageError("unknown graph kind '" + std::string(text) + "'");
}

/// A labeled vertex: either a lattice member or an ideal of the ring.
struct Vertex {
    std::string label;
    std::string elements_text;
    std::size_t order = 0;
    std::vector<std::vector<Int>> generators;
    std::optional<std::size_t> submodule;
    std::optional<Ideal> ideal;
};

/// Undirected simple graph with a symmetric, irreflexive adjacency matrix.
class SimpleGraph {
public:
    SimpleGraph(GraphKind kind, FiniteModule module, std::vector<Vertex> vertices,
                const std::vector<std::pair<std::size_t, std::size_t>>& edges)
        : kind_(kind), module_(std::move(module)), vertices_(std::move(vertices)),
          adjacency_(vertices_.size() * vertices_.size(), 0)
    {
        const std::size_t n = vertices_.size();
        for (auto [i, j] : edges) {
            if (i >= n || j >= n || i == j)
                throw UsageError("invalid edge " + std::to_string(i) + "-" + std::to_string(j));
            adjacency_[i * n + j] = 1;
            adjacency_[j * n + i] = 1;
        }
    }

    GraphKind kind() const { return kind_; }
    const Ring& ring() const { return module_.ring(); }
    const FiniteModule& module() const { return module_; }
    std::size_t size() const { return vertices_.size(); }
    const std::vector<Vertex>& vertices() const { return vertices_; }
    const Vertex& vertex(std::size_t i) const { return vertices_.at(i); }

    bool adjacent(std::size_t i, std::size_t j) const { return adjacency_[i * size() + j] != 0; }

    std::size_t degree(std::size_t i) const
    {
        std::size_t d = 0;
        for (std::size_t j = 0; j < size(); ++j)
            d += adjacent(i, j);
        return d;
    }

    std::vector<std::size_t> neighbors(std::size_t i) const
    {
        std::vector<std::size_t> out;
        for (std::size_t j = 0; j < size(); ++j)
            if (adjacent(i, j))
                out.push_back(j);
        return out;
    }

    /// Edges (i, j) with i < j, in ascending order.
    std::vector<std::pair<std::size_t, std::size_t>> edges() const
    {
        std::vector<std::pair<std::size_t, std::size_t>> out;
        for (std::size_t i = 0; i < size(); ++i)
            for (std::size_t j = i + 1; j < size(); ++j)
                if (adjacent(i, j))
                    out.emplace_back(i, j);
        return out;
    }

    std::size_t edge_count() const { return edges().size(); }

    std::optional<std::size_t> find_submodule(std::size_t lattice_index) const
    {
        for (std::size_t i = 0; i < size(); ++i)
            if (vertices_[i].submodule == lattice_index)
                return i;
        return std::nullopt;
    }

    std::optional<std::size_t> find_ideal(const Ideal& ideal) const
    {
        for (std::size_t i = 0; i < size(); ++i)
            if (vertices_[i].ideal == ideal)
                return i;
        return std::nullopt;
    }

    std::optional<std::size_t> find_label(std::string_view label) const
    {
        for (std::size_t i = 0; i < size(); ++i)
            if (vertices_[i].label == label)
                return i;
        return std::nullopt;
    }

private:
    GraphKind kind_;
    FiniteModule module_;
    std::vector<Vertex> vertices_;
    std::vector<std::uint8_t> adjacency_;
};

namespace detail {

inline Vertex submodule_vertex(const SubmoduleLattice& lattice, std::size_t index, bool as_ideal)
{
    const Submodule& n = lattice.at(index);
    Vertex v;
    v.order = n.order();
    v.elements_text = n.elements_text();
    v.submodule = index;
    for (Element g : n.generators())
        v.generators.push_back(n.module().digits(g));
    if (as_ideal) {
        v.ideal = Ideal(n.module().ring(), n.generators().front());
        v.label = v.ideal->label();
    } else {
        v.label = n.label();
    }
    return v;
}

inline Vertex ideal_vertex(const Ideal& ideal)
{
    Vertex v;
    v.ideal = ideal;
    v.label = ideal.label();
    v.order = ideal.order();
    v.generators = {{ideal.generator()}};
    v.elements_text = "{";
    auto elements = ideal.elements();
    for (std::size_t i = 0; i < elements.size(); ++i)
        v.elements_text += (i ? "," : "") + std::to_string(elements[i]);
    v.elements_text += "}";
    return v;
}

inline SimpleGraph lattice_graph(GraphKind kind, const SubmoduleLattice& lattice, bool by_intersection,
                                 bool as_ideals)
{
    const auto members = lattice.nonzero_proper();
    std::vector<Vertex> vertices;
    for (std::size_t index : members)
        vertices.push_back(submodule_vertex(lattice, index, as_ideals));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < members.size(); ++a)
        for (std::size_t b = a + 1; b < members.size(); ++b) {
            bool linked = by_intersection ? lattice.flags(lattice.meet(members[a], members[b])).second
                                          : lattice.flags(lattice.join(members[a], members[b])).prime;
            if (linked)
                edges.emplace_back(a, b);
        }
    return SimpleGraph(kind, lattice.module(), std::move(vertices), edges);
}

/// Distinct nontrivial ideals among `ideals`, joined when their sum is prime.
inline SimpleGraph ideal_sum_graph(GraphKind kind, const FiniteModule& module, std::vector<Ideal> ideals)
{
    std::sort(ideals.begin(), ideals.end());
    ideals.erase(std::unique(ideals.begin(), ideals.end()), ideals.end());
    std::erase_if(ideals, [](const Ideal& i) { return !i.is_nontrivial(); });
    std::vector<Vertex> vertices;
    for (const Ideal& i : ideals)
        vertices.push_back(ideal_vertex(i));
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t a = 0; a < ideals.size(); ++a)
        for (std::size_t b = a + 1; b < ideals.size(); ++b)
            if ((ideals[a] + ideals[b]).is_prime())
                edges.emplace_back(a, b);
    return SimpleGraph(kind, module, std::move(vertices), edges);
}

} // namespace detail

/// Builds one of the six graphs from an enumerated lattice.
///
/// SSI/PSS: nonzero proper submodules, joined when the intersection is second
/// (resp. the sum is prime). PIS/SII: the same on ideals, so the lattice must
/// be that of the ring over itself. PSS_TILDE/SSI_TILDE: the distinct
/// nontrivial ideals (N :_R M) (resp. Ann_R(N)), joined when their sum is a
/// prime ideal.
inline SimpleGraph build_graph(GraphKind kind, const SubmoduleLattice& lattice)
{
    const FiniteModule& module = lattice.module();
    switch (kind) {
    case GraphKind::ssi: return detail::lattice_graph(kind, lattice, true, false);
    case GraphKind::pss: return detail::lattice_graph(kind, lattice, false, false);
    case GraphKind::pis:
    case GraphKind::sii:
        if (!module.is_regular())
            throw ModuleMismatchError(std::string(to_string(kind)) + " needs the ring acting on itself, got " +
                                      module.descriptor() + " over " + module.ring().descriptor());
        return detail::lattice_graph(kind, lattice, kind == GraphKind::sii, true);
    case GraphKind::pss_tilde:
    case GraphKind::ssi_tilde: {
        std::vector<Ideal> ideals;
        for (const auto& n : lattice.all())
            ideals.push_back(kind == GraphKind::pss_tilde ? colon_ideal(n, module) : annihilator(n));
        return detail::ideal_sum_graph(kind, module, std::move(ideals));
    }
    }
    throw UsageError("unknown graph kind");
}

} // namespace modgraph
