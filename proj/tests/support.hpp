#pragma once

#include "modgraph/modgraph.hpp"
#include "oracles.hpp"

#include <optional>
#include <string>
#include <vector>

namespace support {

inline modgraph::FiniteModule module_of(const std::string& text, std::optional<std::string> ring = std::nullopt)
{
    return modgraph::parse_descriptor(text, ring ? std::optional<std::string_view>(*ring) : std::nullopt).second;
}

inline oracle::NaiveModule naive(const modgraph::FiniteModule& m)
{
    return {m.ring().modulus(), std::vector<unsigned>(m.factors().begin(), m.factors().end())};
}

inline oracle::Set as_set(const modgraph::Submodule& n)
{
    oracle::Set s;
    for (auto e : n.elements()) {
        auto d = n.module().digits(e);
        s.insert(oracle::Tuple(d.begin(), d.end()));
    }
    return s;
}

inline oracle::Adj as_adj(const modgraph::SimpleGraph& g)
{
    oracle::Adj a{g.size(), std::vector<std::vector<bool>>(g.size(), std::vector<bool>(g.size(), false))};
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g.size(); ++j)
            a.a[i][j] = g.adjacent(i, j);
    return a;
}

/// Edge list rendered with vertex labels, e.g. {"2M-3M", ...}.
inline std::vector<std::string> edge_labels(const modgraph::SimpleGraph& g)
{
    std::vector<std::string> out;
    for (auto [i, j] : g.edges())
        out.push_back(g.vertex(i).label + "-" + g.vertex(j).label);
    return out;
}

inline std::vector<std::string> vertex_labels(const modgraph::SimpleGraph& g, const std::vector<std::size_t>& vs)
{
    std::vector<std::string> out;
    for (auto v : vs)
        out.push_back(g.vertex(v).label);
    return out;
}

/// Module families used across tests: every module of order at most 64 that
/// the default acceptance family contains.
inline const char* small_family = "cyclic:2..60,product:ab<=64,vector:2^3,vector:3^3";

} // namespace support
