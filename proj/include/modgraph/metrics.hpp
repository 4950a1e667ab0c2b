#pragma once

#include "graph.hpp"

#include <algorithm>
#include <bit>
#include <compare>
#include <cstdint>
#include <limits>
#include <optional>
#include <queue>
#include <string>
#include <vector>

namespace modgraph {

/// A natural number or infinity.
class ExtNat {
public:
    constexpr explicit ExtNat(std::size_t value) : value_(value) {}
    static constexpr ExtNat infinity() { return ExtNat(); }

    constexpr bool is_infinite() const { return !value_.has_value(); }
    constexpr bool is_finite() const { return value_.has_value(); }
    std::size_t value() const { return value_.value(); }

    std::string to_string() const { return value_ ? std::to_string(*value_) : "inf"; }

    friend constexpr bool operator==(const ExtNat&, const ExtNat&) = default;
    friend constexpr std::strong_ordering operator<=>(const ExtNat& a, const ExtNat& b)
    {
        if (a.is_infinite() || b.is_infinite())
            return a.is_infinite() <=> b.is_infinite();
        return *a.value_ <=> *b.value_;
    }

private:
    constexpr ExtNat() = default;
    std::optional<std::size_t> value_;
};

struct GraphMetrics {
    bool is_complete = true;
    bool is_empty_graph = true;
    bool is_connected = true;
    ExtNat diameter{0};
    ExtNat girth = ExtNat::infinity();
    std::size_t domination_number = 0;
    std::vector<std::size_t> dominating_set;
    std::vector<std::size_t> universal_vertices;
    std::vector<std::size_t> isolated_vertices;
    bool is_star = false;
    /// Vertices that can serve as the star's center (two for K_2).
    std::vector<std::size_t> star_centers;
};

/// Breadth-first distances from `root`; unreachable vertices get SIZE_MAX.
inline std::vector<std::size_t> bfs_distances(const SimpleGraph& g, std::size_t root)
{
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    std::vector<std::size_t> dist(g.size(), unseen);
    std::queue<std::size_t> todo;
    dist[root] = 0;
    todo.push(root);
    while (!todo.empty()) {
        std::size_t u = todo.front();
        todo.pop();
        for (std::size_t v = 0; v < g.size(); ++v)
            if (g.adjacent(u, v) && dist[v] == unseen) {
                dist[v] = dist[u] + 1;
                todo.push(v);
            }
    }
    return dist;
}

/// Shortest cycle length. A BFS from every root sees each cycle through the
/// root's BFS tree; the minimum over roots is exact.
inline ExtNat girth_of(const SimpleGraph& g)
{
    constexpr auto unseen = std::numeric_limits<std::size_t>::max();
    std::size_t best = unseen;
    const std::size_t n = g.size();
    for (std::size_t root = 0; root < n; ++root) {
        std::vector<std::size_t> dist(n, unseen), parent(n, unseen);
        std::queue<std::size_t> todo;
        dist[root] = 0;
        todo.push(root);
        while (!todo.empty()) {
            std::size_t u = todo.front();
            todo.pop();
            for (std::size_t v = 0; v < n; ++v) {
                if (!g.adjacent(u, v))
                    continue;
                if (dist[v] == unseen) {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    todo.push(v);
                } else if (parent[u] != v) {
                    best = std::min(best, dist[u] + dist[v] + 1);
                }
            }
        }
    }
    return best == unseen ? ExtNat::infinity() : ExtNat(best);
}

namespace detail {

class VertexSet {
public:
    explicit VertexSet(std::size_t n) : words_((n + 63) / 64, 0) {}
    void set(std::size_t i) { words_[i >> 6] |= std::uint64_t{1} << (i & 63); }
    bool test(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
    void merge(const VertexSet& o)
    {
        for (std::size_t i = 0; i < words_.size(); ++i)
            words_[i] |= o.words_[i];
    }
    std::size_t count() const
    {
        std::size_t c = 0;
        for (auto w : words_)
            c += static_cast<std::size_t>(std::popcount(w));
        return c;
    }
    std::size_t count_outside(const VertexSet& o) const
    {
        std::size_t c = 0;
        for (std::size_t i = 0; i < words_.size(); ++i)
            c += static_cast<std::size_t>(std::popcount(words_[i] & ~o.words_[i]));
        return c;
    }

private:
    std::vector<std::uint64_t> words_;
};

class DominationSearch {
public:
    explicit DominationSearch(const SimpleGraph& g) : n_(g.size())
    {
        for (std::size_t v = 0; v < n_; ++v) {
            VertexSet s(n_);
            s.set(v);
            std::size_t last = v;
            for (std::size_t u : g.neighbors(v)) {
                s.set(u);
                last = std::max(last, u);
            }
            max_cover_ = std::max(max_cover_, s.count());
            closed_.push_back(std::move(s));
            last_neighbor_.push_back(last);
        }
    }

    /// Greedy cover: repeatedly take the vertex dominating the most new
    /// vertices, lowest index on ties.
    std::vector<std::size_t> greedy() const
    {
        VertexSet covered(n_);
        std::vector<std::size_t> chosen;
        while (covered.count() < n_) {
            std::size_t best = 0, gain = 0;
            for (std::size_t v = 0; v < n_; ++v)
                if (std::size_t c = closed_[v].count_outside(covered); c > gain) {
                    gain = c;
                    best = v;
                }
            chosen.push_back(best);
            covered.merge(closed_[best]);
        }
        return chosen;
    }

    /// Lexicographically first dominating set of exactly `k` vertices.
    std::optional<std::vector<std::size_t>> find(std::size_t k) const
    {
        std::vector<std::size_t> picked;
        if (extend(0, k, VertexSet(n_), picked))
            return picked;
        return std::nullopt;
    }

private:
    bool extend(std::size_t start, std::size_t k, const VertexSet& covered, std::vector<std::size_t>& picked) const
    {
        const std::size_t done = covered.count();
        if (done == n_)
            return true;
        const std::size_t slots = k - picked.size();
        if (slots == 0 || slots * max_cover_ < n_ - done)
            return false;
        std::size_t first_open = 0;
        while (covered.test(first_open))
            ++first_open;
        // Later picks are >= c, so once c passes the last closed neighbor of
        // the first undominated vertex it can no longer be covered.
        for (std::size_t c = start; c < n_ && c <= last_neighbor_[first_open]; ++c) {
            VertexSet next = covered;
            next.merge(closed_[c]);
            picked.push_back(c);
            if (extend(c + 1, k, next, picked))
                return true;
            picked.pop_back();
        }
        return false;
    }

    std::size_t n_;
    std::size_t max_cover_ = 0;
    std::vector<VertexSet> closed_;
    std::vector<std::size_t> last_neighbor_;
};

} // namespace detail

/// Minimum dominating set, searched by increasing size up to the greedy bound.
/// Ties are broken lexicographically by vertex index.
inline std::vector<std::size_t> minimum_dominating_set(const SimpleGraph& g)
{
    if (g.size() == 0)
        return {};
    detail::DominationSearch search(g);
    const std::size_t bound = search.greedy().size();
    for (std::size_t k = 1; k <= bound; ++k)
        if (auto found = search.find(k))
            return *found;
    return search.greedy();
}

inline bool dominates(const SimpleGraph& g, const std::vector<std::size_t>& set)
{
    if (set.empty())
        return false;
    std::vector<char> hit(g.size(), 0);
    for (std::size_t v : set) {
        hit[v] = 1;
        for (std::size_t u : g.neighbors(v))
            hit[u] = 1;
    }
    return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

/// Connectivity, diameter and girth by breadth-first search; exact domination
/// number; universal/isolated vertices; star shape. Graphs with fewer than two
/// vertices count as connected with diameter 0.
inline GraphMetrics graph_metrics(const SimpleGraph& g)
{
    GraphMetrics m;
    const std::size_t n = g.size();
    const std::size_t edges = g.edge_count();
    m.is_complete = edges == n * (n == 0 ? 0 : n - 1) / 2;
    m.is_empty_graph = edges == 0;

    std::size_t diameter = 0;
    for (std::size_t root = 0; root < n && m.is_connected; ++root)
        for (std::size_t d : bfs_distances(g, root)) {
            if (d == std::numeric_limits<std::size_t>::max()) {
                m.is_connected = false;
                break;
            }
            diameter = std::max(diameter, d);
        }
    m.diameter = m.is_connected ? ExtNat(diameter) : ExtNat::infinity();
    m.girth = girth_of(g);

    m.dominating_set = minimum_dominating_set(g);
    m.domination_number = m.dominating_set.size();

    for (std::size_t v = 0; v < n; ++v) {
        std::size_t d = g.degree(v);
        if (d + 1 == n)
            m.universal_vertices.push_back(v);
        if (d == 0)
            m.isolated_vertices.push_back(v);
    }
    if (n >= 2 && edges == n - 1) {
        m.star_centers = m.universal_vertices;
        m.is_star = !m.star_centers.empty();
    }
    return m;
}

} // namespace modgraph
