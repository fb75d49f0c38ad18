#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "error.hpp"
#include "vertex_set.hpp"

namespace factorlab {

using Edge = std::pair<int, int>;

class GraphBuilder;

/**
 * Undirected simple graph on vertices 0..n-1 with one adjacency bitset per
 * vertex. Immutable once built; all edits go through GraphBuilder or the
 * free functions below, which return new graphs.
 */
class Graph {
public:
    Graph() = default;

    int order() const noexcept { return n_; }
    std::int64_t size() const noexcept { return m_; }

    const VertexSet& neighbors(int v) const { return rows_.at(static_cast<std::size_t>(v)); }

    bool adjacent(int u, int v) const noexcept
    {
        return u >= 0 && u < n_ && rows_[static_cast<std::size_t>(u)].contains(v);
    }

    int degree(int v) const { return neighbors(v).size(); }

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const
    {
        std::vector<Edge> out;
        out.reserve(static_cast<std::size_t>(m_));
        for (int u = 0; u < n_; ++u)
            rows_[static_cast<std::size_t>(u)].for_each([&](int v) {
                if (u < v)
                    out.emplace_back(u, v);
            });
        return out;
    }

    std::vector<int> degrees() const
    {
        std::vector<int> d(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            d[static_cast<std::size_t>(v)] = degree(v);
        return d;
    }

    bool operator==(const Graph&) const = default;

private:
    friend class GraphBuilder;

    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<VertexSet> rows_;
};

/// Single-threaded mutable staging area for a Graph.
class GraphBuilder {
public:
    explicit GraphBuilder(int n)
    {
        if (n < 0 || n > max_vertices)
            throw Error(ErrorCode::TooLarge, "vertex count " + std::to_string(n) + " outside 0.." +
                                                 std::to_string(max_vertices));
        g_.n_ = n;
        g_.rows_.assign(static_cast<std::size_t>(n), VertexSet(n));
    }

    explicit GraphBuilder(const Graph& g) : g_(g) {}

    int order() const noexcept { return g_.n_; }

    /// Adds uv; returns false if it was already present. Loops are rejected.
    bool add_edge(int u, int v)
    {
        check_pair(u, v);
        if (g_.rows_[static_cast<std::size_t>(u)].contains(v))
            return false;
        g_.rows_[static_cast<std::size_t>(u)].insert(v);
        g_.rows_[static_cast<std::size_t>(v)].insert(u);
        ++g_.m_;
        return true;
    }

    bool remove_edge(int u, int v)
    {
        check_pair(u, v);
        if (!g_.rows_[static_cast<std::size_t>(u)].contains(v))
            return false;
        g_.rows_[static_cast<std::size_t>(u)].erase(v);
        g_.rows_[static_cast<std::size_t>(v)].erase(u);
        --g_.m_;
        return true;
    }

    bool has_edge(int u, int v) const { return g_.adjacent(u, v); }

    /// Makes every pair inside `block` adjacent.
    void add_clique(const VertexSet& block)
    {
        const auto vs = block.members();
        for (std::size_t i = 0; i < vs.size(); ++i)
            for (std::size_t j = i + 1; j < vs.size(); ++j)
                add_edge(vs[i], vs[j]);
    }

    /// Makes every vertex of `x` adjacent to every vertex of `y` (x, y disjoint).
    void add_biclique(const VertexSet& x, const VertexSet& y)
    {
        x.for_each([&](int u) { y.for_each([&](int v) { add_edge(u, v); }); });
    }

    Graph build() const { return g_; }

private:
    void check_pair(int u, int v) const
    {
        if (u < 0 || v < 0 || u >= g_.n_ || v >= g_.n_)
            throw Error(ErrorCode::BadParams, "edge endpoint outside vertex range");
        if (u == v)
            throw Error(ErrorCode::BadParams, "self-loop at vertex " + std::to_string(u));
    }

    Graph g_;
};

inline Graph edgeless(int n)
{
    return GraphBuilder(n).build();
}

inline Graph complete(int n)
{
    if (n <= 0)
        throw Error(ErrorCode::EmptyGraph, "complete graph needs at least one vertex");
    GraphBuilder b(n);
    b.add_clique(VertexSet::full(n));
    return b.build();
}

inline Graph cycle(int n)
{
    if (n < 3)
        throw Error(ErrorCode::BadParams, "cycle needs at least three vertices");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v)
        b.add_edge(v, (v + 1) % n);
    return b.build();
}

inline Graph path(int n)
{
    GraphBuilder b(n);
    for (int v = 0; v + 1 < n; ++v)
        b.add_edge(v, v + 1);
    return b.build();
}

/// K_{1,n-1} with center 0.
inline Graph star(int n)
{
    if (n <= 0)
        throw Error(ErrorCode::EmptyGraph, "star needs at least one vertex");
    GraphBuilder b(n);
    for (int v = 1; v < n; ++v)
        b.add_edge(0, v);
    return b.build();
}

inline Graph from_edges(int n, std::span<const Edge> edges)
{
    GraphBuilder b(n);
    for (auto [u, v] : edges)
        b.add_edge(u, v);
    return b.build();
}

/// Labels of `second` are shifted by order(first).
inline Graph disjoint_union(const Graph& first, const Graph& second)
{
    const int n1 = first.order();
    GraphBuilder b(n1 + second.order());
    for (auto [u, v] : first.edges())
        b.add_edge(u, v);
    for (auto [u, v] : second.edges())
        b.add_edge(u + n1, v + n1);
    return b.build();
}

inline Graph join(const Graph& first, const Graph& second)
{
    const int n1 = first.order();
    const int n = n1 + second.order();
    GraphBuilder b(disjoint_union(first, second));
    b.add_biclique(VertexSet::range(n, 0, n1), VertexSet::range(n, n1, n));
    return b.build();
}

inline Graph complement(const Graph& g)
{
    const int n = g.order();
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v))
                b.add_edge(u, v);
    return b.build();
}

/// Subgraph induced on `keep`; `labels[i]` is the original label of new vertex i.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> labels;
};

inline InducedSubgraph induced(const Graph& g, const VertexSet& keep)
{
    InducedSubgraph out;
    out.labels = keep.members();
    std::vector<int> index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.labels.size(); ++i)
        index[static_cast<std::size_t>(out.labels[i])] = static_cast<int>(i);

    GraphBuilder b(static_cast<int>(out.labels.size()));
    for (std::size_t i = 0; i < out.labels.size(); ++i) {
        const int u = out.labels[i];
        g.neighbors(u).for_each([&](int v) {
            const int j = index[static_cast<std::size_t>(v)];
            if (j > static_cast<int>(i))
                b.add_edge(static_cast<int>(i), j);
        });
    }
    out.graph = b.build();
    return out;
}

/// G - S.
inline InducedSubgraph delete_set(const Graph& g, const VertexSet& removed)
{
    if (!removed.is_subset_of(VertexSet::full(g.order())))
        throw Error(ErrorCode::BadParams, "deleted set is not a subset of V(G)");
    return induced(g, VertexSet::full(g.order()) - removed);
}

/// Vertices reachable from `start` without leaving `within`.
inline VertexSet reach(const Graph& g, int start, const VertexSet& within)
{
    VertexSet seen(g.order());
    seen.insert(start);
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next(g.order());
        frontier.for_each([&](int u) { next |= g.neighbors(u); });
        next &= within;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen;
}

/// Connected components of G[within], ordered by smallest member.
inline std::vector<VertexSet> components(const Graph& g, const VertexSet& within)
{
    std::vector<VertexSet> parts;
    VertexSet left = within;
    for (int v = left.first(); v >= 0; v = left.first()) {
        parts.push_back(reach(g, v, within));
        left -= parts.back();
    }
    return parts;
}

inline std::vector<VertexSet> components(const Graph& g)
{
    return components(g, VertexSet::full(g.order()));
}

inline bool is_connected(const Graph& g)
{
    if (g.order() == 0)
        return false;
    return reach(g, 0, VertexSet::full(g.order())).size() == g.order();
}

/// |[S,T]|_G, the number of edges with one end in each set.
inline std::int64_t edges_between(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    if (s.intersects(t))
        throw Error(ErrorCode::NonDisjoint, "edges_between needs disjoint vertex sets");
    std::int64_t count = 0;
    s.for_each([&](int u) { count += (g.neighbors(u) & t).size(); });
    return count;
}

/// Number of edges inside `block`.
inline std::int64_t edges_within(const Graph& g, const VertexSet& block)
{
    std::int64_t twice = 0;
    block.for_each([&](int u) { twice += (g.neighbors(u) & block).size(); });
    return twice / 2;
}

inline int degree(const Graph& g, int v) { return g.degree(v); }

inline int min_degree(const Graph& g)
{
    if (g.order() == 0)
        throw Error(ErrorCode::EmptyGraph, "minimum degree of the empty graph");
    int best = g.order();
    for (int v = 0; v < g.order(); ++v)
        best = std::min(best, g.degree(v));
    return best;
}

inline int max_degree(const Graph& g)
{
    int best = 0;
    for (int v = 0; v < g.order(); ++v)
        best = std::max(best, g.degree(v));
    return best;
}

/// New graph where vertex v becomes perm[v].
inline Graph relabel(const Graph& g, std::span<const int> perm)
{
    if (static_cast<int>(perm.size()) != g.order())
        throw Error(ErrorCode::BadParams, "permutation size does not match graph order");
    GraphBuilder b(g.order());
    for (auto [u, v] : g.edges())
        b.add_edge(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]);
    return b.build();
}

/// Full scan of the structural invariants: symmetry, no loops, cached edge count.
inline bool is_well_formed(const Graph& g)
{
    std::int64_t degree_sum = 0;
    for (int u = 0; u < g.order(); ++u) {
        if (g.adjacent(u, u))
            return false;
        bool symmetric = true;
        g.neighbors(u).for_each([&](int v) { symmetric = symmetric && g.adjacent(v, u); });
        if (!symmetric)
            return false;
        degree_sum += g.degree(u);
    }
    return degree_sum == 2 * g.size();
}

} // namespace factorlab
