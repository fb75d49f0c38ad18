#pragma once

// Test-only reference implementations. They use plain adjacency matrices and
// brute force, and share no code with the library routines they check.

#include <cstdint>
#include <vector>

#include <factorlab/graph.hpp>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;

inline Matrix adjacency(const factorlab::Graph& g)
{
    const int n = g.order();
    Matrix m(n, std::vector<int>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v)
            m[u][v] = g.adjacent(u, v) ? 1 : 0;
    return m;
}

/// label[v] = component id among vertices with keep[v]; -1 elsewhere.
inline std::vector<int> component_labels(const Matrix& adj, const std::vector<bool>& keep, int& count)
{
    const int n = static_cast<int>(adj.size());
    std::vector<int> label(n, -1);
    count = 0;
    for (int start = 0; start < n; ++start) {
        if (!keep[start] || label[start] >= 0)
            continue;
        std::vector<int> stack{start};
        label[start] = count;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < n; ++v)
                if (adj[u][v] && keep[v] && label[v] < 0) {
                    label[v] = count;
                    stack.push_back(v);
                }
        }
        ++count;
    }
    return label;
}

/// role[v]: 0 neither, 1 in S, 2 in T.
inline std::int64_t a_odd_count(const factorlab::Graph& g, const std::vector<int>& role, int a)
{
    const Matrix adj = adjacency(g);
    const int n = g.order();
    std::vector<bool> keep(n);
    for (int v = 0; v < n; ++v)
        keep[v] = role[v] == 0;
    int count = 0;
    const auto label = component_labels(adj, keep, count);
    std::vector<std::int64_t> parity(count, 0);
    for (int v = 0; v < n; ++v) {
        if (label[v] < 0)
            continue;
        parity[label[v]] += a;
        for (int x = 0; x < n; ++x)
            if (role[x] == 2 && adj[v][x])
                parity[label[v]] += 1;
    }
    std::int64_t odd = 0;
    for (auto p : parity)
        odd += p % 2;
    return odd;
}

inline std::int64_t eta(const factorlab::Graph& g, const std::vector<int>& role, int a, int b)
{
    const Matrix adj = adjacency(g);
    const int n = g.order();
    std::int64_t value = 0;
    for (int v = 0; v < n; ++v) {
        if (role[v] == 1)
            value += b;
        if (role[v] == 2) {
            value -= a;
            for (int x = 0; x < n; ++x)
                if (adj[v][x] && role[x] != 1)
                    value += 1;
        }
    }
    return value - a_odd_count(g, role, a);
}

/// Exhaustive over all 2^m edge subsets.
inline bool has_factor_brute_force(const factorlab::Graph& g, int a, int b, bool parity)
{
    const auto edges = g.edges();
    const int n = g.order();
    const std::size_t m = edges.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        std::vector<int> deg(n, 0);
        for (std::size_t e = 0; e < m; ++e)
            if ((mask >> e) & 1) {
                ++deg[edges[e].first];
                ++deg[edges[e].second];
            }
        bool ok = true;
        for (int d : deg)
            ok = ok && d >= a && d <= b && (!parity || (d - a) % 2 == 0);
        if (ok)
            return true;
    }
    return false;
}

inline bool perfect_matching_brute_force(const Matrix& adj, std::vector<bool>& used)
{
    const int n = static_cast<int>(adj.size());
    int first = -1;
    for (int v = 0; v < n && first < 0; ++v)
        if (!used[v])
            first = v;
    if (first < 0)
        return true;
    used[first] = true;
    for (int v = 0; v < n; ++v)
        if (!used[v] && adj[first][v]) {
            used[v] = true;
            if (perfect_matching_brute_force(adj, used))
                return true;
            used[v] = false;
        }
    used[first] = false;
    return false;
}

inline bool has_perfect_matching(const factorlab::Graph& g)
{
    std::vector<bool> used(g.order(), false);
    return perfect_matching_brute_force(adjacency(g), used);
}

/// det(xI - M) for a 3x3 integer matrix by cofactor expansion.
inline std::int64_t char_poly_3x3(const std::vector<std::vector<std::int64_t>>& m, std::int64_t x)
{
    std::int64_t a[3][3];
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            a[i][j] = (i == j ? x : 0) - m[i][j];
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
}

} // namespace oracle
