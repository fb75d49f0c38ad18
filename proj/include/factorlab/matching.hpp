#pragma once

#include <algorithm>
#include <queue>
#include <vector>

#include "graph.hpp"

namespace factorlab {

/**
 * Maximum-cardinality matching in a general graph (Edmonds' blossom
 * algorithm, O(n^3)). mate[v] is v's partner or -1.
 *
 * This is an oracle for the (1,1) case of the parity-factor deciders and
 * deliberately shares no code with them.
 */
inline std::vector<int> maximum_matching(const Graph& g)
{
    const int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }

    std::vector<int> mate(n, -1), parent(n), base(n);
    std::vector<char> used(n), blossom(n);

    auto lca = [&](int a, int b) {
        std::vector<char> seen(n, 0);
        for (;;) {
            a = base[a];
            seen[a] = 1;
            if (mate[a] == -1)
                break;
            a = parent[mate[a]];
        }
        for (;;) {
            b = base[b];
            if (seen[b])
                return b;
            b = parent[mate[b]];
        }
    };

    auto mark_path = [&](int v, int b, int child) {
        while (base[v] != b) {
            blossom[base[v]] = blossom[base[mate[v]]] = 1;
            parent[v] = child;
            child = mate[v];
            v = parent[mate[v]];
        }
    };

    auto find_path = [&](int root) {
        std::fill(used.begin(), used.end(), 0);
        std::fill(parent.begin(), parent.end(), -1);
        for (int i = 0; i < n; ++i)
            base[i] = i;
        used[root] = 1;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int to : adj[static_cast<std::size_t>(v)]) {
                if (base[v] == base[to] || mate[v] == to)
                    continue;
                if (to == root || (mate[to] != -1 && parent[mate[to]] != -1)) {
                    const int cur = lca(v, to);
                    std::fill(blossom.begin(), blossom.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n; ++i) {
                        if (blossom[base[i]]) {
                            base[i] = cur;
                            if (!used[i]) {
                                used[i] = 1;
                                q.push(i);
                            }
                        }
                    }
                } else if (parent[to] == -1) {
                    parent[to] = v;
                    if (mate[to] == -1)
                        return to;
                    used[mate[to]] = 1;
                    q.push(mate[to]);
                }
            }
        }
        return -1;
    };

    for (int root = 0; root < n; ++root) {
        if (mate[root] != -1)
            continue;
        int v = find_path(root);
        while (v != -1) {
            const int pv = parent[v];
            const int ppv = mate[pv];
            mate[v] = pv;
            mate[pv] = v;
            v = ppv;
        }
    }
    return mate;
}

inline int matching_size(const std::vector<int>& mate)
{
    int matched = 0;
    for (int m : mate)
        matched += m >= 0 ? 1 : 0;
    return matched / 2;
}

inline bool has_perfect_matching(const Graph& g)
{
    return 2 * matching_size(maximum_matching(g)) == g.order();
}

} // namespace factorlab
