#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace factorlab {

/// SplitMix64 finalizer; used to derive independent per-item seeds.
inline constexpr std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seed of item `index` under master seed `master`: splitmix64(splitmix64(master) ^ index).
inline constexpr std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index)
{
    return splitmix64(splitmix64(master) ^ index);
}

/**
 * mt19937_64 with distribution code written out here, so a seed yields the
 * same stream on every standard library.
 */
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return uniform() < p; }

    /// Uniform integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi)
    {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        if (span == 0)
            return static_cast<std::int64_t>(engine_());
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                                    std::numeric_limits<std::uint64_t>::max() % span;
        std::uint64_t draw;
        do {
            draw = engine_();
        } while (draw >= limit);
        return lo + static_cast<std::int64_t>(draw % span);
    }

    template <typename T>
    void shuffle(std::vector<T>& items)
    {
        for (std::size_t i = items.size(); i > 1; --i) {
            const auto j = static_cast<std::size_t>(between(0, static_cast<std::int64_t>(i) - 1));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::mt19937_64 engine_;
};

/// Erdos-Renyi G(n, p), pairs visited in lexicographic order.
inline Graph gnp(int n, double p, Rng& rng)
{
    GraphBuilder b(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.bernoulli(p))
                b.add_edge(u, v);
    return b.build();
}

/// G(n, p) conditioned on being connected with minimum degree >= min_deg, by rejection.
inline std::optional<Graph> sample_connected_min_degree(int n, double p, int min_deg, Rng& rng,
                                                        int max_attempts = 10'000)
{
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        Graph g = gnp(n, p, rng);
        if (g.order() > 0 && min_degree(g) >= min_deg && is_connected(g))
            return g;
    }
    return std::nullopt;
}

/**
 * Random d-regular simple graph: a circulant d-regular graph scrambled by
 * 10m accepted double-edge switches (ab, cd -> ac, bd), which preserve
 * every degree.
 */
inline Graph random_regular(int n, int d, Rng& rng)
{
    if (d < 0 || d >= n || (static_cast<std::int64_t>(n) * d) % 2 != 0)
        throw Error(ErrorCode::BadParams, "need 0 <= d < n and n*d even");
    GraphBuilder b(n);
    for (int v = 0; v < n; ++v) {
        for (int off = 1; off <= d / 2; ++off)
            b.add_edge(v, (v + off) % n);
        if (d % 2 != 0 && v < n / 2)
            b.add_edge(v, v + n / 2);
    }

    std::vector<Edge> edges = b.build().edges();
    if (edges.size() < 2)
        return b.build();
    const std::size_t target = 10 * edges.size();
    const std::size_t max_tries = 1000 * edges.size();
    std::size_t accepted = 0;
    for (std::size_t tries = 0; accepted < target && tries < max_tries; ++tries) {
        const auto i = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(edges.size()) - 1));
        const auto j = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(edges.size()) - 1));
        auto [x, y] = edges[i];
        auto [u, v] = edges[j];
        if (rng.bernoulli(0.5))
            std::swap(u, v);
        if (i == j || x == u || x == v || y == u || y == v || b.has_edge(x, u) || b.has_edge(y, v))
            continue;
        b.remove_edge(x, y);
        b.remove_edge(u, v);
        b.add_edge(x, u);
        b.add_edge(y, v);
        edges[i] = {std::min(x, u), std::max(x, u)};
        edges[j] = {std::min(y, v), std::max(y, v)};
        ++accepted;
    }
    return b.build();
}

inline std::vector<int> random_permutation(int n, Rng& rng)
{
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    rng.shuffle(perm);
    return perm;
}

} // namespace factorlab
