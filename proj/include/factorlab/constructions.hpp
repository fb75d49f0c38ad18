#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace factorlab {

struct Block {
    std::string name;
    VertexSet vertices;
};

/**
 * A graph together with the named vertex blocks it was assembled from.
 * Blocks partition V and are laid out as consecutive label ranges in the
 * order they are listed.
 */
struct LabeledConstruction {
    std::string family;
    Graph graph;
    std::vector<Block> blocks;
    std::map<std::string, std::int64_t> params;
    /// Size hypotheses of the extremal results for this family, kept as data rather than enforced.
    std::map<std::string, std::int64_t> hypotheses;

    const VertexSet& block(const std::string& name) const
    {
        for (const auto& b : blocks)
            if (b.name == name)
                return b.vertices;
        throw Error(ErrorCode::BadParams, "construction has no block named " + name);
    }

    std::vector<VertexSet> parts() const
    {
        std::vector<VertexSet> out;
        for (const auto& b : blocks)
            out.push_back(b.vertices);
        return out;
    }
};

namespace detail {

/// Allocates consecutive label ranges for blocks of the given sizes.
inline std::vector<Block> layout(int n, const std::vector<std::pair<std::string, int>>& sizes)
{
    std::vector<Block> blocks;
    int next = 0;
    for (const auto& [name, size] : sizes) {
        blocks.push_back({name, VertexSet::range(n, next, next + size)});
        next += size;
    }
    return blocks;
}

inline void require(bool ok, const std::string& what)
{
    if (!ok)
        throw Error(ErrorCode::BadParams, what);
}

} // namespace detail

/**
 * G_n^a: K_{a-1} v (K_{n-2a-1} u (a+1)K_1) plus one vertex w joined to the
 * a+1 independent vertices.
 *
 * Blocks, in label order: clique_small (a-1), clique_big (n-2a-1),
 * indep (a+1), w (1). Degrees: clique_small n-2, clique_big n-a-3,
 * indep a, w a+1.
 */
inline LabeledConstruction g_na(int n, int a)
{
    detail::require(a >= 2, "g_na needs a >= 2");
    detail::require(n >= 2 * a + 3, "g_na needs n >= 2a+3");

    LabeledConstruction c;
    c.family = "g_na";
    c.params = {{"n", n}, {"a", a}};
    c.hypotheses = {{"theorem_min_n_a_term", 2LL * a * a + 136LL * a + 264},
                    {"proof_min_n_a_term", 2LL * a * a + 136LL * a + 164}};
    c.blocks = detail::layout(n, {{"clique_small", a - 1},
                                  {"clique_big", n - 2 * a - 1},
                                  {"indep", a + 1},
                                  {"w", 1}});

    const auto& small = c.blocks[0].vertices;
    const auto& big = c.blocks[1].vertices;
    const auto& indep = c.blocks[2].vertices;
    const auto& w = c.blocks[3].vertices;

    GraphBuilder b(n);
    b.add_clique(small | big);
    b.add_biclique(small, indep);
    b.add_biclique(w, indep);
    c.graph = b.build();
    return c;
}

/// Closed-form edge count of g_na(n, a).
inline std::int64_t g_na_edge_count(std::int64_t n, std::int64_t a)
{
    return (n - a - 2) * (n - a - 3) / 2 + a * a + a;
}

/**
 * K_s v (K_{n-b-s-1} u (b+1)K_1).
 *
 * Blocks: clique_small (s), clique_big (n-b-s-1), indep (b+1).
 */
inline LabeledConstruction book_family(int n, int s, int b)
{
    detail::require(s >= 1, "book_family needs s >= 1");
    detail::require(b >= 0, "book_family needs b >= 0");
    detail::require(n >= b + s + 2, "book_family needs n >= b+s+2");

    LabeledConstruction c;
    c.family = "book";
    c.params = {{"n", n}, {"s", s}, {"b", b}};
    c.hypotheses = {{"bound_min_b", 4}, {"bound_min_n", std::max<std::int64_t>(2LL * b, (b + 1LL) * s + 1)}};
    c.blocks = detail::layout(n, {{"clique_small", s}, {"clique_big", n - b - s - 1}, {"indep", b + 1}});

    const auto& small = c.blocks[0].vertices;
    GraphBuilder gb(n);
    gb.add_clique(small | c.blocks[1].vertices);
    gb.add_biclique(small, c.blocks[2].vertices);
    c.graph = gb.build();
    return c;
}

inline std::int64_t book_family_edge_count(std::int64_t n, std::int64_t s, std::int64_t b)
{
    const std::int64_t big = n - b - s - 1;
    return s * (s - 1) / 2 + big * (big - 1) / 2 + s * (big + b + 1);
}

/**
 * K_1 v (K_{n-b-2} u (b+1)K_1), the extremal graph for odd [1,b]-factors.
 *
 * Blocks: hub (1), clique_big (n-b-2), indep (b+1).
 */
inline LabeledConstruction odd_1b(int n, int b)
{
    detail::require(b >= 1, "odd_1b needs b >= 1");
    detail::require(n >= b + 3, "odd_1b needs n >= b+3");

    auto c = book_family(n, 1, b);
    c.family = "odd_1b";
    c.params = {{"n", n}, {"b", b}};
    c.hypotheses = {{"theorem_n_even", 1}, {"theorem_min_n", 4LL * b + 8}};
    c.blocks[0].name = "hub";
    return c;
}

/**
 * H_n^{a,b}: K_a v (K_{n-a-b-1} u (b+1)K_1) with a-1 extra edges from the
 * first independent vertex to the first a-1 vertices of the big clique.
 *
 * Blocks: clique_small (a), clique_big (n-a-b-1), indep_designated (1),
 * indep (b).
 */
inline LabeledConstruction h_nab(int n, int a, int b)
{
    detail::require(a >= 1 && a < b, "h_nab needs 1 <= a < b");
    detail::require(n >= a + b + 2, "h_nab needs n >= a+b+2");
    detail::require(n - a - b - 1 >= a - 1, "h_nab needs a big clique with at least a-1 vertices");

    LabeledConstruction c;
    c.family = "h_nab";
    c.params = {{"n", n}, {"a", a}, {"b", b}};
    c.hypotheses = {{"theorem_min_n", 2LL * (a + b + 2) * (b + 2)}};
    c.blocks = detail::layout(n, {{"clique_small", a},
                                  {"clique_big", n - a - b - 1},
                                  {"indep_designated", 1},
                                  {"indep", b}});

    const auto& small = c.blocks[0].vertices;
    const auto& big = c.blocks[1].vertices;
    const int designated = c.blocks[2].vertices.first();

    GraphBuilder gb(n);
    gb.add_clique(small | big);
    gb.add_biclique(small, c.blocks[2].vertices | c.blocks[3].vertices);
    const auto big_members = big.members();
    for (int i = 0; i < a - 1; ++i)
        gb.add_edge(designated, big_members[static_cast<std::size_t>(i)]);
    c.graph = gb.build();
    return c;
}

/**
 * K_s v (K_{n_1} u ... u K_{n_q}). Blocks: join (s), then part1..partq.
 */
inline LabeledConstruction clique_join_union(int s, const std::vector<int>& clique_sizes)
{
    detail::require(s >= 0, "clique_join_union needs s >= 0");
    std::vector<std::pair<std::string, int>> sizes{{"join", s}};
    int n = s;
    for (std::size_t i = 0; i < clique_sizes.size(); ++i) {
        detail::require(clique_sizes[i] >= 1, "clique sizes must be positive");
        sizes.emplace_back("part" + std::to_string(i + 1), clique_sizes[i]);
        n += clique_sizes[i];
    }

    LabeledConstruction c;
    c.family = "clique_join_union";
    c.params = {{"n", n}, {"s", s}, {"q", static_cast<std::int64_t>(clique_sizes.size())}};
    c.blocks = detail::layout(n, sizes);

    GraphBuilder gb(n);
    const auto& join_block = c.blocks[0].vertices;
    gb.add_clique(join_block);
    for (std::size_t i = 1; i < c.blocks.size(); ++i) {
        gb.add_clique(c.blocks[i].vertices);
        gb.add_biclique(join_block, c.blocks[i].vertices);
    }
    c.graph = gb.build();
    return c;
}

} // namespace factorlab
