#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace factorlab {

/// Degree window [a, b] of a parity [a,b]-factor.
struct ParityParams {
    int a = 1;
    int b = 1;
};

/// Throws unless 1 <= a <= b, a = b (mod 2) and n*a is even.
inline void validate(const ParityParams& p, int n)
{
    if (p.a < 1 || p.a > p.b)
        throw Error(ErrorCode::BadParams, "need 1 <= a <= b, got a=" + std::to_string(p.a) +
                                              " b=" + std::to_string(p.b));
    if ((p.b - p.a) % 2 != 0)
        throw Error(ErrorCode::ParityPreconditionViolated,
                    "a and b must have the same parity (a=" + std::to_string(p.a) +
                        ", b=" + std::to_string(p.b) + ")");
    if ((static_cast<std::int64_t>(n) * p.a) % 2 != 0)
        throw Error(ErrorCode::ParityPreconditionViolated,
                    "n*a must be even (n=" + std::to_string(n) + ", a=" + std::to_string(p.a) + ")");
}

inline bool is_valid_for(const ParityParams& p, int n)
{
    return p.a >= 1 && p.a <= p.b && (p.b - p.a) % 2 == 0 &&
           (static_cast<std::int64_t>(n) * p.a) % 2 == 0;
}

/// Per-vertex bounds g <= f of a parity (g,f)-factor.
struct GFParams {
    std::vector<int> g;
    std::vector<int> f;

    static GFParams constant(int n, int lower, int upper)
    {
        return {std::vector<int>(static_cast<std::size_t>(n), lower),
                std::vector<int>(static_cast<std::size_t>(n), upper)};
    }
};

inline void validate(const GFParams& p, int n)
{
    if (static_cast<int>(p.g.size()) != n || static_cast<int>(p.f.size()) != n)
        throw Error(ErrorCode::InvalidGF, "g and f must have one entry per vertex");
    for (int v = 0; v < n; ++v) {
        const int g = p.g[static_cast<std::size_t>(v)];
        const int f = p.f[static_cast<std::size_t>(v)];
        if (g < 0 || g > f)
            throw Error(ErrorCode::InvalidGF, "need 0 <= g(v) <= f(v) at vertex " + std::to_string(v));
        if ((f - g) % 2 != 0)
            throw Error(ErrorCode::InvalidGF, "g(v) and f(v) differ in parity at vertex " + std::to_string(v));
    }
}

/// A disjoint pair (S, T) together with the terms of its deficiency.
struct CriterionWitness {
    VertexSet s;
    VertexSet t;
    std::int64_t eta = 0;
    std::int64_t q = 0;
    /// Sum over x in T of d_{G-S}(x).
    std::int64_t deg_sum = 0;

    bool violating() const noexcept { return eta <= -2; }
};

/// Edge subset H of G with its degrees.
struct FactorCertificate {
    std::vector<Edge> edges;
    std::vector<int> degrees;
};

namespace detail {

inline void require_disjoint(const VertexSet& s, const VertexSet& t)
{
    if (s.intersects(t))
        throw Error(ErrorCode::NonDisjoint, "S and T must be disjoint");
}

inline std::int64_t degree_sum_outside(const Graph& g, const VertexSet& s, const VertexSet& t)
{
    std::int64_t total = 0;
    t.for_each([&](int x) { total += (g.neighbors(x) - s).size(); });
    return total;
}

/// Counts components Q of G - S - T whose weight(Q) + |[Q, T]| is odd.
template <typename Weight>
std::int64_t odd_components(const Graph& g, const VertexSet& s, const VertexSet& t, Weight&& weight)
{
    const VertexSet rest = VertexSet::full(g.order()) - s - t;
    std::int64_t count = 0;
    for (const auto& q : components(g, rest))
        if ((weight(q) + edges_between(g, q, t)) % 2 != 0)
            ++count;
    return count;
}

} // namespace detail

/// q_G(S,T): components Q of G-S-T with a|V(Q)| + |[V(Q),T]| odd.
inline std::int64_t a_odd_count(const Graph& g, const VertexSet& s, const VertexSet& t, int a)
{
    detail::require_disjoint(s, t);
    return detail::odd_components(g, s, t, [a](const VertexSet& q) {
        return static_cast<std::int64_t>(a) * q.size();
    });
}

/// Evaluates every term of b|S| - a|T| + sum_{x in T} d_{G-S}(x) - q_G(S,T).
inline CriterionWitness evaluate(const Graph& g, const VertexSet& s, const VertexSet& t,
                                 const ParityParams& p)
{
    validate(p, g.order());
    detail::require_disjoint(s, t);
    CriterionWitness w{s, t, 0, 0, 0};
    w.deg_sum = detail::degree_sum_outside(g, s, t);
    w.q = a_odd_count(g, s, t, p.a);
    w.eta = static_cast<std::int64_t>(p.b) * s.size() - static_cast<std::int64_t>(p.a) * t.size() +
            w.deg_sum - w.q;
    return w;
}

inline std::int64_t eta(const Graph& g, const VertexSet& s, const VertexSet& t, const ParityParams& p)
{
    return evaluate(g, s, t, p).eta;
}

/// f(S) - g(T) + sum_{x in T} d_{G-S}(x) - q, with q counting components where g(V(Q)) + |[V(Q),T]| is odd.
inline std::int64_t eta_gf(const Graph& g, const VertexSet& s, const VertexSet& t, const GFParams& p)
{
    validate(p, g.order());
    detail::require_disjoint(s, t);
    auto sum_over = [](const std::vector<int>& values, const VertexSet& set) {
        std::int64_t total = 0;
        set.for_each([&](int v) { total += values[static_cast<std::size_t>(v)]; });
        return total;
    };
    const std::int64_t q = detail::odd_components(g, s, t, [&](const VertexSet& comp) {
        return sum_over(p.g, comp);
    });
    return sum_over(p.f, s) - sum_over(p.g, t) + detail::degree_sum_outside(g, s, t) - q;
}

struct DecideOptions {
    /// Lift the soft size limits.
    bool force = false;
    /// Exhaustive criterion enumeration is refused above this order unless forced.
    int criterion_max_n = 18;
    /// Edge backtracking is refused above this size unless forced.
    int search_max_m = 40;
};

struct CriterionVerdict {
    bool exists = false;
    std::optional<CriterionWitness> witness;
    std::uint64_t nodes = 0;
    std::vector<std::string> warnings;
};

namespace detail {

/// Enumerates S/T/neither assignments over at most 64 vertices with word masks.
class CriterionSearch {
public:
    CriterionSearch(const Graph& g, const ParityParams& p) : n_(g.order()), a_(p.a), b_(p.b)
    {
        adj_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            adj_[static_cast<std::size_t>(v)] = g.neighbors(v).words().empty() ? 0 : g.neighbors(v).words()[0];
        all_ = n_ == 64 ? ~Word{0} : (Word{1} << n_) - 1;

        order_.resize(static_cast<std::size_t>(n_));
        std::iota(order_.begin(), order_.end(), 0);
        std::stable_sort(order_.begin(), order_.end(), [&](int x, int y) {
            return std::popcount(adj_[static_cast<std::size_t>(x)]) < std::popcount(adj_[static_cast<std::size_t>(y)]);
        });
        suffix_.assign(static_cast<std::size_t>(n_) + 1, 0);
        for (int k = n_ - 1; k >= 0; --k)
            suffix_[static_cast<std::size_t>(k)] =
                suffix_[static_cast<std::size_t>(k) + 1] | (Word{1} << order_[static_cast<std::size_t>(k)]);
    }

    bool run() { return visit(0, 0, 0, 0); }

    Word s() const { return found_s_; }
    Word t() const { return found_t_; }
    std::uint64_t nodes() const { return nodes_; }

private:
    int component_count(Word within) const
    {
        int count = 0;
        while (within) {
            Word comp = within & (~within + 1);
            Word frontier = comp;
            while (frontier) {
                Word next = 0;
                for (Word f = frontier; f; f &= f - 1)
                    next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
                next &= within & ~comp;
                comp |= next;
                frontier = next;
            }
            within &= ~comp;
            ++count;
        }
        return count;
    }

    std::int64_t exact_eta(Word s, Word t) const
    {
        std::int64_t value = static_cast<std::int64_t>(b_) * std::popcount(s) -
                             static_cast<std::int64_t>(a_) * std::popcount(t);
        for (Word x = t; x; x &= x - 1)
            value += std::popcount(adj_[static_cast<std::size_t>(std::countr_zero(x))] & ~s);
        Word rest = all_ & ~s & ~t;
        while (rest) {
            Word comp = rest & (~rest + 1);
            Word frontier = comp;
            while (frontier) {
                Word next = 0;
                for (Word f = frontier; f; f &= f - 1)
                    next |= adj_[static_cast<std::size_t>(std::countr_zero(f))];
                next &= rest & ~comp;
                comp |= next;
                frontier = next;
            }
            rest &= ~comp;
            std::int64_t parity = static_cast<std::int64_t>(a_) * std::popcount(comp);
            for (Word x = t; x; x &= x - 1)
                parity += std::popcount(adj_[static_cast<std::size_t>(std::countr_zero(x))] & comp);
            if (parity % 2 != 0)
                --value;
        }
        return value;
    }

    // Lower bound on eta over every completion of the partial assignment.
    // A T vertex keeps at least its neighbours outside S and the unassigned
    // set; an unassigned vertex contributes at worst min(0, that count - a);
    // q is at most the components of the assigned "neither" part plus one
    // per unassigned vertex.
    std::int64_t lower_bound(Word s, Word t, Word neither, Word unassigned) const
    {
        const Word keep = all_ & ~s & ~unassigned;
        std::int64_t bound = static_cast<std::int64_t>(b_) * std::popcount(s);
        for (Word x = t; x; x &= x - 1)
            bound += std::popcount(adj_[static_cast<std::size_t>(std::countr_zero(x))] & keep) - a_;
        for (Word x = unassigned; x; x &= x - 1)
            bound += std::min(0, std::popcount(adj_[static_cast<std::size_t>(std::countr_zero(x))] & keep) - a_);
        bound -= component_count(neither) + std::popcount(unassigned);
        return bound;
    }

    bool visit(int k, Word s, Word t, Word neither)
    {
        ++nodes_;
        if (k == n_) {
            if (exact_eta(s, t) <= -2) {
                found_s_ = s;
                found_t_ = t;
                return true;
            }
            return false;
        }
        if (lower_bound(s, t, neither, suffix_[static_cast<std::size_t>(k)]) > -2)
            return false;
        const Word bit = Word{1} << order_[static_cast<std::size_t>(k)];
        return visit(k + 1, s, t | bit, neither) || visit(k + 1, s | bit, t, neither) ||
               visit(k + 1, s, t, neither | bit);
    }

    int n_;
    int a_;
    int b_;
    Word all_ = 0;
    std::vector<Word> adj_;
    std::vector<int> order_;
    std::vector<Word> suffix_;
    Word found_s_ = 0;
    Word found_t_ = 0;
    std::uint64_t nodes_ = 0;
};

inline VertexSet mask_to_set(int n, Word mask)
{
    VertexSet out(n);
    for (; mask; mask &= mask - 1)
        out.insert(std::countr_zero(mask));
    return out;
}

} // namespace detail

/**
 * Decides parity [a,b]-factor existence by the deficiency criterion: a
 * factor exists iff eta(S,T) >= 0 for every disjoint S, T. Enumerates all
 * 3^n assignments (vertices in ascending degree order, branches T, S,
 * neither) with a lower-bound prune, and returns the first violating pair.
 */
inline CriterionVerdict decide_by_criterion(const Graph& g, const ParityParams& p,
                                            const DecideOptions& options = {})
{
    validate(p, g.order());
    CriterionVerdict verdict;
    if (g.order() > options.criterion_max_n) {
        if (!options.force)
            throw Error(ErrorCode::SizeLimitExceeded,
                        "criterion enumeration limited to n <= " + std::to_string(options.criterion_max_n) +
                            " (n=" + std::to_string(g.order()) + "); use force to override");
        verdict.warnings.push_back("criterion enumeration forced at n=" + std::to_string(g.order()) +
                                   "; runtime grows as 3^n");
    }
    if (g.order() > 64)
        throw Error(ErrorCode::SizeLimitExceeded, "criterion enumeration supports at most 64 vertices");

    detail::CriterionSearch search(g, p);
    const bool found = search.run();
    verdict.nodes = search.nodes();
    verdict.exists = !found;
    if (found) {
        verdict.witness = evaluate(g, detail::mask_to_set(g.order(), search.s()),
                                   detail::mask_to_set(g.order(), search.t()), p);
    }
    return verdict;
}

struct SearchVerdict {
    bool exists = false;
    std::optional<FactorCertificate> certificate;
    std::uint64_t nodes = 0;
    std::vector<std::string> warnings;
};

namespace detail {

/// Edge-by-edge backtracking with degree-window propagation.
class FactorSearch {
public:
    FactorSearch(const Graph& g, int a, int b, bool parity)
        : n_(g.order()), a_(a), b_(b), parity_(parity), edges_(g.edges())
    {
        incident_.resize(static_cast<std::size_t>(n_));
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            incident_[static_cast<std::size_t>(edges_[e].first)].push_back(static_cast<int>(e));
            incident_[static_cast<std::size_t>(edges_[e].second)].push_back(static_cast<int>(e));
        }
        state_.assign(edges_.size(), undecided);
        current_.assign(static_cast<std::size_t>(n_), 0);
        open_.resize(static_cast<std::size_t>(n_));
        for (int v = 0; v < n_; ++v)
            open_[static_cast<std::size_t>(v)] = static_cast<int>(incident_[static_cast<std::size_t>(v)].size());
    }

    bool run()
    {
        std::vector<int> queue(static_cast<std::size_t>(n_));
        std::iota(queue.begin(), queue.end(), 0);
        if (!propagate(queue))
            return false;
        return descend(0);
    }

    FactorCertificate certificate() const
    {
        FactorCertificate cert;
        cert.degrees.assign(static_cast<std::size_t>(n_), 0);
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (state_[e] == taken) {
                cert.edges.push_back(edges_[e]);
                ++cert.degrees[static_cast<std::size_t>(edges_[e].first)];
                ++cert.degrees[static_cast<std::size_t>(edges_[e].second)];
            }
        }
        return cert;
    }

    std::uint64_t nodes() const { return nodes_; }

private:
    static constexpr char undecided = 0;
    static constexpr char taken = 1;
    static constexpr char dropped = 2;

    bool admissible(int degree) const { return !parity_ || (degree - a_) % 2 == 0; }

    void assign(int e, char value, std::vector<int>& queue)
    {
        state_[static_cast<std::size_t>(e)] = value;
        trail_.push_back(e);
        for (int v : {edges_[static_cast<std::size_t>(e)].first, edges_[static_cast<std::size_t>(e)].second}) {
            --open_[static_cast<std::size_t>(v)];
            if (value == taken)
                ++current_[static_cast<std::size_t>(v)];
            queue.push_back(v);
        }
    }

    void undo_to(std::size_t mark)
    {
        while (trail_.size() > mark) {
            const int e = trail_.back();
            trail_.pop_back();
            for (int v : {edges_[static_cast<std::size_t>(e)].first, edges_[static_cast<std::size_t>(e)].second}) {
                ++open_[static_cast<std::size_t>(v)];
                if (state_[static_cast<std::size_t>(e)] == taken)
                    --current_[static_cast<std::size_t>(v)];
            }
            state_[static_cast<std::size_t>(e)] = undecided;
        }
    }

    // A vertex is infeasible when no admissible degree lies in
    // [max(a, current), min(b, current + open)]. When the only admissible
    // degrees force every open edge one way, those edges are fixed.
    bool propagate(std::vector<int>& queue)
    {
        while (!queue.empty()) {
            const int v = queue.back();
            queue.pop_back();
            const int lo = current_[static_cast<std::size_t>(v)];
            const int hi = lo + open_[static_cast<std::size_t>(v)];
            int first = -1;
            int last = -1;
            for (int d = std::max(lo, a_); d <= std::min(hi, b_); ++d) {
                if (admissible(d)) {
                    if (first < 0)
                        first = d;
                    last = d;
                }
            }
            if (first < 0)
                return false;
            if (lo == hi)
                continue;
            char forced = undecided;
            if (first == hi)
                forced = taken;
            else if (last == lo)
                forced = dropped;
            if (forced == undecided)
                continue;
            for (int e : incident_[static_cast<std::size_t>(v)])
                if (state_[static_cast<std::size_t>(e)] == undecided)
                    assign(e, forced, queue);
        }
        return true;
    }

    bool descend(std::size_t cursor)
    {
        ++nodes_;
        while (cursor < edges_.size() && state_[cursor] != undecided)
            ++cursor;
        if (cursor == edges_.size())
            return true;
        const int e = static_cast<int>(cursor);
        for (char choice : {taken, dropped}) {
            const std::size_t mark = trail_.size();
            std::vector<int> queue;
            assign(e, choice, queue);
            if (propagate(queue) && descend(cursor + 1))
                return true;
            undo_to(mark);
        }
        return false;
    }

    int n_;
    int a_;
    int b_;
    bool parity_;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> incident_;
    std::vector<char> state_;
    std::vector<int> current_;
    std::vector<int> open_;
    std::vector<int> trail_;
    std::uint64_t nodes_ = 0;
};

} // namespace detail

/**
 * Decides factor existence directly: backtracking over the edges in
 * lexicographic order. With `parity` set it looks for a parity [a,b]-factor
 * (and requires the parity preconditions), otherwise for a plain
 * [a,b]-factor. An existing factor comes back as a certificate.
 */
inline SearchVerdict decide_by_search(const Graph& g, const ParityParams& p, bool parity = true,
                                      const DecideOptions& options = {})
{
    if (parity)
        validate(p, g.order());
    else if (p.a < 0 || p.a > p.b)
        throw Error(ErrorCode::BadParams, "need 0 <= a <= b");

    SearchVerdict verdict;
    if (g.size() > options.search_max_m) {
        if (!options.force)
            throw Error(ErrorCode::SizeLimitExceeded,
                        "edge search limited to m <= " + std::to_string(options.search_max_m) +
                            " (m=" + std::to_string(g.size()) + "); use force to override");
        verdict.warnings.push_back("edge search forced at m=" + std::to_string(g.size()) +
                                   "; runtime may grow as 2^m");
    }

    detail::FactorSearch search(g, p.a, p.b, parity);
    verdict.exists = search.run();
    verdict.nodes = search.nodes();
    if (verdict.exists)
        verdict.certificate = search.certificate();
    return verdict;
}

/// True iff the edges are distinct edges of G and every vertex's degree lies in [a,b] (with parity a when asked).
inline bool verify_certificate(const Graph& g, const FactorCertificate& cert, const ParityParams& p,
                               bool parity = true)
{
    std::vector<int> degrees(static_cast<std::size_t>(g.order()), 0);
    GraphBuilder seen(g.order());
    for (auto [u, v] : cert.edges) {
        if (!g.adjacent(u, v))
            return false;
        if (!seen.add_edge(u, v))
            return false;
        ++degrees[static_cast<std::size_t>(u)];
        ++degrees[static_cast<std::size_t>(v)];
    }
    if (!cert.degrees.empty() && cert.degrees != degrees)
        return false;
    for (int d : degrees) {
        if (d < p.a || d > p.b)
            return false;
        if (parity && (d - p.a) % 2 != 0)
            return false;
    }
    return true;
}

} // namespace factorlab
