#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <variant>
#include <vector>

#include "error.hpp"
#include "graph.hpp"

namespace factorlab {

/// Spectral radius estimate with its Perron vector.
struct SpectralResult {
    double rho = 0.0;
    /// Unit (2-norm) eigenvector; zero outside the dominant component of a disconnected graph.
    std::vector<double> perron;
    std::uint64_t iterations = 0;
    /// ||A x - rho x||_inf at the returned x.
    double residual = 0.0;
};

struct PowerIterationOptions {
    double tol = 1e-10;
    std::uint64_t max_iter = 1'000'000;
};

namespace detail {

/// Power iteration on A + I for a connected graph, started from the all-ones vector.
inline SpectralResult power_iteration(const Graph& g, const PowerIterationOptions& opt)
{
    const int n = g.order();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(n));
    for (auto [u, v] : g.edges()) {
        adj[static_cast<std::size_t>(u)].push_back(v);
        adj[static_cast<std::size_t>(v)].push_back(u);
    }

    SpectralResult out;
    std::vector<double> x(static_cast<std::size_t>(n), 1.0 / std::sqrt(static_cast<double>(n)));
    std::vector<double> y(static_cast<std::size_t>(n));
    for (std::uint64_t it = 0;; ++it) {
        double rayleigh = 0.0;
        for (std::size_t v = 0; v < adj.size(); ++v) {
            double sum = 0.0;
            for (int u : adj[v])
                sum += x[static_cast<std::size_t>(u)];
            y[v] = sum;
            rayleigh += sum * x[v];
        }
        double residual = 0.0;
        for (std::size_t v = 0; v < y.size(); ++v)
            residual = std::max(residual, std::abs(y[v] - rayleigh * x[v]));

        if (residual <= opt.tol || it >= opt.max_iter) {
            if (residual > opt.tol)
                throw Error(ErrorCode::NotConverged, "power iteration stopped after " + std::to_string(it) +
                                                         " iterations with residual " + std::to_string(residual));
            out.rho = rayleigh;
            out.perron = x;
            out.iterations = it;
            out.residual = residual;
            return out;
        }

        double norm = 0.0;
        for (std::size_t v = 0; v < y.size(); ++v) {
            y[v] += x[v];
            norm += y[v] * y[v];
        }
        norm = std::sqrt(norm);
        for (std::size_t v = 0; v < y.size(); ++v)
            x[v] = y[v] / norm;
    }
}

} // namespace detail

/**
 * Largest adjacency eigenvalue by power iteration on A + I, which converges
 * on bipartite graphs too. A disconnected graph is handled per component
 * and the largest component value is returned.
 */
inline SpectralResult spectral_radius(const Graph& g, double tol = 1e-10, std::uint64_t max_iter = 1'000'000)
{
    if (g.order() == 0)
        throw Error(ErrorCode::EmptyGraph, "spectral radius of the empty graph");
    const PowerIterationOptions opt{tol, max_iter};
    if (is_connected(g))
        return detail::power_iteration(g, opt);

    SpectralResult best;
    best.rho = -1.0;
    for (const auto& part : components(g)) {
        auto sub = induced(g, part);
        SpectralResult r;
        if (sub.graph.order() == 1)
            r.perron = {1.0};
        else
            r = detail::power_iteration(sub.graph, opt);
        if (r.rho > best.rho) {
            best.rho = r.rho;
            best.iterations = r.iterations;
            best.residual = r.residual;
            best.perron.assign(static_cast<std::size_t>(g.order()), 0.0);
            for (std::size_t i = 0; i < sub.labels.size(); ++i)
                best.perron[static_cast<std::size_t>(sub.labels[i])] = r.perron[i];
        }
    }
    return best;
}

/// (delta-1)/2 + sqrt(2m - n*delta + (delta+1)^2/4), an upper bound on rho for minimum degree delta.
inline double hong_nikiforov_bound(std::int64_t n, std::int64_t m, std::int64_t delta)
{
    if (delta < 1)
        throw Error(ErrorCode::BadParams, "bound needs minimum degree >= 1");
    if (n * delta > 2 * m || 2 * m > n * (n - 1))
        throw Error(ErrorCode::BadParams, "need n*delta <= 2m <= n(n-1)");
    const double d = static_cast<double>(delta);
    const double radicand = static_cast<double>(2 * m - n * delta) + (d + 1.0) * (d + 1.0) / 4.0;
    return (d - 1.0) / 2.0 + std::sqrt(radicand);
}

/// (x-1)/2 + sqrt(2m - nx + (x+1)^2/4), or NaN where the radicand is negative.
inline double hong_nikiforov_f(std::int64_t n, std::int64_t m, double x)
{
    const double radicand =
        2.0 * static_cast<double>(m) - static_cast<double>(n) * x + (x + 1.0) * (x + 1.0) / 4.0;
    if (radicand < 0.0)
        return std::numeric_limits<double>::quiet_NaN();
    return (x - 1.0) / 2.0 + std::sqrt(radicand);
}

/**
 * True iff hong_nikiforov_f is nonincreasing along the (ascending) grid.
 * Grid points outside [0, n-1] or where the radicand is negative are not
 * part of f's real domain and are skipped; on [0, n-1] the radicand is
 * decreasing, so the real domain there is a prefix of the interval.
 */
inline bool f_monotone_check(std::int64_t n, std::int64_t m, const std::vector<double>& grid)
{
    double previous = std::numeric_limits<double>::infinity();
    for (double x : grid) {
        if (x < 0.0 || x > static_cast<double>(n - 1))
            continue;
        const double value = hong_nikiforov_f(n, m, x);
        if (std::isnan(value))
            continue;
        if (value > previous + 1e-12 * std::max(1.0, std::abs(previous)))
            return false;
        previous = value;
    }
    return true;
}

/// Integer quotient matrix of an equitable partition.
struct QuotientMatrix {
    std::vector<VertexSet> parts;
    /// entries[i][j]: neighbours in part j of any vertex in part i.
    std::vector<std::vector<std::int64_t>> entries;

    std::size_t dimension() const noexcept { return entries.size(); }
};

/// First vertex whose neighbour count into some part differs from its part's first vertex.
struct NotEquitable {
    int vertex = -1;
    int part = -1;
    std::int64_t expected = 0;
    std::int64_t found = 0;
};

using QuotientOutcome = std::variant<QuotientMatrix, NotEquitable>;

inline QuotientOutcome quotient(const Graph& g, const std::vector<VertexSet>& parts)
{
    VertexSet covered(g.order());
    for (const auto& p : parts) {
        if (p.universe() != g.order() || p.empty() || p.intersects(covered))
            throw Error(ErrorCode::NotAPartition, "parts must be nonempty, disjoint and over V(G)");
        covered |= p;
    }
    if (covered.size() != g.order())
        throw Error(ErrorCode::NotAPartition, "parts do not cover V(G)");

    const std::size_t k = parts.size();
    QuotientMatrix q{parts, std::vector<std::vector<std::int64_t>>(k, std::vector<std::int64_t>(k, 0))};
    for (std::size_t i = 0; i < k; ++i) {
        const int head = parts[i].first();
        for (std::size_t j = 0; j < k; ++j)
            q.entries[i][j] = (g.neighbors(head) & parts[j]).size();
        NotEquitable bad;
        parts[i].for_each([&](int v) {
            if (bad.vertex >= 0)
                return;
            for (std::size_t j = 0; j < k; ++j) {
                const std::int64_t c = (g.neighbors(v) & parts[j]).size();
                if (c != q.entries[i][j]) {
                    bad = {v, static_cast<int>(j), q.entries[i][j], c};
                    return;
                }
            }
        });
        if (bad.vertex >= 0)
            return bad;
    }
    return q;
}

namespace detail {

/// x > rho(R) iff xI - R (a Z-matrix) has all leading principal minors positive.
inline bool above_perron_root(const std::vector<std::vector<std::int64_t>>& r, long double x)
{
    const std::size_t k = r.size();
    std::vector<std::vector<long double>> m(k, std::vector<long double>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j)
            m[i][j] = (i == j ? x : 0.0L) - static_cast<long double>(r[i][j]);
    for (std::size_t p = 0; p < k; ++p) {
        if (!(m[p][p] > 0.0L))
            return false;
        for (std::size_t i = p + 1; i < k; ++i) {
            const long double factor = m[i][p] / m[p][p];
            for (std::size_t j = p; j < k; ++j)
                m[i][j] -= factor * m[p][j];
        }
    }
    return true;
}

} // namespace detail

/**
 * Perron root of the quotient matrix by bisection between the smallest and
 * largest row sums, to 1e-12.
 */
inline double quotient_rho(const QuotientMatrix& q)
{
    if (q.entries.empty())
        throw Error(ErrorCode::BadParams, "empty quotient matrix");
    std::int64_t min_row = std::numeric_limits<std::int64_t>::max();
    std::int64_t max_row = 0;
    for (const auto& row : q.entries) {
        std::int64_t sum = 0;
        for (auto e : row)
            sum += e;
        min_row = std::min(min_row, sum);
        max_row = std::max(max_row, sum);
    }
    if (min_row == max_row)
        return static_cast<double>(min_row);

    long double lo = static_cast<long double>(min_row);
    long double hi = static_cast<long double>(max_row);
    while (hi - lo > 1e-12L) {
        const long double mid = (lo + hi) / 2.0L;
        if (mid <= lo || mid >= hi)
            break;
        if (detail::above_perron_root(q.entries, mid))
            hi = mid;
        else
            lo = mid;
    }
    return static_cast<double>((lo + hi) / 2.0L);
}

/// Characteristic polynomial det(xI - M) of an integer matrix, highest degree first (Faddeev-LeVerrier).
inline std::vector<std::int64_t> characteristic_polynomial(const std::vector<std::vector<std::int64_t>>& m)
{
    const std::size_t k = m.size();
    using Wide = __int128;
    std::vector<std::vector<Wide>> cur(k, std::vector<Wide>(k, 0));
    std::vector<Wide> coeffs{1};
    for (std::size_t step = 1; step <= k; ++step) {
        // cur <- M * cur + c_{step-1} I
        std::vector<std::vector<Wide>> next(k, std::vector<Wide>(k, 0));
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) {
                Wide sum = 0;
                for (std::size_t l = 0; l < k; ++l)
                    sum += static_cast<Wide>(m[i][l]) * cur[l][j];
                next[i][j] = sum + (i == j ? coeffs.back() : 0);
            }
        cur = std::move(next);
        Wide trace = 0;
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t l = 0; l < k; ++l)
                trace += static_cast<Wide>(m[i][l]) * cur[l][i];
        coeffs.push_back(-trace / static_cast<Wide>(step));
    }
    std::vector<std::int64_t> out;
    for (Wide c : coeffs) {
        if (c > std::numeric_limits<std::int64_t>::max() || c < std::numeric_limits<std::int64_t>::min())
            throw Error(ErrorCode::TooLarge, "characteristic polynomial coefficient overflows 64 bits");
        out.push_back(static_cast<std::int64_t>(c));
    }
    return out;
}

namespace detail {

inline std::int64_t checked_mul(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_mul_overflow(x, y, &r))
        throw Error(ErrorCode::TooLarge, "integer overflow in polynomial arithmetic");
    return r;
}

inline std::int64_t checked_add(std::int64_t x, std::int64_t y)
{
    std::int64_t r;
    if (__builtin_add_overflow(x, y, &r))
        throw Error(ErrorCode::TooLarge, "integer overflow in polynomial arithmetic");
    return r;
}

} // namespace detail

/// Monic cubic x^3 + c[1] x^2 + c[2] x + c[3] with exact integer evaluation.
struct CubicPoly {
    std::array<std::int64_t, 4> coeffs{1, 0, 0, 0};

    std::int64_t operator()(std::int64_t x) const
    {
        std::int64_t acc = coeffs[0];
        for (std::size_t i = 1; i < coeffs.size(); ++i)
            acc = detail::checked_add(detail::checked_mul(acc, x), coeffs[i]);
        return acc;
    }

    double operator()(double x) const
    {
        double acc = static_cast<double>(coeffs[0]);
        for (std::size_t i = 1; i < coeffs.size(); ++i)
            acc = acc * x + static_cast<double>(coeffs[i]);
        return acc;
    }

    /// Sum of the roots.
    std::int64_t root_sum() const { return -coeffs[1]; }
};

/**
 * Characteristic polynomial of the quotient of K_s v (K_{n-b-s-1} u (b+1)K_1):
 * x^3 - (n-b-3)x^2 - (n+bs+s-b-2)x - b^2 s + bns - bs^2 - 3bs + ns - s^2 - 2s.
 */
struct BookPolynomial {
    CubicPoly poly;
    /// P(n-b-1); positive under the bound's hypotheses.
    std::int64_t at_n_b_1 = 0;
    /// P(n-b-2) = -(b+1)s^2.
    std::int64_t at_n_b_2 = 0;
};

inline BookPolynomial lemma27_poly(std::int64_t n, std::int64_t s, std::int64_t b)
{
    using detail::checked_add;
    using detail::checked_mul;
    BookPolynomial out;
    const std::int64_t bs = checked_mul(b, s);
    out.poly.coeffs[0] = 1;
    out.poly.coeffs[1] = -(n - b - 3);
    out.poly.coeffs[2] = -(checked_add(checked_add(n, bs), s) - b - 2);
    std::int64_t c = -checked_mul(checked_mul(b, b), s);
    c = checked_add(c, checked_mul(bs, n));
    c = checked_add(c, -checked_mul(bs, s));
    c = checked_add(c, -checked_mul(3, bs));
    c = checked_add(c, checked_mul(n, s));
    c = checked_add(c, -checked_mul(s, s));
    c = checked_add(c, -checked_mul(2, s));
    out.poly.coeffs[3] = c;
    out.at_n_b_1 = out.poly(n - b - 1);
    out.at_n_b_2 = out.poly(n - b - 2);
    return out;
}

/**
 * Moves the edges {vj v : v in S} to {vi v : v in S}. Requires S nonempty,
 * vi != vj, vi not in S, and S inside N(vj) \ N(vi).
 */
inline Graph edge_rotation(const Graph& g, int vi, int vj, const VertexSet& moved)
{
    if (vi < 0 || vj < 0 || vi >= g.order() || vj >= g.order() || vi == vj)
        throw Error(ErrorCode::BadRotation, "rotation needs two distinct vertices of G");
    if (moved.empty())
        throw Error(ErrorCode::BadRotation, "rotation set is empty");
    if (moved.contains(vi))
        throw Error(ErrorCode::BadRotation, "rotation set contains the receiving vertex");
    if (!moved.is_subset_of(g.neighbors(vj)) || moved.intersects(g.neighbors(vi)))
        throw Error(ErrorCode::BadRotation, "rotation set must lie in N(vj) \\ N(vi)");
    GraphBuilder b(g);
    moved.for_each([&](int v) {
        b.remove_edge(vj, v);
        b.add_edge(vi, v);
    });
    return b.build();
}

/// Every vertex has degree delta or n-1 (regular graphs included).
inline bool is_regular_or_bidegree(const Graph& g)
{
    const int delta = min_degree(g);
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) != delta && g.degree(v) != g.order() - 1)
            return false;
    return true;
}

} // namespace factorlab
