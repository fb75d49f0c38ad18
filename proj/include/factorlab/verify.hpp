#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "constructions.hpp"
#include "error.hpp"
#include "factor.hpp"
#include "graph.hpp"
#include "graph6.hpp"
#include "matching.hpp"
#include "parallel.hpp"
#include "random.hpp"
#include "spectral.hpp"

namespace factorlab {

/// Strict-inequality margin for claims of the form rho(X) < rho(Y).
inline constexpr double strict_margin = 1e-10;
/// Two numerically computed values the theory says are equal must agree to this.
inline constexpr double equality_band = 1e-8;

/// A CSV-shaped result: one row per checked point, with a failure count and key/value summary.
struct Table {
    std::vector<std::string> columns;
    std::vector<std::vector<std::string>> rows;
    std::size_t failures = 0;
    /// False for surveys, whose failures are findings rather than errors.
    bool assertable = true;
    std::vector<std::pair<std::string, std::string>> summary;

    bool passed() const { return !assertable || failures == 0; }
};

inline std::string format_real(double x)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

inline std::string format_bool(bool b) { return b ? "true" : "false"; }

inline std::string csv_escape(const std::string& field)
{
    if (field.find_first_of(",\"\n") == std::string::npos)
        return field;
    std::string out = "\"";
    for (char c : field) {
        if (c == '"')
            out.push_back('"');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

inline std::string to_csv(const Table& table)
{
    std::string out;
    auto line = [&out](const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i)
                out.push_back(',');
            out += csv_escape(fields[i]);
        }
        out.push_back('\n');
    };
    line(table.columns);
    for (const auto& row : table.rows)
        line(row);
    return out;
}

inline std::string format_set(const VertexSet& s)
{
    std::string out = "{";
    bool first = true;
    s.for_each([&](int v) {
        if (!first)
            out += ' ';
        out += std::to_string(v);
        first = false;
    });
    return out + "}";
}

// ---------------------------------------------------------------------------
// G_n^a recognition

struct GnaRecognition {
    bool is_gna = false;
    /// clique_small, clique_big, indep, w (original labels) when is_gna.
    std::vector<VertexSet> blocks;
};

/**
 * Structural test for G ~= G_n^a: try each vertex w of degree a+1 whose
 * neighbours are independent and of degree a, take the vertices adjacent to
 * all of N(w) as the small clique, the rest as the big clique, and compare
 * the remapped adjacency with g_na(n, a) exactly.
 */
inline GnaRecognition recognize_gna(const Graph& g, int a)
{
    GnaRecognition result;
    const int n = g.order();
    if (a < 2 || n < 2 * a + 3 || g.size() != g_na_edge_count(n, a))
        return result;
    const Graph reference = g_na(n, a).graph;

    for (int w = 0; w < n; ++w) {
        if (g.degree(w) != a + 1)
            continue;
        const VertexSet indep = g.neighbors(w);
        bool ok = true;
        indep.for_each([&](int x) { ok = ok && g.degree(x) == a && !g.neighbors(x).intersects(indep); });
        if (!ok)
            continue;

        VertexSet small(n);
        VertexSet big(n);
        for (int v = 0; v < n; ++v) {
            if (v == w || indep.contains(v))
                continue;
            if (indep.is_subset_of(g.neighbors(v)))
                small.insert(v);
            else
                big.insert(v);
        }
        if (small.size() != a - 1 || big.size() != n - 2 * a - 1)
            continue;

        std::vector<int> perm(static_cast<std::size_t>(n));
        int next = 0;
        for (const VertexSet* block : std::initializer_list<const VertexSet*>{&small, &big, &indep})
            block->for_each([&](int v) { perm[static_cast<std::size_t>(v)] = next++; });
        perm[static_cast<std::size_t>(w)] = next;
        if (relabel(g, perm) == reference) {
            VertexSet wset(n);
            wset.insert(w);
            result.is_gna = true;
            result.blocks = {small, big, indep, wset};
            return result;
        }
    }
    return result;
}

// ---------------------------------------------------------------------------
// Cross-oracle sweep

struct CorpusEntry {
    std::string id;
    Graph graph;
};

inline std::vector<CorpusEntry> to_corpus(const std::vector<Graph6Record>& records)
{
    std::vector<CorpusEntry> out;
    out.reserve(records.size());
    for (const auto& r : records)
        out.push_back({r.text, r.graph});
    return out;
}

inline const std::vector<ParityParams>& default_oracle_params()
{
    static const std::vector<ParityParams> params{{1, 1}, {1, 3}, {2, 2}, {2, 4}, {3, 3}, {3, 5}};
    return params;
}

struct OracleOptions {
    std::vector<ParityParams> params = default_oracle_params();
    /// Also compare (1,1) against perfect-matching existence.
    bool matching_check = true;
    DecideOptions decide{true, 18, 40};
    int jobs = 1;
};

struct OracleRow {
    std::string id;
    int n = 0;
    std::int64_t m = 0;
    ParityParams params;
    std::string criterion;
    std::string search;
    std::string matching;
    bool agree = false;
    std::string detail;
};

struct OracleReport {
    std::vector<OracleRow> rows;
    std::size_t skipped = 0;
    std::size_t disagreements = 0;
    std::size_t errors = 0;

    Table table() const
    {
        Table t;
        t.columns = {"graph6", "n", "m", "a", "b", "criterion", "search", "matching", "agree", "detail"};
        for (const auto& r : rows)
            t.rows.push_back({r.id, std::to_string(r.n), std::to_string(r.m), std::to_string(r.params.a),
                              std::to_string(r.params.b), r.criterion, r.search, r.matching,
                              format_bool(r.agree), r.detail});
        t.failures = disagreements + errors;
        t.summary = {{"checked", std::to_string(rows.size())},
                     {"skipped", std::to_string(skipped)},
                     {"disagreements", std::to_string(disagreements)},
                     {"errors", std::to_string(errors)}};
        return t;
    }
};

namespace detail {

inline OracleRow oracle_row(const CorpusEntry& entry, const ParityParams& p, const OracleOptions& options)
{
    OracleRow row{entry.id, entry.graph.order(), entry.graph.size(), p, "", "", "", false, ""};
    try {
        const auto by_criterion = decide_by_criterion(entry.graph, p, options.decide);
        const auto by_search = decide_by_search(entry.graph, p, true, options.decide);
        row.criterion = by_criterion.exists ? "exists" : "nofactor";
        row.search = by_search.exists ? "exists" : "nofactor";
        row.agree = by_criterion.exists == by_search.exists;

        if (by_criterion.witness) {
            const auto& w = *by_criterion.witness;
            const auto again = evaluate(entry.graph, w.s, w.t, p);
            row.detail = "S=" + format_set(w.s) + " T=" + format_set(w.t) + " eta=" + std::to_string(w.eta) +
                         " q=" + std::to_string(w.q);
            if (again.eta > -2 || again.eta != w.eta) {
                row.agree = false;
                row.detail += " unsound-witness";
            }
        }
        if (by_search.certificate && !verify_certificate(entry.graph, *by_search.certificate, p)) {
            row.agree = false;
            row.detail += " invalid-certificate";
        }
        if (options.matching_check && p.a == 1 && p.b == 1) {
            const bool perfect = has_perfect_matching(entry.graph);
            row.matching = perfect ? "perfect" : "none";
            row.agree = row.agree && perfect == by_criterion.exists;
        }
    } catch (const Error& e) {
        row.criterion = row.criterion.empty() ? "error" : row.criterion;
        row.search = row.search.empty() ? "error" : row.search;
        row.detail = e.what();
        row.agree = false;
    }
    return row;
}

} // namespace detail

/**
 * Runs both deciders on every (graph, params) pair whose parity
 * preconditions hold and reports every disagreement, unsound witness or
 * invalid certificate. Per-graph errors are recorded, not propagated.
 */
inline OracleReport sweep_oracle_equivalence(const std::vector<CorpusEntry>& corpus,
                                             const OracleOptions& options = {})
{
    std::vector<std::pair<std::size_t, ParityParams>> work;
    OracleReport report;
    for (std::size_t i = 0; i < corpus.size(); ++i)
        for (const auto& p : options.params) {
            if (is_valid_for(p, corpus[i].graph.order()))
                work.emplace_back(i, p);
            else
                ++report.skipped;
        }

    report.rows.resize(work.size());
    parallel_for(work.size(), options.jobs, [&](std::size_t k) {
        report.rows[k] = detail::oracle_row(corpus[work[k].first], work[k].second, options);
    });
    for (const auto& r : report.rows) {
        if (r.criterion == "error" || r.search == "error")
            ++report.errors;
        else if (!r.agree)
            ++report.disagreements;
    }
    return report;
}

// ---------------------------------------------------------------------------
// Desk-scale survey of the spectral condition for parity factors

/// n from which the spectral condition is claimed, for the stated and the alternative a-term.
inline std::pair<std::int64_t, std::int64_t> theorem_thresholds(std::int64_t a, std::int64_t b)
{
    const std::int64_t b_term = 2 * b * b + 5 * a * b + 7 * b + 34;
    return {std::max(2 * a * a + 136 * a + 264, b_term), std::max(2 * a * a + 136 * a + 164, b_term)};
}

inline const std::vector<double>& default_p_grid()
{
    static const std::vector<double> grid{0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    return grid;
}

struct SurveyOptions {
    int n = 12;
    int a = 2;
    int b = 4;
    std::size_t samples = 10'000;
    std::uint64_t seed = 1;
    int jobs = 1;
    std::vector<double> p_grid = default_p_grid();
    int attempts_per_p = 2'000;
    /// "criterion" or "search".
    std::string method = "criterion";
};

struct SurveyRecord {
    std::size_t index = 0;
    std::string source;
    double p = 0.0;
    std::string graph6;
    int n = 0;
    std::int64_t m = 0;
    int delta = 0;
    bool has_factor = false;
    double rho = 0.0;
    double rho_extremal = 0.0;
    /// factor | below | extremal | boundary | exception
    std::string classification;
    std::string evidence;
};

struct SurveyReport {
    std::vector<SurveyRecord> records;
    std::vector<std::pair<std::string, std::string>> summary;
    std::size_t exceptions = 0;

    Table table() const
    {
        Table t;
        t.assertable = false;
        t.columns = {"index", "source", "p", "graph6", "n", "m", "delta", "has_factor", "rho",
                     "rho_extremal", "classification", "evidence"};
        for (const auto& r : records)
            t.rows.push_back({std::to_string(r.index), r.source, format_real(r.p), r.graph6, std::to_string(r.n),
                              std::to_string(r.m), std::to_string(r.delta), format_bool(r.has_factor),
                              format_real(r.rho), format_real(r.rho_extremal), r.classification, r.evidence});
        t.failures = exceptions;
        t.summary = summary;
        return t;
    }
};

namespace detail {

/// Decides a survey graph; fills has_factor and evidence.
inline void survey_decide(const Graph& g, const SurveyOptions& options, SurveyRecord& rec)
{
    const ParityParams p{options.a, options.b};
    const DecideOptions decide{true, 18, 40};
    if (options.method == "search") {
        const auto v = decide_by_search(g, p, true, decide);
        rec.has_factor = v.exists;
        rec.evidence = v.exists ? "certificate:" + std::to_string(v.certificate->edges.size()) + " edges"
                                : "search:exhausted";
    } else {
        const auto v = decide_by_criterion(g, p, decide);
        rec.has_factor = v.exists;
        rec.evidence = v.exists ? "criterion:eta>=0 everywhere"
                                : "S=" + format_set(v.witness->s) + " T=" + format_set(v.witness->t) +
                                      " eta=" + std::to_string(v.witness->eta);
    }
}

inline Graph survey_sample(const SurveyOptions& options, std::size_t index, double& p_used)
{
    Rng rng(derive_seed(options.seed, index));
    const std::size_t k = options.p_grid.size();
    for (std::size_t shift = 0; shift < k; ++shift) {
        const double p = options.p_grid[(index + shift) % k];
        if (auto g = sample_connected_min_degree(options.n, p, options.a, rng, options.attempts_per_p)) {
            p_used = p;
            return *g;
        }
    }
    throw Error(ErrorCode::SamplerExhausted, "no connected sample with minimum degree >= " +
                                                 std::to_string(options.a) + " at n=" + std::to_string(options.n));
}

} // namespace detail

/**
 * Samples connected graphs with minimum degree >= a (G(n,p) over the p grid,
 * per-sample seeds derived from the master seed) plus g_na(n,a) itself as
 * record 0, decides parity [a,b]-factor existence for each, and classifies
 * every factor-free graph against rho(g_na(n,a)). A factor-free graph above
 * the band that is not G_n^a is recorded as an exception: below the
 * theorem's n-threshold that is a finding, not a failure.
 */
inline SurveyReport survey_theorem(const SurveyOptions& options)
{
    validate(ParityParams{options.a, options.b}, options.n);
    if (options.a < 2 || options.a >= options.b)
        throw Error(ErrorCode::BadParams, "survey needs 2 <= a < b");
    if (options.p_grid.empty())
        throw Error(ErrorCode::BadParams, "survey needs a nonempty p grid");

    const auto extremal = g_na(options.n, options.a);
    const double rho_ext = spectral_radius(extremal.graph).rho;

    SurveyReport report;
    report.records.resize(options.samples + 1);
    parallel_for(options.samples + 1, options.jobs, [&](std::size_t i) {
        SurveyRecord& rec = report.records[i];
        Graph g;
        if (i == 0) {
            g = extremal.graph;
            rec.source = "construction";
        } else {
            g = detail::survey_sample(options, i, rec.p);
            rec.source = "sample";
        }
        rec.index = i;
        rec.graph6 = to_graph6(g);
        rec.n = g.order();
        rec.m = g.size();
        rec.delta = min_degree(g);
        rec.rho = spectral_radius(g).rho;
        rec.rho_extremal = rho_ext;
        detail::survey_decide(g, options, rec);

        if (rec.has_factor) {
            rec.classification = "factor";
        } else if (recognize_gna(g, options.a).is_gna) {
            rec.classification = "extremal";
        } else if (std::abs(rec.rho - rho_ext) <= equality_band) {
            rec.classification = "boundary";
        } else if (rec.rho > rho_ext) {
            rec.classification = "exception";
        } else {
            rec.classification = "below";
        }
    });

    std::size_t factor_count = 0;
    std::size_t boundary = 0;
    double max_free = -1.0;
    for (const auto& r : report.records) {
        factor_count += r.has_factor ? 1 : 0;
        boundary += r.classification == "boundary" ? 1 : 0;
        report.exceptions += r.classification == "exception" ? 1 : 0;
        if (!r.has_factor)
            max_free = std::max(max_free, r.rho);
    }
    const auto& first = report.records.front();
    const auto [theorem_n, proof_n] = theorem_thresholds(options.a, options.b);
    const double clique_bound = options.n - options.a - 3;
    report.summary = {
        {"n", std::to_string(options.n)},
        {"a", std::to_string(options.a)},
        {"b", std::to_string(options.b)},
        {"samples", std::to_string(options.samples)},
        {"seed", std::to_string(options.seed)},
        {"method", options.method},
        {"records", std::to_string(report.records.size())},
        {"factor_count", std::to_string(factor_count)},
        {"factor_free_count", std::to_string(report.records.size() - factor_count)},
        {"max_rho_factor_free", format_real(max_free)},
        {"rho_extremal", format_real(rho_ext)},
        {"clique_bound", format_real(clique_bound)},
        {"rho_extremal_exceeds_clique_bound", format_bool(rho_ext > clique_bound + strict_margin)},
        {"extremal_included_factor_free", format_bool(!first.has_factor && first.delta == options.a)},
        {"boundary", std::to_string(boundary)},
        {"exceptions", std::to_string(report.exceptions)},
        {"consistent_with_theorem", format_bool(report.exceptions == 0)},
        {"theorem_min_n", std::to_string(theorem_n)},
        {"theorem_min_n_alt_164", std::to_string(proof_n)},
        {"below_threshold", format_bool(options.n < theorem_n)},
    };
    return report;
}

// ---------------------------------------------------------------------------
// Property grids

struct GridOptions {
    std::uint64_t seed = 1;
    /// Random trials for the sampled suites (lemma2.1, lemma2.2, lemma2.4, eq1); 0 picks the suite default.
    std::size_t samples = 0;
    int jobs = 1;
};

namespace detail {

inline std::size_t samples_or(const GridOptions& o, std::size_t fallback)
{
    return o.samples ? o.samples : fallback;
}

inline void add_row(Table& t, std::vector<std::string> row, bool pass)
{
    row.push_back(format_bool(pass));
    t.rows.push_back(std::move(row));
    if (!pass)
        ++t.failures;
}

/// Connected G(n,p) with n in [lo_n, hi_n], p uniform in [0.15, 0.85], min degree >= 1.
inline Graph random_connected(Rng& rng, int lo_n, int hi_n)
{
    for (;;) {
        const int n = static_cast<int>(rng.between(lo_n, hi_n));
        const double p = 0.15 + 0.7 * rng.uniform();
        if (auto g = sample_connected_min_degree(n, p, 1, rng, 200))
            return *g;
    }
}

} // namespace detail

/// rho <= Hong-Nikiforov bound on sampled graphs; equality for regular and (delta, n-1)-bidegree graphs.
inline Table degree_bound_table(const GridOptions& o = {})
{
    const std::size_t count = detail::samples_or(o, 10'000);
    const std::size_t extremal = std::max<std::size_t>(count / 20, 10);
    Table t;
    t.columns = {"kind", "index", "n", "m", "delta", "rho", "bound", "margin", "pass"};
    std::vector<std::vector<std::string>> rows(count + 2 * extremal);
    std::vector<char> pass(rows.size());

    parallel_for(rows.size(), o.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(o.seed, i));
        std::string kind;
        Graph g;
        if (i < count) {
            kind = "sampled";
            for (;;) {
                const int n = static_cast<int>(rng.between(2, 24));
                g = gnp(n, 0.1 + 0.8 * rng.uniform(), rng);
                if (min_degree(g) >= 1)
                    break;
            }
        } else if (i < count + extremal) {
            kind = "regular";
            int n, d;
            do {
                n = static_cast<int>(rng.between(3, 24));
                d = static_cast<int>(rng.between(1, n - 1));
            } while ((n * d) % 2 != 0);
            g = random_regular(n, d, rng);
        } else {
            // K_k joined with an r-regular graph: degrees are n-1 and r+k.
            kind = "bidegree";
            int k, rest, r;
            do {
                k = static_cast<int>(rng.between(1, 4));
                rest = static_cast<int>(rng.between(3, 18));
                r = static_cast<int>(rng.between(1, rest - 2));
            } while ((rest * r) % 2 != 0);
            g = join(complete(k), random_regular(rest, r, rng));
        }
        const int delta = min_degree(g);
        const double rho = spectral_radius(g).rho;
        const double bound = hong_nikiforov_bound(g.order(), g.size(), delta);
        const bool ok = kind == "sampled" ? rho <= bound + 1e-9 : std::abs(rho - bound) <= 1e-7;
        rows[i] = {kind, std::to_string(i), std::to_string(g.order()), std::to_string(g.size()),
                   std::to_string(delta), format_real(rho), format_real(bound), format_real(bound - rho)};
        pass[i] = ok;
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        detail::add_row(t, std::move(rows[i]), pass[i]);
    return t;
}

/// Monotonicity of f(x) over x in [0, n-1] (step 1/4) for every feasible (n, m) with n <= n_max.
inline Table bound_monotonicity_table(int n_max = 30)
{
    Table t;
    t.columns = {"n", "m", "points_in_domain", "f_first", "f_last", "pass"};
    for (int n = 2; n <= n_max; ++n) {
        std::vector<double> grid;
        for (int k = 0; k <= 4 * (n - 1); ++k)
            grid.push_back(k / 4.0);
        for (std::int64_t m = 0; 2 * m <= static_cast<std::int64_t>(n) * (n - 1); ++m) {
            std::vector<double> values;
            for (double x : grid) {
                const double f = hong_nikiforov_f(n, m, x);
                if (!std::isnan(f))
                    values.push_back(f);
            }
            const bool ok = f_monotone_check(n, m, grid);
            detail::add_row(t,
                            {std::to_string(n), std::to_string(m), std::to_string(values.size()),
                             values.empty() ? "" : format_real(values.front()),
                             values.empty() ? "" : format_real(values.back())},
                            ok);
        }
    }
    return t;
}

/// Quotient rho against full-graph rho for the book family and g_na grids.
inline Table quotient_equality_table(int book_n_max = 200, int gna_n_max = 40, int jobs = 1)
{
    struct Point {
        std::string family;
        int n, x, y;
    };
    std::vector<Point> points;
    for (int s = 1; s <= 5; ++s)
        for (int b = 4; b <= 9; ++b)
            for (int n = std::max(2 * b, (b + 1) * s + 1); n <= book_n_max; ++n)
                points.push_back({"book", n, s, b});
    for (int a = 2; a <= 5; ++a)
        for (int n = 2 * a + 4; n <= gna_n_max; ++n)
            if ((n * a) % 2 == 0)
                points.push_back({"g_na", n, a, a + 2});

    Table t;
    t.columns = {"family", "n", "s_or_a", "b", "quotient_rho", "full_rho", "abs_diff", "pass"};
    std::vector<std::vector<std::string>> rows(points.size());
    std::vector<char> pass(points.size());
    parallel_for(points.size(), jobs, [&](std::size_t i) {
        const auto& pt = points[i];
        const auto c = pt.family == "book" ? book_family(pt.n, pt.x, pt.y) : g_na(pt.n, pt.x);
        const auto q = quotient(c.graph, c.parts());
        const auto* matrix = std::get_if<QuotientMatrix>(&q);
        const double qr = matrix ? quotient_rho(*matrix) : std::nan("");
        const double fr = spectral_radius(c.graph).rho;
        rows[i] = {pt.family, std::to_string(pt.n), std::to_string(pt.x), std::to_string(pt.y), format_real(qr),
                   format_real(fr), format_real(std::abs(qr - fr))};
        pass[i] = matrix != nullptr && std::abs(qr - fr) <= equality_band;
    });
    for (std::size_t i = 0; i < rows.size(); ++i)
        detail::add_row(t, std::move(rows[i]), pass[i]);
    return t;
}

/// Nonincreasing sequences of exactly `parts` positive integers summing to `total`.
inline std::vector<std::vector<int>> compositions_nonincreasing(int total, int parts)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int, int, int)> rec = [&](int left, int slots, int cap) {
        if (slots == 0) {
            if (left == 0)
                out.push_back(cur);
            return;
        }
        for (int v = std::min(cap, left - (slots - 1)); v >= 1; --v) {
            if (v * slots < left)
                break;
            cur.push_back(v);
            rec(left - v, slots - 1, v);
            cur.pop_back();
        }
    };
    if (parts >= 1 && total >= parts)
        rec(total, parts, total);
    return out;
}

/// K_s v (K_{n_1} u ... u K_{n_q}) is maximised (strictly) by the composition (n-s-q+1, 1, ..., 1).
inline Table clique_composition_table(int n_max = 14, int s_max = 3, int q_max = 4)
{
    Table t;
    t.columns = {"n", "s", "q", "composition", "rho", "rho_extreme", "margin", "is_extreme", "pass"};
    for (int s = 1; s <= s_max; ++s)
        for (int q = 1; q <= q_max; ++q)
            for (int n = s + q; n <= n_max; ++n) {
                std::vector<int> extreme_sizes(static_cast<std::size_t>(q), 1);
                extreme_sizes[0] = n - s - q + 1;
                const double rho_ext = spectral_radius(clique_join_union(s, extreme_sizes).graph).rho;
                for (const auto& comp : compositions_nonincreasing(n - s, q)) {
                    const bool is_extreme = comp == extreme_sizes;
                    const double rho = spectral_radius(clique_join_union(s, comp).graph).rho;
                    std::string label;
                    for (std::size_t i = 0; i < comp.size(); ++i)
                        label += (i ? " " : "") + std::to_string(comp[i]);
                    const bool ok = is_extreme ? std::abs(rho_ext - rho) <= equality_band
                                               : rho_ext - rho > strict_margin;
                    detail::add_row(t,
                                    {std::to_string(n), std::to_string(s), std::to_string(q), label,
                                     format_real(rho), format_real(rho_ext), format_real(rho_ext - rho),
                                     format_bool(is_extreme)},
                                    ok);
                }
            }
    return t;
}

/**
 * Book-family bound: exact P(n-b-2) = -(b+1)s^2, P(n-b-1) > 0, the quotient
 * matches the displayed 3x3 matrix, and quotient rho < n-b-1 by the strict margin.
 */
inline Table book_bound_table(int n_max = 200)
{
    Table t;
    t.columns = {"n", "s", "b", "P(n-b-2)", "-(b+1)s^2", "P(n-b-1)", "quotient_rho", "n-b-1", "margin", "pass"};
    for (int s = 1; s <= 5; ++s)
        for (int b = 4; b <= 9; ++b)
            for (int n = std::max(2 * b, (b + 1) * s + 1); n <= n_max; ++n) {
                const auto poly = lemma27_poly(n, s, b);
                const std::int64_t expected = -static_cast<std::int64_t>(b + 1) * s * s;
                const auto c = book_family(n, s, b);
                const auto q = quotient(c.graph, c.parts());
                const auto* matrix = std::get_if<QuotientMatrix>(&q);
                const std::vector<std::vector<std::int64_t>> displayed{
                    {s - 1, n - b - s - 1, b + 1}, {s, n - b - s - 2, 0}, {s, 0, 0}};
                const double rho = matrix ? quotient_rho(*matrix) : std::nan("");
                const double limit = n - b - 1;
                const bool ok = poly.at_n_b_2 == expected && poly.at_n_b_1 > 0 && matrix &&
                                matrix->entries == displayed && limit - rho > strict_margin;
                detail::add_row(t,
                                {std::to_string(n), std::to_string(s), std::to_string(b),
                                 std::to_string(poly.at_n_b_2), std::to_string(expected),
                                 std::to_string(poly.at_n_b_1), format_real(rho), format_real(limit),
                                 format_real(limit - rho)},
                                ok);
            }
    return t;
}

/**
 * g_na has no parity [a,a+2]-factor: eta(empty, indep) = -2 and q = 2 on the
 * whole grid, and both deciders say so for n <= decide_n_max.
 */
inline Table gna_no_factor_table(int n_max = 40, int decide_n_max = 14)
{
    Table t;
    t.columns = {"a", "b", "n", "eta", "q", "deg_sum", "criterion", "search", "pass"};
    for (int a = 2; a <= 5; ++a) {
        const int b = a + 2;
        for (int n = 2 * a + 4; n <= n_max; ++n) {
            if ((n * a) % 2 != 0)
                continue;
            const auto c = g_na(n, a);
            const ParityParams p{a, b};
            const auto w = evaluate(c.graph, VertexSet(n), c.block("indep"), p);
            bool ok = w.eta == -2 && w.q == 2;
            std::string crit = "-";
            std::string search = "-";
            if (n <= decide_n_max) {
                const DecideOptions forced{true, 18, 40};
                const auto vc = decide_by_criterion(c.graph, p, forced);
                const auto vs = decide_by_search(c.graph, p, true, forced);
                crit = vc.exists ? "exists" : "nofactor";
                search = vs.exists ? "exists" : "nofactor";
                ok = ok && !vc.exists && !vs.exists && vc.witness && vc.witness->eta <= -2;
            }
            detail::add_row(t,
                            {std::to_string(a), std::to_string(b), std::to_string(n), std::to_string(w.eta),
                             std::to_string(w.q), std::to_string(w.deg_sum), crit, search},
                            ok);
        }
    }
    return t;
}

/// Random (G, S, T, a, b) under the parity preconditions; eta must always be even.
inline Table eta_parity_table(const GridOptions& o = {})
{
    const std::size_t count = detail::samples_or(o, 100'000);
    Table t;
    t.columns = {"index", "n", "m", "a", "b", "s_size", "t_size", "q", "eta", "pass"};
    std::vector<std::vector<std::string>> rows(count);
    std::vector<char> pass(count);
    parallel_for(count, o.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(o.seed, i));
        const int n = static_cast<int>(rng.between(1, 16));
        const Graph g = gnp(n, 0.1 + 0.8 * rng.uniform(), rng);
        int a = static_cast<int>(rng.between(1, 5));
        if ((n * a) % 2 != 0)
            ++a;
        const int b = a + 2 * static_cast<int>(rng.between(0, 2));
        VertexSet s(n);
        VertexSet tt(n);
        for (int v = 0; v < n; ++v) {
            const auto r = rng.between(0, 2);
            if (r == 0)
                s.insert(v);
            else if (r == 1)
                tt.insert(v);
        }
        const auto w = evaluate(g, s, tt, ParityParams{a, b});
        rows[i] = {std::to_string(i), std::to_string(n), std::to_string(g.size()), std::to_string(a),
                   std::to_string(b), std::to_string(s.size()), std::to_string(tt.size()), std::to_string(w.q),
                   std::to_string(w.eta)};
        pass[i] = w.eta % 2 == 0;
    });
    for (std::size_t i = 0; i < count; ++i)
        detail::add_row(t, std::move(rows[i]), pass[i]);
    return t;
}

/// Deleting a non-bridge edge of a connected graph strictly lowers rho.
inline Table subgraph_monotonicity_table(const GridOptions& o = {})
{
    const std::size_t count = detail::samples_or(o, 1'000);
    Table t;
    t.columns = {"index", "n", "m", "edge", "rho", "rho_subgraph", "margin", "pass"};
    std::vector<std::vector<std::string>> rows(count);
    std::vector<char> pass(count);
    parallel_for(count, o.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(o.seed, i));
        for (;;) {
            const Graph g = detail::random_connected(rng, 3, 20);
            auto edges = g.edges();
            rng.shuffle(edges);
            for (auto [u, v] : edges) {
                GraphBuilder b(g);
                b.remove_edge(u, v);
                const Graph h = b.build();
                if (!is_connected(h))
                    continue;
                const double rho = spectral_radius(g).rho;
                const double rho_h = spectral_radius(h).rho;
                rows[i] = {std::to_string(i), std::to_string(g.order()), std::to_string(g.size()),
                           std::to_string(u) + "-" + std::to_string(v), format_real(rho), format_real(rho_h),
                           format_real(rho - rho_h)};
                pass[i] = rho - rho_h > strict_margin;
                return;
            }
        }
    });
    for (std::size_t i = 0; i < count; ++i)
        detail::add_row(t, std::move(rows[i]), pass[i]);
    return t;
}

/// Rotations toward a vertex with larger Perron entry strictly raise rho.
inline Table rotation_table(const GridOptions& o = {})
{
    const std::size_t count = detail::samples_or(o, 1'000);
    Table t;
    t.columns = {"index", "n", "m", "vi", "vj", "x_vi", "x_vj", "moved", "rho", "rho_rotated", "margin", "pass"};
    std::vector<std::vector<std::string>> rows(count);
    std::vector<char> pass(count);
    parallel_for(count, o.jobs, [&](std::size_t i) {
        Rng rng(derive_seed(o.seed, i));
        for (;;) {
            const Graph g = detail::random_connected(rng, 4, 16);
            const auto base = spectral_radius(g);
            std::vector<std::pair<int, int>> candidates;
            for (int vi = 0; vi < g.order(); ++vi)
                for (int vj = 0; vj < g.order(); ++vj) {
                    if (vi == vj || base.perron[static_cast<std::size_t>(vi)] < base.perron[static_cast<std::size_t>(vj)])
                        continue;
                    VertexSet room = g.neighbors(vj) - g.neighbors(vi);
                    room.erase(vi);
                    if (!room.empty())
                        candidates.emplace_back(vi, vj);
                }
            if (candidates.empty())
                continue;
            const auto [vi, vj] = candidates[static_cast<std::size_t>(
                rng.between(0, static_cast<std::int64_t>(candidates.size()) - 1))];
            VertexSet room = g.neighbors(vj) - g.neighbors(vi);
            room.erase(vi);
            VertexSet moved(g.order());
            while (moved.empty())
                room.for_each([&](int v) {
                    if (rng.bernoulli(0.5))
                        moved.insert(v);
                });
            const double rotated = spectral_radius(edge_rotation(g, vi, vj, moved)).rho;
            rows[i] = {std::to_string(i), std::to_string(g.order()), std::to_string(g.size()), std::to_string(vi),
                       std::to_string(vj), format_real(base.perron[static_cast<std::size_t>(vi)]),
                       format_real(base.perron[static_cast<std::size_t>(vj)]), format_set(moved),
                       format_real(base.rho), format_real(rotated), format_real(rotated - base.rho)};
            pass[i] = rotated - base.rho > strict_margin;
            return;
        }
    });
    for (std::size_t i = 0; i < count; ++i)
        detail::add_row(t, std::move(rows[i]), pass[i]);
    return t;
}

inline const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"oracle",   "lemma2.1", "lemma2.2", "lemma2.3", "lemma2.4",
                                                "lemma2.5", "lemma2.6", "lemma2.7", "lemma2.8", "eq1",
                                                "survey"};
    return names;
}

} // namespace factorlab
