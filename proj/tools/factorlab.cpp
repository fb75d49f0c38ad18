// factorlab: command-line front end for constructions, spectral radii,
// parity-factor decisions and the verification suites.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <factorlab/constructions.hpp>
#include <factorlab/factor.hpp>
#include <factorlab/graph6.hpp>
#include <factorlab/spectral.hpp>
#include <factorlab/verify.hpp>

namespace {

using factorlab::Error;
using factorlab::ErrorCode;
using Json = nlohmann::ordered_json;

constexpr int exit_ok = 0;
constexpr int exit_suite_failed = 1;
constexpr int exit_usage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<factorlab::Graph6Record> read_graphs(const std::string& path)
{
    std::vector<factorlab::Graph6Record> records;
    if (path.empty() || path == "-") {
        records = factorlab::read_graph6(std::cin);
    } else {
        std::ifstream in(path);
        if (!in)
            throw UsageError("cannot open " + path);
        records = factorlab::read_graph6(in);
    }
    if (records.empty())
        throw UsageError("no graph6 records on input");
    return records;
}

Json set_json(const factorlab::VertexSet& s)
{
    return Json(s.members());
}

Json construction_json(const factorlab::LabeledConstruction& c)
{
    Json j;
    j["family"] = c.family;
    j["n"] = c.graph.order();
    j["m"] = c.graph.size();
    j["params"] = c.params;
    j["hypotheses"] = c.hypotheses;
    Json blocks = Json::array();
    for (const auto& b : c.blocks)
        blocks.push_back({{"name", b.name}, {"vertices", set_json(b.vertices)}});
    j["blocks"] = blocks;
    j["graph6"] = factorlab::to_graph6(c.graph);
    return j;
}

std::vector<factorlab::VertexSet> parse_blocks(const std::string& path, int n)
{
    std::ifstream in(path);
    if (!in)
        throw UsageError("cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::exception& e) {
        throw UsageError(path + ": " + e.what());
    }
    const Json& list = j.is_object() ? j.at("blocks") : j;
    std::vector<factorlab::VertexSet> parts;
    for (const auto& block : list) {
        const Json& vertices = block.is_object() ? block.at("vertices") : block;
        factorlab::VertexSet s(n);
        for (int v : vertices.get<std::vector<int>>())
            s.insert(v);
        parts.push_back(std::move(s));
    }
    return parts;
}

void write_file(const std::string& path, const std::string& text)
{
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw UsageError("cannot write " + path);
    out << text;
}

// ---------------------------------------------------------------- construct

struct ConstructArgs {
    std::string family;
    int n = 0;
    int a = 2;
    int b = 4;
    int s = 1;
    std::string sidecar;
};

int run_construct(const ConstructArgs& args)
{
    factorlab::LabeledConstruction c;
    if (args.family == "g-na")
        c = factorlab::g_na(args.n, args.a);
    else if (args.family == "h-nab")
        c = factorlab::h_nab(args.n, args.a, args.b);
    else if (args.family == "odd-1b")
        c = factorlab::odd_1b(args.n, args.b);
    else if (args.family == "book")
        c = factorlab::book_family(args.n, args.s, args.b);
    else
        throw UsageError("unknown family " + args.family);

    const Json sidecar = construction_json(c);
    std::cout << factorlab::to_graph6(c.graph) << '\n';
    if (args.sidecar.empty())
        std::cout << sidecar.dump() << '\n';
    else
        write_file(args.sidecar, sidecar.dump(2) + "\n");
    std::cerr << c.family << ": n=" << c.graph.order() << " m=" << c.graph.size() << '\n';
    return exit_ok;
}

// ---------------------------------------------------------------------- rho

struct RhoArgs {
    std::string input;
    double tol = 1e-10;
    std::uint64_t max_iter = 1'000'000;
    std::string quotient;
};

int run_rho(const RhoArgs& args)
{
    for (const auto& rec : read_graphs(args.input)) {
        const auto r = factorlab::spectral_radius(rec.graph, args.tol, args.max_iter);
        Json j;
        j["rho"] = r.rho;
        j["iterations"] = r.iterations;
        j["residual"] = r.residual;
        if (!args.quotient.empty()) {
            const auto outcome = factorlab::quotient(rec.graph, parse_blocks(args.quotient, rec.graph.order()));
            if (const auto* q = std::get_if<factorlab::QuotientMatrix>(&outcome)) {
                j["equitable"] = true;
                j["quotient"] = q->entries;
                j["quotient_rho"] = factorlab::quotient_rho(*q);
            } else {
                const auto& bad = std::get<factorlab::NotEquitable>(outcome);
                j["equitable"] = false;
                j["not_equitable"] = {{"vertex", bad.vertex},
                                      {"part", bad.part},
                                      {"expected", bad.expected},
                                      {"found", bad.found}};
            }
        }
        std::cout << j.dump() << '\n';
    }
    return exit_ok;
}

// ------------------------------------------------------ check-parity-factor

struct CheckArgs {
    std::string input;
    int a = 1;
    int b = 1;
    std::string method = "both";
    bool force = false;
    bool plain = false;
};

Json witness_json(const factorlab::CriterionWitness& w)
{
    return {{"S", set_json(w.s)}, {"T", set_json(w.t)}, {"eta", w.eta}, {"q", w.q}, {"deg_sum", w.deg_sum}};
}

Json certificate_json(const factorlab::FactorCertificate& c)
{
    Json edges = Json::array();
    for (auto [u, v] : c.edges)
        edges.push_back({u, v});
    return {{"edges", edges}, {"degrees", c.degrees}};
}

int run_check(const CheckArgs& args)
{
    if (args.method != "criterion" && args.method != "search" && args.method != "both")
        throw UsageError("--method must be criterion, search or both");
    if (args.plain && args.method != "search")
        throw UsageError("--no-parity is only meaningful with --method search");

    const factorlab::ParityParams params{args.a, args.b};
    factorlab::DecideOptions options;
    options.force = args.force;

    for (const auto& rec : read_graphs(args.input)) {
        Json j;
        j["graph6"] = rec.text;
        j["n"] = rec.graph.order();
        j["m"] = rec.graph.size();
        j["a"] = args.a;
        j["b"] = args.b;
        j["parity"] = !args.plain;
        std::optional<bool> crit;
        std::optional<bool> search;
        if (args.method != "search") {
            const auto v = factorlab::decide_by_criterion(rec.graph, params, options);
            for (const auto& w : v.warnings)
                std::cerr << "warning: " << w << '\n';
            crit = v.exists;
            Json part{{"verdict", v.exists ? "exists" : "nofactor"}, {"nodes", v.nodes}};
            if (v.witness)
                part["witness"] = witness_json(*v.witness);
            j["criterion"] = part;
        }
        if (args.method != "criterion") {
            const auto v = factorlab::decide_by_search(rec.graph, params, !args.plain, options);
            for (const auto& w : v.warnings)
                std::cerr << "warning: " << w << '\n';
            search = v.exists;
            Json part{{"verdict", v.exists ? "exists" : "nofactor"}, {"nodes", v.nodes}};
            if (v.certificate)
                part["certificate"] = certificate_json(*v.certificate);
            j["search"] = part;
        }
        const bool exists = crit.value_or(search.value_or(false));
        j["verdict"] = exists ? "exists" : "nofactor";
        if (crit && search)
            j["agree"] = *crit == *search;
        std::cout << j.dump() << '\n';
        std::cerr << rec.text << ": " << (exists ? "has" : "has no") << (args.plain ? " " : " parity ") << "["
                  << args.a << "," << args.b << "]-factor\n";
    }
    return exit_ok;
}

// ------------------------------------------------------------------- verify

struct VerifyArgs {
    std::string suite;
    std::string out;
    std::string corpus;
    std::uint64_t seed = 1;
    std::size_t samples = 0;
    int jobs = 1;
    int n = 12;
    int a = 2;
    int b = 4;
    std::string method = "criterion";
};

factorlab::Table run_suite(const VerifyArgs& args)
{
    const factorlab::GridOptions grid{args.seed, args.samples, args.jobs};
    const std::string& s = args.suite;
    if (s == "oracle") {
        std::vector<factorlab::CorpusEntry> corpus;
        if (!args.corpus.empty()) {
            corpus = factorlab::to_corpus(read_graphs(args.corpus));
        } else {
            // No corpus: sample connected graphs on 2..8 vertices.
            const std::size_t count = args.samples ? args.samples : 2'000;
            for (std::size_t i = 0; i < count; ++i) {
                factorlab::Rng rng(factorlab::derive_seed(args.seed, i));
                const int n = static_cast<int>(rng.between(2, 8));
                std::optional<factorlab::Graph> g;
                while (!g)
                    g = factorlab::sample_connected_min_degree(n, 0.2 + 0.7 * rng.uniform(), 1, rng, 100);
                corpus.push_back({factorlab::to_graph6(*g), *g});
            }
        }
        factorlab::OracleOptions options;
        options.jobs = args.jobs;
        return factorlab::sweep_oracle_equivalence(corpus, options).table();
    }
    if (s == "lemma2.1")
        return factorlab::subgraph_monotonicity_table(grid);
    if (s == "lemma2.2")
        return factorlab::degree_bound_table(grid);
    if (s == "lemma2.3")
        return factorlab::bound_monotonicity_table();
    if (s == "lemma2.4")
        return factorlab::rotation_table(grid);
    if (s == "lemma2.5")
        return factorlab::quotient_equality_table(200, 40, args.jobs);
    if (s == "lemma2.6")
        return factorlab::clique_composition_table();
    if (s == "lemma2.7")
        return factorlab::book_bound_table();
    if (s == "lemma2.8")
        return factorlab::gna_no_factor_table();
    if (s == "eq1")
        return factorlab::eta_parity_table(grid);
    if (s == "survey") {
        factorlab::SurveyOptions options;
        options.n = args.n;
        options.a = args.a;
        options.b = args.b;
        options.samples = args.samples ? args.samples : 10'000;
        options.seed = args.seed;
        options.jobs = args.jobs;
        options.method = args.method;
        return factorlab::survey_theorem(options).table();
    }
    throw UsageError("unknown suite " + s);
}

int run_verify(const VerifyArgs& args)
{
    const auto table = run_suite(args);
    write_file(args.out, factorlab::to_csv(table));

    Json summary;
    summary["suite"] = args.suite;
    summary["rows"] = table.rows.size();
    summary["failures"] = table.failures;
    summary["assertable"] = table.assertable;
    summary["passed"] = table.passed();
    for (const auto& [key, value] : table.summary)
        summary["details"][key] = value;
    std::cout << summary.dump() << '\n';
    std::cerr << args.suite << ": " << table.rows.size() << " rows, " << table.failures
              << (table.assertable ? " failures" : " findings") << " -> " << args.out << '\n';
    return table.passed() ? exit_ok : exit_suite_failed;
}

std::uint64_t default_seed()
{
    if (const char* env = std::getenv("FACTORLAB_SEED")) {
        try {
            return std::stoull(env);
        } catch (const std::exception&) {
            throw UsageError(std::string("FACTORLAB_SEED is not an unsigned integer: ") + env);
        }
    }
    return 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"factorlab: parity [a,b]-factors and spectral extremal graph checks"};
    app.require_subcommand(1);

    ConstructArgs construct;
    auto* cmd_construct = app.add_subcommand("construct", "Build an extremal family; print graph6 and a block sidecar");
    cmd_construct->add_option("family", construct.family, "g-na | h-nab | odd-1b | book")
        ->required()
        ->check(CLI::IsMember({"g-na", "h-nab", "odd-1b", "book"}));
    cmd_construct->add_option("--n", construct.n, "Order")->required();
    cmd_construct->add_option("--a", construct.a, "Lower degree bound");
    cmd_construct->add_option("--b", construct.b, "Upper degree bound");
    cmd_construct->add_option("--s", construct.s, "Join clique size (book)");
    cmd_construct->add_option("--sidecar", construct.sidecar, "Write the block JSON here instead of stdout");

    RhoArgs rho;
    auto* cmd_rho = app.add_subcommand("rho", "Spectral radius of graph6 input");
    cmd_rho->add_option("--in", rho.input, "graph6 file (default stdin)");
    cmd_rho->add_option("--tol", rho.tol, "Residual tolerance (inf-norm)");
    cmd_rho->add_option("--max-iter", rho.max_iter, "Iteration cap");
    cmd_rho->add_option("--quotient", rho.quotient, "Blocks JSON (construct sidecar or array of vertex lists)");

    CheckArgs check;
    auto* cmd_check = app.add_subcommand("check-parity-factor", "Decide parity [a,b]-factor existence");
    cmd_check->add_option("--in", check.input, "graph6 file (default stdin)");
    cmd_check->add_option("--a", check.a, "Lower degree bound")->required();
    cmd_check->add_option("--b", check.b, "Upper degree bound")->required();
    cmd_check->add_option("--method", check.method, "criterion | search | both");
    cmd_check->add_flag("--force", check.force, "Lift the soft size limits");
    cmd_check->add_flag("--no-parity", check.plain, "Search for a plain [a,b]-factor (search method only)");

    VerifyArgs verify;
    verify.seed = 0;
    auto* cmd_verify = app.add_subcommand("verify", "Run a verification suite and write a CSV report");
    cmd_verify->add_option("--suite", verify.suite, "Suite name")
        ->required()
        ->check(CLI::IsMember(factorlab::suite_names()));
    cmd_verify->add_option("--out", verify.out, "CSV report path")->required();
    cmd_verify->add_option("--corpus", verify.corpus, "graph6 corpus (oracle suite)");
    auto* seed_opt = cmd_verify->add_option("--seed", verify.seed, "Master seed (default FACTORLAB_SEED or 1)");
    cmd_verify->add_option("--samples", verify.samples, "Number of random trials (suite default when 0)");
    cmd_verify->add_option("--jobs", verify.jobs, "Worker threads")->check(CLI::PositiveNumber);
    cmd_verify->add_option("--n", verify.n, "Survey order");
    cmd_verify->add_option("--a", verify.a, "Survey lower bound");
    cmd_verify->add_option("--b", verify.b, "Survey upper bound");
    cmd_verify->add_option("--method", verify.method, "Survey decider")
        ->check(CLI::IsMember({"criterion", "search"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? exit_ok : exit_usage;
    }

    try {
        if (*cmd_construct)
            return run_construct(construct);
        if (*cmd_rho)
            return run_rho(rho);
        if (*cmd_check)
            return run_check(check);
        if (*cmd_verify) {
            if (seed_opt->count() == 0)
                verify.seed = default_seed();
            return run_verify(verify);
        }
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_usage;
    }
    return exit_usage;
}
