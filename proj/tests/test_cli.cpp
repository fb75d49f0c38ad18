#include <gtest/gtest.h>

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <factorlab/constructions.hpp>
#include <factorlab/graph6.hpp>

using Json = nlohmann::json;

namespace {

struct Run {
    int status = -1;
    std::string out;
};

/// Runs the CLI through the shell; stderr is discarded unless redirected in `args`.
Run run(const std::string& args, const std::string& stdin_text = "", const std::string& env = "")
{
    const auto dir = std::filesystem::temp_directory_path();
    const auto input = dir / ("factorlab_cli_in_" + std::to_string(::getpid()));
    {
        std::ofstream f(input);
        f << stdin_text;
    }
    const std::string cmd = env + (env.empty() ? "" : " ") + "\"" + FACTORLAB_CLI + "\" " + args + " < \"" + input.string() + "\"" +
                            (args.find("2>") == std::string::npos ? " 2>/dev/null" : "");
    Run r;
    FILE* pipe = ::popen(cmd.c_str(), "r");
    if (!pipe)
        return r;
    char buf[4096];
    std::size_t got;
    while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, got);
    const int raw = ::pclose(pipe);
    r.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    std::filesystem::remove(input);
    return r;
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        out.push_back(line);
    return out;
}

std::string temp_path(const std::string& name)
{
    return (std::filesystem::temp_directory_path() / (name + "_" + std::to_string(::getpid()))).string();
}

} // namespace

TEST(CliConstruct, GnaEmitsGraph6AndBlockSidecar)
{
    const auto r = run("construct g-na --n 12 --a 2");
    ASSERT_EQ(r.status, 0);
    const auto out = lines(r.out);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_EQ(factorlab::from_graph6(out[0]), factorlab::g_na(12, 2).graph);
    const auto sidecar = Json::parse(out[1]);
    EXPECT_EQ(sidecar["family"], "g_na");
    EXPECT_EQ(sidecar["graph6"], out[0]);
    ASSERT_EQ(sidecar["blocks"].size(), 4u);
    EXPECT_EQ(sidecar["blocks"][2]["name"], "indep");
    EXPECT_EQ(sidecar["blocks"][2]["vertices"], Json::parse("[8,9,10]"));
    EXPECT_EQ(sidecar["hypotheses"]["theorem_min_n_a_term"], 544);
}

TEST(CliConstruct, OtherFamiliesRoundTrip)
{
    const auto h = run("construct h-nab --n 14 --a 2 --b 4");
    ASSERT_EQ(h.status, 0);
    EXPECT_EQ(factorlab::from_graph6(lines(h.out)[0]), factorlab::h_nab(14, 2, 4).graph);
    const auto o = run("construct odd-1b --n 20 --b 3");
    ASSERT_EQ(o.status, 0);
    EXPECT_EQ(factorlab::from_graph6(lines(o.out)[0]), factorlab::odd_1b(20, 3).graph);
    const auto b = run("construct book --n 20 --s 2 --b 5");
    ASSERT_EQ(b.status, 0);
    EXPECT_EQ(factorlab::from_graph6(lines(b.out)[0]), factorlab::book_family(20, 2, 5).graph);
}

TEST(CliConstruct, SidecarFileKeepsStdoutToGraph6)
{
    const auto path = temp_path("factorlab_sidecar");
    const auto r = run("construct g-na --n 13 --a 3 --sidecar " + path);
    ASSERT_EQ(r.status, 0);
    EXPECT_EQ(lines(r.out).size(), 1u);
    std::ifstream in(path);
    const auto sidecar = Json::parse(in);
    EXPECT_EQ(sidecar["n"], 13);
    std::filesystem::remove(path);
}

TEST(CliConstruct, BadParametersExitTwo)
{
    EXPECT_EQ(run("construct g-na --n 5 --a 2").status, 2);
    EXPECT_EQ(run("construct nonsense --n 12").status, 2);
    EXPECT_EQ(run("construct g-na").status, 2);
}

TEST(CliRho, CompleteGraph)
{
    const auto r = run("rho", factorlab::to_graph6(factorlab::complete(10)) + "\n");
    ASSERT_EQ(r.status, 0);
    const auto j = Json::parse(lines(r.out).at(0));
    EXPECT_NEAR(j["rho"].get<double>(), 9.0, 1e-9);
    EXPECT_LE(j["residual"].get<double>(), 1e-10);
}

TEST(CliRho, QuotientFromSidecar)
{
    const auto sidecar = temp_path("factorlab_blocks");
    const auto c = run("construct book --n 30 --s 2 --b 5 --sidecar " + sidecar);
    ASSERT_EQ(c.status, 0);
    const auto r = run("rho --quotient " + sidecar, c.out);
    ASSERT_EQ(r.status, 0);
    const auto j = Json::parse(lines(r.out).at(0));
    EXPECT_TRUE(j["equitable"].get<bool>());
    EXPECT_EQ(j["quotient"], Json::parse("[[1,22,6],[2,21,0],[2,0,0]]"));
    EXPECT_NEAR(j["quotient_rho"].get<double>(), j["rho"].get<double>(), 1e-8);
    std::filesystem::remove(sidecar);
}

TEST(CliRho, OneLinePerInputGraph)
{
    const auto r = run("rho", "C~\n\nDhc\n");
    ASSERT_EQ(r.status, 0);
    const auto out = lines(r.out);
    ASSERT_EQ(out.size(), 2u);
    EXPECT_NEAR(Json::parse(out[1])["rho"].get<double>(), 2.0, 1e-9);
}

TEST(CliRho, MalformedInputReportsLine)
{
    const auto r = run("rho 2>&1", "C~\nC~~~\n");
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.out.find("line 2"), std::string::npos) << r.out;
}

TEST(CliCheck, GnaHasNoFactorWithMinusTwoWitness)
{
    const std::string g6 = factorlab::to_graph6(factorlab::g_na(12, 2).graph);
    const auto r = run("check-parity-factor --a 2 --b 4 --method both", g6 + "\n");
    ASSERT_EQ(r.status, 0);
    const auto j = Json::parse(lines(r.out).at(0));
    EXPECT_EQ(j["verdict"], "nofactor");
    EXPECT_TRUE(j["agree"].get<bool>());
    EXPECT_EQ(j["criterion"]["witness"]["eta"], -2);
    EXPECT_EQ(j["search"]["verdict"], "nofactor");
}

TEST(CliCheck, SearchReturnsCertificate)
{
    const auto r = run("check-parity-factor --a 2 --b 2 --method search", "C~\n");
    ASSERT_EQ(r.status, 0);
    const auto j = Json::parse(lines(r.out).at(0));
    EXPECT_EQ(j["verdict"], "exists");
    EXPECT_EQ(j["search"]["certificate"]["degrees"], Json::parse("[2,2,2,2]"));
}

TEST(CliCheck, PreconditionsAndLimits)
{
    EXPECT_EQ(run("check-parity-factor --a 1 --b 2", "C~\n").status, 2);
    EXPECT_EQ(run("check-parity-factor --a 1 --b 1", "Dhc\n").status, 2);
    const std::string k20 = factorlab::to_graph6(factorlab::complete(20)) + "\n";
    EXPECT_EQ(run("check-parity-factor --a 2 --b 2", k20).status, 2);
    const auto forced = run("check-parity-factor --a 2 --b 2 --force 2>&1", k20);
    EXPECT_EQ(forced.status, 0);
    EXPECT_NE(forced.out.find("warning"), std::string::npos);
}

TEST(CliVerify, GridSuiteWritesCsvAndSummary)
{
    const auto path = temp_path("factorlab_l28.csv");
    const auto r = run("verify --suite lemma2.8 --out " + path);
    ASSERT_EQ(r.status, 0);
    const auto j = Json::parse(lines(r.out).at(0));
    EXPECT_EQ(j["suite"], "lemma2.8");
    EXPECT_TRUE(j["passed"].get<bool>());
    std::ifstream in(path);
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "a,b,n,eta,q,deg_sum,criterion,search,pass");
    std::filesystem::remove(path);
}

TEST(CliVerify, SurveyIsByteIdenticalUnderSeed)
{
    const auto p1 = temp_path("factorlab_s1.csv");
    const auto p2 = temp_path("factorlab_s2.csv");
    const auto r1 = run("verify --suite survey --n 11 --samples 40 --seed 5 --out " + p1);
    const auto r2 = run("verify --suite survey --n 11 --samples 40 --seed 5 --jobs 2 --out " + p2);
    ASSERT_EQ(r1.status, 0);
    ASSERT_EQ(r2.status, 0);
    EXPECT_EQ(r1.out, r2.out);
    std::ifstream a(p1), b(p2);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str());
    EXPECT_FALSE(sa.str().empty());
    std::filesystem::remove(p1);
    std::filesystem::remove(p2);
}

TEST(CliVerify, SeedFromEnvironment)
{
    auto read = [](const std::string& path) {
        std::ifstream in(path);
        std::stringstream ss;
        ss << in.rdbuf();
        return ss.str();
    };
    const auto p1 = temp_path("factorlab_e1.csv");
    const auto p2 = temp_path("factorlab_e2.csv");
    const auto p3 = temp_path("factorlab_e3.csv");
    ASSERT_EQ(run("verify --suite eq1 --samples 50 --seed 9 --out " + p1).status, 0);
    ASSERT_EQ(run("verify --suite eq1 --samples 50 --out " + p2, "", "FACTORLAB_SEED=9").status, 0);
    ASSERT_EQ(run("verify --suite eq1 --samples 50 --out " + p3, "", "FACTORLAB_SEED=10").status, 0);
    EXPECT_EQ(read(p1), read(p2));
    EXPECT_NE(read(p1), read(p3));
    EXPECT_EQ(run("verify --suite eq1 --samples 5 --out " + p3, "", "FACTORLAB_SEED=abc").status, 2);
    for (const auto& p : {p1, p2, p3})
        std::filesystem::remove(p);
}

TEST(CliVerify, OracleSuiteOnCorpusSlice)
{
    // Graphs on at most 5 vertices occupy the first 31 corpus lines.
    std::ifstream in(FACTORLAB_CORPUS);
    const auto slice = temp_path("factorlab_slice.g6");
    std::ofstream out(slice);
    std::string line;
    for (int i = 0; i < 31 && std::getline(in, line); ++i)
        out << line << '\n';
    out.close();
    const auto csv = temp_path("factorlab_oracle.csv");
    const auto r = run("verify --suite oracle --corpus " + slice + " --out " + csv);
    ASSERT_EQ(r.status, 0);
    const auto j = Json::parse(lines(r.out).at(0));
    EXPECT_EQ(j["details"]["disagreements"], "0");
    std::filesystem::remove(slice);
    std::filesystem::remove(csv);
}

TEST(CliVerify, UsageErrors)
{
    EXPECT_EQ(run("verify --suite nope --out /dev/null").status, 2);
    EXPECT_EQ(run("verify --suite eq1").status, 2);
    EXPECT_EQ(run("").status, 2);
}
