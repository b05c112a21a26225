#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Result {
    int status = 0;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    args.insert(args.begin(), "arclab");
    std::vector<const char*> argv;
    for (const std::string& a : args) {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    Result r;
    r.status = arclab::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

std::string golden(const std::string& name) { return slurp(std::filesystem::path(ARCLAB_GOLDEN_DIR) / name); }

std::filesystem::path scratch_dir(const std::string& name)
{
    const auto dir = std::filesystem::temp_directory_path() / ("arclab_cli_" + name);
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    return dir;
}

}  // namespace

TEST_CASE("golden outputs")
{
    CHECK(run({"census", "--q", "3", "--k", "1,2,3,4,5,6,7,8,9"}).out == golden("census_affine_q3.csv"));
    CHECK(run({"census", "--q", "4", "--kind", "projective", "--k", "1,2,3,4,5,6,7"}).out ==
          golden("census_projective_q4.csv"));
    CHECK(run({"scan"}).out == golden("scan_fixture.csv"));
    CHECK(run({"mds", "--q", "4", "--n", "6"}).out == golden("mds_q4_n6.json"));
    CHECK(run({"construct", "--q", "49", "--seed", "7"}).out == golden("construct_q49_seed7.json"));
    CHECK(run({"random-arc", "--q", "13", "--p-exponent", "1.25", "--trials", "200", "--arc-mode", "exact", "--seed",
               "42", "--summary-only"})
              .out == golden("trend_q13.json"));
    CHECK(run({"maxarc", "--q", "7", "--parabola"}).out == golden("maxarc_parabola_q7.json"));
}

TEST_CASE("csv header and column order")
{
    const Result r = run({"census", "--q", "5", "--k", "3"});
    REQUIRE(r.status == 0);
    std::istringstream lines(r.out);
    std::string first;
    std::string second;
    std::getline(lines, first);
    std::getline(lines, second);
    CHECK(first.rfind("# arclab ", 0) == 0);
    CHECK(second == "q,kind,k,count,numerator,denominator,nodes,ms");
    CHECK(r.err.empty());
}

TEST_CASE("exit codes")
{
    CHECK(run({}).status == arclab::cli::kExitUsage);
    CHECK(run({"census", "--q", "3", "--k", "3", "--bogus"}).status == arclab::cli::kExitUsage);
    CHECK(run({"census", "--k", "3"}).status == arclab::cli::kExitUsage);
    CHECK(run({"census", "--help"}).status == arclab::cli::kExitOk);
    const Result six = run({"census", "--q", "6", "--k", "3"});
    CHECK(six.status == arclab::cli::kExitPrecondition);
    CHECK(six.out.empty());
    CHECK_FALSE(six.err.empty());
    CHECK(run({"census", "--q", "9", "--k", "6", "--budget", "10"}).status == arclab::cli::kExitBudget);
    CHECK(run({"maxarc", "--q", "5", "--full", "--format", "csv"}).status == arclab::cli::kExitPrecondition);
    CHECK(run({"random-arc", "--q", "7", "--p", "1/3", "--trials", "2"}).status == arclab::cli::kExitPrecondition);
    CHECK(run({"construct", "--q", "49", "--l", "3"}).status == arclab::cli::kExitPrecondition);
    CHECK(run({"mds", "--q", "4", "--n", "7"}).status == arclab::cli::kExitOk);
}

TEST_CASE("worker count does not change output")
{
    CHECK(run({"census", "--q", "8", "--k", "3,4,5", "--jobs", "1"}).out ==
          run({"census", "--q", "8", "--k", "3,4,5", "--jobs", "4"}).out);
    CHECK(run({"random-arc", "--q", "9", "--p", "0.2", "--trials", "50", "--arc-mode", "exact", "--jobs", "1"}).out ==
          run({"random-arc", "--q", "9", "--p", "0.2", "--trials", "50", "--arc-mode", "exact", "--jobs", "3"}).out);
    CHECK(run({"scan", "--trials", "20", "--jobs", "1"}).out == run({"scan", "--trials", "20", "--jobs", "2"}).out);
}

TEST_CASE("reruns are byte identical")
{
    const std::vector<std::string> args{"random-arc", "--q", "7", "--p", "1/4", "--trials", "30", "--seed", "9"};
    CHECK(run(args).out == run(args).out);
    const std::vector<std::string> greedy{"maxarc", "--q", "11", "--random", "0.5", "--seed", "3", "--method", "greedy"};
    CHECK(run(greedy).out == run(greedy).out);
}

TEST_CASE("--out writes under ARCLAB_OUTPUT_DIR")
{
    const auto dir = scratch_dir("out");
    ::setenv("ARCLAB_OUTPUT_DIR", dir.c_str(), 1);
    const Result r = run({"census", "--q", "3", "--k", "3", "--out", "sub/c.csv"});
    ::unsetenv("ARCLAB_OUTPUT_DIR");
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    CHECK(r.err.find("wrote") != std::string::npos);
    CHECK(slurp(dir / "sub" / "c.csv") == run({"census", "--q", "3", "--k", "3"}).out);
}

TEST_CASE("certificate verification round trip")
{
    const auto dir = scratch_dir("verify");
    const auto arc_path = (dir / "arc.json").string();
    REQUIRE(run({"maxarc", "--q", "5", "--random", "0.6", "--seed", "4", "--out", arc_path}).status == 0);
    const Result ok = run({"maxarc", "--verify", arc_path});
    CHECK(ok.status == 0);

    // claim a collinear triple is an arc
    std::string text = slurp(arc_path);
    const auto pos = text.find("\"witness\":[");
    REQUIRE(pos != std::string::npos);
    text.replace(pos, text.find(']', pos) - pos + 1, "\"witness\":[0,1,2]");
    {
        std::ofstream f(arc_path, std::ios::binary);
        f << text;
    }
    CHECK(run({"maxarc", "--verify", arc_path}).status == arclab::cli::kExitFailure);

    const auto cx_path = (dir / "cx.json").string();
    REQUIRE(run({"construct", "--q", "49", "--seed", "3", "--out", cx_path}).status == 0);
    CHECK(run({"construct", "--verify", cx_path}).status == 0);
}
