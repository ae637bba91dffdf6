#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>
#include <sys/wait.h>

#include <json.hpp>

#include "harmlike/cli.hpp"

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int status = harmlike::cli::run(std::move(args), out, err);
    return {status, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> v;
    std::istringstream is(text);
    for (std::string line; std::getline(is, line);) {
        v.push_back(line);
    }
    return v;
}

std::string strip_elapsed(const std::string& json)
{
    static const std::regex elapsed(R"("elapsed_ms": [0-9.eE+-]+)");
    return std::regex_replace(json, elapsed, "\"elapsed_ms\": 0");
}

} // namespace

TEST_CASE("seq harmonic_like table")
{
    const auto r = run({"seq", "--family", "harmonic_like", "--m", "2", "--n", "5"});
    CHECK(r.status == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"n,value", "0,0", "1,0", "2,1", "3,2", "4,35/12", "5,15/4"});
}

TEST_CASE("seq stirling column")
{
    const auto r = run({"seq", "--family", "stirling1", "--k", "2", "--n", "5"});
    CHECK(r.status == 0);
    CHECK(lines(r.out).back() == "5,-50");
}

TEST_CASE("seq usage errors")
{
    CHECK(run({"seq", "--family", "harmonic_like", "--m", "-1", "--n", "3"}).status == 2);
    CHECK(run({"seq", "--family", "harmonic_like", "--n", "3"}).status == 2);
    CHECK(run({"seq", "--family", "no_such"}).status == 2);
    CHECK(run({"seq", "--family", "harmonic", "--n", "-4"}).status == 2);
    CHECK(run({"seq", "--family", "harmonic", "--n", "abc"}).status == 2);
    CHECK(run({"seq", "--family", "harmonic", "--format", "xml"}).status == 2);
    CHECK(run({"seq"}).status == 2);
    CHECK(run({}).status == 2);
    CHECK(run({"frobnicate"}).status == 2);
    const auto bad = run({"seq", "--family", "hyperharmonic", "--p", "0"});
    CHECK(bad.status == 2);
    CHECK(bad.out.empty());
}

TEST_CASE("help exits cleanly and documents the environment variable")
{
    const auto top = run({"--help"});
    CHECK(top.status == 0);
    CHECK(top.out.find("gf-check") != std::string::npos);
    const auto seq = run({"seq", "--help"});
    CHECK(seq.status == 0);
    CHECK(seq.out.find(harmlike::cli::kOutputDirEnv) != std::string::npos);
}

TEST_CASE("csv and json carry identical rational strings")
{
    const std::vector<std::string> base{"seq", "--family", "hyperharmonic", "--p", "3", "--n", "12"};
    auto csv_args = base;
    csv_args.insert(csv_args.end(), {"--format", "csv"});
    auto json_args = base;
    json_args.insert(json_args.end(), {"--format", "json"});
    const auto csv = lines(run(csv_args).out);
    const auto json = nlohmann::json::parse(run(json_args).out);
    REQUIRE(json.size() + 1 == csv.size());
    for (std::size_t i = 0; i < json.size(); ++i) {
        CHECK(csv[i + 1] == std::to_string(json[i]["n"].get<int>()) + "," + json[i]["value"].get<std::string>());
    }
}

TEST_CASE("decimal column is added beside the exact value")
{
    const auto r = run({"seq", "--family", "harmonic", "--n", "3", "--decimal", "4"});
    CHECK(r.status == 0);
    CHECK(lines(r.out) == std::vector<std::string>{"n,value,decimal", "0,0,0.0000", "1,1,1.0000", "2,3/2,1.5000",
                                                   "3,11/6,1.8333"});
}

TEST_CASE("verify single identity")
{
    const auto r = run({"verify", "--id", "cor_id1", "--n-max", "10", "--m-max", "3"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["cases"] == 44);
    CHECK(j[0]["passed"] == true);

    const auto missing = run({"verify", "--id", "no_such"});
    CHECK(missing.status == 2);
    CHECK(missing.err.find("no_such") != std::string::npos);
    CHECK(run({"verify", "--id", "cor_id1", "--tag", "section2"}).status == 2);
    CHECK(run({"verify", "--id", "cor_id1", "--n-max", "-1"}).status == 2);
}

TEST_CASE("verify by tag")
{
    const auto r = run({"verify", "--tag", "section4"});
    CHECK(r.status == 0);
    const auto j = nlohmann::json::parse(r.out);
    REQUIRE(j.size() > 0);
    for (const auto& rep : j) {
        CHECK(rep["passed"] == true);
    }
    const auto none = run({"verify", "--tag", "no_such_tag"});
    CHECK(none.status == 0);
    CHECK(nlohmann::json::parse(none.out).empty());
}

TEST_CASE("verify output is deterministic apart from timings")
{
    const auto a = run({"verify", "--tag", "section3"});
    const auto b = run({"verify", "--tag", "section3", "--threads", "1"});
    CHECK(a.status == 0);
    CHECK(strip_elapsed(a.out) == strip_elapsed(b.out));
}

TEST_CASE("verify list")
{
    const auto r = run({"verify", "--list"});
    CHECK(r.status == 0);
    const auto rows = lines(r.out);
    CHECK(rows.front() == "id,tags,cases,grid");
    CHECK(rows.size() >= 46);
}

TEST_CASE("gf-check")
{
    const auto hl = run({"gf-check", "--family", "harmonic_like", "--m", "3", "--order", "40"});
    CHECK(hl.status == 0);
    const auto rows = lines(hl.out);
    REQUIRE(rows.size() == 42);
    CHECK(rows[0] == "n,recurrence_value,gf_value,equal");
    for (std::size_t i = 1; i < rows.size(); ++i) {
        CHECK(rows[i].ends_with(",true"));
    }
    CHECK(run({"gf-check", "--family", "odd_central", "--order", "30"}).status == 0);
    CHECK(run({"gf-check", "--family", "stirling1", "--k", "4", "--order", "20"}).status == 0);
    CHECK(run({"gf-check", "--family", "hyperharmonic", "--p", "3", "--order", "20"}).status == 0);
    CHECK(run({"gf-check", "--family", "hyperharmonic", "--p", "0"}).status == 2);
    CHECK(run({"gf-check", "--family", "fibonacci"}).status == 2);
    CHECK(run({"gf-check", "--family", "harmonic_like"}).status == 2);
}

TEST_CASE("transform binomial sums")
{
    CHECK(lines(run({"transform", "--a", "1", "--b", "1", "--m", "1", "--n", "2"}).out).back() == "2,7/2");
    CHECK(lines(run({"transform", "--a", "-1", "--b", "1", "--m", "2", "--n", "3"}).out).back() == "3,1");
    const auto zero = run({"transform", "--a", "0", "--b", "0", "--m", "0", "--n", "0"});
    CHECK(zero.status == 0);
    CHECK(lines(zero.out) == std::vector<std::string>{"n,value", "0,1"});
    CHECK(lines(run({"transform", "--a", "1/2", "--b", "-1/3", "--m", "0", "--n", "1"}).out).back() == "1,1/6");
    CHECK(run({"transform", "--a", "1", "--b", "1"}).status == 2);
    CHECK(run({"transform", "--a", "1/0", "--b", "1", "--m", "1"}).status == 2);
    CHECK(run({"transform", "--a", "1", "--b", "1", "--m", "1", "--family", "harmonic"}).status == 2);
}

TEST_CASE("transform of a family")
{
    const auto fwd = run({"transform", "--family", "harmonic", "--n", "3", "--signed"});
    CHECK(fwd.status == 0);
    CHECK(lines(fwd.out).back() == "3,-1/3");
    CHECK(lines(run({"transform", "--family", "harmonic_like", "--m", "2", "--n", "3", "--signed"}).out).back() ==
          "3,1");
    CHECK(lines(run({"transform", "--family", "harmonic", "--n", "2"}).out).back() == "2,7/2");
    CHECK(lines(run({"transform", "--family", "harmonic", "--n", "2", "--inverse"}).out).back() == "2,-1/2");
    CHECK(run({"transform", "--family", "harmonic", "--signed", "--inverse"}).status == 2);
    CHECK(run({"transform"}).status == 2);
}

TEST_CASE("output file and directory variable")
{
    const auto dir = std::filesystem::temp_directory_path() / "harmlike_cli_test";
    std::filesystem::create_directories(dir);
    ::setenv(harmlike::cli::kOutputDirEnv, dir.c_str(), 1);
    const auto r = run({"seq", "--family", "fibonacci", "--n", "6", "--output", "fib.csv"});
    ::unsetenv(harmlike::cli::kOutputDirEnv);
    CHECK(r.status == 0);
    CHECK(r.out.empty());
    std::ifstream in(dir / "fib.csv");
    std::stringstream content;
    content << in.rdbuf();
    CHECK(lines(content.str()).back() == "6,8");

    const auto absolute = dir / "abs.json";
    CHECK(run({"verify", "--id", "oklok93", "--output", absolute.string()}).status == 0);
    CHECK(std::filesystem::exists(absolute));
    std::filesystem::remove_all(dir);

    CHECK(run({"seq", "--family", "harmonic", "--output", "/nonexistent_dir/x.csv"}).status == 2);
}

TEST_CASE("installed binary reports exit statuses")
{
    const std::string exe = HARMLIKE_CLI_PATH;
    const auto status = [&](const std::string& args) {
        const int raw = std::system((exe + " " + args + " >/dev/null 2>&1").c_str());
        return WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    };
    CHECK(status("seq --family harmonic --n 4") == 0);
    CHECK(status("verify --id no_such") == 2);
    CHECK(status("gf-check --family fibonacci") == 2);
    CHECK(status("--help") == 0);
}
