#include "doctest.h"

#include <array>
#include <cstdio>
#include <fstream>
#include <string>

#include "helpers.hpp"

#ifndef KRON_CLI_PATH
#define KRON_CLI_PATH "kron"
#endif

namespace {

struct run_result {
    int exit_code = -1;
    std::string out;
};

run_result run_cli(const std::string& args, bool merge_stderr = false) {
    const std::string cmd = std::string(KRON_CLI_PATH) + " " + args +
                            (merge_stderr ? " 2>&1" : " 2>/dev/null");
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    run_result result;
    std::array<char, 4096> buf;
    size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0)
        result.out.append(buf.data(), got);
    const int status = pclose(pipe);
    result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return result;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("coeff prints the coefficient") {
    auto r = run_cli("coeff --lambda 3,3,3 --d 4 --nu 5,2,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    r = run_cli("coeff --lambda 3,3,3,3 --d 4 --nu 5,3,2,1,1");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "3\n");

    r = run_cli("coeff --lambda 2,2 --d 0 --nu 2,2");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1\n");
}

TEST_CASE("coeff --oracle cross-checks") {
    const auto r = run_cli("coeff --lambda 3,3,3 --d 4 --nu 5,2,1,1 --oracle");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "blasiak: 2\noracle: 2\n");
}

TEST_CASE("usage and parse errors exit with 2") {
    CHECK(run_cli("coeff --lambda 3,x --d 1 --nu 4").exit_code == 2);
    CHECK(run_cli("coeff --lambda 2,1 --d 0 --nu 4").exit_code == 2);  // size mismatch
    CHECK(run_cli("coeff --lambda 2,1 --d 9 --nu 2,1").exit_code == 2);
    CHECK(run_cli("nonsense").exit_code == 2);
    CHECK(run_cli("decompose --m 2 --t 2 --d 7").exit_code == 2);
    CHECK(run_cli("--help").exit_code == 0);
}

TEST_CASE("decompose prints terms and the dimension identity") {
    auto r = run_cli("decompose --m 3 --t 3 --d 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "5,2,1,1 : 2"));
    CHECK(contains(r.out, "dimension identity:"));
    CHECK(contains(r.out, " ok"));

    r = run_cli("decompose --m 2 --t 2 --d 0");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2,2 : 1\ndimension identity: 2 == 2 ok\n");
}

TEST_CASE("json output is deterministic byte for byte") {
    const std::string cmd = "decompose --m 2 --t 3 --d 1 --format json";
    const auto first = run_cli(cmd);
    const auto second = run_cli(cmd);
    CHECK(first.exit_code == 0);
    CHECK(first.out == second.out);
    CHECK(contains(first.out, "\"command\": \"decompose\""));
    CHECK(contains(first.out, "\"elapsed_ms\": 0"));

    const auto verify = run_cli("verify --m 2 --d 1 --t-min 3 --t-max 3 --format json");
    CHECK(verify.exit_code == 0);
    for (const char* key :
         {"\"bound_satisfied\"", "\"pairs\"", "\"nu_tilde\"", "\"g_t\"",
          "\"g_t1\"", "\"unmatched_in_lifted\"", "\"verdict\""})
        CHECK(contains(verify.out, key));
}

TEST_CASE("verify reports the known failure case but exits 0 below the bound") {
    const auto r = run_cli("verify --m 3 --d 4 --t-min 3 --t-max 3");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "verdict=unstable"));
    CHECK(contains(r.out, "mismatch: 5,2,1,1 -> 5,3,2,1,1 : 2 != 3"));
}

TEST_CASE("verify over guaranteed ranges") {
    auto r = run_cli("verify --m 2 --d 1 --t-min 3 --t-max 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "t=3"));
    CHECK(contains(r.out, "t=4"));
    CHECK_FALSE(contains(r.out, "unstable"));

    r = run_cli("verify --m 1 --d 0 --t-min 2 --t-max 5");
    CHECK(r.exit_code == 0);
    CHECK_FALSE(contains(r.out, "unstable"));
}

TEST_CASE("convert reproduces the worked chain bit for bit") {
    const std::string fixtures = KRON_FIXTURES_DIR;
    auto r = run_cli("convert --input conversion_chain_0.txt --to natural --trace "
                     "--fixtures " + fixtures);
    CHECK(r.exit_code == 0);
    CHECK(r.out == testutil::fixture_text("conversion_chain_trace.txt"));

    r = run_cli("convert --input " + fixtures +
                "/conversion_chain_5.txt --to small-bar");
    CHECK(r.exit_code == 0);
    CHECK(r.out == testutil::fixture_text("conversion_chain_0.txt"));
}

TEST_CASE("convert leaves unbarred tableaux unchanged") {
    const std::string path = "cli_test_plain.txt";
    {
        std::ofstream f(path);
        f << "1 1 2\n2 3\n";
    }
    const auto r = run_cli("convert --input " + path + " --to natural");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "1 1 2\n2 3\n");
    std::remove(path.c_str());
}

TEST_CASE("convert rejects non-semistandard input with exit 2") {
    const std::string path = "cli_test_bad.txt";
    {
        std::ofstream f(path);
        f << "2 1\n";  // decreasing row
    }
    const auto r = run_cli("convert --input " + path + " --to natural", true);
    CHECK(r.exit_code == 2);
    CHECK(contains(r.out, "error"));
    std::remove(path.c_str());
}

TEST_CASE("sweep exits 0 on agreement") {
    auto r = run_cli("sweep --n-max 6");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "mismatches=0"));

    r = run_cli("sweep --n-max 0");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "total cases=0 mismatches=0"));
}

TEST_CASE("character cache persists across runs") {
    const std::string path = "cli_test_cache.txt";
    std::remove(path.c_str());
    const std::string cmd =
        "coeff --lambda 2,2,2 --d 2 --nu 3,2,1 --oracle --cache " + path;
    const auto first = run_cli(cmd);
    CHECK(first.exit_code == 0);
    std::ifstream f(path);
    CHECK(f.good());
    std::string line;
    CHECK(std::getline(f, line));
    CHECK(contains(line, "|"));
    const auto second = run_cli(cmd);
    CHECK(second.out == first.out);
    std::remove(path.c_str());
}

}  // TEST_SUITE
