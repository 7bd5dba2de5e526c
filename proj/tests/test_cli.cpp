#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <string>
#include <sys/wait.h>

namespace {

struct RunResult {
    int exit_code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(STDFF_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 512> buf;
    std::size_t got;
    while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
    int status = pclose(pipe);
    return RunResult{WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::string fixtures() { return STDFF_FIXTURES_DIR; }

}  // namespace

TEST_CASE("stdpoly outputs") {
    CHECK(run_cli("stdpoly -p 2 -r 3 -i 1").out == "1 1 0 1\n");
    CHECK(run_cli("stdpoly -p 3 -r 2 -i 1").out == "1 0 1\n");
    CHECK(run_cli("stdpoly -p 2 -r 5 -i 1").out == "1 0 1 0 0 1\n");
    CHECK(run_cli("stdpoly -p 2 -r 2 -i 2").out == "2 1 1\n");
    CHECK(run_cli("stdpoly -p 2 -r 3 -i 1 --labeled").out == "coeff_steinitz=1 1 0 1\n");
}

TEST_CASE("field outputs") {
    CHECK(run_cli("field -p 2 -n 4").out == "1 1 0 0 1\n");
    CHECK(run_cli("field -p 2 -n 2").out == "1 1 1\n");
    CHECK(run_cli("field -p 3 -n 2").out == "1 0 1\n");
}

TEST_CASE("gen outputs") {
    CHECK(run_cli("gen -p 7 -n 1 -m 6 --factors \"2 3\"").out == "5\n");
    CHECK(run_cli("gen -p 3 -n 2 -m 8 --factors \"2^3\"").out == "4\n");
    CHECK(run_cli("gen -p 7 -n 1 -m 1 --factors \"\"").out == "1\n");
    // without --factors the order is factored locally
    CHECK(run_cli("gen -p 3 -n 2 -m 8").out == "4\n");
}

TEST_CASE("embed, order, minpoly, conway outputs") {
    CHECK(run_cli("embed -p 2 -m 3 -n 6 -s 2").out == "4\n");
    CHECK(run_cli("order -p 3 -n 2 -s 4 --factors \"2^3\"").out == "8\n");
    CHECK(run_cli("order -p 3 -n 2 -s 4").out == "8\n");
    CHECK(run_cli("minpoly -p 2 -n 4 -s 2").out == "1 1 1\n");
    CHECK(run_cli("conway -p 2 -n 2 --conway-table " + fixtures() + "/conway.txt").out ==
          "2 2\n");
    CHECK(run_cli("conway -p 3 -n 1 --conway-table " + fixtures() + "/conway.txt").out ==
          "1 2\n");
}

TEST_CASE("outputs are byte-identical across runs") {
    for (const std::string args :
         {std::string("stdpoly -p 5 -r 3 -i 2"), std::string("field -p 2 -n 12"),
          std::string("gen -p 5 -n 2 -m 24 --factors \"2^3 3\"")}) {
        auto first = run_cli(args);
        auto second = run_cli(args);
        CHECK(first.exit_code == 0);
        CHECK(first.out == second.out);
        CHECK(!first.out.empty());
    }
}

TEST_CASE("exit codes: 0 ok, 2 usage, 3 math, 4 missing data") {
    CHECK(run_cli("field -p 2 -n 4").exit_code == 0);

    CHECK(run_cli("").exit_code == 2);
    CHECK(run_cli("field -p 2").exit_code == 2);             // missing -n
    CHECK(run_cli("field -p 4 -n 2").exit_code == 2);        // p not prime
    CHECK(run_cli("stdpoly -p 2 -r 4 -i 1").exit_code == 2); // r not prime
    CHECK(run_cli("stdpoly -p 2 -r 3 -i 0").exit_code == 2);
    CHECK(run_cli("gen -p 7 -n 1 -m 6 --factors \"2^2\"").exit_code == 2);  // wrong product
    CHECK(run_cli("nonsense -p 2").exit_code == 2);

    CHECK(run_cli("gen -p 7 -n 1 -m 4 --factors \"2^2\"").exit_code == 3);  // 4 does not divide 6
    CHECK(run_cli("embed -p 2 -m 3 -n 8 -s 2").exit_code == 3);             // 3 does not divide 8
    CHECK(run_cli("embed -p 2 -m 3 -n 6 -s 9").exit_code == 3);             // s >= 2^3
    CHECK(run_cli("order -p 3 -n 2 -s 0 --factors \"2^3\"").exit_code == 3);

    CHECK(run_cli("conway -p 2 -n 12 --conway-table " + fixtures() + "/conway.txt").exit_code ==
          4);  // no table entry for n = 12
    // 2^211-1 = 15193 * (20-digit prime) * (40-digit prime): rho gives up.
    CHECK(run_cli("order -p 2 -n 211 -s 7").exit_code == 4);

    CHECK(run_cli("--help").exit_code == 0);
    CHECK(run_cli("field --help").exit_code == 0);
}

TEST_CASE("factor tables via flag and environment variable") {
    const std::string table = "cli_factors.txt";
    {
        FILE* f = fopen(table.c_str(), "w");
        fputs("3 2: 2^3\n", f);
        fclose(f);
    }
    CHECK(run_cli("order -p 3 -n 2 -s 4 --factor-table " + table).out == "8\n");
    {
        const std::string cmd = std::string("STDFF_FACTOR_TABLES=") + table + " " +
                                STDFF_CLI_PATH + " order -p 3 -n 2 -s 4 2>/dev/null";
        FILE* pipe = popen(cmd.c_str(), "r");
        REQUIRE(pipe != nullptr);
        std::string out;
        std::array<char, 128> buf;
        std::size_t got;
        while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) out.append(buf.data(), got);
        pclose(pipe);
        CHECK(out == "8\n");
    }
    std::remove(table.c_str());
}

TEST_CASE("stdpoly cache flag round-trips") {
    const std::string cache = "cli_stdpoly_cache.txt";
    std::remove(cache.c_str());
    auto first = run_cli("stdpoly -p 2 -r 5 -i 2 --stdpoly-cache " + cache);
    CHECK(first.exit_code == 0);
    auto second = run_cli("stdpoly -p 2 -r 5 -i 2 --stdpoly-cache " + cache);
    CHECK(second.exit_code == 0);
    CHECK(first.out == second.out);
    std::remove(cache.c_str());
}
