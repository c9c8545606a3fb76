#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "polysuffix/cli.hpp"

using namespace polysuffix;
using nlohmann::json;

namespace {

struct cli_result {
    int exit_code;
    std::string out;
    std::string err;
};

cli_result run(std::vector<std::string> args, const std::string& input = "") {
    std::istringstream in(input);
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(std::move(args), in, out, err);
    return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
    const auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream f(path, std::ios::binary);
    f << content;
    return path.string();
}

std::uint32_t get_u32le(const std::string& bytes, std::size_t at) {
    return static_cast<std::uint8_t>(bytes[at]) |
           (static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[at + 1])) << 8) |
           (static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[at + 2])) << 16) |
           (static_cast<std::uint32_t>(static_cast<std::uint8_t>(bytes[at + 3])) << 24);
}

}  // namespace

TEST_CASE("sort prints one suffix index per line") {
    const cli_result r = run({"sort"}, "twinstwins");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "7\n2\n8\n3\n9\n4\n5\n0\n6\n1\n");
    CHECK(r.err.empty());
}

TEST_CASE("all engines print the same order") {
    const std::string expected = run({"sort"}, "twinstwins").out;
    CHECK(run({"sort", "--engine", "naive"}, "twinstwins").out == expected);
    CHECK(run({"sort", "--engine", "doubling"}, "twinstwins").out == expected);
}

TEST_CASE("sort emits the documented json envelope") {
    const cli_result r = run({"sort", "--format", "json"}, "banana");
    REQUIRE(r.exit_code == 0);
    const json j = json::parse(r.out);
    CHECK(j["command"] == "sort");
    CHECK(j["n"] == 6);
    CHECK(j["result"] == json::array({5, 3, 1, 0, 4, 2}));
    CHECK(j["timings"].contains("total_ms"));
}

TEST_CASE("factorize prints the three-column table") {
    const cli_result r = run({"factorize", "--format", "paper-table"}, "babaabcbabaa");
    REQUIRE(r.exit_code == 0);
    const std::string expected =
        "babaabcbabaa\tx·(1·x)·2·(x·x²)·x·(1·x)·2\tx\n"
        "abaabcbabaa\t(1·x)·2·(x·x²)·x·(1·x)·2\t1·x\n"
        "baabcbabaa\tx·2·(x·x²)·x·(1·x)·2\tx\n"
        "aabcbabaa\t2·(x·x²)·x·(1·x)·2\t1\n"
        "abcbabaa\t(1·x·x²)·x·(1·x)·2\t1·x·x²\n"
        "bcbabaa\t(x·x²)·x·(1·x)·2\tx·x²\n"
        "cbabaa\tx²·x·(1·x)·2\tx²\n"
        "babaa\tx·(1·x)·2\tx\n"
        "abaa\t(1·x)·2\t1·x\n"
        "baa\tx·2\tx\n"
        "aa\t2\t1\n"
        "a\t1\t1\n";
    CHECK(r.out == expected);
}

TEST_CASE("factorize keeps whole increasing factors in one bucket") {
    const cli_result r = run({"factorize", "--format", "paper-table"}, "twinstwins");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("ins\t(1·x·x²)\t1·x·x²\n") != std::string::npos);
    CHECK(r.out.find("ns\t(x·x²)\tx·x²\n") != std::string::npos);
}

TEST_CASE("factorize tsv and json carry identical data") {
    const cli_result tsv = run({"factorize"}, "banana");
    const cli_result js = run({"factorize", "--format", "json"}, "banana");
    REQUIRE(tsv.exit_code == 0);
    REQUIRE(js.exit_code == 0);

    const json j = json::parse(js.out);
    CHECK(j["command"] == "factorize");
    CHECK(j["n"] == 6);
    REQUIRE(j["result"].size() == 6);

    std::istringstream lines(tsv.out);
    std::string line;
    std::size_t row = 0;
    while (std::getline(lines, line)) {
        std::istringstream cols(line);
        std::string index, suffix, poly, bucket;
        std::getline(cols, index, '\t');
        std::getline(cols, suffix, '\t');
        std::getline(cols, poly, '\t');
        std::getline(cols, bucket, '\t');
        const json& entry = j["result"][row];
        CHECK(std::to_string(entry["index"].get<std::size_t>()) == index);
        CHECK(entry["suffix"] == suffix);
        CHECK(entry["polynomial"] == poly);
        CHECK(entry["bucket"] == bucket);
        ++row;
    }
    CHECK(row == 6);
}

TEST_CASE("factorize --binary emits little-endian records") {
    const cli_result r = run({"factorize", "--binary"}, "baa");
    REQUIRE(r.exit_code == 0);
    const std::string& bytes = r.out;
    REQUIRE(bytes.size() == 43);

    // Record: index, factor count, factor words, newline delimiter.
    CHECK(get_u32le(bytes, 0) == 0);
    CHECK(get_u32le(bytes, 4) == 2);
    CHECK(get_u32le(bytes, 8) == ((1u << 26) | 0b10u));
    CHECK(get_u32le(bytes, 12) == ((2u << 26) | 0b01u));
    CHECK(bytes[16] == '\n');

    CHECK(get_u32le(bytes, 17) == 1);
    CHECK(get_u32le(bytes, 21) == 1);
    CHECK(get_u32le(bytes, 25) == ((2u << 26) | 0b01u));
    CHECK(bytes[29] == '\n');

    CHECK(get_u32le(bytes, 30) == 2);
    CHECK(get_u32le(bytes, 34) == 1);
    CHECK(get_u32le(bytes, 38) == ((1u << 26) | 0b01u));
    CHECK(bytes[42] == '\n');
}

TEST_CASE("verify reports a match") {
    const cli_result r = run({"verify"}, "aacaagtttacaagc");
    CHECK(r.exit_code == 0);
    CHECK(r.out == "match\n");

    const cli_result js = run({"verify", "--format", "json"}, "mississippi");
    CHECK(js.exit_code == 0);
    const json j = json::parse(js.out);
    CHECK(j["command"] == "verify");
    CHECK(j["result"]["matches"] == true);
}

TEST_CASE("verify fuzzes random texts") {
    const cli_result r = run({"verify", "--random", "25"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "match\t25 cases\n");
}

TEST_CASE("bench rows cover every engine and worker pairing") {
    const cli_result js =
        run({"bench", "--engine", "poly,naive,doubling", "--workers", "1,2", "--format", "json"},
            "banana");
    REQUIRE(js.exit_code == 0);
    const json j = json::parse(js.out);
    CHECK(j["command"] == "bench");
    CHECK(j["result"].size() == 6);
    CHECK(j["verified"] == true);
    for (const json& row : j["result"]) {
        CHECK(row.contains("engine"));
        CHECK(row.contains("workers"));
        CHECK(row.contains("ms"));
    }

    const cli_result tsv = run({"bench", "--workers", "1,4"}, "banana");
    REQUIRE(tsv.exit_code == 0);
    std::size_t lines = 0;
    for (char c : tsv.out) {
        lines += c == '\n';
    }
    CHECK(lines == 3);  // two timing rows plus the verified line
    CHECK(tsv.out.find("verified\ttrue\n") != std::string::npos);
}

TEST_CASE("exit codes distinguish caps, io, and usage") {
    CHECK(run({"sort", "--input", "/nonexistent/really/not/here"}).exit_code == 2);
    CHECK(run({"sort"}, "").exit_code == 3);
    CHECK(run({"sort", "--engine", "bogus"}, "abc").exit_code == 2);
    CHECK(run({}).exit_code == 2);
    CHECK(run({"--help"}).exit_code == 0);

    std::string alpha27;
    for (char c = 'a'; c <= 'z'; ++c) {
        alpha27 += c;
    }
    alpha27 += 'A';
    const std::string wide_path = write_temp("polysuffix_test_alpha27.txt", alpha27);
    CHECK(run({"sort", "--input", wide_path}).exit_code == 3);
    CHECK(run({"sort", "--input", wide_path, "--engine", "naive"}).exit_code == 0);

    const std::string run_path =
        write_temp("polysuffix_test_run64.txt", std::string(64, 'a') + "b");
    const cli_result capped = run({"sort", "--input", run_path});
    CHECK(capped.exit_code == 3);
    CHECK(capped.err.find("63") != std::string::npos);  // message names the cap
    CHECK(run({"sort", "--input", run_path, "--engine", "naive"}).exit_code == 0);
}

TEST_CASE("a trailing newline is stripped unless kept") {
    const cli_result stripped = run({"sort"}, "ab\n");
    CHECK(stripped.exit_code == 0);
    CHECK(stripped.out == "0\n1\n");

    const cli_result kept = run({"sort", "--keep-trailing-newline"}, "ab\n");
    CHECK(kept.exit_code == 0);
    CHECK(kept.out == "2\n0\n1\n");  // the newline joins the alphabet
}

TEST_CASE("worker count comes from the flag or the environment") {
    CHECK(run({"sort", "--workers", "4"}, "banana").out == "5\n3\n1\n0\n4\n2\n");

    setenv("POLYSUFFIX_WORKERS", "3", 1);
    CHECK(run({"sort"}, "banana").out == "5\n3\n1\n0\n4\n2\n");
    unsetenv("POLYSUFFIX_WORKERS");
}
