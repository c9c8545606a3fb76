#include "polysuffix/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "polysuffix/alphabet.hpp"
#include "polysuffix/encoding.hpp"
#include "polysuffix/engine.hpp"
#include "polysuffix/error.hpp"
#include "polysuffix/oracle.hpp"
#include "polysuffix/polynomial.hpp"
#include "polysuffix/suffix_sort.hpp"

namespace polysuffix {
namespace {

using json = nlohmann::json;

constexpr int exit_ok = 0;
constexpr int exit_mismatch = 1;
constexpr int exit_io = 2;
constexpr int exit_cap = 3;

// Fixed fuzz seed keeps `verify --random N` reproducible across runs.
constexpr std::uint32_t fuzz_seed = 123456789;

struct io_failure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct options {
    std::string input = "-";
    std::string engine = "poly";
    std::string format = "tsv";
    unsigned workers = 0;  // 0 = flag absent; falls back to env, then 1
    std::size_t random_cases = 0;
    bool binary = false;
    bool keep_trailing_newline = false;
    std::vector<std::string> bench_engines;
    std::vector<unsigned> bench_workers;
};

double ms_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
}

unsigned resolve_workers(unsigned flag) {
    if (flag > 0) {
        return flag;
    }
    if (const char* env = std::getenv("POLYSUFFIX_WORKERS")) {
        const long parsed = std::strtol(env, nullptr, 10);
        if (parsed > 0) {
            return static_cast<unsigned>(parsed);
        }
    }
    return 1;
}

std::string read_all(std::istream& s) {
    std::ostringstream buf;
    buf << s.rdbuf();
    if (s.bad()) {
        throw io_failure("failed to read input");
    }
    return std::move(buf).str();
}

std::string read_input(const options& opt, std::istream& in) {
    std::string data;
    if (opt.input == "-") {
        data = read_all(in);
    } else {
        std::ifstream file(opt.input, std::ios::binary);
        if (!file) {
            throw io_failure("cannot open input file: " + opt.input);
        }
        data = read_all(file);
    }
    if (!opt.keep_trailing_newline && !data.empty() && data.back() == '\n') {
        data.pop_back();
    }
    return data;
}

suffix_array run_engine(std::string_view engine, std::string_view text,
                        const parallel_config& cfg) {
    if (engine == "poly") {
        return build_suffix_array(text, cfg);
    }
    if (engine == "naive") {
        return oracle_naive(text);
    }
    return oracle_doubling(text);
}

void put_u32le(std::ostream& out, std::uint32_t v) {
    const char bytes[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                           static_cast<char>((v >> 16) & 0xff),
                           static_cast<char>((v >> 24) & 0xff)};
    out.write(bytes, 4);
}

int cmd_sort(const options& opt, std::istream& in, std::ostream& out) {
    const std::string text = read_input(opt, in);
    const parallel_config cfg{resolve_workers(opt.workers), 1024};
    const auto start = std::chrono::steady_clock::now();
    const suffix_array sa = run_engine(opt.engine, text, cfg);
    const double total_ms = ms_since(start);

    if (opt.format == "json") {
        json j;
        j["command"] = "sort";
        j["n"] = text.size();
        j["result"] = sa;
        j["timings"]["total_ms"] = total_ms;
        out << j.dump() << "\n";
    } else {
        for (std::uint32_t i : sa) {
            out << i << "\n";
        }
    }
    return exit_ok;
}

int cmd_factorize(const options& opt, std::istream& in, std::ostream& out) {
    const std::string text = read_input(opt, in);
    const alphabet a = alphabet::from_text(text);
    const std::vector<std::uint8_t> degs = a.degrees(text);
    const parallel_config cfg{resolve_workers(opt.workers), 1024};

    const auto start = std::chrono::steady_clock::now();
    const std::vector<polynomial_buffer> buffers =
        parallel_map_suffixes(std::span<const std::uint8_t>(degs), cfg);
    const double total_ms = ms_since(start);

    if (opt.binary) {
        for (std::size_t i = 0; i < buffers.size(); ++i) {
            put_u32le(out, static_cast<std::uint32_t>(i));
            for (std::uint32_t w : buffers[i].words) {
                put_u32le(out, w);
            }
            out.put('\n');
        }
        return exit_ok;
    }

    json rows = json::array();
    for (std::size_t i = 0; i < buffers.size(); ++i) {
        const std::string suffix(text.substr(i));
        const std::string poly = render(decode_polynomial(buffers[i]));
        const std::string bucket = render_key(key_of(buffers[i]));
        if (opt.format == "paper-table") {
            out << suffix << "\t" << poly << "\t" << bucket << "\n";
        } else if (opt.format == "tsv") {
            out << i << "\t" << suffix << "\t" << poly << "\t" << bucket << "\n";
        } else {
            rows.push_back({{"index", i}, {"suffix", suffix}, {"polynomial", poly},
                            {"bucket", bucket}});
        }
    }
    if (opt.format == "json") {
        json j;
        j["command"] = "factorize";
        j["n"] = text.size();
        j["result"] = rows;
        j["timings"]["total_ms"] = total_ms;
        out << j.dump() << "\n";
    }
    return exit_ok;
}

int cmd_verify(const options& opt, std::istream& in, std::ostream& out) {
    const parallel_config cfg{resolve_workers(opt.workers), 1024};
    const auto start = std::chrono::steady_clock::now();

    if (opt.random_cases > 0) {
        std::mt19937 rng(fuzz_seed);
        json failures = json::array();
        for (std::size_t c = 0; c < opt.random_cases; ++c) {
            const std::string text = random_text(rng);
            const oracle_report r = verify(text, cfg);
            if (!r.matches) {
                failures.push_back(
                    {{"case", c}, {"text", text}, {"first_divergence", *r.first_divergence}});
            }
        }
        const double total_ms = ms_since(start);
        const bool ok = failures.empty();
        if (opt.format == "json") {
            json j;
            j["command"] = "verify";
            j["n"] = opt.random_cases;
            j["result"]["matches"] = ok;
            j["result"]["cases"] = opt.random_cases;
            j["result"]["failures"] = failures;
            j["timings"]["total_ms"] = total_ms;
            out << j.dump() << "\n";
        } else {
            for (const json& f : failures) {
                out << "mismatch\tcase " << f["case"] << "\t" << f["text"].get<std::string>()
                    << "\n";
            }
            if (ok) {
                out << "match\t" << opt.random_cases << " cases\n";
            }
        }
        return ok ? exit_ok : exit_mismatch;
    }

    const std::string text = read_input(opt, in);
    const oracle_report r = verify(text, cfg);
    const double total_ms = ms_since(start);
    if (opt.format == "json") {
        json j;
        j["command"] = "verify";
        j["n"] = text.size();
        j["result"]["matches"] = r.matches;
        if (r.first_divergence) {
            j["result"]["first_divergence"] = *r.first_divergence;
        }
        j["timings"]["total_ms"] = total_ms;
        out << j.dump() << "\n";
    } else if (r.matches) {
        out << "match\n";
    } else {
        out << "mismatch\tposition " << *r.first_divergence << "\n";
    }
    return r.matches ? exit_ok : exit_mismatch;
}

int cmd_bench(const options& opt, std::istream& in, std::ostream& out) {
    const std::string text = read_input(opt, in);
    const std::vector<std::string> engines =
        opt.bench_engines.empty() ? std::vector<std::string>{"poly"} : opt.bench_engines;
    const std::vector<unsigned> workers = opt.bench_workers.empty()
                                              ? std::vector<unsigned>{resolve_workers(0)}
                                              : opt.bench_workers;

    const auto start = std::chrono::steady_clock::now();
    json rows = json::array();
    std::vector<suffix_array> outputs;
    for (const std::string& engine : engines) {
        for (unsigned w : workers) {
            const parallel_config cfg{w, 1024};
            const auto t0 = std::chrono::steady_clock::now();
            outputs.push_back(run_engine(engine, text, cfg));
            rows.push_back({{"engine", engine}, {"workers", w}, {"ms", ms_since(t0)}});
        }
    }
    const double total_ms = ms_since(start);

    bool verified = true;
    for (std::size_t i = 1; i < outputs.size(); ++i) {
        verified = verified && outputs[i] == outputs[0];
    }

    if (opt.format == "json") {
        json j;
        j["command"] = "bench";
        j["n"] = text.size();
        j["result"] = rows;
        j["timings"]["total_ms"] = total_ms;
        j["verified"] = verified;
        out << j.dump() << "\n";
    } else {
        for (const json& row : rows) {
            out << row["engine"].get<std::string>() << "\t" << row["workers"] << "\t"
                << row["ms"] << "\n";
        }
        out << "verified\t" << (verified ? "true" : "false") << "\n";
    }
    return verified ? exit_ok : exit_mismatch;
}

}  // namespace

int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"suffix sorting over packed run-factor polynomials"};
    app.name("polysuffix");
    app.require_subcommand(1);

    options opt;

    CLI::App* sort_cmd = app.add_subcommand("sort", "build and print the suffix array");
    CLI::App* factorize_cmd =
        app.add_subcommand("factorize", "print per-suffix factor polynomials and bucket keys");
    CLI::App* verify_cmd =
        app.add_subcommand("verify", "check the packed path against the reference sorter");
    CLI::App* bench_cmd = app.add_subcommand("bench", "time the engines and cross-check outputs");

    for (CLI::App* cmd : {sort_cmd, factorize_cmd, verify_cmd, bench_cmd}) {
        cmd->add_option("--input,-i", opt.input, "input file path, or - for standard input");
        cmd->add_flag("--keep-trailing-newline", opt.keep_trailing_newline,
                      "keep a trailing newline instead of stripping it");
    }
    for (CLI::App* cmd : {sort_cmd, factorize_cmd, verify_cmd}) {
        cmd->add_option("--workers,-w", opt.workers,
                        "worker threads (default: POLYSUFFIX_WORKERS or 1)")
            ->check(CLI::PositiveNumber);
    }

    sort_cmd->add_option("--engine,-e", opt.engine, "poly, naive, or doubling")
        ->check(CLI::IsMember({"poly", "naive", "doubling"}));
    sort_cmd->add_option("--format,-f", opt.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    factorize_cmd->add_option("--engine,-e", opt.engine, "must be poly")
        ->check(CLI::IsMember({"poly"}));
    factorize_cmd->add_option("--format,-f", opt.format, "tsv, json, or paper-table")
        ->check(CLI::IsMember({"tsv", "json", "paper-table"}));
    factorize_cmd->add_flag("--binary", opt.binary,
                            "emit packed little-endian buffers, one record per suffix");

    verify_cmd->add_option("--format,-f", opt.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));
    verify_cmd->add_option("--random", opt.random_cases,
                           "check N random texts instead of reading input")
        ->check(CLI::PositiveNumber);

    bench_cmd->add_option("--engine,-e", opt.bench_engines,
                          "engines to time (repeat or comma-separate)")
        ->delimiter(',')
        ->check(CLI::IsMember({"poly", "naive", "doubling"}));
    bench_cmd->add_option("--workers,-w", opt.bench_workers, "worker counts to time")
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bench_cmd->add_option("--format,-f", opt.format, "tsv or json")
        ->check(CLI::IsMember({"tsv", "json"}));

    try {
        std::reverse(args.begin(), args.end());
        app.parse(std::move(args));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_ok : exit_io;
    }

    try {
        if (sort_cmd->parsed()) {
            return cmd_sort(opt, in, out);
        }
        if (factorize_cmd->parsed()) {
            return cmd_factorize(opt, in, out);
        }
        if (verify_cmd->parsed()) {
            return cmd_verify(opt, in, out);
        }
        return cmd_bench(opt, in, out);
    } catch (const error& e) {
        switch (e.code()) {
            case errc::empty_input:
            case errc::alphabet_too_large:
            case errc::unknown_symbol:
            case errc::degree_overflow:
            case errc::coefficient_overflow:
                err << "input cap: " << e.what() << "\n";
                return exit_cap;
            default:
                err << "internal error: " << e.what() << "\n";
                return exit_io;
        }
    } catch (const io_failure& e) {
        err << e.what() << "\n";
        return exit_io;
    } catch (const std::exception& e) {
        err << e.what() << "\n";
        return exit_io;
    }
}

}  // namespace polysuffix
