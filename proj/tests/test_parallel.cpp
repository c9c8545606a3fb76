#include <doctest.h>

#include <atomic>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "polysuffix/encoding.hpp"
#include "polysuffix/engine.hpp"
#include "polysuffix/error.hpp"
#include "polysuffix/oracle.hpp"
#include "polysuffix/parallel.hpp"
#include "polysuffix/suffix_sort.hpp"

using namespace polysuffix;

TEST_CASE("parallel_for covers every index exactly once") {
    const std::size_t n = 10007;
    std::vector<std::atomic<int>> hits(n);
    parallel_for(n, parallel_config{8, 64}, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            hits[i].fetch_add(1, std::memory_order_relaxed);
        }
    });
    for (std::size_t i = 0; i < n; ++i) {
        REQUIRE(hits[i].load() == 1);
    }
}

TEST_CASE("parallel_for handles more workers than work") {
    std::vector<std::atomic<int>> hits(3);
    parallel_for(3, parallel_config{8, 1}, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            hits[i].fetch_add(1);
        }
    });
    for (auto& h : hits) {
        CHECK(h.load() == 1);
    }

    bool called = false;
    parallel_for(0, parallel_config{4, 16}, [&](std::size_t, std::size_t) { called = true; });
    CHECK_FALSE(called);
}

TEST_CASE("parallel_for rethrows the failure of the lowest chunk") {
    auto boom = [](std::size_t begin, std::size_t) {
        if (begin == 2 || begin == 7) {
            throw std::runtime_error("chunk " + std::to_string(begin));
        }
    };
    for (unsigned workers : {1u, 4u}) {
        try {
            parallel_for(10, parallel_config{workers, 1}, boom);
            FAIL("expected a throw");
        } catch (const std::runtime_error& e) {
            CHECK(std::string(e.what()) == "chunk 2");
        }
    }
}

TEST_CASE("suffix mapping is identical for any worker configuration") {
    const alphabet a = alphabet::from_text("babaabcbabaa");
    const std::vector<std::uint8_t> degs = a.degrees("babaabcbabaa");
    const auto reference = parallel_map_suffixes(std::span<const std::uint8_t>(degs),
                                                 parallel_config{1, 1024});
    for (unsigned workers : {2u, 8u}) {
        for (std::size_t chunk : {std::size_t{1}, std::size_t{3}, std::size_t{1024}}) {
            CHECK(parallel_map_suffixes(std::span<const std::uint8_t>(degs),
                                        parallel_config{workers, chunk}) == reference);
        }
    }
}

TEST_CASE("the text overload maps each suffix to its own buffer") {
    const auto buffers = parallel_map_suffixes("aacaagtttacaagc", parallel_config{4, 2});
    REQUIRE(buffers.size() == 15);
    CHECK(render_key(key_of(buffers[0])) == "1");
    CHECK(render_key(key_of(buffers[6])) == "x³");
    CHECK(buffers[6].payload().front() == ((3u << 26) | 0b1000u));  // ttt packs as one word
    CHECK(buffers[14].factor_count() == 1);

    const auto tiny = parallel_map_suffixes("q", parallel_config{4, 1024});
    REQUIRE(tiny.size() == 1);
    CHECK(tiny[0].factor_count() == 1);
}

TEST_CASE("parallel bucket sorting equals the sequential passes") {
    const alphabet a = alphabet::from_text("babaabcbabaa");

    std::vector<bucket> sequential = assign_buckets("babaabcbabaa", a);
    order_buckets(sequential);
    for (bucket& b : sequential) {
        sort_within_bucket(b);
    }

    for (unsigned workers : {1u, 2u, 8u}) {
        std::vector<bucket> parallel = assign_buckets("babaabcbabaa", a);
        parallel_bucket_sort(parallel, parallel_config{workers, 1024});
        REQUIRE(parallel.size() == sequential.size());
        for (std::size_t i = 0; i < parallel.size(); ++i) {
            CHECK(parallel[i].key == sequential[i].key);
            REQUIRE(parallel[i].entries.size() == sequential[i].entries.size());
            for (std::size_t j = 0; j < parallel[i].entries.size(); ++j) {
                CHECK(parallel[i].entries[j].suffix_index ==
                      sequential[i].entries[j].suffix_index);
            }
        }
        CHECK(collect_order(parallel, 12) ==
              suffix_array{11, 10, 3, 8, 1, 4, 9, 2, 7, 0, 5, 6});
    }

    // All suffixes of aaa share one bucket; many workers still sort it.
    const alphabet aa = alphabet::from_text("a");
    std::vector<bucket> single = assign_buckets("aaa", aa);
    REQUIRE(single.size() == 1);
    parallel_bucket_sort(single, parallel_config{8, 1});
    CHECK(collect_order(single, 3) == suffix_array{2, 1, 0});
}

TEST_CASE("pipeline output is bit-identical across worker configurations") {
    std::mt19937 rng(13577531);
    for (int round = 0; round < 25; ++round) {
        const std::string text = random_text(rng, 160, 9);
        CAPTURE(text);
        const suffix_array reference = build_suffix_array(text, parallel_config{1, 1024});
        for (unsigned workers : {2u, 8u}) {
            for (std::size_t chunk : {std::size_t{1}, std::size_t{16}, std::size_t{1024}}) {
                CHECK(build_suffix_array(text, parallel_config{workers, chunk}) == reference);
            }
        }
    }
}

TEST_CASE("cap errors surface identically from parallel runs") {
    const std::string over = std::string(64, 'a') + "b";
    for (unsigned workers : {1u, 8u}) {
        const parallel_config cfg{workers, 4};
        CHECK_THROWS_AS(build_suffix_array(over, cfg), coefficient_overflow_error);
    }
}
