#include "polysuffix/oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <utility>
#include <vector>

#include "polysuffix/error.hpp"

namespace polysuffix {

suffix_array oracle_naive(std::string_view text) {
    if (text.empty()) {
        throw empty_input_error("cannot sort the suffixes of an empty text");
    }
    suffix_array sa(text.size());
    std::iota(sa.begin(), sa.end(), 0u);
    std::sort(sa.begin(), sa.end(), [text](std::uint32_t a, std::uint32_t b) {
        return text.substr(a) < text.substr(b);
    });
    return sa;
}

suffix_array oracle_doubling(std::string_view text) {
    if (text.empty()) {
        throw empty_input_error("cannot sort the suffixes of an empty text");
    }
    const std::size_t n = text.size();
    std::vector<std::int64_t> rank(n);
    std::vector<std::int64_t> refined(n);
    for (std::size_t i = 0; i < n; ++i) {
        rank[i] = static_cast<unsigned char>(text[i]);
    }
    suffix_array sa(n);
    std::iota(sa.begin(), sa.end(), 0u);

    for (std::size_t k = 1;; k *= 2) {
        auto pair_of = [&](std::uint32_t i) {
            return std::pair<std::int64_t, std::int64_t>(rank[i],
                                                         i + k < n ? rank[i + k] : -1);
        };
        std::sort(sa.begin(), sa.end(),
                  [&](std::uint32_t a, std::uint32_t b) { return pair_of(a) < pair_of(b); });
        refined[sa[0]] = 0;
        for (std::size_t i = 1; i < n; ++i) {
            refined[sa[i]] = refined[sa[i - 1]] + (pair_of(sa[i - 1]) < pair_of(sa[i]) ? 1 : 0);
        }
        rank = refined;
        if (rank[sa.back()] == static_cast<std::int64_t>(n) - 1) {
            break;
        }
    }
    return sa;
}

oracle_report verify(std::string_view text, const parallel_config& cfg) {
    const suffix_array expected = oracle_naive(text);
    const suffix_array got = build_suffix_array(text, cfg);
    const std::size_t common = std::min(expected.size(), got.size());
    for (std::size_t i = 0; i < common; ++i) {
        if (got[i] != expected[i]) {
            return {false, i};
        }
    }
    if (expected.size() != got.size()) {
        return {false, common};
    }
    return {true, std::nullopt};
}

namespace {

// Appends `count` random symbols from the first `alpha` letters, keeping
// every equal-symbol run at 63 or shorter across the append boundary.
void append_symbols(std::mt19937& rng, std::string& text, std::size_t count, unsigned alpha) {
    std::uniform_int_distribution<unsigned> sym(0, alpha - 1);
    std::size_t run = 0;
    if (!text.empty()) {
        for (auto it = text.rbegin(); it != text.rend() && *it == text.back(); ++it) {
            ++run;
        }
    }
    for (std::size_t i = 0; i < count; ++i) {
        char c = static_cast<char>('a' + sym(rng));
        if (alpha > 1 && !text.empty() && c == text.back() && run >= 63) {
            do {
                c = static_cast<char>('a' + sym(rng));
            } while (c == text.back());
        }
        run = (!text.empty() && c == text.back()) ? run + 1 : 1;
        text.push_back(c);
    }
}

}  // namespace

std::string random_text(std::mt19937& rng, std::size_t max_len, unsigned max_alpha) {
    max_len = std::max<std::size_t>(max_len, 1);
    max_alpha = std::clamp(max_alpha, 1u, 26u);
    std::uniform_int_distribution<unsigned> alpha_dist(1, max_alpha);
    const unsigned alpha = alpha_dist(rng);
    // A one-letter text is a single run, so its whole length is capped.
    const std::size_t cap = alpha == 1 ? std::min<std::size_t>(max_len, 63) : max_len;
    std::uniform_int_distribution<std::size_t> len_dist(1, cap);
    std::string text;
    append_symbols(rng, text, len_dist(rng), alpha);
    return text;
}

std::string random_run_text(std::mt19937& rng, std::size_t max_len, unsigned max_alpha) {
    max_alpha = std::clamp(max_alpha, 2u, 26u);
    std::uniform_int_distribution<unsigned> alpha_dist(2, max_alpha);
    const unsigned alpha = alpha_dist(rng);
    std::uniform_int_distribution<unsigned> low_dist(0, alpha - 2);
    const unsigned low = low_dist(rng);
    std::uniform_int_distribution<unsigned> high_dist(low + 1, alpha - 1);
    const char run_sym = static_cast<char>('a' + low);
    const char next_sym = static_cast<char>('a' + high_dist(rng));
    std::uniform_int_distribution<std::size_t> run_dist(2, 8);
    const std::size_t run = run_dist(rng);

    // The injected block is run+1 symbols; a tiny max_len may be exceeded.
    const std::size_t need = run + 1;
    const std::size_t budget = max_len > need ? max_len - need : 0;
    std::uniform_int_distribution<std::size_t> prefix_dist(0, budget);
    const std::size_t prefix_len = prefix_dist(rng);
    std::uniform_int_distribution<std::size_t> suffix_dist(0, budget - prefix_len);
    const std::size_t suffix_len = suffix_dist(rng);

    std::string text;
    append_symbols(rng, text, prefix_len, alpha);
    // Do not let the prefix extend the injected run past the cap.
    while (!text.empty() && text.back() == run_sym) {
        text.pop_back();
    }
    text.append(run, run_sym);
    text.push_back(next_sym);
    append_symbols(rng, text, suffix_len, alpha);
    return text;
}

}  // namespace polysuffix
