#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <string_view>

#include "polysuffix/parallel.hpp"
#include "polysuffix/suffix_sort.hpp"

namespace polysuffix {

// Reference sorter: orders suffix start indices by direct symbol-wise
// comparison of the suffixes. No alphabet-size or run-length caps.
suffix_array oracle_naive(std::string_view text);

// Prefix-doubling rank refinement over the raw bytes; same output as
// oracle_naive in O(n log^2 n).
suffix_array oracle_doubling(std::string_view text);

struct oracle_report {
    bool matches = true;
    // Position in the suffix array where the outputs first differ;
    // present iff matches is false.
    std::optional<std::size_t> first_divergence;
};

// Compares build_suffix_array(text) against oracle_naive(text).
oracle_report verify(std::string_view text, const parallel_config& cfg = {});

// Reproducible random text: 1..max_len symbols drawn from the first
// max_alpha lowercase letters, with no equal-symbol run longer than 63
// so the packed encoding accepts the result.
std::string random_text(std::mt19937& rng, std::size_t max_len = 512, unsigned max_alpha = 26);

// Like random_text, but guaranteed to contain an equal run of length
// >= 2 immediately followed by a larger symbol — the shape that breaks
// coefficient-only within-bucket ordering.
std::string random_run_text(std::mt19937& rng, std::size_t max_len = 512, unsigned max_alpha = 26);

}  // namespace polysuffix
