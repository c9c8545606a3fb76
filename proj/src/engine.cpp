#include "polysuffix/engine.hpp"

#include "polysuffix/alphabet.hpp"
#include "polysuffix/polynomial.hpp"

namespace polysuffix {

std::vector<polynomial_buffer> parallel_map_suffixes(std::span<const std::uint8_t> degrees,
                                                     const parallel_config& cfg) {
    std::vector<polynomial_buffer> out(degrees.size());
    parallel_for(degrees.size(), cfg, [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            out[i] = encode_polynomial(factorize(degrees.subspan(i)));
        }
    });
    return out;
}

std::vector<polynomial_buffer> parallel_map_suffixes(std::string_view text,
                                                     const parallel_config& cfg) {
    const alphabet a = alphabet::from_text(text);
    const std::vector<std::uint8_t> degs = a.degrees(text);
    return parallel_map_suffixes(std::span<const std::uint8_t>(degs), cfg);
}

void parallel_bucket_sort(std::vector<bucket>& buckets, const parallel_config& cfg) {
    order_buckets(buckets);
    // One bucket per task: bucket sizes are too uneven for larger chunks
    // to help, and a single writer per bucket keeps the phase race-free.
    parallel_config per_bucket = cfg;
    per_bucket.chunk = 1;
    parallel_for(buckets.size(), per_bucket, [&](std::size_t begin, std::size_t end) {
        for (std::size_t b = begin; b < end; ++b) {
            sort_within_bucket(buckets[b]);
        }
    });
}

}  // namespace polysuffix
