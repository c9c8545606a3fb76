#pragma once

#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "polysuffix/encoding.hpp"
#include "polysuffix/parallel.hpp"
#include "polysuffix/suffix_sort.hpp"

namespace polysuffix {

// Element i is the encoded polynomial of the suffix starting at i. The
// result does not depend on the worker configuration. The text overload
// derives the degree mapping from the text itself.
std::vector<polynomial_buffer> parallel_map_suffixes(std::span<const std::uint8_t> degrees,
                                                     const parallel_config& cfg);
std::vector<polynomial_buffer> parallel_map_suffixes(std::string_view text,
                                                     const parallel_config& cfg);

// Orders the bucket list by key, then sorts bucket entries with each
// bucket handled as one task on the pool. Same result as the sequential
// order_buckets + sort_within_bucket.
void parallel_bucket_sort(std::vector<bucket>& buckets, const parallel_config& cfg);

}  // namespace polysuffix
