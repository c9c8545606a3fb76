#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "polysuffix/alphabet.hpp"
#include "polysuffix/encoding.hpp"
#include "polysuffix/parallel.hpp"

namespace polysuffix {

// Suffix start indices in lexicographic order of the suffixes.
using suffix_array = std::vector<std::uint32_t>;

// One suffix filed under its bucket: the leading coefficient and the
// factor tail left by dividing out the bucket key.
struct bucket_entry {
    std::uint32_t suffix_index = 0;
    std::uint32_t coefficient = 1;
    polynomial_buffer residue;
};

struct bucket {
    bucket_key key;
    std::vector<bucket_entry> entries;
};

// Orders two bucket keys as single-factor polynomials: the set whose
// lowest differing degree is smaller comes first, except that a degree
// set extending another's low elements orders after it.
bool key_less(bucket_key a, bucket_key b) noexcept;

// One bucket per distinct leading degree set; every suffix lands in
// exactly one bucket with the coefficient and residue from dividing its
// polynomial by the key. Entry order inside a bucket is ascending suffix
// index; the bucket list is in first-encounter order.
std::vector<bucket> assign_buckets(std::span<const polynomial_buffer> suffix_polynomials);
std::vector<bucket> assign_buckets(std::string_view text, const alphabet& a);

// Sorts the bucket list by key. Keys must be distinct.
void order_buckets(std::vector<bucket>& buckets);

// Full suffix order of two same-bucket entries, comparing the term
// streams of (coefficient x key degrees, then residue). Coefficient
// monotonicity is not assumed; the streams decide.
std::strong_ordering compare_entries(bucket_key key, const bucket_entry& a, const bucket_entry& b);

// Orders entries so their suffixes are in lexicographic order.
void sort_within_bucket(bucket& b);

// Concatenates ordered bucket entries into the final permutation.
suffix_array collect_order(std::span<const bucket> ordered, std::size_t n);

// End-to-end polynomial-path sorter: factorize and encode every suffix,
// bucket by leading degree set, order buckets and entries, concatenate.
// Output is bit-identical for any worker configuration.
suffix_array build_suffix_array(std::string_view text, const parallel_config& cfg = {});

// Same output as build_suffix_array. Sequentially processes buckets in
// key order and, when two same-bucket entries share a coefficient, reuses
// the already-assigned order of the suffixes right after the consumed
// leading factor instead of streaming the comparison again.
suffix_array rank_reuse_sort(std::string_view text);

}  // namespace polysuffix
