#include "polysuffix/suffix_sort.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <unordered_map>

#include "polysuffix/engine.hpp"
#include "polysuffix/error.hpp"
#include "polysuffix/polynomial.hpp"

namespace polysuffix {

bool key_less(bucket_key a, bucket_key b) noexcept {
    const std::uint32_t x = a.word ^ b.word;
    if (x == 0) {
        return false;
    }
    const std::uint32_t low = x & (~x + 1);
    // A mask entirely below the lowest differing degree is a prefix of the
    // other's ascending degree list, so it orders first. Otherwise the side
    // holding the lowest differing degree has the smaller next element.
    if (low > a.word) {
        return true;
    }
    if (low > b.word) {
        return false;
    }
    return (a.word & low) != 0;
}

std::vector<bucket> assign_buckets(std::span<const polynomial_buffer> suffix_polynomials) {
    std::vector<bucket> buckets;
    std::unordered_map<std::uint32_t, std::size_t> slot_of;
    for (std::size_t i = 0; i < suffix_polynomials.size(); ++i) {
        const bucket_key key = key_of(suffix_polynomials[i]);
        auto [it, inserted] = slot_of.try_emplace(key.word, buckets.size());
        if (inserted) {
            buckets.push_back(bucket{key, {}});
        }
        division_result div = divide_by_key(suffix_polynomials[i], key);
        buckets[it->second].entries.push_back(bucket_entry{
            static_cast<std::uint32_t>(i), div.coefficient, std::move(div.residue)});
    }
    return buckets;
}

std::vector<bucket> assign_buckets(std::string_view text, const alphabet& a) {
    const std::vector<std::uint8_t> degs = a.degrees(text);
    std::vector<polynomial_buffer> encoded(degs.size());
    for (std::size_t i = 0; i < degs.size(); ++i) {
        encoded[i] = encode_polynomial(factorize(std::span(degs).subspan(i)));
    }
    return assign_buckets(encoded);
}

void order_buckets(std::vector<bucket>& buckets) {
    std::sort(buckets.begin(), buckets.end(),
              [](const bucket& a, const bucket& b) { return key_less(a.key, b.key); });
    for (std::size_t i = 1; i < buckets.size(); ++i) {
        if (buckets[i].key == buckets[i - 1].key) {
            throw duplicate_key_error("bucket key " + render_key(buckets[i].key) +
                                      " assigned twice");
        }
    }
}

std::strong_ordering compare_entries(bucket_key key, const bucket_entry& a,
                                     const bucket_entry& b) {
    const std::uint32_t head_a = (a.coefficient << coefficient_shift) | key.word;
    const std::uint32_t head_b = (b.coefficient << coefficient_shift) | key.word;
    return compare_term_streams(encoded_term_cursor(head_a, a.residue.payload()),
                                encoded_term_cursor(head_b, b.residue.payload()));
}

void sort_within_bucket(bucket& b) {
    std::sort(b.entries.begin(), b.entries.end(),
              [&b](const bucket_entry& x, const bucket_entry& y) {
                  return compare_entries(b.key, x, y) < 0;
              });
}

suffix_array collect_order(std::span<const bucket> ordered, std::size_t n) {
    suffix_array sa;
    sa.reserve(n);
    for (const bucket& b : ordered) {
        for (const bucket_entry& e : b.entries) {
            sa.push_back(e.suffix_index);
        }
    }
    return sa;
}

suffix_array build_suffix_array(std::string_view text, const parallel_config& cfg) {
    const alphabet a = alphabet::from_text(text);
    const std::vector<std::uint8_t> degs = a.degrees(text);
    const std::vector<polynomial_buffer> polys = parallel_map_suffixes(degs, cfg);
    std::vector<bucket> buckets = assign_buckets(polys);
    parallel_bucket_sort(buckets, cfg);
    return collect_order(buckets, text.size());
}

suffix_array rank_reuse_sort(std::string_view text) {
    const alphabet a = alphabet::from_text(text);
    const std::vector<std::uint8_t> degs = a.degrees(text);
    const std::size_t n = degs.size();
    std::vector<polynomial_buffer> polys(n);
    for (std::size_t i = 0; i < n; ++i) {
        polys[i] = encode_polynomial(factorize(std::span(degs).subspan(i)));
    }
    std::vector<bucket> buckets = assign_buckets(polys);
    order_buckets(buckets);

    constexpr std::uint32_t unranked = std::numeric_limits<std::uint32_t>::max();
    std::vector<std::uint32_t> rank(n, unranked);
    suffix_array sa;
    sa.reserve(n);

    for (bucket& b : buckets) {
        const std::size_t key_terms = std::popcount(b.key.word);
        auto less = [&](const bucket_entry& x, const bucket_entry& y) {
            if (x.coefficient == y.coefficient) {
                // Equal leading factors: the order is the order of the
                // suffixes that start right after them. Reuse their ranks
                // when both are already placed (they sat in earlier
                // buckets); otherwise stream the comparison.
                const std::size_t len = x.coefficient > 1 ? x.coefficient : key_terms;
                const std::size_t rest_x = x.suffix_index + len;
                const std::size_t rest_y = y.suffix_index + len;
                if (rest_x == n || rest_y == n) {
                    return rest_x == n && rest_y != n;
                }
                if (rank[rest_x] != unranked && rank[rest_y] != unranked) {
                    return rank[rest_x] < rank[rest_y];
                }
            }
            return compare_entries(b.key, x, y) < 0;
        };
        std::sort(b.entries.begin(), b.entries.end(), less);
        for (const bucket_entry& e : b.entries) {
            rank[e.suffix_index] = static_cast<std::uint32_t>(sa.size());
            sa.push_back(e.suffix_index);
        }
    }
    return sa;
}

}  // namespace polysuffix
