#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polysuffix/polynomial.hpp"

namespace polysuffix {

// Packed factor word layout. Bits 0..25 hold the degree mask (bit i set
// iff degree i is present), bits 26..31 hold the coefficient (1..63).
inline constexpr unsigned degree_bits = 26;
inline constexpr std::uint32_t degree_field = (1u << degree_bits) - 1;
inline constexpr unsigned coefficient_shift = degree_bits;
inline constexpr std::uint32_t max_coefficient = (1u << (32 - degree_bits)) - 1;  // 63

struct encoded_factor {
    std::uint32_t word = 0;

    std::uint32_t degree_mask() const noexcept { return word & degree_field; }
    std::uint32_t coefficient() const noexcept { return word >> coefficient_shift; }

    bool operator==(const encoded_factor&) const = default;
};

// Degree mask with the coefficient field stripped; keys suffixes whose
// polynomials share a leading factor shape.
struct bucket_key {
    std::uint32_t word = 0;

    bool operator==(const bucket_key&) const = default;
};

// Counted word array: words[0] is the factor count n, words[1..n] the
// encoded factors in order.
struct polynomial_buffer {
    std::vector<std::uint32_t> words;

    std::size_t factor_count() const noexcept { return words.empty() ? 0 : words.front(); }
    std::span<const std::uint32_t> payload() const noexcept {
        return std::span(words).subspan(words.empty() ? 0 : 1);
    }

    bool operator==(const polynomial_buffer&) const = default;
};

encoded_factor encode_factor(const factor& f);
factor decode_factor(encoded_factor e);

polynomial_buffer encode_polynomial(const polynomial& p);
polynomial decode_polynomial(const polynomial_buffer& b);

// Leading factor's degree mask.
bucket_key key_of(const polynomial_buffer& b);
std::string render_key(bucket_key k);

struct division_result {
    std::uint32_t coefficient = 0;
    polynomial_buffer residue;
};

// XOR test against the leading word: the division succeeds iff no degree
// bit survives, yielding the leading coefficient and the factor tail.
division_result divide_by_key(const polynomial_buffer& b, bucket_key k);

// Smallest payload index i >= 1 whose words differ, scanning up to the
// shorter payload; the shorter buffer's first out-of-range index when one
// is a word-level prefix of the other; nullopt iff the buffers are
// identical. The parallel overload partitions the index range into chunks
// and reduces by minimum; its result is identical for any worker count.
std::optional<std::size_t> find_first_difference(const polynomial_buffer& b1,
                                                 const polynomial_buffer& b2);
std::optional<std::size_t> find_first_difference(const polynomial_buffer& b1,
                                                 const polynomial_buffer& b2, unsigned workers,
                                                 std::size_t chunk);

// Diagnostic record of one encoded comparison: the first differing payload
// index, the degree-mask XOR and its lowest set bit when the word-level
// fast path applied, and the verdict.
struct compare_trace {
    std::optional<std::size_t> first_difference;
    std::uint32_t xor_mask = 0;
    std::uint32_t low_bit = 0;
    bool fast_path = false;
    std::strong_ordering verdict = std::strong_ordering::equal;
};

// Agrees with compare_polynomials on the decoded values. Resolves at the
// first differing word when the degree masks differ under equal
// coefficients; falls back to streaming the remaining factors otherwise
// (unequal coefficients, or a word-level prefix).
std::strong_ordering compare_encoded(const polynomial_buffer& b1, const polynomial_buffer& b2);
compare_trace compare_encoded_traced(const polynomial_buffer& b1, const polynomial_buffer& b2);

// Streams the degree terms of an encoded buffer starting at a payload
// index, decoding factor words on the fly.
class encoded_term_cursor {
  public:
    encoded_term_cursor(std::uint32_t head_word, std::span<const std::uint32_t> tail);
    encoded_term_cursor(const polynomial_buffer& b, std::size_t first_payload_index);

    bool at_end() const noexcept { return remaining_ == 0; }
    std::uint8_t current() const noexcept { return current_; }
    void advance();

  private:
    void load(std::uint32_t word);
    void next_word();

    std::span<const std::uint32_t> tail_;
    std::uint32_t mask_left_ = 0;   // unread degree bits of an increasing factor
    std::uint32_t remaining_ = 0;   // terms left in the current factor
    std::uint8_t current_ = 0;
};

std::strong_ordering compare_term_streams(encoded_term_cursor a, encoded_term_cursor b);

}  // namespace polysuffix
