#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "polysuffix/alphabet.hpp"

namespace polysuffix {

// One maximal grouped segment of a suffix: either a strictly increasing
// degree run with coefficient 1, or a single repeated degree with
// coefficient = repeat count.
struct factor {
    std::vector<std::uint8_t> degrees;  // non-empty, strictly increasing
    std::uint64_t coefficient = 1;      // > 1 only when degrees has one element

    static factor run(std::uint8_t degree, std::uint64_t count);
    static factor increasing(std::vector<std::uint8_t> degrees);

    // Number of symbols the factor stands for.
    std::size_t term_count() const noexcept {
        return degrees.size() > 1 ? degrees.size() : static_cast<std::size_t>(coefficient);
    }

    bool operator==(const factor&) const = default;
};

// Ordered factor sequence for one suffix. `source_index` is the suffix's
// start position when the polynomial came from a text, absent for
// free-standing values.
struct polynomial {
    std::vector<factor> factors;
    std::optional<std::size_t> source_index;
};

// Canonical greedy factorization of a degree sequence, left to right:
// a maximal equal run of length m >= 2 at a factor boundary becomes one
// repeat factor m*x^d; otherwise an increasing-run factor opens and
// extends while the next degree is strictly greater. A run immediately
// after an increasing step contributes its first occurrence to the run
// and the remaining m-1 occurrences as a repeat factor.
polynomial factorize(std::span<const std::uint8_t> degrees);
polynomial factorize(std::string_view suffix, const alphabet& a);

// Inverse of factorize: the per-symbol degree sequence.
std::vector<std::uint8_t> expand_terms(const polynomial& p);

// Lexicographic comparison of the two term streams, proper prefix first.
// Streams lazily; never materializes the expansions.
std::strong_ordering compare_polynomials(const polynomial& p, const polynomial& q);

// First factor's degree set with the coefficient split off; the degree
// set is the bucket key, so repeat factors with different coefficients
// share one bucket.
struct leading_key {
    std::vector<std::uint8_t> degrees;
    std::uint64_t coefficient = 1;
};
leading_key leading_factor_key(const polynomial& p);

// Notation used by the tables: term x^d renders "1", "x", "x²", ...;
// increasing factors are parenthesized when they have >= 2 terms; a
// repeat factor renders "<m><term>" with m omitted when 1 and the
// degree-0 term dropped when m > 1 (coefficient 2 over degree 0 is "2").
std::string render_term(unsigned degree);
std::string render_factor(const factor& f);
std::string render(const polynomial& p);

// Bucket-key notation: terms joined by "·", never parenthesized.
std::string render_degrees(std::span<const std::uint8_t> degrees);

}  // namespace polysuffix
