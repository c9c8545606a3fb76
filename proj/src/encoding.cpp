#include "polysuffix/encoding.hpp"

#include <atomic>
#include <bit>
#include <thread>

#include "polysuffix/error.hpp"

namespace polysuffix {

namespace {

void check_word(std::uint32_t word) {
    const std::uint32_t mask = word & degree_field;
    const std::uint32_t coefficient = word >> coefficient_shift;
    if (mask == 0) {
        throw malformed_word_error("factor word has an empty degree mask");
    }
    if (coefficient == 0) {
        throw malformed_word_error("factor word has a zero coefficient field");
    }
    if (coefficient > 1 && std::popcount(mask) != 1) {
        throw malformed_word_error("repeat factor word must carry exactly one degree bit");
    }
}

}  // namespace

encoded_factor encode_factor(const factor& f) {
    std::uint32_t mask = 0;
    for (std::uint8_t d : f.degrees) {
        if (d >= degree_bits) {
            throw degree_overflow_error("degree " + std::to_string(d) +
                                        " does not fit the 26-bit degree mask");
        }
        mask |= 1u << d;
    }
    if (f.coefficient > max_coefficient) {
        throw coefficient_overflow_error("run of " + std::to_string(f.coefficient) +
                                         " exceeds the 6-bit coefficient cap of 63");
    }
    return encoded_factor{static_cast<std::uint32_t>(f.coefficient << coefficient_shift) | mask};
}

factor decode_factor(encoded_factor e) {
    check_word(e.word);
    factor f;
    f.coefficient = e.coefficient();
    std::uint32_t mask = e.degree_mask();
    while (mask != 0) {
        f.degrees.push_back(static_cast<std::uint8_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return f;
}

polynomial_buffer encode_polynomial(const polynomial& p) {
    polynomial_buffer b;
    b.words.reserve(p.factors.size() + 1);
    b.words.push_back(static_cast<std::uint32_t>(p.factors.size()));
    for (const factor& f : p.factors) {
        b.words.push_back(encode_factor(f).word);
    }
    return b;
}

polynomial decode_polynomial(const polynomial_buffer& b) {
    if (b.words.size() != b.factor_count() + 1) {
        throw malformed_word_error("buffer length disagrees with its count word");
    }
    polynomial p;
    p.factors.reserve(b.factor_count());
    for (std::uint32_t w : b.payload()) {
        p.factors.push_back(decode_factor(encoded_factor{w}));
    }
    return p;
}

bucket_key key_of(const polynomial_buffer& b) {
    if (b.factor_count() == 0) {
        throw empty_input_error("empty buffer has no leading factor");
    }
    return bucket_key{b.words[1] & degree_field};
}

std::string render_key(bucket_key k) {
    std::vector<std::uint8_t> degrees;
    std::uint32_t mask = k.word & degree_field;
    while (mask != 0) {
        degrees.push_back(static_cast<std::uint8_t>(std::countr_zero(mask)));
        mask &= mask - 1;
    }
    return render_degrees(degrees);
}

division_result divide_by_key(const polynomial_buffer& b, bucket_key k) {
    if (b.factor_count() == 0) {
        throw not_divisible_error("empty polynomial is not divisible");
    }
    const std::uint32_t remainder = b.words[1] ^ k.word;
    if ((remainder & degree_field) != 0) {
        throw not_divisible_error("bucket key is not the leading factor of this polynomial");
    }
    division_result out;
    out.coefficient = b.words[1] >> coefficient_shift;
    out.residue.words.reserve(b.words.size() - 1);
    out.residue.words.push_back(static_cast<std::uint32_t>(b.factor_count() - 1));
    out.residue.words.insert(out.residue.words.end(), b.words.begin() + 2, b.words.end());
    return out;
}

std::optional<std::size_t> find_first_difference(const polynomial_buffer& b1,
                                                 const polynomial_buffer& b2) {
    const std::size_t n1 = b1.factor_count();
    const std::size_t n2 = b2.factor_count();
    const std::size_t shared = std::min(n1, n2);
    for (std::size_t i = 1; i <= shared; ++i) {
        if (b1.words[i] != b2.words[i]) {
            return i;
        }
    }
    if (n1 != n2) {
        return shared + 1;
    }
    return std::nullopt;
}

std::optional<std::size_t> find_first_difference(const polynomial_buffer& b1,
                                                 const polynomial_buffer& b2, unsigned workers,
                                                 std::size_t chunk) {
    const std::size_t n1 = b1.factor_count();
    const std::size_t n2 = b2.factor_count();
    const std::size_t shared = std::min(n1, n2);
    chunk = std::max<std::size_t>(chunk, 1);

    const std::size_t chunks = (shared + chunk - 1) / chunk;
    const unsigned spawn = static_cast<unsigned>(
        std::min<std::size_t>(std::max(workers, 1u), std::max<std::size_t>(chunks, 1)));

    if (spawn <= 1) {
        return find_first_difference(b1, b2);
    }

    // Minimum reduction over differing indices; chunk order keeps each
    // worker's scan ascending so it can stop once past the current best.
    std::atomic<std::size_t> best{SIZE_MAX};
    auto scan = [&](unsigned worker) {
        for (std::size_t c = worker; c < chunks; c += spawn) {
            const std::size_t begin = 1 + c * chunk;
            if (begin > best.load(std::memory_order_relaxed)) {
                return;
            }
            const std::size_t end = std::min(shared, begin + chunk - 1);
            for (std::size_t i = begin; i <= end; ++i) {
                if (b1.words[i] != b2.words[i]) {
                    std::size_t cur = best.load(std::memory_order_relaxed);
                    while (i < cur &&
                           !best.compare_exchange_weak(cur, i, std::memory_order_relaxed)) {
                    }
                    return;
                }
            }
        }
    };

    std::vector<std::thread> pool;
    pool.reserve(spawn);
    for (unsigned w = 0; w < spawn; ++w) {
        pool.emplace_back(scan, w);
    }
    for (auto& t : pool) {
        t.join();
    }

    const std::size_t found = best.load();
    if (found != SIZE_MAX) {
        return found;
    }
    if (n1 != n2) {
        return shared + 1;
    }
    return std::nullopt;
}

encoded_term_cursor::encoded_term_cursor(std::uint32_t head_word,
                                         std::span<const std::uint32_t> tail)
    : tail_(tail) {
    load(head_word);
}

encoded_term_cursor::encoded_term_cursor(const polynomial_buffer& b,
                                         std::size_t first_payload_index) {
    const std::size_t count = b.factor_count();
    if (first_payload_index > count) {
        return;  // empty stream
    }
    tail_ = std::span(b.words).subspan(first_payload_index + 1, count - first_payload_index);
    load(b.words[first_payload_index]);
}

void encoded_term_cursor::load(std::uint32_t word) {
    check_word(word);
    const std::uint32_t mask = word & degree_field;
    const std::uint32_t coefficient = word >> coefficient_shift;
    if (std::popcount(mask) > 1) {
        mask_left_ = mask;
        remaining_ = static_cast<std::uint32_t>(std::popcount(mask));
    } else {
        mask_left_ = 0;
        remaining_ = coefficient;
    }
    current_ = static_cast<std::uint8_t>(std::countr_zero(mask));
}

void encoded_term_cursor::next_word() {
    if (tail_.empty()) {
        remaining_ = 0;
        mask_left_ = 0;
        return;
    }
    const std::uint32_t w = tail_.front();
    tail_ = tail_.subspan(1);
    load(w);
}

void encoded_term_cursor::advance() {
    if (--remaining_ == 0) {
        next_word();
        return;
    }
    if (mask_left_ != 0) {
        mask_left_ &= mask_left_ - 1;
        current_ = static_cast<std::uint8_t>(std::countr_zero(mask_left_));
    }
}

std::strong_ordering compare_term_streams(encoded_term_cursor a, encoded_term_cursor b) {
    while (!a.at_end() && !b.at_end()) {
        const std::uint8_t da = a.current();
        const std::uint8_t db = b.current();
        if (da != db) {
            return da < db ? std::strong_ordering::less : std::strong_ordering::greater;
        }
        a.advance();
        b.advance();
    }
    if (a.at_end() && b.at_end()) {
        return std::strong_ordering::equal;
    }
    return a.at_end() ? std::strong_ordering::less : std::strong_ordering::greater;
}

compare_trace compare_encoded_traced(const polynomial_buffer& b1, const polynomial_buffer& b2) {
    compare_trace trace;
    trace.first_difference = find_first_difference(b1, b2);
    if (!trace.first_difference) {
        trace.verdict = std::strong_ordering::equal;
        return trace;
    }

    const std::size_t i = *trace.first_difference;
    if (i <= b1.factor_count() && i <= b2.factor_count()) {
        const std::uint32_t w1 = b1.words[i];
        const std::uint32_t w2 = b2.words[i];
        check_word(w1);
        check_word(w2);
        const std::uint32_t m1 = w1 & degree_field;
        const std::uint32_t m2 = w2 & degree_field;
        const std::uint32_t x = m1 ^ m2;
        if (x != 0 && (w1 >> coefficient_shift) == (w2 >> coefficient_shift)) {
            // Word-level resolution: the lowest differing degree decides,
            // except when one mask is a prefix of the other's low bits, in
            // which case the shorter (subset) side orders first.
            trace.fast_path = true;
            trace.xor_mask = x;
            trace.low_bit = x & (~x + 1);
            if (trace.low_bit > m1) {
                trace.verdict = std::strong_ordering::less;
            } else if (trace.low_bit > m2) {
                trace.verdict = std::strong_ordering::greater;
            } else {
                trace.verdict = (trace.low_bit & m1) != 0 ? std::strong_ordering::less
                                                          : std::strong_ordering::greater;
            }
            return trace;
        }
    }

    // Equal masks with different coefficients, or a word-level prefix: a
    // local word rule cannot decide, so stream the remaining factors.
    trace.verdict = compare_term_streams(encoded_term_cursor(b1, i), encoded_term_cursor(b2, i));
    return trace;
}

std::strong_ordering compare_encoded(const polynomial_buffer& b1, const polynomial_buffer& b2) {
    return compare_encoded_traced(b1, b2).verdict;
}

}  // namespace polysuffix
