#include "polysuffix/alphabet.hpp"

#include <bitset>

#include "polysuffix/error.hpp"

namespace polysuffix {

alphabet alphabet::from_text(std::string_view text) {
    if (text.empty()) {
        throw empty_input_error("cannot build an alphabet from empty input");
    }

    std::bitset<256> seen;
    for (char c : text) {
        seen.set(byte(c));
    }

    alphabet a;
    a.degree_.fill(-1);
    for (std::size_t b = 0; b < seen.size(); ++b) {
        if (!seen.test(b)) {
            continue;
        }
        if (a.symbols_.size() == max_size) {
            throw alphabet_too_large_error("alphabet cap exceeded: more than 26 distinct symbols");
        }
        a.degree_[b] = static_cast<std::int8_t>(a.symbols_.size());
        a.symbols_.push_back(static_cast<char>(b));
    }
    return a;
}

unsigned alphabet::degree_of(char c) const {
    const std::int8_t d = degree_[byte(c)];
    if (d < 0) {
        throw unknown_symbol_error(std::string("symbol not in alphabet: '") + c + "'");
    }
    return static_cast<unsigned>(d);
}

std::vector<std::uint8_t> alphabet::degrees(std::string_view text) const {
    std::vector<std::uint8_t> out;
    out.reserve(text.size());
    for (char c : text) {
        out.push_back(static_cast<std::uint8_t>(degree_of(c)));
    }
    return out;
}

}  // namespace polysuffix
