#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace polysuffix {

// Bijection between the distinct symbols of an input text and the degree
// indices 0..k-1, in ascending symbol order. At most 26 degrees fit the
// packed word layout (26 degree bits + 6 coefficient bits).
class alphabet {
  public:
    static constexpr std::size_t max_size = 26;

    // Builds the mapping from the distinct symbols of `text`.
    static alphabet from_text(std::string_view text);

    std::size_t size() const noexcept { return symbols_.size(); }

    // Ascending distinct symbols; degree_of(symbols()[i]) == i.
    const std::string& symbols() const noexcept { return symbols_; }

    bool contains(char c) const noexcept { return degree_[byte(c)] >= 0; }

    // 0-based rank of `c` among the distinct symbols.
    unsigned degree_of(char c) const;

    char symbol_at(std::size_t degree) const { return symbols_.at(degree); }

    // Maps every symbol of `text` to its degree.
    std::vector<std::uint8_t> degrees(std::string_view text) const;

  private:
    static std::size_t byte(char c) noexcept { return static_cast<unsigned char>(c); }

    std::string symbols_;
    std::array<std::int8_t, 256> degree_{};
};

}  // namespace polysuffix
