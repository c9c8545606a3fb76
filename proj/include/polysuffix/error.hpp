#pragma once

#include <stdexcept>
#include <string>

namespace polysuffix {

enum class errc {
    empty_input,
    alphabet_too_large,
    unknown_symbol,
    degree_overflow,
    coefficient_overflow,
    malformed_word,
    not_divisible,
    duplicate_key,
};

class error : public std::runtime_error {
  public:
    error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const noexcept { return code_; }

  private:
    errc code_;
};

struct empty_input_error : error {
    explicit empty_input_error(const std::string& what) : error(errc::empty_input, what) {}
};

struct alphabet_too_large_error : error {
    explicit alphabet_too_large_error(const std::string& what) : error(errc::alphabet_too_large, what) {}
};

struct unknown_symbol_error : error {
    explicit unknown_symbol_error(const std::string& what) : error(errc::unknown_symbol, what) {}
};

struct degree_overflow_error : error {
    explicit degree_overflow_error(const std::string& what) : error(errc::degree_overflow, what) {}
};

struct coefficient_overflow_error : error {
    explicit coefficient_overflow_error(const std::string& what) : error(errc::coefficient_overflow, what) {}
};

struct malformed_word_error : error {
    explicit malformed_word_error(const std::string& what) : error(errc::malformed_word, what) {}
};

struct not_divisible_error : error {
    explicit not_divisible_error(const std::string& what) : error(errc::not_divisible, what) {}
};

struct duplicate_key_error : error {
    explicit duplicate_key_error(const std::string& what) : error(errc::duplicate_key, what) {}
};

}  // namespace polysuffix
