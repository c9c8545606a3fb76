#include "polysuffix/polynomial.hpp"

#include <stdexcept>

#include "polysuffix/error.hpp"

namespace polysuffix {

factor factor::run(std::uint8_t degree, std::uint64_t count) {
    if (count == 0) {
        throw std::invalid_argument("factor coefficient must be positive");
    }
    factor f;
    f.degrees = {degree};
    f.coefficient = count;
    return f;
}

factor factor::increasing(std::vector<std::uint8_t> degrees) {
    if (degrees.empty()) {
        throw std::invalid_argument("factor needs at least one degree");
    }
    for (std::size_t i = 1; i < degrees.size(); ++i) {
        if (degrees[i] <= degrees[i - 1]) {
            throw std::invalid_argument("factor degrees must be strictly increasing");
        }
    }
    factor f;
    f.degrees = std::move(degrees);
    f.coefficient = 1;
    return f;
}

polynomial factorize(std::span<const std::uint8_t> degrees) {
    if (degrees.empty()) {
        throw empty_input_error("cannot factorize an empty suffix");
    }

    polynomial p;
    std::size_t i = 0;
    const std::size_t n = degrees.size();
    while (i < n) {
        if (i + 1 < n && degrees[i + 1] == degrees[i]) {
            // Maximal equal run at a factor boundary.
            std::size_t j = i + 1;
            while (j < n && degrees[j] == degrees[i]) {
                ++j;
            }
            p.factors.push_back(factor::run(degrees[i], j - i));
            i = j;
        } else {
            // Increasing run; closes as soon as the next degree stops rising.
            std::size_t j = i;
            while (j + 1 < n && degrees[j + 1] > degrees[j]) {
                ++j;
            }
            p.factors.push_back(factor::increasing({degrees.begin() + i, degrees.begin() + j + 1}));
            i = j + 1;
        }
    }
    return p;
}

polynomial factorize(std::string_view suffix, const alphabet& a) {
    return factorize(std::span<const std::uint8_t>(a.degrees(suffix)));
}

std::vector<std::uint8_t> expand_terms(const polynomial& p) {
    std::vector<std::uint8_t> out;
    for (const factor& f : p.factors) {
        if (f.degrees.size() > 1) {
            out.insert(out.end(), f.degrees.begin(), f.degrees.end());
        } else {
            out.insert(out.end(), static_cast<std::size_t>(f.coefficient), f.degrees.front());
        }
    }
    return out;
}

namespace {

// Walks a polynomial's term stream one degree at a time.
class term_cursor {
  public:
    explicit term_cursor(const polynomial& p) : factors_(p.factors) {}

    bool at_end() const noexcept { return index_ >= factors_.size(); }

    std::uint8_t current() const noexcept {
        const factor& f = factors_[index_];
        return f.degrees.size() > 1 ? f.degrees[offset_] : f.degrees.front();
    }

    void advance() noexcept {
        if (++offset_ >= factors_[index_].term_count()) {
            offset_ = 0;
            ++index_;
        }
    }

  private:
    std::span<const factor> factors_;
    std::size_t index_ = 0;
    std::size_t offset_ = 0;
};

}  // namespace

std::strong_ordering compare_polynomials(const polynomial& p, const polynomial& q) {
    term_cursor a(p);
    term_cursor b(q);
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

leading_key leading_factor_key(const polynomial& p) {
    if (p.factors.empty()) {
        throw empty_input_error("polynomial has no factors");
    }
    const factor& f = p.factors.front();
    return leading_key{f.degrees, f.coefficient};
}

namespace {

const char* const kSuperscripts[10] = {"⁰", "¹", "²", "³", "⁴",
                                       "⁵", "⁶", "⁷", "⁸", "⁹"};

std::string superscript(unsigned value) {
    std::string digits = std::to_string(value);
    std::string out;
    for (char d : digits) {
        out += kSuperscripts[d - '0'];
    }
    return out;
}

}  // namespace

std::string render_term(unsigned degree) {
    if (degree == 0) {
        return "1";
    }
    if (degree == 1) {
        return "x";
    }
    return "x" + superscript(degree);
}

std::string render_degrees(std::span<const std::uint8_t> degrees) {
    std::string out;
    for (std::size_t i = 0; i < degrees.size(); ++i) {
        if (i > 0) {
            out += "·";
        }
        out += render_term(degrees[i]);
    }
    return out;
}

std::string render_factor(const factor& f) {
    if (f.coefficient > 1) {
        const unsigned degree = f.degrees.front();
        std::string out = std::to_string(f.coefficient);
        if (degree != 0) {
            out += render_term(degree);
        }
        return out;
    }
    if (f.degrees.size() >= 2) {
        return "(" + render_degrees(f.degrees) + ")";
    }
    return render_term(f.degrees.front());
}

std::string render(const polynomial& p) {
    std::string out;
    for (std::size_t i = 0; i < p.factors.size(); ++i) {
        if (i > 0) {
            out += "·";
        }
        out += render_factor(p.factors[i]);
    }
    return out;
}

}  // namespace polysuffix
