#include "cisd/literal.hpp"

#include <cstdint>
#include <limits>
#include <vector>

namespace cisd {

LiteralError::LiteralError(std::size_t position, const std::string& message)
    : std::invalid_argument("position " + std::to_string(position) + ": " + message), position_(position)
{
}

namespace {

class Parser {
public:
    explicit Parser(std::string_view text) : text_(text) {}

    Multidegree parse()
    {
        if (text_.empty())
            throw LiteralError(0, "empty multidegree");
        std::vector<DegreeRun> runs;
        for (;;) {
            DegreeRun r;
            r.degree = integer("degree");
            if (peek() == '^') {
                ++pos_;
                r.count = integer("multiplicity");
            }
            runs.push_back(r);
            if (pos_ == text_.size())
                break;
            if (peek() != ',')
                throw LiteralError(pos_, std::string("expected ',' or '^', found '") + text_[pos_] + "'");
            ++pos_;
        }
        try {
            return Multidegree::from_runs(runs);
        } catch (const std::overflow_error& e) {
            throw LiteralError(0, e.what());
        }
    }

private:
    char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

    std::uint64_t integer(const char* what)
    {
        const std::size_t start = pos_;
        std::uint64_t v = 0;
        while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
            const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
            if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10)
                throw LiteralError(start, std::string(what) + " does not fit in 64 bits");
            v = v * 10 + digit;
            ++pos_;
        }
        if (pos_ == start) {
            if (pos_ == text_.size())
                throw LiteralError(pos_, std::string("expected a ") + what + ", found end of input");
            throw LiteralError(pos_, std::string("expected a ") + what + ", found '" + text_[pos_] + "'");
        }
        if (v < 1)
            throw LiteralError(start, std::string(what) + " must be >= 1");
        return v;
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

} // namespace

Multidegree parse_multidegree(std::string_view text) { return Parser(text).parse(); }

} // namespace cisd
