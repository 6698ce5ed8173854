#ifndef CISD_LITERAL_HPP
#define CISD_LITERAL_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cisd/invariants.hpp"

namespace cisd {

/// Syntax error in a multidegree literal; position is a 0-based byte offset.
class LiteralError : public std::invalid_argument {
public:
    LiteralError(std::size_t position, const std::string& message);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

/// Parses TERM ("," TERM)* with TERM := INT | INT "^" INT.
///
/// "^" is multiplicity, not a power: "3^150" is 150 copies of the degree 3.
/// Degrees and multiplicities must be >= 1; nothing else (spaces included) is accepted.
Multidegree parse_multidegree(std::string_view text);

} // namespace cisd

#endif
