#include "cisd/bigint.hpp"

#include <algorithm>
#include <stdexcept>

namespace cisd {

BigInt parse_decimal(const std::string& text)
{
    std::size_t start = (!text.empty() && (text[0] == '-' || text[0] == '+')) ? 1 : 0;
    if (text.size() == start
        || !std::all_of(text.begin() + start, text.end(), [](char c) { return c >= '0' && c <= '9'; }))
        throw std::invalid_argument("not a decimal integer: '" + text + "'");
    return BigInt(text[0] == '+' ? text.substr(1) : text, 10);
}

} // namespace cisd
