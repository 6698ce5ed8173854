#ifndef CISD_BIGINT_HPP
#define CISD_BIGINT_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace cisd {

using BigInt = mpz_class;

inline std::string to_decimal(const BigInt& v) { return v.get_str(10); }

// Throws std::invalid_argument on anything but an optionally signed decimal.
BigInt parse_decimal(const std::string& text);

inline BigInt big(std::int64_t v) { return BigInt(static_cast<long>(v)); }

inline BigInt big_u(std::uint64_t v)
{
    BigInt r;
    mpz_import(r.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return r;
}

// Non-negative residue.
inline unsigned long mod_ui(const BigInt& v, unsigned long m)
{
    return mpz_fdiv_ui(v.get_mpz_t(), m);
}

} // namespace cisd

#endif
