#ifndef CISD_SERIES_HPP
#define CISD_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <vector>

#include "cisd/bigint.hpp"

namespace cisd {

/// Truncated power series in one variable x with integer coefficients.
///
/// Coefficients of x^0 .. x^precision are tracked; everything above is
/// unknown, not zero. Binary operations truncate to the smaller precision.
class TruncSeries {
public:
    /// The constant series 1 at the given precision.
    static TruncSeries one(std::size_t precision);
    static TruncSeries zero(std::size_t precision);

    /// 1 + c*x^degree, truncated. Handy for the factors (1 + d x) and (1 - d^2 x^2).
    static TruncSeries binomial(const BigInt& c, std::size_t degree, std::size_t precision);

    /// Missing high coefficients are zero; extra ones beyond precision are dropped.
    TruncSeries(std::vector<BigInt> coeffs, std::size_t precision);
    TruncSeries(std::initializer_list<long> coeffs, std::size_t precision);

    std::size_t precision() const noexcept { return coeffs_.size() - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }

    /// Throws std::out_of_range when i > precision.
    const BigInt& coeff(std::size_t i) const;

    TruncSeries truncated(std::size_t precision) const;

    friend bool operator==(const TruncSeries&, const TruncSeries&) = default;

private:
    std::vector<BigInt> coeffs_;
};

TruncSeries add(const TruncSeries& a, const TruncSeries& b);
TruncSeries sub(const TruncSeries& a, const TruncSeries& b);
TruncSeries neg(const TruncSeries& a);
TruncSeries mul(const TruncSeries& a, const TruncSeries& b);

/// Multiplicative inverse. The constant term must be +1 or -1;
/// throws std::domain_error otherwise.
TruncSeries inv(const TruncSeries& a);

/// a^e by repeated squaring; negative e goes through inv().
TruncSeries int_pow(const TruncSeries& a, std::int64_t e);

inline TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) { return add(a, b); }
inline TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) { return sub(a, b); }
inline TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) { return mul(a, b); }

/// Series over Z/2, same truncation semantics.
class Mod2Series {
public:
    Mod2Series(std::vector<std::uint8_t> bits, std::size_t precision);

    std::size_t precision() const noexcept { return bits_.size() - 1; }
    const std::vector<std::uint8_t>& bits() const noexcept { return bits_; }
    bool coeff(std::size_t i) const;

    friend bool operator==(const Mod2Series&, const Mod2Series&) = default;

private:
    std::vector<std::uint8_t> bits_;
};

Mod2Series reduce_mod2(const TruncSeries& a);
Mod2Series add(const Mod2Series& a, const Mod2Series& b);
Mod2Series mul(const Mod2Series& a, const Mod2Series& b);

std::ostream& operator<<(std::ostream& os, const TruncSeries& s);
std::ostream& operator<<(std::ostream& os, const Mod2Series& s);

} // namespace cisd

#endif
