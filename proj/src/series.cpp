#include "cisd/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cisd {

TruncSeries TruncSeries::one(std::size_t precision)
{
    TruncSeries s = zero(precision);
    s.coeffs_[0] = 1;
    return s;
}

TruncSeries TruncSeries::zero(std::size_t precision)
{
    return TruncSeries(std::vector<BigInt>(precision + 1), precision);
}

TruncSeries TruncSeries::binomial(const BigInt& c, std::size_t degree, std::size_t precision)
{
    TruncSeries s = one(precision);
    if (degree == 0)
        s.coeffs_[0] += c;
    else if (degree <= precision)
        s.coeffs_[degree] = c;
    return s;
}

TruncSeries::TruncSeries(std::vector<BigInt> coeffs, std::size_t precision)
    : coeffs_(std::move(coeffs))
{
    coeffs_.resize(precision + 1);
}

TruncSeries::TruncSeries(std::initializer_list<long> coeffs, std::size_t precision)
{
    coeffs_.reserve(precision + 1);
    for (long c : coeffs) {
        if (coeffs_.size() == precision + 1)
            break;
        coeffs_.emplace_back(c);
    }
    coeffs_.resize(precision + 1);
}

const BigInt& TruncSeries::coeff(std::size_t i) const
{
    if (i >= coeffs_.size())
        throw std::out_of_range("coefficient x^" + std::to_string(i) + " is beyond the tracked precision "
                                + std::to_string(precision()));
    return coeffs_[i];
}

TruncSeries TruncSeries::truncated(std::size_t precision) const
{
    if (precision > this->precision())
        throw std::out_of_range("cannot raise the precision of a truncated series");
    return TruncSeries(std::vector<BigInt>(coeffs_.begin(), coeffs_.begin() + precision + 1), precision);
}

TruncSeries add(const TruncSeries& a, const TruncSeries& b)
{
    std::size_t p = std::min(a.precision(), b.precision());
    std::vector<BigInt> c(p + 1);
    for (std::size_t i = 0; i <= p; ++i)
        c[i] = a.coeffs()[i] + b.coeffs()[i];
    return TruncSeries(std::move(c), p);
}

TruncSeries neg(const TruncSeries& a)
{
    std::vector<BigInt> c(a.coeffs());
    for (auto& v : c)
        v = -v;
    return TruncSeries(std::move(c), a.precision());
}

TruncSeries sub(const TruncSeries& a, const TruncSeries& b) { return add(a, neg(b)); }

TruncSeries mul(const TruncSeries& a, const TruncSeries& b)
{
    std::size_t p = std::min(a.precision(), b.precision());
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<BigInt> c(p + 1);
    for (std::size_t i = 0; i <= p; ++i) {
        if (sgn(x[i]) == 0)
            continue;
        for (std::size_t j = 0; i + j <= p; ++j)
            mpz_addmul(c[i + j].get_mpz_t(), x[i].get_mpz_t(), y[j].get_mpz_t());
    }
    return TruncSeries(std::move(c), p);
}

TruncSeries inv(const TruncSeries& a)
{
    const BigInt& a0 = a.coeffs()[0];
    if (a0 != 1 && a0 != -1)
        throw std::domain_error("series inverse needs constant term +1 or -1, got " + to_decimal(a0));
    std::size_t p = a.precision();
    const auto& x = a.coeffs();
    std::vector<BigInt> b(p + 1);
    // a0 is its own inverse
    b[0] = a0;
    for (std::size_t n = 1; n <= p; ++n) {
        BigInt acc;
        for (std::size_t i = 1; i <= n; ++i)
            mpz_addmul(acc.get_mpz_t(), x[i].get_mpz_t(), b[n - i].get_mpz_t());
        b[n] = -a0 * acc;
    }
    return TruncSeries(std::move(b), p);
}

TruncSeries int_pow(const TruncSeries& a, std::int64_t e)
{
    TruncSeries base = e < 0 ? inv(a) : a;
    // magnitude as unsigned so INT64_MIN is safe
    std::uint64_t m = e < 0 ? ~static_cast<std::uint64_t>(e) + 1 : static_cast<std::uint64_t>(e);
    TruncSeries result = TruncSeries::one(a.precision());
    while (m != 0) {
        if (m & 1U)
            result = mul(result, base);
        m >>= 1U;
        if (m != 0)
            base = mul(base, base);
    }
    return result;
}

Mod2Series::Mod2Series(std::vector<std::uint8_t> bits, std::size_t precision)
    : bits_(std::move(bits))
{
    bits_.resize(precision + 1);
    for (auto& b : bits_)
        b &= 1U;
}

bool Mod2Series::coeff(std::size_t i) const
{
    if (i >= bits_.size())
        throw std::out_of_range("coefficient x^" + std::to_string(i) + " is beyond the tracked precision "
                                + std::to_string(precision()));
    return bits_[i] != 0;
}

Mod2Series reduce_mod2(const TruncSeries& a)
{
    std::vector<std::uint8_t> bits;
    bits.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs())
        bits.push_back(mpz_odd_p(c.get_mpz_t()) ? 1 : 0);
    return Mod2Series(std::move(bits), a.precision());
}

Mod2Series add(const Mod2Series& a, const Mod2Series& b)
{
    std::size_t p = std::min(a.precision(), b.precision());
    std::vector<std::uint8_t> c(p + 1);
    for (std::size_t i = 0; i <= p; ++i)
        c[i] = a.bits()[i] ^ b.bits()[i];
    return Mod2Series(std::move(c), p);
}

Mod2Series mul(const Mod2Series& a, const Mod2Series& b)
{
    std::size_t p = std::min(a.precision(), b.precision());
    std::vector<std::uint8_t> c(p + 1);
    for (std::size_t i = 0; i <= p; ++i)
        for (std::size_t j = 0; i + j <= p; ++j)
            c[i + j] ^= a.bits()[i] & b.bits()[j];
    return Mod2Series(std::move(c), p);
}

namespace {

template <typename Coeffs, typename IsZero, typename Print>
void print_series(std::ostream& os, const Coeffs& coeffs, std::size_t precision, IsZero is_zero, Print print)
{
    bool first = true;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (is_zero(coeffs[i]))
            continue;
        if (!first)
            os << " + ";
        first = false;
        print(coeffs[i]);
        if (i == 1)
            os << "*x";
        else if (i > 1)
            os << "*x^" << i;
    }
    if (first)
        os << '0';
    os << " + O(x^" << precision + 1 << ')';
}

} // namespace

std::ostream& operator<<(std::ostream& os, const TruncSeries& s)
{
    print_series(
        os, s.coeffs(), s.precision(), [](const BigInt& c) { return sgn(c) == 0; },
        [&os](const BigInt& c) { os << (sgn(c) < 0 ? "(" + to_decimal(c) + ")" : to_decimal(c)); });
    return os;
}

std::ostream& operator<<(std::ostream& os, const Mod2Series& s)
{
    print_series(
        os, s.bits(), s.precision(), [](std::uint8_t b) { return b == 0; }, [&os](std::uint8_t) { os << '1'; });
    return os;
}

} // namespace cisd
