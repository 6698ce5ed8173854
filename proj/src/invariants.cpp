#include "cisd/invariants.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cisd {

namespace {

std::vector<DegreeRun> normalize_runs(std::span<const DegreeRun> runs)
{
    std::map<std::uint64_t, std::uint64_t, std::greater<>> merged;
    for (const auto& r : runs) {
        if (r.degree < 1)
            throw std::invalid_argument("degrees must be >= 1");
        if (r.count == 0)
            continue;
        merged[r.degree] += r.count;
    }
    std::vector<DegreeRun> out;
    out.reserve(merged.size());
    for (auto [d, c] : merged)
        out.push_back({d, c});
    return out;
}

std::int64_t checked_exponent(int n, std::uint64_t k)
{
    if (k > static_cast<std::uint64_t>(INT64_MAX) - static_cast<std::uint64_t>(n) - 1)
        throw std::overflow_error("multidegree too long");
    return static_cast<std::int64_t>(k) + n + 1;
}

std::int64_t as_exponent(std::uint64_t count)
{
    if (count > static_cast<std::uint64_t>(INT64_MAX))
        throw std::overflow_error("multiplicity too large");
    return static_cast<std::int64_t>(count);
}

} // namespace

Multidegree Multidegree::canonicalize(std::span<const std::uint64_t> raw)
{
    if (raw.empty())
        throw std::invalid_argument("a multidegree needs at least one degree");
    std::vector<DegreeRun> runs;
    runs.reserve(raw.size());
    for (auto d : raw)
        runs.push_back({d, 1});
    return from_runs(runs);
}

Multidegree Multidegree::from_runs(std::span<const DegreeRun> runs)
{
    Multidegree md;
    md.raw_ = normalize_runs(runs);
    if (md.raw_.empty())
        throw std::invalid_argument("a multidegree needs at least one degree");
    md.finish();
    return md;
}

void Multidegree::finish()
{
    k_ = 0;
    total_degree_ = 1;
    canonical_.clear();
    for (const auto& r : raw_) {
        if (k_ > UINT64_MAX - r.count)
            throw std::overflow_error("multidegree too long");
        k_ += r.count;
        if (r.degree == 1)
            continue;
        canonical_.push_back(r);
        BigInt p;
        mpz_pow_ui(p.get_mpz_t(), big_u(r.degree).get_mpz_t(), r.count);
        total_degree_ *= p;
    }
}

std::vector<std::uint64_t> Multidegree::canonical_degrees() const
{
    std::vector<std::uint64_t> out;
    for (const auto& r : canonical_)
        out.insert(out.end(), r.count, r.degree);
    return out;
}

std::uint64_t Multidegree::even_count() const noexcept
{
    std::uint64_t p = 0;
    for (const auto& r : canonical_)
        if (r.degree % 2 == 0)
            p += r.count;
    return p;
}

std::string Multidegree::to_literal() const
{
    if (canonical_.empty())
        return "1";
    std::string s;
    for (const auto& r : canonical_) {
        if (!s.empty())
            s += ',';
        s += std::to_string(r.degree);
        if (r.count > 1)
            s += '^' + std::to_string(r.count);
    }
    return s;
}

std::vector<BigInt> SullivanData::classical_pontryagin() const
{
    std::vector<BigInt> out = pontryagin;
    for (std::size_t i = 0; i < out.size(); i += 2)
        out[i] = -out[i]; // p_1, p_3, ...
    return out;
}

TruncSeries chern_total_xi(int n, const Multidegree& md, std::size_t precision)
{
    TruncSeries s = int_pow(TruncSeries::binomial(1, 1, precision), -checked_exponent(n, md.k()));
    for (const auto& r : md.raw_runs())
        s = mul(s, int_pow(TruncSeries::binomial(big_u(r.degree), 1, precision), as_exponent(r.count)));
    return s;
}

TruncSeries chern_total_X(int n, const Multidegree& md, std::size_t precision)
{
    TruncSeries s = int_pow(TruncSeries::binomial(1, 1, precision), checked_exponent(n, md.k()));
    for (const auto& r : md.raw_runs())
        s = mul(s, int_pow(TruncSeries::binomial(big_u(r.degree), 1, precision), -as_exponent(r.count)));
    return s;
}

TruncSeries pontryagin_total_X(int n, const Multidegree& md)
{
    const std::size_t precision = 2 * static_cast<std::size_t>(n / 2);
    TruncSeries s = int_pow(TruncSeries::binomial(-1, 2, precision), checked_exponent(n, md.k()));
    for (const auto& r : md.raw_runs()) {
        BigInt d = big_u(r.degree);
        s = mul(s, int_pow(TruncSeries::binomial(-(d * d), 2, precision), -as_exponent(r.count)));
    }
    return s;
}

BigInt euler_char(int n, const Multidegree& md)
{
    if (n < 0)
        throw std::invalid_argument("dimension must be non-negative");
    const auto N = static_cast<std::size_t>(n);
    return md.total_degree() * chern_total_X(n, md, N).coeff(N);
}

SullivanData sullivan_data(int n, const Multidegree& md)
{
    if (n < 1)
        throw std::invalid_argument("dimension n must be >= 1");
    SullivanData sd;
    sd.n = n;
    sd.total_degree = md.total_degree();
    TruncSeries p = pontryagin_total_X(n, md);
    for (int i = 1; i <= n / 2; ++i)
        sd.pontryagin.push_back(p.coeff(2 * static_cast<std::size_t>(i)));
    sd.euler = euler_char(n, md);
    return sd;
}

WuProfile wu_profile_from_series(const Multidegree& md)
{
    // w_{2i} = rho_2(c_i) for the normal bundle; Cartan and Wu formulas give the rest.
    Mod2Series w = reduce_mod2(chern_total_xi(4, md, 2));
    WuProfile out;
    out.p_count = md.even_count();
    out.w2_nu = w.coeff(1);
    out.w4_nu = w.coeff(2);
    out.w4_X = out.w2_nu != out.w4_nu; // w2(nu)^2 + w4(nu)
    out.v2 = out.w2_nu;
    out.v4 = out.w4_nu;
    return out;
}

WuProfile wu_profile(const Multidegree& md)
{
    // columns p mod 4 = 0, 1, 2, 3
    static constexpr bool w2_row[4] = {true, false, true, false};
    static constexpr bool w4_nu_row[4] = {true, true, false, false};
    static constexpr bool w4_X_row[4] = {false, true, true, false};

    WuProfile out;
    out.p_count = md.even_count();
    const auto col = static_cast<std::size_t>(out.p_count % 4);
    out.w2_nu = w2_row[col];
    out.w4_nu = w4_nu_row[col];
    out.w4_X = w4_X_row[col];
    out.v2 = out.w2_nu;
    out.v4 = out.w4_nu;

    if (!(wu_profile_from_series(md) == out))
        throw std::logic_error("Wu table disagrees with the mod-2 Chern series for " + md.to_literal());
    return out;
}

} // namespace cisd
