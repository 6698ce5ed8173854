// Shared generators and independent oracles for the test binaries. Nothing in
// here calls into the series or abelian engines.
#ifndef CISD_TESTS_SUPPORT_HPP
#define CISD_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "cisd/bigint.hpp"
#include "cisd/invariants.hpp"

namespace testsupport {

using cisd::BigInt;
using Poly = std::vector<BigInt>;

inline std::mt19937_64& rng()
{
    static std::mt19937_64 gen(0x5eed'c15dULL);
    return gen;
}

inline std::uint64_t uniform(std::uint64_t lo, std::uint64_t hi)
{
    return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng());
}

/// Raw degrees in [1, max_degree], length in [1, max_k]; 1s allowed.
inline std::vector<std::uint64_t> random_raw(std::uint64_t max_k, std::uint64_t max_degree)
{
    std::vector<std::uint64_t> v(uniform(1, max_k));
    for (auto& d : v)
        d = uniform(1, max_degree);
    return v;
}

/// Random raw degrees whose even count is congruent to `residue` mod 4.
inline std::vector<std::uint64_t> random_raw_with_even_count(unsigned residue, std::uint64_t max_k,
                                                              std::uint64_t max_degree)
{
    for (;;) {
        auto v = random_raw(max_k, max_degree);
        const auto even = std::count_if(v.begin(), v.end(), [](auto d) { return d % 2 == 0; });
        if (static_cast<unsigned>(even % 4) == residue)
            return v;
    }
}

// ---- polynomial oracle: plain coefficient vectors, schoolbook products ----

inline Poly poly_mul(const Poly& a, const Poly& b, std::size_t prec)
{
    Poly c(prec + 1, 0);
    for (std::size_t i = 0; i < a.size() && i <= prec; ++i)
        for (std::size_t j = 0; j < b.size() && i + j <= prec; ++j)
            c[i + j] += a[i] * b[j];
    return c;
}

inline BigInt binom(long m, long i)
{
    BigInt r;
    mpz_bin_ui(r.get_mpz_t(), BigInt(m).get_mpz_t(), static_cast<unsigned long>(i));
    return r;
}

/// (1 + s x^step)^e via the generalized binomial theorem, e possibly negative.
inline Poly binomial_power(long e, long s, std::size_t step, std::size_t prec)
{
    Poly p(prec + 1, 0);
    BigInt spow = 1;
    for (std::size_t i = 0; i * step <= prec; ++i) {
        p[i * step] = binom(e, static_cast<long>(i)) * spow;
        spow *= s;
    }
    return p;
}

/// Geometric series 1/(1 - r x^step).
inline Poly geometric(const BigInt& r, std::size_t step, std::size_t prec)
{
    Poly p(prec + 1, 0);
    BigInt rpow = 1;
    for (std::size_t i = 0; i * step <= prec; ++i) {
        p[i * step] = rpow;
        rpow *= r;
    }
    return p;
}

struct NaiveSd {
    BigInt d;
    std::vector<BigInt> p;
    BigInt chi;
};

/// Sullivan data straight from the closed formulas, one factor per raw degree.
inline NaiveSd naive_sd(int n, const std::vector<std::uint64_t>& raw)
{
    const long N = n + static_cast<long>(raw.size()) + 1;
    const std::size_t pn = static_cast<std::size_t>(2 * (n / 2));
    NaiveSd out;
    out.d = 1;
    Poly c = binomial_power(N, 1, 1, n);
    Poly p = binomial_power(N, -1, 2, pn);
    for (auto d : raw) {
        out.d *= cisd::big_u(d);
        c = poly_mul(c, geometric(-cisd::big_u(d), 1, n), n);
        const BigInt d2 = cisd::big_u(d) * cisd::big_u(d);
        p = poly_mul(p, geometric(d2, 2, pn), pn);
    }
    for (int i = 1; i <= n / 2; ++i)
        out.p.push_back(p[2 * i]);
    out.chi = out.d * c[n];
    return out;
}

// ---- finite abelian groups by brute force ----

/// Element of Z/o_1 + ... + Z/o_m as a residue tuple.
using Elem = std::vector<long>;

inline std::vector<Elem> elements(const std::vector<long>& orders)
{
    std::vector<Elem> out{Elem(orders.size(), 0)};
    for (std::size_t i = 0; i < orders.size(); ++i) {
        std::vector<Elem> next;
        for (const auto& e : out)
            for (long r = 0; r < orders[i]; ++r) {
                auto f = e;
                f[i] = r;
                next.push_back(f);
            }
        out = std::move(next);
    }
    return out;
}

inline long mod(long a, long m) { return ((a % m) + m) % m; }

inline Elem scale(const Elem& x, long k, const std::vector<long>& orders)
{
    Elem y(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        y[i] = mod(k * x[i], orders[i]);
    return y;
}

inline Elem apply(const std::vector<std::vector<long>>& m, const Elem& x, const std::vector<long>& target)
{
    Elem y(target.size(), 0);
    for (std::size_t i = 0; i < target.size(); ++i) {
        long s = 0;
        for (std::size_t j = 0; j < x.size(); ++j)
            s += m[i][j] * x[j];
        y[i] = mod(s, target[i]);
    }
    return y;
}

/// Isomorphism fingerprint of a finite abelian group: the number of elements
/// killed by m, for every m up to the group order. It determines the group.
using Fingerprint = std::vector<long>;

inline Fingerprint fingerprint_of_set(const std::vector<Elem>& members, const std::vector<long>& orders,
                                      long group_order)
{
    Fingerprint f;
    const Elem zero(orders.size(), 0);
    for (long m = 1; m <= group_order; ++m)
        f.push_back(std::count_if(members.begin(), members.end(),
                                  [&](const Elem& x) { return scale(x, m, orders) == zero; }));
    return f;
}

inline Fingerprint fingerprint_of_invariants(const std::vector<long>& torsion, long group_order)
{
    Fingerprint f;
    for (long m = 1; m <= group_order; ++m) {
        long c = 1;
        for (long t : torsion)
            c *= std::gcd(m, t);
        f.push_back(c);
    }
    return f;
}

// ---- naive multidegree enumeration ----

/// Every sorted-descending tuple with entries in [2, max_degree] and length <= max_k.
inline std::set<std::vector<std::uint64_t>> naive_tuples(std::uint64_t max_degree, std::uint64_t max_k)
{
    std::set<std::vector<std::uint64_t>> out{{}};
    std::set<std::vector<std::uint64_t>> frontier{{}};
    for (std::uint64_t len = 1; len <= max_k; ++len) {
        std::set<std::vector<std::uint64_t>> next;
        for (const auto& t : frontier)
            for (std::uint64_t d = 2; d <= max_degree; ++d) {
                auto u = t;
                u.push_back(d);
                std::sort(u.rbegin(), u.rend());
                next.insert(u);
            }
        out.insert(next.begin(), next.end());
        frontier = std::move(next);
    }
    return out;
}

} // namespace testsupport

#endif
