#ifndef CISD_INVARIANTS_HPP
#define CISD_INVARIANTS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "cisd/bigint.hpp"
#include "cisd/series.hpp"

namespace cisd {

/// One run of equal degrees inside a multidegree: `degree` repeated `count` times.
struct DegreeRun {
    std::uint64_t degree = 1;
    std::uint64_t count = 1;

    friend bool operator==(const DegreeRun&, const DegreeRun&) = default;
};

/// Multiset of hypersurface degrees {d_1, ..., d_k}.
///
/// Stored run-length encoded so that inputs like 3^150 stay cheap. Two
/// multidegrees compare equal when they agree after dropping all 1s.
class Multidegree {
public:
    /// Throws std::invalid_argument on an empty multiset or a degree < 1.
    static Multidegree canonicalize(std::span<const std::uint64_t> raw);
    static Multidegree from_runs(std::span<const DegreeRun> runs);

    /// Runs of the raw multiset, degree-descending, 1s included.
    const std::vector<DegreeRun>& raw_runs() const noexcept { return raw_; }
    /// Runs with 1s removed, degree-descending. Empty for CP^n.
    const std::vector<DegreeRun>& canonical_runs() const noexcept { return canonical_; }
    /// Expanded canonical degrees, descending.
    std::vector<std::uint64_t> canonical_degrees() const;

    /// Number of raw degrees, 1s included.
    std::uint64_t k() const noexcept { return k_; }
    const BigInt& total_degree() const noexcept { return total_degree_; }

    /// Number of even degrees.
    std::uint64_t even_count() const noexcept;

    /// "3^150,7^89" style literal of the canonical form; "1" for CP^n.
    std::string to_literal() const;

    friend bool operator==(const Multidegree& a, const Multidegree& b) { return a.canonical_ == b.canonical_; }

private:
    Multidegree() = default;
    void finish();

    std::vector<DegreeRun> raw_;
    std::vector<DegreeRun> canonical_;
    std::uint64_t k_ = 0;
    BigInt total_degree_;
};

struct SullivanData {
    int n = 0;
    BigInt total_degree;
    /// p_1 .. p_{floor(n/2)} with p(gamma^r) = 1 - r^2 x^2.
    std::vector<BigInt> pontryagin;
    BigInt euler;

    /// (-1)^i p_i, the sign convention with p(gamma^r) = 1 + r^2 x^2.
    std::vector<BigInt> classical_pontryagin() const;

    friend bool operator==(const SullivanData&, const SullivanData&) = default;
};

/// Mod-2 classes of a complex 4-dimensional complete intersection.
struct WuProfile {
    std::uint64_t p_count = 0;
    bool w2_nu = false;
    bool w4_nu = false;
    bool v2 = false;
    bool v4 = false;
    bool w4_X = false;

    bool spin() const noexcept { return !v2; }

    friend bool operator==(const WuProfile&, const WuProfile&) = default;
};

/// c(xi_n(d)) = (1+x)^-(n+k+1) * prod (1 + d_i x), truncated at x^precision.
TruncSeries chern_total_xi(int n, const Multidegree& md, std::size_t precision);

/// c(X_n(d)) = (1+x)^(n+k+1) * prod (1 + d_i x)^-1, truncated at x^precision.
TruncSeries chern_total_X(int n, const Multidegree& md, std::size_t precision);

/// p(X_n(d)) = (1-x^2)^(n+k+1) * prod (1 - d_i^2 x^2)^-1 at precision 2*floor(n/2).
TruncSeries pontryagin_total_X(int n, const Multidegree& md);

/// d * <c_n(X), x^n>.
BigInt euler_char(int n, const Multidegree& md);

/// Throws std::invalid_argument when n < 1.
SullivanData sullivan_data(int n, const Multidegree& md);

/// Table lookup by the number of even degrees mod 4, cross-checked against
/// the mod-2 reduction of c(xi_4(d)). Throws std::logic_error if they disagree.
WuProfile wu_profile(const Multidegree& md);

/// Same classes read directly off reduce_mod2(c(xi_4(d))), no table.
WuProfile wu_profile_from_series(const Multidegree& md);

} // namespace cisd

#endif
