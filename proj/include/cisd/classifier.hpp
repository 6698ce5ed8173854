#ifndef CISD_CLASSIFIER_HPP
#define CISD_CLASSIFIER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "cisd/bigint.hpp"
#include "cisd/invariants.hpp"

namespace cisd {

// Citation tags carried by verdicts. These are the labels of the results the
// verdict rules encode, kept verbatim so that every output line is auditable.
namespace cite {
inline constexpr std::string_view identical = "identical canonical multidegree";
inline constexpr std::string_view converse = "Proposition SC-conv";
inline constexpr std::string_view dim3 = "Wall/Jupp";
inline constexpr std::string_view dim4 = "Theorem 1.2";
inline constexpr std::string_view kreck_traving = "Kreck-Traving";
inline constexpr std::string_view fang_wang = "Fang-Wang";
inline constexpr std::string_view open = "Sullivan Conjecture (open)";
inline constexpr std::string_view freedman = "Freedman";
inline constexpr std::string_view spin = "Theorem 1.7";
inline constexpr std::string_view rigid = "Theorem 1.9";
inline constexpr std::string_view rigid_22 = "Remark rem:22";
inline constexpr std::string_view inertia = "Conjecture inertia";
inline constexpr std::string_view odd_even = "Theorem 1.12(a)";
inline constexpr std::string_view odd_odd = "Theorem 1.12(b)";
} // namespace cite

enum class Status { Diffeomorphic, NotDiffeomorphic, HomeomorphicOnly, SDEqualConjectural, Unsupported };

enum class Rigidity { StronglyThetaFlexible, ThetaRigid, ConjecturedFlexible, ConjecturedRigid };

std::string_view to_string(Status s) noexcept;
std::string_view to_string(Rigidity r) noexcept;

/// Row of the n = 4 case table, indexed by (v2, v4) and the parity of d.
struct CaseRow {
    bool v2 = false;
    bool v4 = false;
    bool d_odd = false;
    Rigidity rigidity = Rigidity::StronglyThetaFlexible;
    bool is_conjecture = false;
    unsigned p1_mod8 = 0;
    /// Result backing the single-manifold rigidity entry.
    std::string citation;
    /// For (v2, v4) = (1, 1): the unconditional pairwise theorem for SD-equal partners.
    std::string pairwise_citation;

    friend bool operator==(const CaseRow&, const CaseRow&) = default;
};

struct Verdict {
    Status status = Status::Unsupported;
    std::string justification;
    bool sd_equal = false;
    /// Shared n = 4 case row, set only when both sides land in the same row.
    std::optional<CaseRow> case_row;
    std::string note;

    friend bool operator==(const Verdict&, const Verdict&) = default;
};

/// p-adic valuation. Throws std::invalid_argument for d <= 0 or p not prime.
std::uint64_t nu_p(const BigInt& d, std::uint64_t p);

bool is_prime(std::uint64_t p) noexcept;

/// nu_p(d) >= ceil((2n+1)/(2(p-1)) + 1) for every prime p with p(p-1) <= n+1.
/// Throws std::invalid_argument for n < 3.
bool kreck_traving_applies(int n, const BigInt& d);

/// Smallest admissible nu_p(d) in the Kreck-Traving condition.
std::uint64_t kreck_traving_threshold(int n, std::uint64_t p);

/// n = 4 only.
CaseRow case_row(const Multidegree& md);

/// Throws std::invalid_argument for n < 2.
Verdict classify(int n, const Multidegree& a, const Multidegree& b);

} // namespace cisd

#endif
