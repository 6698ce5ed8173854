#ifndef CISD_SEARCH_HPP
#define CISD_SEARCH_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <vector>

#include "cisd/invariants.hpp"

namespace cisd {

struct SearchSpec {
    int n = 4;
    std::uint64_t max_degree = 2;
    std::uint64_t max_k = 1;
    /// Restrict to factorizations of this total degree.
    std::optional<BigInt> total_degree_target;
    std::size_t shard_count = 1;
    /// Guard on the number of enumerated multidegrees.
    std::uint64_t limit = 5'000'000;
};

/// Thrown when an enumeration would exceed SearchSpec::limit.
class EnumerationLimitExceeded : public std::runtime_error {
public:
    EnumerationLimitExceeded(std::uint64_t limit, std::uint64_t enumerated);
    std::uint64_t limit() const noexcept { return limit_; }
    std::uint64_t enumerated() const noexcept { return enumerated_; }

private:
    std::uint64_t limit_;
    std::uint64_t enumerated_;
};

/// Throws std::invalid_argument on caps < 1, shard_count < 1 or n < 3.
void validate(const SearchSpec& spec);

/// All canonical multidegrees in the box, each once, ordered by total degree and
/// then by the descending degree list, larger first ({8}, {4,2}, {2,2,2}).
std::vector<Multidegree> enumerate(const SearchSpec& spec);

struct CollisionPair {
    Multidegree a;
    Multidegree b;
    SullivanData sd;
};

struct SearchStats {
    std::uint64_t enumerated = 0;
    std::uint64_t degree_buckets = 0;
    std::uint64_t shared_degree_buckets = 0;
    std::uint64_t exact_comparisons = 0;
    std::uint64_t digest_false_positives = 0;

    friend bool operator==(const SearchStats&, const SearchStats&) = default;
};

struct CollisionReport {
    std::vector<CollisionPair> pairs;
    SearchStats stats;
    double wall_ms = 0.0;
};

using SdDigest = std::function<std::uint64_t(const SullivanData&)>;

std::uint64_t default_digest(const SullivanData& sd);

/// Buckets by total degree, then by digest, and re-verifies every candidate pair
/// exactly before emitting it. Pairs are ordered by their positions in `candidates`.
CollisionReport collisions_among(int n, const std::vector<Multidegree>& candidates, std::size_t shard_count = 1,
                                 const SdDigest& digest = default_digest);

CollisionReport find_collisions(const SearchSpec& spec, const SdDigest& digest = default_digest);

struct PairCheck {
    bool equal = false;
    SullivanData a;
    SullivanData b;
};

PairCheck verify_pair(int n, const Multidegree& a, const Multidegree& b);

} // namespace cisd

#endif
