#include "cisd/search.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <string>
#include <thread>

namespace cisd {

EnumerationLimitExceeded::EnumerationLimitExceeded(std::uint64_t limit, std::uint64_t enumerated)
    : std::runtime_error("enumeration limit of " + std::to_string(limit) + " multidegrees exceeded after "
                         + std::to_string(enumerated)),
      limit_(limit), enumerated_(enumerated)
{
}

void validate(const SearchSpec& spec)
{
    if (spec.n < 3)
        throw std::invalid_argument("collision search needs n >= 3");
    if (spec.max_degree < 1 || spec.max_k < 1)
        throw std::invalid_argument("max_degree and max_k must be >= 1");
    if (spec.shard_count < 1)
        throw std::invalid_argument("shard_count must be >= 1");
    if (spec.total_degree_target && *spec.total_degree_target < 1)
        throw std::invalid_argument("total degree target must be >= 1");
}

namespace {

class Enumerator {
public:
    explicit Enumerator(const SearchSpec& spec) : spec_(spec) {}

    std::vector<std::vector<std::uint64_t>> run()
    {
        if (spec_.total_degree_target) {
            parts_ = divisors_up_to(*spec_.total_degree_target, spec_.max_degree);
            factor(*spec_.total_degree_target, parts_.size());
        } else {
            box(spec_.max_degree);
        }
        return std::move(out_);
    }

private:
    void emit()
    {
        if (out_.size() >= spec_.limit)
            throw EnumerationLimitExceeded(spec_.limit, out_.size());
        out_.push_back(current_);
    }

    // descending tuples with entries in [2, cap]
    void box(std::uint64_t cap)
    {
        emit();
        if (current_.size() == spec_.max_k)
            return;
        for (std::uint64_t d = 2; d <= cap; ++d) {
            current_.push_back(d);
            box(d);
            current_.pop_back();
        }
    }

    // descending factorizations of `rest` using parts_[0 .. end)
    void factor(const BigInt& rest, std::size_t end)
    {
        if (rest == 1) {
            emit();
            return;
        }
        if (current_.size() == spec_.max_k)
            return;
        for (std::size_t i = 0; i < end; ++i) {
            if (!mpz_divisible_ui_p(rest.get_mpz_t(), parts_[i]))
                continue;
            current_.push_back(parts_[i]);
            BigInt q = rest / parts_[i];
            factor(q, i + 1);
            current_.pop_back();
        }
    }

    // Divisors of d in [2, cap], ascending.
    std::vector<std::uint64_t> divisors_up_to(const BigInt& d, std::uint64_t cap)
    {
        std::vector<std::uint64_t> out;
        if (d <= cap) // small target: no need to scan past it
            cap = d.get_ui();
        if (cap > spec_.limit)
            throw EnumerationLimitExceeded(spec_.limit, 0);
        for (std::uint64_t p = 2; p <= cap; ++p)
            if (mpz_divisible_ui_p(d.get_mpz_t(), p))
                out.push_back(p);
        return out;
    }

    const SearchSpec& spec_;
    std::vector<std::uint64_t> parts_;
    std::vector<std::uint64_t> current_;
    std::vector<std::vector<std::uint64_t>> out_;
};

template <typename Fn>
void for_each_shard(std::size_t shards, Fn fn)
{
    if (shards <= 1) {
        fn(0);
        return;
    }
    std::vector<std::thread> workers;
    workers.reserve(shards);
    for (std::size_t s = 0; s < shards; ++s)
        workers.emplace_back(fn, s);
    for (auto& w : workers)
        w.join();
}

} // namespace

std::vector<Multidegree> enumerate(const SearchSpec& spec)
{
    validate(spec);
    auto tuples = Enumerator(spec).run();

    struct Keyed {
        BigInt d;
        std::vector<std::uint64_t> degrees;
    };
    std::vector<Keyed> keyed;
    keyed.reserve(tuples.size());
    for (auto& t : tuples) {
        BigInt d = 1;
        for (auto x : t)
            d *= big_u(x);
        keyed.push_back({std::move(d), std::move(t)});
    }
    std::sort(keyed.begin(), keyed.end(), [](const Keyed& x, const Keyed& y) {
        if (int c = cmp(x.d, y.d); c != 0)
            return c < 0;
        return std::lexicographical_compare(y.degrees.begin(), y.degrees.end(), x.degrees.begin(), x.degrees.end());
    });

    std::vector<Multidegree> out;
    out.reserve(keyed.size());
    static const std::uint64_t one[] = {1};
    for (const auto& k : keyed)
        out.push_back(k.degrees.empty() ? Multidegree::canonicalize(one) : Multidegree::canonicalize(k.degrees));
    return out;
}

std::uint64_t default_digest(const SullivanData& sd)
{
    std::string key = to_decimal(sd.total_degree);
    for (const auto& p : sd.pontryagin)
        key += ',' + to_decimal(p);
    key += ';' + to_decimal(sd.euler);
    // FNV-1a, stable across platforms
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : key) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

CollisionReport collisions_among(int n, const std::vector<Multidegree>& candidates, std::size_t shard_count,
                                 const SdDigest& digest)
{
    const auto start = std::chrono::steady_clock::now();
    if (shard_count < 1)
        throw std::invalid_argument("shard_count must be >= 1");

    // Phase 1: Sullivan data, strided over shards; each slot is written by one shard.
    std::vector<SullivanData> sd(candidates.size());
    for_each_shard(shard_count, [&](std::size_t s) {
        for (std::size_t i = s; i < candidates.size(); i += shard_count)
            sd[i] = sullivan_data(n, candidates[i]);
    });

    // Phase 2: equal total degree is necessary, so bucket on it exactly.
    std::map<BigInt, std::vector<std::size_t>> by_degree;
    for (std::size_t i = 0; i < candidates.size(); ++i)
        by_degree[candidates[i].total_degree()].push_back(i);
    std::vector<const std::vector<std::size_t>*> shared;
    for (const auto& [d, idx] : by_degree)
        if (idx.size() > 1)
            shared.push_back(&idx);

    struct Local {
        std::vector<std::pair<std::size_t, std::size_t>> pairs;
        std::uint64_t comparisons = 0;
        std::uint64_t false_positives = 0;
    };
    std::vector<Local> locals(shard_count);
    for_each_shard(shard_count, [&](std::size_t s) {
        Local& out = locals[s];
        for (std::size_t b = s; b < shared.size(); b += shard_count) {
            std::map<std::uint64_t, std::vector<std::size_t>> by_digest;
            for (std::size_t i : *shared[b])
                by_digest[digest(sd[i])].push_back(i);
            for (const auto& [h, idx] : by_digest)
                for (std::size_t x = 0; x < idx.size(); ++x)
                    for (std::size_t y = x + 1; y < idx.size(); ++y) {
                        const std::size_t i = std::min(idx[x], idx[y]);
                        const std::size_t j = std::max(idx[x], idx[y]);
                        if (candidates[i] == candidates[j])
                            continue;
                        ++out.comparisons;
                        if (sd[i] == sd[j])
                            out.pairs.emplace_back(i, j);
                        else
                            ++out.false_positives;
                    }
        }
    });

    // Deterministic merge.
    CollisionReport report;
    std::vector<std::pair<std::size_t, std::size_t>> pairs;
    for (const auto& l : locals) {
        pairs.insert(pairs.end(), l.pairs.begin(), l.pairs.end());
        report.stats.exact_comparisons += l.comparisons;
        report.stats.digest_false_positives += l.false_positives;
    }
    std::sort(pairs.begin(), pairs.end());
    for (auto [i, j] : pairs)
        report.pairs.push_back({candidates[i], candidates[j], sd[i]});

    report.stats.enumerated = candidates.size();
    report.stats.degree_buckets = by_degree.size();
    report.stats.shared_degree_buckets = shared.size();
    report.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

CollisionReport find_collisions(const SearchSpec& spec, const SdDigest& digest)
{
    const auto start = std::chrono::steady_clock::now();
    CollisionReport r = collisions_among(spec.n, enumerate(spec), spec.shard_count, digest);
    r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return r;
}

PairCheck verify_pair(int n, const Multidegree& a, const Multidegree& b)
{
    PairCheck c{false, sullivan_data(n, a), sullivan_data(n, b)};
    c.equal = c.a == c.b;
    return c;
}

} // namespace cisd
