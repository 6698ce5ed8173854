#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "cisd/literal.hpp"
#include "cisd/search.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace cisd;

namespace {

std::vector<std::string> literals(const std::vector<Multidegree>& v)
{
    std::vector<std::string> out;
    for (const auto& m : v)
        out.push_back(m.to_literal());
    return out;
}

SearchSpec box(int n, std::uint64_t max_degree, std::uint64_t max_k)
{
    SearchSpec s;
    s.n = n;
    s.max_degree = max_degree;
    s.max_k = max_k;
    return s;
}

SearchSpec target(std::uint64_t d, std::uint64_t max_k)
{
    SearchSpec s = box(4, d, max_k);
    s.total_degree_target = big_u(d);
    return s;
}

std::vector<std::pair<std::string, std::string>> pair_literals(const CollisionReport& r)
{
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& p : r.pairs)
        out.emplace_back(p.a.to_literal(), p.b.to_literal());
    return out;
}

} // namespace

TEST_CASE("enumeration order")
{
    CHECK(literals(enumerate(box(4, 3, 2))) == std::vector<std::string>{"1", "2", "3", "2^2", "3,2", "3^2"});
    CHECK(literals(enumerate(target(6, 3))) == std::vector<std::string>{"6", "3,2"});
    CHECK(literals(enumerate(target(8, 3))) == std::vector<std::string>{"8", "4,2", "2^3"});
    CHECK(literals(enumerate(target(1, 3))) == std::vector<std::string>{"1"});
    CHECK(literals(enumerate(target(12, 2))) == std::vector<std::string>{"12", "6,2", "4,3"});
}

TEST_CASE("enumeration matches a naive generator")
{
    for (std::uint64_t md = 1; md <= 6; ++md)
        for (std::uint64_t k = 1; k <= 3; ++k) {
            const auto got = enumerate(box(4, md, k));
            std::set<std::vector<std::uint64_t>> seen;
            for (const auto& m : got)
                seen.insert(m.canonical_degrees());
            CHECK(seen.size() == got.size());
            CHECK(seen == testsupport::naive_tuples(md, k));
        }
}

TEST_CASE("factorization enumeration matches brute-force divisor tuples")
{
    std::vector<std::uint64_t> targets;
    for (std::uint64_t d = 1; d <= 60; ++d)
        targets.push_back(d);
    for (std::uint64_t d : {64UL, 72UL, 96UL, 120UL, 128UL, 180UL, 210UL, 360UL, 1024UL})
        targets.push_back(d);
    for (const auto d : targets) {
        std::vector<std::uint64_t> divisors;
        for (std::uint64_t x = 2; x <= d; ++x)
            if (d % x == 0)
                divisors.push_back(x);
        std::set<std::vector<std::uint64_t>> want;
        if (d == 1)
            want.insert(std::vector<std::uint64_t>{});
        std::vector<std::vector<std::uint64_t>> layer{{}};
        for (int len = 1; len <= 4; ++len) {
            std::vector<std::vector<std::uint64_t>> next;
            for (const auto& t : layer)
                for (auto x : divisors) {
                    auto u = t;
                    u.push_back(x);
                    std::uint64_t p = 1;
                    for (auto y : u)
                        p *= y;
                    if (d % p != 0)
                        continue;
                    next.push_back(u);
                    if (p == d) {
                        std::sort(u.rbegin(), u.rend());
                        want.insert(u);
                    }
                }
            layer = std::move(next);
        }
        const auto got = enumerate(target(d, 4));
        std::set<std::vector<std::uint64_t>> seen;
        for (const auto& m : got)
            seen.insert(m.canonical_degrees());
        CHECK(seen.size() == got.size());
        CHECK_MESSAGE(seen == want, "d = " << d << ": " << got.size() << " vs " << want.size());
    }
}

TEST_CASE("no collisions in the small box, by brute force")
{
    const auto report = find_collisions(box(4, 6, 3));
    CHECK(report.pairs.empty());

    std::vector<std::vector<std::uint64_t>> all;
    for (auto t : testsupport::naive_tuples(6, 3)) {
        if (t.empty())
            t.push_back(1);
        all.push_back(t);
    }
    CHECK(report.stats.enumerated == all.size());
    std::size_t equal_pairs = 0;
    for (std::size_t i = 0; i < all.size(); ++i)
        for (std::size_t j = i + 1; j < all.size(); ++j) {
            const auto a = testsupport::naive_sd(4, all[i]), b = testsupport::naive_sd(4, all[j]);
            if (a.d == b.d && a.p == b.p && a.chi == b.chi)
                ++equal_pairs;
        }
    CHECK(equal_pairs == 0);
}

TEST_CASE("shard count does not change the report")
{
    for (int n : {3, 4, 5}) {
        const auto base = find_collisions(box(n, 12, 3));
        for (std::size_t shards : {2UL, 3UL, 8UL, 17UL}) {
            auto spec = box(n, 12, 3);
            spec.shard_count = shards;
            const auto r = find_collisions(spec);
            CHECK(r.stats == base.stats);
            CHECK(pair_literals(r) == pair_literals(base));
        }
    }
    std::vector<Multidegree> cands;
    for (const char* s : {fixtures::kOddSixA, "5,3", fixtures::kEvenSixB, fixtures::kOddSixB, "7", fixtures::kEvenSixA})
        cands.push_back(parse_multidegree(s));
    const auto one = collisions_among(6, cands, 1);
    CHECK(one.pairs.size() == 2);
    for (std::size_t shards = 2; shards <= 9; ++shards)
        CHECK(pair_literals(collisions_among(6, cands, shards)) == pair_literals(one));
}

TEST_CASE("a constant digest still only emits true collisions")
{
    const auto constant = [](const SullivanData&) -> std::uint64_t { return 7; };
    std::vector<Multidegree> cands = enumerate(box(6, 8, 2));
    cands.push_back(parse_multidegree(fixtures::kOddSixA));
    cands.push_back(parse_multidegree(fixtures::kOddSixB));
    const auto weak = collisions_among(6, cands, 4, constant);
    const auto strong = collisions_among(6, cands, 4);
    CHECK(pair_literals(weak) == pair_literals(strong));
    REQUIRE(weak.pairs.size() == 1);
    CHECK(weak.stats.digest_false_positives > 0);
    CHECK(strong.stats.digest_false_positives == 0);
    for (const auto& p : weak.pairs) {
        CHECK_FALSE(p.a == p.b);
        CHECK(verify_pair(6, p.a, p.b).equal);
    }
}

TEST_CASE("identical canonical forms are never reported")
{
    const std::vector<Multidegree> cands{parse_multidegree("3,2"), parse_multidegree("2,3,1"),
                                        parse_multidegree("2,1,3")};
    CHECK(collisions_among(4, cands).pairs.empty());
}

TEST_CASE("verify_pair")
{
    const auto flagship =
        verify_pair(4, parse_multidegree(fixtures::kFlagshipA), parse_multidegree(fixtures::kFlagshipB));
    CHECK(flagship.equal);
    CHECK(flagship.a == flagship.b);
    CHECK(verify_pair(4, parse_multidegree("3,2"), parse_multidegree("2,3")).equal);
    const auto r = verify_pair(4, parse_multidegree("1"), parse_multidegree("2"));
    CHECK_FALSE(r.equal);
    CHECK(r.a.total_degree == 1);
    CHECK(r.b.total_degree == 2);
}

TEST_CASE("search parameter validation and the guard")
{
    CHECK_THROWS_AS(validate(box(2, 3, 3)), std::invalid_argument);
    CHECK_THROWS_AS(validate(box(4, 0, 3)), std::invalid_argument);
    CHECK_THROWS_AS(validate(box(4, 3, 0)), std::invalid_argument);
    auto s = box(4, 3, 3);
    s.shard_count = 0;
    CHECK_THROWS_AS(validate(s), std::invalid_argument);
    s = target(4, 2);
    s.total_degree_target = BigInt(0);
    CHECK_THROWS_AS(validate(s), std::invalid_argument);

    auto big = box(4, 100, 5);
    big.limit = 1000;
    try {
        (void)find_collisions(big);
        FAIL("guard did not trip");
    } catch (const EnumerationLimitExceeded& e) {
        CHECK(e.limit() == 1000);
        CHECK(e.enumerated() <= 1000);
    }
}
