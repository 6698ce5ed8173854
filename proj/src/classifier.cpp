#include "cisd/classifier.hpp"

#include <stdexcept>

namespace cisd {

std::string_view to_string(Status s) noexcept
{
    switch (s) {
    case Status::Diffeomorphic: return "Diffeomorphic";
    case Status::NotDiffeomorphic: return "NotDiffeomorphic";
    case Status::HomeomorphicOnly: return "HomeomorphicOnly";
    case Status::SDEqualConjectural: return "SDEqualConjectural";
    case Status::Unsupported: return "Unsupported";
    }
    return "?";
}

std::string_view to_string(Rigidity r) noexcept
{
    switch (r) {
    case Rigidity::StronglyThetaFlexible: return "StronglyThetaFlexible";
    case Rigidity::ThetaRigid: return "ThetaRigid";
    case Rigidity::ConjecturedFlexible: return "ConjecturedFlexible";
    case Rigidity::ConjecturedRigid: return "ConjecturedRigid";
    }
    return "?";
}

bool is_prime(std::uint64_t p) noexcept
{
    if (p < 2)
        return false;
    for (std::uint64_t q = 2; q <= p / q; ++q)
        if (p % q == 0)
            return false;
    return true;
}

std::uint64_t nu_p(const BigInt& d, std::uint64_t p)
{
    if (sgn(d) <= 0)
        throw std::invalid_argument("nu_p needs d >= 1");
    if (!is_prime(p))
        throw std::invalid_argument("nu_p needs a prime, got " + std::to_string(p));
    return mpz_remove(BigInt().get_mpz_t(), d.get_mpz_t(), big_u(p).get_mpz_t());
}

std::uint64_t kreck_traving_threshold(int n, std::uint64_t p)
{
    // ceil((2n+1)/(2(p-1)) + 1) == ceil((2n+1 + 2(p-1)) / (2(p-1)))
    const std::uint64_t den = 2 * (p - 1);
    const std::uint64_t num = 2 * static_cast<std::uint64_t>(n) + 1 + den;
    return (num + den - 1) / den;
}

bool kreck_traving_applies(int n, const BigInt& d)
{
    if (n < 3)
        throw std::invalid_argument("the Kreck-Traving criterion needs n >= 3");
    const auto bound = static_cast<std::uint64_t>(n) + 1;
    for (std::uint64_t p = 2; p * (p - 1) <= bound; ++p) {
        if (!is_prime(p))
            continue;
        if (nu_p(d, p) < kreck_traving_threshold(n, p))
            return false;
    }
    return true;
}

CaseRow case_row(const Multidegree& md)
{
    const WuProfile wu = wu_profile(md);
    const SullivanData sd = sullivan_data(4, md);

    CaseRow row;
    row.v2 = wu.v2;
    row.v4 = wu.v4;
    row.d_odd = mpz_odd_p(md.total_degree().get_mpz_t()) != 0;
    row.p1_mod8 = static_cast<unsigned>(mod_ui(sd.pontryagin.at(0), 8));

    if (!row.v2) {
        row.rigidity = Rigidity::StronglyThetaFlexible;
        row.citation = cite::spin;
    } else if (!row.v4) {
        row.rigidity = Rigidity::ThetaRigid;
        const auto two_two = std::vector<std::uint64_t>{2, 2};
        row.citation = md.canonical_degrees() == two_two ? cite::rigid_22 : cite::rigid;
    } else {
        row.is_conjecture = true;
        row.citation = cite::inertia;
        row.pairwise_citation = row.d_odd ? cite::odd_odd : cite::odd_even;
        if (row.p1_mod8 == 3)
            row.rigidity = Rigidity::ConjecturedFlexible;
        else if (row.p1_mod8 == 7)
            row.rigidity = Rigidity::ConjecturedRigid;
        else
            throw std::logic_error("p_1 not congruent to 3 mod 4 in the (v2, v4) = (1, 1) row for "
                                   + md.to_literal());
    }
    return row;
}

Verdict classify(int n, const Multidegree& a, const Multidegree& b)
{
    if (n < 2)
        throw std::invalid_argument("classify needs n >= 2");

    const SullivanData sa = sullivan_data(n, a);
    const SullivanData sb = sullivan_data(n, b);

    Verdict v;
    v.sd_equal = sa == sb;
    if (n == 4) {
        CaseRow ra = case_row(a);
        if (ra == case_row(b))
            v.case_row = std::move(ra);
    }

    auto decide = [&v](Status s, std::string_view why) {
        v.status = s;
        v.justification = why;
        return v;
    };

    // Also settles the exceptional multidegrees {1}, {2}, {2,2}.
    if (a == b)
        return decide(Status::Diffeomorphic, cite::identical);

    if (n == 2) {
        // Freedman: homeomorphism type of these simply connected 4-manifolds is fixed by
        // the evaluated class <p_1, [X]> = p_1 * d and the Euler characteristic.
        const bool same = sa.pontryagin[0] * sa.total_degree == sb.pontryagin[0] * sb.total_degree
                          && sa.euler == sb.euler;
        if (same)
            return decide(Status::HomeomorphicOnly, cite::freedman);
        v.note = "evaluated p_1 or Euler characteristic differ; smooth classification of complex surfaces "
                 "is open and d is not a diffeomorphism invariant";
        return decide(Status::Unsupported, cite::freedman);
    }

    if (!v.sd_equal)
        return decide(Status::NotDiffeomorphic, cite::converse);
    if (n == 3)
        return decide(Status::Diffeomorphic, cite::dim3);
    if (n == 4)
        return decide(Status::Diffeomorphic, cite::dim4);
    if (kreck_traving_applies(n, sa.total_degree))
        return decide(Status::Diffeomorphic, cite::kreck_traving);
    if (n <= 7)
        return decide(Status::HomeomorphicOnly, cite::fang_wang);
    return decide(Status::SDEqualConjectural, cite::open);
}

} // namespace cisd
