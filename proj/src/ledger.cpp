#include "cisd/ledger.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cisd {

using nlohmann::json;

namespace {

constexpr std::string_view kDefaultLedger =
#include "default_ledger.inc"
    ;

std::string trim(std::string_view s)
{
    auto b = s.find_first_not_of(" \t");
    if (b == std::string_view::npos)
        return {};
    auto e = s.find_last_not_of(" \t");
    return std::string(s.substr(b, e - b + 1));
}

template <typename T>
T field(const json& j, const char* key, const std::string& where)
{
    if (!j.contains(key))
        throw LedgerError(where + ": missing field '" + key + "'");
    try {
        return j.at(key).get<T>();
    } catch (const json::exception& e) {
        throw LedgerError(where + ": bad field '" + key + "': " + e.what());
    }
}

std::array<std::string, 3> triple_of(const json& j, const std::string& where)
{
    auto v = field<std::vector<std::string>>(j, "triple", where);
    if (v.size() != 3)
        throw LedgerError(where + ": a bracket triple needs three entries");
    return {v[0], v[1], v[2]};
}

std::vector<BigInt> normalized(const LedgerEntry& g, std::vector<BigInt> v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (sgn(g.orders[i]) > 0)
            mpz_fdiv_r(v[i].get_mpz_t(), v[i].get_mpz_t(), g.orders[i].get_mpz_t());
    return v;
}

bool is_zero_in(const LedgerEntry& g, const std::vector<BigInt>& v)
{
    return g.presentation().is_zero(v);
}

std::vector<BigInt> scaled(const std::vector<BigInt>& v, const BigInt& c)
{
    std::vector<BigInt> out(v);
    for (auto& x : out)
        x *= c;
    return out;
}

std::vector<BigInt> plus(const std::vector<BigInt>& a, const std::vector<BigInt>& b)
{
    std::vector<BigInt> out(a);
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] += b[i];
    return out;
}

// All elements of the subgroup of a finite ledger group spanned by `gens`.
std::set<std::vector<BigInt>> span_elements(const LedgerEntry& g, const std::vector<std::vector<BigInt>>& gens)
{
    if (!g.group.is_finite())
        throw LedgerError("subgroup enumeration in the infinite group " + g.name);
    std::set<std::vector<BigInt>> seen{normalized(g, std::vector<BigInt>(g.orders.size()))};
    std::vector<std::vector<BigInt>> frontier(seen.begin(), seen.end());
    while (!frontier.empty()) {
        auto x = frontier.back();
        frontier.pop_back();
        for (const auto& s : gens) {
            auto y = normalized(g, plus(x, s));
            if (seen.insert(y).second)
                frontier.push_back(std::move(y));
        }
    }
    return seen;
}

BigInt element_order(const LedgerEntry& g, const std::vector<BigInt>& v)
{
    const BigInt bound = g.group.order();
    for (BigInt m = 1; m <= bound; ++m)
        if (is_zero_in(g, scaled(v, m)))
            return m;
    throw LedgerError("element order exceeds the group order in " + g.name);
}

} // namespace

std::vector<BigInt> LedgerEntry::element(std::string_view expr) const
{
    std::vector<BigInt> v(orders.size());
    const std::string text = trim(expr);
    if (text == "0")
        return v;
    if (text.empty())
        throw LedgerError("empty element expression in " + name);
    std::stringstream ss(text);
    std::string term;
    while (std::getline(ss, term, '+')) {
        term = trim(term);
        BigInt coeff = 1;
        if (auto star = term.find('*'); star != std::string::npos) {
            try {
                coeff = parse_decimal(trim(term.substr(0, star)));
            } catch (const std::invalid_argument&) {
                throw LedgerError("bad coefficient in '" + text + "' (" + name + ")");
            }
            term = trim(term.substr(star + 1));
        }
        auto it = std::find(generators.begin(), generators.end(), term);
        if (it == generators.end())
            throw LedgerError("'" + term + "' is not a generator of " + name);
        v[static_cast<std::size_t>(it - generators.begin())] += coeff;
    }
    if (text.back() == '+')
        throw LedgerError("dangling '+' in '" + text + "'");
    return normalized(*this, std::move(v));
}

std::string LedgerEntry::format(const std::vector<BigInt>& v) const
{
    auto n = normalized(*this, v);
    std::string s;
    for (std::size_t i = 0; i < n.size(); ++i) {
        if (sgn(n[i]) == 0)
            continue;
        if (!s.empty())
            s += '+';
        if (n[i] != 1)
            s += to_decimal(n[i]) + '*';
        s += generators[i];
    }
    return s.empty() ? "0" : s;
}

const LedgerEntry& Ledger::group(const std::string& name) const
{
    auto it = groups.find(name);
    if (it == groups.end())
        throw LedgerError("unknown group '" + name + "'");
    return it->second;
}

const LedgerMap& Ledger::map(const std::string& name) const
{
    auto it = maps.find(name);
    if (it == maps.end())
        throw LedgerError("unknown map '" + name + "'");
    return it->second;
}

const BracketFact& Ledger::bracket(const std::string& name) const
{
    auto it = brackets.find(name);
    if (it == brackets.end())
        throw LedgerError("unknown bracket '" + name + "'");
    return it->second;
}

GroupHom Ledger::hom(const std::string& map_name) const
{
    const LedgerMap& m = map(map_name);
    try {
        return GroupHom(group(m.source).presentation(), group(m.target).presentation(), m.matrix);
    } catch (const std::invalid_argument& e) {
        throw LedgerError(map_name + ": " + e.what());
    }
}

const LedgerEntry& Ledger::owner_of(const std::string& generator) const
{
    for (const auto& [name, g] : groups)
        if (std::find(g.generators.begin(), g.generators.end(), generator) != g.generators.end())
            return g;
    throw LedgerError("no recorded group has a generator named '" + generator + "'");
}

Ledger parse_ledger(std::string_view json_text)
{
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::parse_error& e) {
        throw LedgerError(std::string("ledger is not valid JSON: ") + e.what());
    }
    if (!j.is_object() || field<int>(j, "schema", "ledger") != 1)
        throw LedgerError("unsupported ledger schema");

    Ledger L;
    for (const auto& h : field<json>(j, "hypotheses", "ledger"))
        L.hypotheses.push_back(field<std::string>(h, "name", "hypothesis"));

    std::set<std::string> all_generators;
    for (const auto& g : field<json>(j, "groups", "ledger")) {
        LedgerEntry e;
        e.name = field<std::string>(g, "name", "group");
        const std::string where = "group " + e.name;
        const auto free_rank = g.value("free_rank", 0UL);
        e.orders.assign(free_rank, BigInt(0));
        for (long o : field<std::vector<long>>(g, "orders", where)) {
            if (o < 2)
                throw LedgerError(where + ": cyclic orders must be >= 2");
            e.orders.emplace_back(o);
        }
        e.generators = field<std::vector<std::string>>(g, "generators", where);
        if (e.generators.size() != e.orders.size())
            throw LedgerError(where + ": " + std::to_string(e.generators.size()) + " generator names for "
                              + std::to_string(e.orders.size()) + " cyclic summands");
        for (const auto& name : e.generators)
            if (name.empty() || name.find_first_of("+* ") != std::string::npos || !all_generators.insert(name).second)
                throw LedgerError(where + ": bad or duplicate generator name '" + name + "'");
        e.group = FinAbGroup::direct_sum(e.orders);
        e.provenance = g.value("provenance", "");
        if (!L.groups.emplace(e.name, e).second)
            throw LedgerError("duplicate group " + e.name);
    }

    for (const auto& p : j.value("products", json::array())) {
        ProductFact f;
        f.left = field<std::string>(p, "left", "product");
        f.right = field<std::string>(p, "right", "product");
        f.group = field<std::string>(p, "group", "product");
        f.value = L.group(f.group).element(field<std::string>(p, "value", "product"));
        f.provenance = p.value("provenance", "");
        L.products.push_back(std::move(f));
    }

    for (const auto& m : field<json>(j, "maps", "ledger")) {
        LedgerMap lm;
        lm.name = field<std::string>(m, "name", "map");
        const std::string where = "map " + lm.name;
        lm.source = field<std::string>(m, "source", where);
        lm.target = field<std::string>(m, "target", where);
        const LedgerEntry& src = L.group(lm.source);
        const LedgerEntry& tgt = L.group(lm.target);
        lm.matrix = IntMatrix(tgt.orders.size(), src.orders.size());
        auto images = field<std::map<std::string, std::string>>(m, "images", where);
        if (images.size() != src.generators.size())
            throw LedgerError(where + ": every source generator needs exactly one image");
        for (std::size_t c = 0; c < src.generators.size(); ++c) {
            auto it = images.find(src.generators[c]);
            if (it == images.end())
                throw LedgerError(where + ": no image for " + src.generators[c]);
            auto v = tgt.element(it->second);
            for (std::size_t r = 0; r < v.size(); ++r)
                lm.matrix(r, c) = v[r];
        }
        if (m.contains("factors_through")) {
            const auto& f = m.at("factors_through");
            lm.factors_through = std::array<std::string, 3>{field<std::string>(f, "left", where),
                                                            field<std::string>(f, "right", where),
                                                            field<std::string>(f, "then", where)};
        }
        lm.provenance = m.value("provenance", "");
        L.maps.emplace(lm.name, std::move(lm));
    }

    for (const auto& b : field<json>(j, "brackets", "ledger")) {
        BracketFact f;
        const std::string name = field<std::string>(b, "name", "bracket");
        auto t = triple_of(b, "bracket " + name);
        f.a = t[0];
        f.g = t[1];
        f.f = t[2];
        f.group = field<std::string>(b, "group", "bracket " + name);
        const LedgerEntry& g = L.group(f.group);
        f.ambient = g.presentation();
        for (const auto& e : field<std::vector<std::string>>(b, "values", "bracket " + name))
            f.values.push_back(g.element(e));
        for (const auto& e : field<std::vector<std::string>>(b, "indeterminacy", "bracket " + name))
            f.indeterminacy.push_back(g.element(e));
        if (f.values.empty() || f.indeterminacy.empty())
            throw LedgerError("bracket " + name + ": values and indeterminacy must be non-empty");
        f.provenance = b.value("provenance", "");
        L.brackets.emplace(name, std::move(f));
    }

    for (const auto& q : j.value("juggling", json::array())) {
        JugglingFact f;
        f.triple = triple_of(q, "juggling");
        f.group = field<std::string>(q, "group", "juggling");
        f.contained_in = field<std::string>(q, "contained_in", "juggling");
        f.times = field<std::string>(q, "times", "juggling");
        f.provenance = q.value("provenance", "");
        L.bracket(f.contained_in);
        L.group(f.group);
        L.juggling.push_back(std::move(f));
    }

    const json& jac = field<json>(j, "jacobi", "ledger");
    for (const auto& t : field<std::vector<std::vector<std::string>>>(jac, "triples", "jacobi")) {
        if (t.size() != 3)
            throw LedgerError("jacobi: triples need three entries");
        L.jacobi.push_back({t[0], t[1], t[2]});
    }
    L.jacobi_provenance = jac.value("provenance", "");

    const json& tb = field<json>(j, "target_bracket", "ledger");
    L.target_triple = triple_of(tb, "target_bracket");
    L.target_group = field<std::string>(tb, "group", "target_bracket");
    L.target_cofiber_map = field<std::string>(tb, "cofiber_of", "target_bracket");
    L.target_cyclic_generator = field<std::string>(tb, "cyclic_generator", "target_bracket");
    L.group(L.target_group);
    L.map(L.target_cofiber_map);

    for (const auto& f : j.value("facts", json::array()))
        L.facts[field<std::string>(f, "name", "fact")] = field<long>(f, "value", "fact");

    return L;
}

std::string_view default_ledger_text() { return kDefaultLedger; }

std::string_view to_string(StepStatus s) noexcept
{
    switch (s) {
    case StepStatus::Pass: return "pass";
    case StepStatus::Fail: return "fail";
    case StepStatus::Skipped: return "skipped";
    }
    return "?";
}

bool DerivationReport::ok() const { return failed_step() == nullptr; }

const DerivationStep* DerivationReport::failed_step() const
{
    for (const auto& s : steps)
        if (s.status == StepStatus::Fail)
            return &s;
    return nullptr;
}

Ledger with_split_bracket(Ledger ledger)
{
    for (auto& [name, b] : ledger.brackets)
        if (b.a == "nu^2" && b.g == "2" && b.f == "eta")
            b.values = b.indeterminacy;
    return ledger;
}

namespace {

class Replay {
public:
    Replay(const Ledger& L, DerivationReport& report) : L_(L), report_(report) {}

    // Runs one step; a throw or false result marks it failed and stops the replay.
    bool step(std::string id, std::string title, std::string citation, const std::function<std::string()>& body)
    {
        DerivationStep s{std::move(id), std::move(title), std::move(citation), StepStatus::Pass, {}};
        try {
            s.detail = body();
        } catch (const std::exception& e) {
            s.status = StepStatus::Fail;
            s.detail = e.what();
        }
        report_.steps.push_back(s);
        return s.status == StepStatus::Pass;
    }

    void skip(std::string id, std::string title, std::string citation, std::string why)
    {
        report_.steps.push_back({std::move(id), std::move(title), std::move(citation), StepStatus::Skipped,
                                 std::move(why)});
    }

    void run()
    {
        step_eta_on_6() && step_short_exact() && step_bracket() && step_extension() && step_comparison()
            && step_corollary();
    }

private:
    static void check(bool cond, const std::string& what)
    {
        if (!cond)
            throw LedgerError(what);
    }

    // (i) eta o nu^2 = (eta nu) nu and eta nu lives in the 4-stem.
    bool step_eta_on_6()
    {
        return step("i", "eta_*: pi_6^s -> pi_7^s is the zero map", "Lemma Omega_8(CP1)", [this] {
            // both eta maps have to be well-defined homomorphisms
            const GroupHom eta6 = L_.hom("eta_6");
            L_.hom(L_.target_cofiber_map);
            const LedgerMap& m = L_.map("eta_6");
            check(m.factors_through.has_value(), "eta_6 records no factorization");
            const auto& [left, right, then] = *m.factors_through;
            const ProductFact* prod = nullptr;
            for (const auto& p : L_.products)
                if (p.left == left && p.right == right)
                    prod = &p;
            check(prod != nullptr, "no recorded value for the product " + left + "." + right);
            const LedgerEntry& home = L_.group(prod->group);
            check(is_zero_in(home, prod->value), left + "." + right + " = " + home.format(prod->value) + " in "
                                                     + home.name + " (" + home.group.to_string()
                                                     + "), so the zero-map argument does not apply");
            check(eta6.is_zero(), "recorded eta_6 is not the zero map");
            quot_ = kernel(eta6);
            check(quot_ == L_.group(m.source).group, "kernel of eta_6 is not all of " + m.source);
            return left + "." + right + " = 0 in " + home.name + " = " + home.group.to_string()
                   + ", hence eta o " + then + "-multiples vanish; kernel = " + quot_.to_string();
        });
    }

    // (ii) 0 -> coker(eta_7) -> pi_8(C_eta) -> ker(eta_6) -> 0.
    bool step_short_exact()
    {
        return step("ii", "0 -> Z/2([eps]) -> pi_8^s(C_eta) -> Z/2 -> 0", "Lemma Omega_8(CP1)", [this] {
            const GroupHom eta7 = L_.hom(L_.target_cofiber_map);
            const GroupHom eta6 = L_.hom("eta_6");
            const LedgerEntry& p8 = L_.group(L_.target_group);
            sub_ = cokernel(eta7);
            check(sub_.is_cyclic() && sub_.is_finite() && !sub_.is_trivial(),
                  "coker(eta_7) = " + sub_.to_string() + " is not a non-trivial finite cyclic group");

            Presentation coker{p8.presentation().generators, p8.presentation().relations.hconcat(eta7.matrix())};
            const auto eps = p8.element("eps");
            check(!coker.is_zero(eps), "[eps] vanishes in coker(eta_7)");

            const Presentation zero = Presentation::free(0);
            const GroupHom proj(p8.presentation(), coker, IntMatrix::identity(coker.generators));
            check(verify_exact({eta7, proj, GroupHom::zero(coker, zero)}), "pi_7 -> pi_8 -> coker -> 0 not exact");

            IntMatrix lifted = preimage_lattice(eta6.matrix(), eta6.target().relations);
            Presentation ker{lifted.cols(), preimage_lattice(lifted, eta6.source().relations)};
            const GroupHom incl(ker, eta6.source(), lifted);
            check(verify_exact({GroupHom::zero(zero, ker), incl, eta6}), "0 -> ker -> pi_6 -> pi_7 not exact");
            check(FinAbGroup::of(ker) == quot_, "kernel mismatch");
            return "sub = coker(eta_7) = " + sub_.to_string() + " generated by [eps]; quotient = ker(eta_6) = "
                   + quot_.to_string();
        });
    }

    // (iii) Jacobi identity plus juggling pins <eta, nu^2, 2>.
    bool step_bracket()
    {
        const std::string title = report_.counterfactual ? "<eta, nu^2, 2> contains 0 (counterfactual)"
                                                         : "<eta, nu^2, 2> = {eps, eps + eta.sigma} does not contain 0";
        return step("iii", title, "Lemma extension_and_Toda; Toda Jacobi identity", [this] {
            const LedgerEntry& p8 = L_.group(L_.target_group);
            check(std::find(L_.hypotheses.begin(), L_.hypotheses.end(), "signs-ignored") != L_.hypotheses.end(),
                  "the signs-ignored hypothesis is not recorded");

            // all named elements and bracket values have order <= 2
            for (const auto& t : L_.jacobi)
                for (const auto& name : t) {
                    if (name == "2")
                        continue;
                    // nu^2 is a generator; nu itself is not part of any bracket of the identity
                    const LedgerEntry& owner = L_.owner_of(name);
                    const auto v = owner.element(name);
                    check(element_order(owner, v) <= 2, name + " has order > 2; signs cannot be ignored");
                }

            const std::array<std::string, 3>* known = nullptr;
            const BracketFact* known_fact = nullptr;
            std::optional<std::array<std::string, 3>> vanishing;
            std::string juggled;
            for (const auto& [name, b] : L_.brackets) {
                if (b.group != L_.target_group)
                    continue;
                for (const auto& t : L_.jacobi)
                    if (t == std::array<std::string, 3>{b.a, b.g, b.f}) {
                        known = &t;
                        known_fact = &b;
                    }
            }
            check(known_fact != nullptr, "no recorded bracket from the Jacobi identity");
            for (const auto& v : known_fact->values)
                check(element_order(p8, v) <= 2, "a value of " + known_fact->label() + " has order > 2");

            // <2, eta, nu^2> is contained in <2, eta, nu> nu, and <2, eta, nu> sits in a trivial stem
            for (const auto& jf : L_.juggling) {
                const BracketFact& inner = L_.bracket(jf.contained_in);
                const LedgerEntry& home = L_.group(inner.group);
                bool all_zero = true;
                for (const auto& v : inner.values)
                    all_zero = all_zero && is_zero_in(home, v);
                check(all_zero, inner.label() + " has a non-zero value in " + home.name);
                vanishing = jf.triple;
                juggled = inner.label() + " = {0} in " + home.name + " = " + home.group.to_string();
            }
            check(vanishing.has_value(), "no recorded juggling fact");

            // the third Jacobi term is the target bracket
            std::optional<std::array<std::string, 3>> target;
            for (const auto& t : L_.jacobi)
                if (t != *known && t != *vanishing)
                    target = t;
            check(target.has_value() && *target == L_.target_triple, "Jacobi identity does not involve the target");

            // the target is a coset of eta_*(pi_7) + 2 pi_8 and meets the sum of the other two terms
            const GroupHom eta7 = L_.hom(L_.target_cofiber_map);
            std::vector<std::vector<BigInt>> gens;
            for (std::size_t c = 0; c < eta7.matrix().cols(); ++c)
                gens.push_back(eta7.matrix().column(c));
            for (std::size_t i = 0; i < p8.orders.size(); ++i) {
                std::vector<BigInt> e(p8.orders.size());
                e[i] = 2;
                gens.push_back(e);
            }
            const auto indet = span_elements(p8, gens);

            std::set<std::vector<BigInt>> other; // {0} + values, signs ignored
            for (const auto& v : known_fact->values)
                other.insert(normalized(p8, v));
            std::set<std::vector<BigInt>> coset;
            for (const auto& u : indet)
                coset.insert(normalized(p8, plus(*other.begin(), u)));
            for (const auto& v : other)
                check(coset.count(v) == 1, "the known bracket is not a single coset of the indeterminacy");

            target_.a = (*target)[0];
            target_.g = (*target)[1];
            target_.f = (*target)[2];
            target_.group = p8.name;
            target_.ambient = p8.presentation();
            target_.values.assign(coset.begin(), coset.end());
            target_.indeterminacy.assign(indet.begin(), indet.end());
            target_.provenance = L_.jacobi_provenance;

            Presentation coker{p8.presentation().generators, p8.presentation().relations.hconcat(eta7.matrix())};
            check(report_.counterfactual || !target_.contains_zero(),
                  target_.label() + " contains 0: the recorded brackets contradict a non-split cofiber");
            std::string maps_to = "0";
            const auto eps = p8.element("eps");
            if (!target_.contains_zero()) {
                for (const auto& v : target_.values) {
                    std::vector<BigInt> diff = plus(v, scaled(eps, -1));
                    check(coker.is_zero(diff), "bracket value does not map to [eps]");
                }
                maps_to = "[eps]";
            }

            std::string vals;
            for (const auto& v : target_.values)
                vals += (vals.empty() ? "" : ", ") + p8.format(v);
            return juggled + "; " + known_fact->label() + " from ledger; hence " + target_.label() + " = {" + vals
                   + "}, contains 0: " + (target_.contains_zero() ? "yes" : "no") + ", maps to " + maps_to;
        });
    }

    bool step_extension()
    {
        return step("iv", "classify the extension pi_8^s(C_eta)", "Lemma extension_and_Toda", [this] {
            report_.cofiber_group = classify_cyclic_extension(sub_, quot_, target_);
            check(report_.cofiber_group->order() == sub_.order() * quot_.order(), "extension has the wrong order");
            return "pi_8^s(C_eta) = Omega_8^fr(CP^1; xi) = " + report_.cofiber_group->to_string()
                   + (target_.contains_zero() ? " (split)" : " (non-split)");
        });
    }

    // (v) compare framed and string bordism sequences.
    bool step_comparison()
    {
        return step("v", "Tors Omega_8^{O<7>}(CP^1; xi) via the comparison diagram",
                    "Lemma pi_*(MO8); Lemma Omega_8(CP1)", [this] {
            check(L_.group("Omega_O7_7").group.is_trivial(), "Omega_7^{O<7>} is not zero");
            const GroupHom f6 = L_.hom("forget_6");
            check(kernel(f6).is_trivial() && cokernel(f6).is_trivial(), "Omega_6^fr -> Omega_6^{O<7>} is not an iso");

            const GroupHom j8 = L_.hom("J_8");
            const GroupHom f8 = L_.hom("forget_8");
            check(verify_exact({j8, f8}), "kernel of Omega_8^fr -> Omega_8^{O<7>} is not im J_8");
            const FinAbGroup tors8 = L_.group("Omega_O7_8").group.torsion_subgroup();
            check(image(f8) == tors8, "Omega_8^fr does not map onto Tors Omega_8^{O<7>}");

            // im J_8 = eta_*(pi_7) inside pi_8, so Z/2([eps]) = coker(J_8) = Theta_8
            const GroupHom eta7 = L_.hom(L_.target_cofiber_map);
            const Presentation p8 = L_.group(L_.target_group).presentation();
            Presentation mod_eta{p8.generators, p8.relations.hconcat(eta7.matrix())};
            Presentation mod_j{p8.generators, p8.relations.hconcat(j8.matrix())};
            for (std::size_t c = 0; c < j8.matrix().cols(); ++c)
                check(mod_eta.is_zero(j8.matrix().column(c)), "im J_8 is not inside eta_*(pi_7)");
            for (std::size_t c = 0; c < eta7.matrix().cols(); ++c)
                check(mod_j.is_zero(eta7.matrix().column(c)), "eta_*(pi_7) is not inside im J_8");
            check(cokernel(j8) == sub_, "coker(J_8) differs from the sub of the extension");

            // five lemma on 0 -> sub -> E -> quot -> 0 over 0 -> Tors -> Tors(CP^1) -> Omega_6 -> 0
            check(tors8 == sub_ && FinAbGroup::of(f6.target()) == quot_, "comparison ends are not isomorphic");
            report_.final_group = report_.cofiber_group;
            return "Omega_7^{O<7>} = 0, im J_8 = eta_*(pi_7) = <eta.sigma>, Theta_8 = coker J_8 = " + sub_.to_string()
                   + "; Tors Omega_8^{O<7>}(CP^1; xi) = " + report_.final_group->to_string();
        });
    }

    // (vi) Sigma_ex is twice a generator, so it dies in any group of exponent 2.
    bool step_corollary()
    {
        const std::string title = "i_*(Sigma_ex) = 0 in Omega_8^{O<7>}(CP^inf; xi) when w2 != 0, w4 = 0";
        const std::string citation = "Proposition i_CP1";
        const FinAbGroup& g = *report_.final_group;
        if (!g.is_cyclic()) {
            if (report_.counterfactual) {
                skip("vi", title, citation, "counterfactual: " + g.to_string() + " has no element 2a equal to Sigma_ex");
                return true;
            }
        }
        return step("vi", title, citation, [this, &g] {
            check(g.is_cyclic(), "Tors Omega_8(CP^1; xi) = " + g.to_string() + " is not cyclic");
            const auto it = L_.facts.find("cp_infinity_torsion_exponent");
            check(it != L_.facts.end() && it->second >= 1, "no recorded exponent for Tors Omega_8(CP^inf; xi)");
            const BigInt n = g.order();
            const BigInt e = it->second;
            // the image of Theta_8 = Z/|sub| in Z/n is generated by n/|sub|
            const BigInt sigma_ex = n / sub_.order();
            // homs Z/n -> Z/e are a -> t with n t = 0 mod e; Sigma_ex -> sigma_ex * t
            for (BigInt t = 0; t < e; ++t) {
                BigInt nt = n * t;
                if (!mpz_divisible_p(nt.get_mpz_t(), e.get_mpz_t()))
                    continue;
                BigInt image = sigma_ex * t;
                check(mpz_divisible_p(image.get_mpz_t(), e.get_mpz_t()),
                      "some map to a group of exponent " + to_decimal(e) + " does not kill Sigma_ex");
            }
            report_.exotic_sphere_dies = true;
            return "Sigma_ex = " + to_decimal(sigma_ex) + "a in Z/" + to_decimal(n) + "; 2 i_*(a) = 0 since torsion has exponent "
                   + to_decimal(e);
        });
    }

    const Ledger& L_;
    DerivationReport& report_;
    FinAbGroup sub_;
    FinAbGroup quot_;
    BracketFact target_;
};

} // namespace

DerivationReport replay_ledger(const Ledger& ledger, Counterfactual mode)
{
    DerivationReport report;
    Ledger L = ledger;
    if (mode == Counterfactual::SplitBracket) {
        L = with_split_bracket(std::move(L));
        report.counterfactual = true;
        report.counterfactual_label = "split-bracket: <nu^2, 2, eta> forced to contain 0";
    }
    Replay(L, report).run();
    return report;
}

DerivationReport replay_ledger(std::string_view json_text, Counterfactual mode)
{
    Ledger L;
    try {
        L = parse_ledger(json_text);
    } catch (const std::exception& e) {
        DerivationReport report;
        report.counterfactual = mode != Counterfactual::None;
        report.steps.push_back({"load", "load ledger", "ledger file", StepStatus::Fail, e.what()});
        return report;
    }
    DerivationReport report = replay_ledger(L, mode);
    report.steps.insert(report.steps.begin(), {"load", "load ledger", "ledger file", StepStatus::Pass,
                                               std::to_string(L.groups.size()) + " groups, "
                                                   + std::to_string(L.maps.size()) + " maps, "
                                                   + std::to_string(L.brackets.size()) + " brackets"});
    return report;
}

} // namespace cisd
