#include "cisd/records.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace cisd::records {

namespace {

json strings(const std::vector<BigInt>& v)
{
    json a = json::array();
    for (const auto& x : v)
        a.push_back(to_decimal(x));
    return a;
}

json header(const char* command)
{
    return json{{"schema", kSchema}, {"command", command}};
}

constexpr const char* kCompleteness =
    "exhaustive within the enumerated box only; no claim is made about multidegrees outside it";

} // namespace

json sullivan_data(const SullivanData& sd)
{
    return json{{"n", sd.n},
                {"total_degree", to_decimal(sd.total_degree)},
                {"pontryagin", strings(sd.pontryagin)},
                {"euler", to_decimal(sd.euler)}};
}

SullivanData sullivan_data_from_json(const json& j)
{
    try {
        SullivanData sd;
        sd.n = j.at("n").get<int>();
        sd.total_degree = parse_decimal(j.at("total_degree").get<std::string>());
        for (const auto& p : j.at("pontryagin"))
            sd.pontryagin.push_back(parse_decimal(p.get<std::string>()));
        sd.euler = parse_decimal(j.at("euler").get<std::string>());
        if (sd.pontryagin.size() != static_cast<std::size_t>(sd.n / 2))
            throw std::invalid_argument("wrong number of Pontryagin numbers");
        return sd;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("malformed Sullivan data record: ") + e.what());
    }
}

json wu_profile(const WuProfile& wu)
{
    return json{{"p_count", wu.p_count}, {"w2_nu", int(wu.w2_nu)}, {"w4_nu", int(wu.w4_nu)}, {"v2", int(wu.v2)},
                {"v4", int(wu.v4)},      {"w4_X", int(wu.w4_X)},   {"spin", wu.spin()}};
}

json case_row(const CaseRow& row)
{
    json j{{"v2", int(row.v2)},
           {"v4", int(row.v4)},
           {"d_mod_2", int(row.d_odd)},
           {"p1_mod_8", row.p1_mod8},
           {"rigidity", std::string(to_string(row.rigidity))},
           {"citation", row.citation},
           {"conjecture", row.is_conjecture}};
    if (!row.pairwise_citation.empty())
        j["pairwise"] = json{{"statement", "SD-equal partners are diffeomorphic"},
                             {"citation", row.pairwise_citation},
                             {"conjecture", false}};
    return j;
}

json verdict(const Verdict& v)
{
    json j{{"status", std::string(to_string(v.status))},
           {"justification", v.justification},
           {"summary", std::string(to_string(v.status)) + " (" + v.justification + ")"},
           {"sd_equal", v.sd_equal},
           {"conjecture", v.status == Status::SDEqualConjectural}};
    if (!v.note.empty())
        j["note"] = v.note;
    return j;
}

json sd_record(int n, const Multidegree& md, bool classical_signs)
{
    const SullivanData sd = cisd::sullivan_data(n, md);
    json j = header("sd");
    j["n"] = n;
    j["multidegree"] = md.to_literal();
    j["sullivan_data"] = sullivan_data(sd);
    if (classical_signs)
        j["classical_pontryagin"] = strings(sd.classical_pontryagin());
    if (n == 4)
        j["wu"] = wu_profile(cisd::wu_profile(md));
    return j;
}

json classify_record(int n, const Multidegree& a, const Multidegree& b)
{
    const Verdict v = classify(n, a, b);
    json j = header("classify");
    j["n"] = n;
    j["a"] = a.to_literal();
    j["b"] = b.to_literal();
    j["verdict"] = verdict(v);
    j["sullivan_data"] = json{{"a", sullivan_data(cisd::sullivan_data(n, a))},
                              {"b", sullivan_data(cisd::sullivan_data(n, b))}};
    if (v.case_row)
        j["case_row"] = case_row(*v.case_row);
    return j;
}

json rigidity_record(const Multidegree& md)
{
    json j = header("rigidity");
    j["n"] = 4;
    j["multidegree"] = md.to_literal();
    j["case_row"] = case_row(cisd::case_row(md));
    return j;
}

namespace {

json pairs_json(const CollisionReport& report)
{
    json pairs = json::array();
    for (const auto& p : report.pairs)
        pairs.push_back(json{{"a", p.a.to_literal()}, {"b", p.b.to_literal()}, {"sullivan_data", sullivan_data(p.sd)}});
    return pairs;
}

json stats_json(const SearchStats& s)
{
    return json{{"enumerated", s.enumerated},
                {"degree_buckets", s.degree_buckets},
                {"shared_degree_buckets", s.shared_degree_buckets},
                {"exact_comparisons", s.exact_comparisons},
                {"digest_false_positives", s.digest_false_positives}};
}

} // namespace

json search_record(const SearchSpec& spec, const CollisionReport& report, const std::vector<Multidegree>* listing)
{
    json j = header("search");
    // shard count is deliberately absent: the report must not depend on it
    j["spec"] = json{{"n", spec.n},
                     {"max_degree", spec.max_degree == std::numeric_limits<std::uint64_t>::max() ? json() : json(spec.max_degree)},
                     {"max_k", spec.max_k},
                     {"total_degree", spec.total_degree_target ? json(to_decimal(*spec.total_degree_target)) : json()},
                     {"limit", spec.limit}};
    j["pairs"] = pairs_json(report);
    j["stats"] = stats_json(report.stats);
    j["completeness"] = kCompleteness;
    if (listing) {
        json l = json::array();
        for (const auto& md : *listing)
            l.push_back(md.to_literal());
        j["enumerated"] = l;
    }
    return j;
}

json pair_check_record(int n, const std::vector<Multidegree>& candidates, const CollisionReport& report)
{
    json j = header("search");
    json c = json::array();
    for (const auto& md : candidates)
        c.push_back(md.to_literal());
    j["spec"] = json{{"n", n}, {"candidates", c}};
    j["pairs"] = pairs_json(report);
    j["stats"] = stats_json(report.stats);
    j["completeness"] = "explicit candidate list";
    return j;
}

json ledger_record(const DerivationReport& report)
{
    json j = header("ledger verify");
    json steps = json::array();
    for (const auto& s : report.steps)
        steps.push_back(json{{"id", s.id},
                             {"title", s.title},
                             {"citation", s.citation},
                             {"status", std::string(to_string(s.status))},
                             {"detail", s.detail}});
    j["steps"] = steps;
    j["ok"] = report.ok();
    j["counterfactual"] = report.counterfactual;
    if (report.counterfactual)
        j["counterfactual_label"] = report.counterfactual_label;
    j["cofiber_group"] = report.cofiber_group ? json(report.cofiber_group->to_string()) : json();
    j["result"] = report.final_group ? json(report.final_group->to_string()) : json();
    j["exotic_sphere_dies"] = report.exotic_sphere_dies ? json(*report.exotic_sphere_dies) : json();
    if (const auto* f = report.failed_step())
        j["failed_step"] = f->id;
    return j;
}

json error_record(const std::string& kind, const std::string& message)
{
    json j{{"schema", kSchema}};
    j["error"] = json{{"kind", kind}, {"message", message}};
    return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

namespace {

std::string scalar(const json& v)
{
    if (v.is_string())
        return v.get<std::string>();
    if (v.is_array()) {
        std::string s = "(";
        for (std::size_t i = 0; i < v.size(); ++i)
            s += (i ? ", " : "") + scalar(v[i]);
        return s + ")";
    }
    return v.dump();
}

void flatten(std::ostream& os, const json& j, const std::string& prefix)
{
    for (const auto& [k, v] : j.items()) {
        const std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object())
            flatten(os, v, key);
        else if (v.is_array() && !v.empty() && v[0].is_object()) {
            for (std::size_t i = 0; i < v.size(); ++i)
                flatten(os, v[i], key + "[" + std::to_string(i) + "]");
        } else
            os << key << std::string(key.size() < 40 ? 40 - key.size() : 1, ' ') << scalar(v) << '\n';
    }
}

} // namespace

std::string table(const json& record)
{
    std::ostringstream os;
    if (record.contains("steps")) {
        for (const auto& s : record["steps"])
            os << '[' << s["status"].get<std::string>() << "] (" << s["id"].get<std::string>() << ") "
               << s["title"].get<std::string>() << "  {" << s["citation"].get<std::string>() << "}\n      "
               << s["detail"].get<std::string>() << '\n';
        json rest = record;
        rest.erase("steps");
        flatten(os, rest, "");
        return os.str();
    }
    flatten(os, record, "");
    return os.str();
}

} // namespace cisd::records
