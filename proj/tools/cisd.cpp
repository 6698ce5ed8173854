// Command-line front end. Exit codes: 0 computed, 1 usage or parse error,
// 2 guard tripped or failed verification.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "cisd/ledger.hpp"
#include "cisd/literal.hpp"
#include "cisd/records.hpp"
#include "cisd/search.hpp"

namespace {

using cisd::records::json;

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kGuard = 2;

constexpr const char* kLiteralHelp =
    "Multidegree literals are comma-separated degrees, e.g. \"5,3,2\".\n"
    "  NOTE: \"^\" means MULTIPLICITY, not a power: \"3^150\" is 150 copies of the degree 3,\n"
    "  so \"3^150,7^89\" has 239 entries. Degrees and multiplicities must be >= 1;\n"
    "  degree 1 entries are allowed and do not change the manifold.";

constexpr const char* kLimitEnv = "CISD_ENUM_LIMIT";

struct Options {
    std::string format = "json";
};

void emit(const Options& opt, const json& record)
{
    if (opt.format == "table")
        std::cout << cisd::records::table(record);
    else
        std::cout << cisd::records::dump(record);
}

int fail(const Options& opt, const std::string& kind, const std::string& message, int code, json extra = json())
{
    json rec = cisd::records::error_record(kind, message);
    if (!extra.is_null())
        rec["error"]["detail"] = std::move(extra);
    emit(opt, rec);
    std::cerr << "cisd: " << message << '\n';
    return code;
}

struct ArgumentError {
    std::string argument;
    std::size_t position;
    std::string message;
};

cisd::Multidegree literal(const std::string& text, const char* which)
{
    try {
        return cisd::parse_multidegree(text);
    } catch (const cisd::LiteralError& e) {
        throw ArgumentError{which, e.position(), e.what()};
    }
}

std::optional<std::uint64_t> env_limit()
{
    const char* raw = std::getenv(kLimitEnv);
    if (!raw || !*raw)
        return std::nullopt;
    const std::string s(raw);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 19)
        throw std::invalid_argument(std::string(kLimitEnv) + " must be a positive integer");
    const auto v = std::stoull(s);
    if (v == 0)
        throw std::invalid_argument(std::string(kLimitEnv) + " must be a positive integer");
    return v;
}

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw std::invalid_argument("cannot read ledger file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char** argv)
{
    Options opt;
    CLI::App app{"Diffeomorphism invariants of complex complete intersections.", "cisd"};
    app.footer(kLiteralHelp);
    app.require_subcommand(1);
    app.fallthrough();
    app.add_option("--format", opt.format, "Output format")->check(CLI::IsMember({"json", "table"}));

    int n = 0;
    std::string lit_a, lit_b;
    bool classical = false;

    auto* sd = app.add_subcommand("sd", "Sullivan data (and Wu profile when n = 4) of one multidegree");
    sd->add_option("n", n, "Complex dimension, >= 1")->required();
    sd->add_option("multidegree", lit_a, "Multidegree literal (\"^\" is multiplicity)")->required();
    sd->add_flag("--classical-signs", classical, "Also print (-1)^i p_i");
    sd->footer(kLiteralHelp);

    auto* cl = app.add_subcommand("classify", "Decide whether two complete intersections are diffeomorphic");
    cl->add_option("n", n, "Complex dimension, >= 2")->required();
    cl->add_option("a", lit_a, "First multidegree literal")->required();
    cl->add_option("b", lit_b, "Second multidegree literal")->required();
    cl->footer(kLiteralHelp);

    auto* rg = app.add_subcommand("rigidity", "Theta-rigidity row of a complex 4-dimensional complete intersection");
    rg->add_option("multidegree", lit_a, "Multidegree literal")->required();
    rg->footer(kLiteralHelp);

    cisd::SearchSpec spec;
    std::string total_degree;
    std::optional<std::uint64_t> limit;
    std::vector<std::string> candidates;
    bool list = false, timing = false;
    auto* se = app.add_subcommand("search", "Find distinct multidegrees with equal Sullivan data");
    se->add_option("n", spec.n, "Complex dimension, >= 3")->required();
    auto* max_degree_opt = se->add_option("--max-degree", spec.max_degree,
                                          "Largest degree entry (default 2; unbounded with --total-degree)");
    se->add_option("--max-k", spec.max_k, "Largest number of entries != 1")->capture_default_str();
    se->add_option("--total-degree", total_degree, "Only factorizations of this total degree");
    se->add_option("--shards", spec.shard_count, "Worker shards; the report does not depend on it")
        ->capture_default_str();
    se->add_option("--limit", limit, std::string("Enumeration guard (default ") + std::to_string(spec.limit) +
                                         ", or $" + kLimitEnv + ")");
    se->add_option("--candidates", candidates, "Compare these literals pairwise instead of enumerating");
    se->add_flag("--list", list, "Include the enumerated multidegrees");
    se->add_flag("--timing", timing, "Include wall time and shard count (breaks byte-identity)");
    se->footer(kLiteralHelp);

    std::string ledger_file, counterfactual;
    auto* lg = app.add_subcommand("ledger", "Stable-stem ledger");
    lg->require_subcommand(1);
    auto* lv = lg->add_subcommand("verify", "Replay the Z/4 bordism derivation step by step");
    lv->add_option("--ledger", ledger_file, "Ledger JSON file (default: the compiled-in ledger)");
    lv->add_option("--counterfactual", counterfactual, "Replay a counterfactual variant")
        ->check(CLI::IsMember({"split-bracket"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (*sd) {
            if (n < 1)
                return fail(opt, "usage", "n must be >= 1", kUsage);
            emit(opt, cisd::records::sd_record(n, literal(lit_a, "multidegree"), classical));
        } else if (*cl) {
            if (n < 2)
                return fail(opt, "usage", "classify needs n >= 2", kUsage);
            emit(opt, cisd::records::classify_record(n, literal(lit_a, "a"), literal(lit_b, "b")));
        } else if (*rg) {
            emit(opt, cisd::records::rigidity_record(literal(lit_a, "multidegree")));
        } else if (*se) {
            if (!total_degree.empty()) {
                spec.total_degree_target = cisd::parse_decimal(total_degree);
                // every part divides the target, so the degree cap is redundant unless given
                if (max_degree_opt->count() == 0)
                    spec.max_degree = std::numeric_limits<std::uint64_t>::max();
            }
            if (limit)
                spec.limit = *limit;
            else if (auto e = env_limit())
                spec.limit = *e;
            cisd::validate(spec);
            if (!candidates.empty()) {
                std::vector<cisd::Multidegree> mds;
                for (const auto& c : candidates)
                    mds.push_back(literal(c, "candidate"));
                const auto report = cisd::collisions_among(spec.n, mds, spec.shard_count);
                emit(opt, cisd::records::pair_check_record(spec.n, mds, report));
                return kOk;
            }
            std::vector<cisd::Multidegree> listing;
            if (list)
                listing = cisd::enumerate(spec);
            const auto report = cisd::find_collisions(spec);
            json rec = cisd::records::search_record(spec, report, list ? &listing : nullptr);
            if (timing)
                rec["timing"] = json{{"wall_ms", report.wall_ms}, {"shards", spec.shard_count}};
            emit(opt, rec);
        } else if (*lv) {
            const auto mode =
                counterfactual.empty() ? cisd::Counterfactual::None : cisd::Counterfactual::SplitBracket;
            const std::string text =
                ledger_file.empty() ? std::string(cisd::default_ledger_text()) : read_file(ledger_file);
            const auto report = cisd::replay_ledger(std::string_view(text), mode);
            emit(opt, cisd::records::ledger_record(report));
            return report.ok() ? kOk : kGuard;
        }
        return kOk;
    } catch (const ArgumentError& e) {
        return fail(opt, "parse", e.argument + ": " + e.message, kUsage,
                    json{{"argument", e.argument}, {"position", e.position}});
    } catch (const cisd::EnumerationLimitExceeded& e) {
        return fail(opt, "guard", e.what(), kGuard, json{{"limit", e.limit()}, {"enumerated", e.enumerated()}});
    } catch (const std::invalid_argument& e) {
        return fail(opt, "usage", e.what(), kUsage);
    } catch (const std::exception& e) {
        return fail(opt, "internal", e.what(), kGuard);
    }
}
