#ifndef CISD_LEDGER_HPP
#define CISD_LEDGER_HPP

#include <array>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cisd/abelian.hpp"

namespace cisd {

/// Malformed or inconsistent ledger data.
class LedgerError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A recorded group with a named basis: one generator per cyclic summand,
/// free summands (order 0) first.
struct LedgerEntry {
    std::string name;
    FinAbGroup group;
    std::vector<BigInt> orders;
    std::vector<std::string> generators;
    std::string provenance;

    Presentation presentation() const { return Presentation::cyclic_sum(orders); }
    /// Parses "0", "eps", "eps+eta.sigma", "3*sigma". Throws LedgerError.
    std::vector<BigInt> element(std::string_view expr) const;
    std::string format(const std::vector<BigInt>& v) const;
};

struct LedgerMap {
    std::string name;
    std::string source, target;
    IntMatrix matrix;
    std::string provenance;
    // eta o x = (left o right) o then, when recorded
    std::optional<std::array<std::string, 3>> factors_through;
};

struct ProductFact {
    std::string left, right, group;
    std::vector<BigInt> value;
    std::string provenance;
};

struct JugglingFact {
    std::array<std::string, 3> triple;
    std::string group;
    std::string contained_in;
    std::string times;
    std::string provenance;
};

struct Ledger {
    std::map<std::string, LedgerEntry> groups;
    std::map<std::string, LedgerMap> maps;
    std::map<std::string, BracketFact> brackets;
    std::vector<ProductFact> products;
    std::vector<JugglingFact> juggling;
    std::vector<std::array<std::string, 3>> jacobi;
    std::string jacobi_provenance;
    std::array<std::string, 3> target_triple;
    std::string target_group;
    std::string target_cofiber_map;
    std::string target_cyclic_generator;
    std::vector<std::string> hypotheses;
    std::map<std::string, long> facts;

    const LedgerEntry& group(const std::string& name) const;
    const LedgerMap& map(const std::string& name) const;
    const BracketFact& bracket(const std::string& name) const;
    GroupHom hom(const std::string& map_name) const;
    /// Which recorded group a generator name belongs to.
    const LedgerEntry& owner_of(const std::string& generator) const;
};

/// Throws LedgerError on malformed JSON or dangling references.
Ledger parse_ledger(std::string_view json_text);

/// The ledger shipped with the library (data/ledger.json, compiled in).
std::string_view default_ledger_text();

enum class StepStatus { Pass, Fail, Skipped };

std::string_view to_string(StepStatus s) noexcept;

struct DerivationStep {
    std::string id;
    std::string title;
    std::string citation;
    StepStatus status = StepStatus::Pass;
    std::string detail;
};

struct DerivationReport {
    bool counterfactual = false;
    std::string counterfactual_label;
    std::vector<DerivationStep> steps;
    std::optional<FinAbGroup> cofiber_group;  ///< pi_8^s(C_eta)
    std::optional<FinAbGroup> final_group;    ///< Tors Omega_8^{O<7>}(CP^1; xi)
    std::optional<bool> exotic_sphere_dies;   ///< i_*(Sigma_ex) = 0 over CP^infinity

    /// No failed step. Aborted runs stop at the first failure.
    bool ok() const;
    const DerivationStep* failed_step() const;
};

enum class Counterfactual { None, SplitBracket };

/// Replays the derivation that the torsion of the twisted string bordism of CP^1
/// is Z/4, machine-checking each step against the ledger.
DerivationReport replay_ledger(std::string_view json_text, Counterfactual mode = Counterfactual::None);
DerivationReport replay_ledger(const Ledger& ledger, Counterfactual mode = Counterfactual::None);

/// Replaces the recorded <nu^2, 2, eta> by its indeterminacy, so it contains 0.
Ledger with_split_bracket(Ledger ledger);

} // namespace cisd

#endif
