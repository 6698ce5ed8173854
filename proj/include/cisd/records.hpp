#ifndef CISD_RECORDS_HPP
#define CISD_RECORDS_HPP

#include <string>

#include "json.hpp"

#include "cisd/classifier.hpp"
#include "cisd/invariants.hpp"
#include "cisd/ledger.hpp"
#include "cisd/search.hpp"

// JSON output records of the command line tool. Big integers are decimal
// strings; keys come out sorted, so equal inputs give byte-identical output.
namespace cisd::records {

using nlohmann::json;

inline constexpr int kSchema = 1;

json sullivan_data(const SullivanData& sd);
/// Inverse of sullivan_data(); throws std::invalid_argument on malformed input.
SullivanData sullivan_data_from_json(const json& j);

json wu_profile(const WuProfile& wu);
json case_row(const CaseRow& row);
json verdict(const Verdict& v);

json sd_record(int n, const Multidegree& md, bool classical_signs);
json classify_record(int n, const Multidegree& a, const Multidegree& b);
json rigidity_record(const Multidegree& md);
json search_record(const SearchSpec& spec, const CollisionReport& report, const std::vector<Multidegree>* listing);
json pair_check_record(int n, const std::vector<Multidegree>& candidates, const CollisionReport& report);
json ledger_record(const DerivationReport& report);

json error_record(const std::string& kind, const std::string& message);

/// Stable serialization used for all output: sorted keys, 2-space indent.
std::string dump(const json& j);

/// Plain-text rendering for --format=table.
std::string table(const json& record);

} // namespace cisd::records

#endif
