#pragma once

#include <json.hpp>
#include <optional>
#include <string>

#include "chaincodes/idempotent_search.hpp"

namespace chaincodes {

using Json = nlohmann::json;

// Elements serialize as ascending (coefficient, element-index) pairs next to the
// group spec and modulus / ring spec. Key order in every object is fixed.

Json to_json(const FAlgebraElement& e);
FAlgebraElement f_element_from_json(const Json& j);

Json to_json(const RAlgebraElement& e);
RAlgebraElement r_element_from_json(const Json& j);

Json to_json(const GroupCodeF& c, const std::optional<FAlgebraElement>& idempotent = std::nullopt);
GroupCodeF f_code_from_json(const Json& j);

Json to_json(const RCode& c);
RCode r_code_from_json(const Json& j);

Json to_json(const CodeChain& chain);
CodeChain chain_from_json(const Json& j);

Json to_json(const SearchWitness& w);
SearchWitness witness_from_json(const Json& j);

/// Wall time is left out unless requested so that reports are byte-stable across runs.
Json to_json(const SearchReport& r, bool include_timing = false);

/// Header of the distance table CSV.
inline constexpr const char* kTableCsvHeader = "2n,d_H";
std::string table_csv_row(const SearchReport& r);

}  // namespace chaincodes
