#pragma once

#include <string>

#include "json.hpp"
#include "pencil/bounds.hpp"
#include "pencil/completion.hpp"
#include "pencil/invariants.hpp"

namespace pencil {

using Json = nlohmann::ordered_json;

// Partitions are integer arrays. On input an element may also be a
// run-length string "v x k" standing for k copies of v.
Json to_json(const Partition& p);
Json to_json(const StarPartition& p);
Json to_json(const Pencil& h);
Json to_json(const WeyrCharacteristic& w);
Json to_json(const KroneckerStructure& k);
Json to_json(const Interval& i);
Json to_json(const Scenario& s);
Json to_json(const BoundReport& r);
Json to_json(const Verdict& v);

// All parsers throw InputError on malformed data.
std::vector<Int> int_list_from_json(const Json& j);
Partition partition_from_json(const Json& j);
StarPartition star_from_json(const Json& j);
Pencil pencil_from_json(const Json& j);
WeyrCharacteristic weyr_from_json(const Json& j);
Spectrum spectrum_from_json(const Json& j);

RankOneKind kind_from_string(const std::string& s);
RankChange rank_change_from_string(const std::string& s);
Component component_from_string(const std::string& s);

Json read_json_file(const std::string& path);

}  // namespace pencil
