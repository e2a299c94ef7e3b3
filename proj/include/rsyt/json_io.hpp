#pragma once

// JSON interchange.  Rationals are "p/q" strings (integers also accepted on
// input), big integers are decimal strings, cells are 1-based [row, col].
// Readers validate fully and throw Error(BadInput) naming the offending path,
// or the library's own validation errors for well-formed but invalid data.

#include <string>

#include <json.hpp>

#include "rsyt/enumeration.hpp"
#include "rsyt/realizability.hpp"
#include "rsyt/slice.hpp"
#include "rsyt/staircase.hpp"
#include "rsyt/syt.hpp"

namespace rsyt {

using Json = nlohmann::ordered_json;

/// Parses text, mapping syntax errors to BadInput.
Json parse_json(const std::string& text, const std::string& source = "input");
Json read_json_file(const std::string& path);

Json to_json(const Shape& shape);
Shape shape_from_json(const Json& j);

Json to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json cell_to_json(Cell c);
Cell cell_from_json(const Json& j, const std::string& path);

Json to_json(const OuterSumWitness& w);
OuterSumWitness witness_from_json(const Json& j);

Json to_json(const TabooCertificate& c);
TabooCertificate taboo_from_json(const Json& j);

/// {"outcome":"realizable","witness":...,"margin":...} or
/// {"outcome":"not_realizable","farkas":{"multipliers":[...],"rows":[...]}}.
Json to_json(const FeasibilityResult& r);

Json to_json(const SortingNetwork& net);
SortingNetwork network_from_json(const Json& j);

Json to_json(const PointConfiguration& c);
PointConfiguration configuration_from_json(const Json& j);

Json to_json(const RealizabilityVerdict& v);

Json to_json(const SliceVertex& v);
SliceVertex vertex_from_json(const Json& j);

Json to_json(const LabeledLatticePath& p);
Json to_json(const NormalConeDescription& c);

/// A list of subsets; a leading empty set is accepted and dropped.
Json to_json(const Flag& f);
Flag flag_from_json(const Json& j);

/// Elapsed time is included only on request, so that reports of identical
/// runs compare equal byte for byte.
Json to_json(const EnumerationReport& r, bool with_timing = false);
Json to_json(const BoundsReport& r);
Json to_json(const TabooScanReport& r);

}  // namespace rsyt
