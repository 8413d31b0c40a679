#pragma once

#include <string>

#include "json.hpp"

#include "jacq/reduction.hpp"
#include "jacq/series.hpp"
#include "jacq/system.hpp"

namespace jacq {

using Json = nlohmann::json;

// System documents look like
//   {"format": 1, "n": 2, "d": 3,
//    "terms": [{"i": 1, "k": 3, "js": [2, 2, 2], "c": "-1"}]}
// where each entry contributes c * z_{js} to W_i, i.e. F_i = z_i - sum(...).
// Index tuples are sorted, 1-based, and unique per row.
Json system_to_json(const PolySystem& f);
PolySystem system_from_json(const Json& j);

// Polynomials serialize as a list of {"c": rational, "exps": [[var, exp],
// ...]} entries, ordered by graded lex so output is canonical.
Json poly_to_json(const Poly& p);
Poly poly_from_json(const Json& j, int nvars);

Json series_to_json(const SeriesVec& s);
SeriesVec series_from_json(const Json& j);

// Reduction records carry the reduced system plus enough layout data to
// reconstruct the source: {"n", "d", "sigma_base", "indexing", "reduced"}.
Json record_to_json(const ReductionRecord& rec);
ReductionRecord record_from_json(const Json& j);

// Strict parse front end: any nlohmann parse error is rethrown as InputError.
Json parse_json(const std::string& text);

// Canonical dump: sorted keys (the library default for objects backed by
// std::map), two-space indent, trailing newline.
std::string dump_json(const Json& j);

} // namespace jacq
