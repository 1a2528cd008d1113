#pragma once

#include <json.hpp>  // vendored single-header nlohmann/json

#include "liftkit/structures.hpp"

namespace liftkit::io {

using nlohmann::json;

// All parsers throw ParseError with a human-readable message on malformed
// input; serializers produce canonical documents that re-parse bit-exactly.

json poly_to_json(const LaurentPoly& f);           // {"lo": int, "c": [scalar-string...]}
LaurentPoly poly_from_json(const json& j);

json matrix_to_json(const PolyMatrix& m);          // [[poly,poly],[poly,poly]]
/// Accepts the array form or the named constants "identity", "haar",
/// "lazy-causal".
PolyMatrix matrix_from_json(const json& j);

json step_to_json(const LiftingStep& st);          // {"m": 0|1, "s": poly}
LiftingStep step_from_json(const json& j);

/// {"version":"1","gain":scalar-string,"steps":[step...],"base":matrix}.
/// Steps are stored S_0 first.
json cascade_to_json(const Cascade& c);
Cascade cascade_from_json(const json& j);

json structure_to_json(const GroupLiftingStructure& s);
/// Accepts a preset name string or a document with fields gain_group,
/// upper, lower, bases.
GroupLiftingStructure structure_from_json(const json& j);

/// Parses text as JSON, mapping syntax errors to ParseError.
json parse_json_text(const std::string& text);
/// Reads and parses a UTF-8 JSON file; ParseError on unreadable files.
json load_json_file(const std::string& path);

}  // namespace liftkit::io
