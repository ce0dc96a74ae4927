#pragma once

#include "ybt/fusion.hpp"
#include "ybt/operator.hpp"
#include "ybt/subspace.hpp"
#include "ybt/twist.hpp"

#include <json.hpp>

#include <filesystem>
#include <string>
#include <string_view>

namespace ybt::io {

using Json = nlohmann::ordered_json;

// Operator object:
//   {"scalar": "rational"|"complex64", "site_dim": N, "legs": n, "rows": [[...], ...]}
// Rational entries are strings "p/q" or "p"; complex entries are [re, im].
Json to_json(const Operator& op);
Operator operator_from_json(const Json& j);

// {"f": <Operator>, "g": <Operator>}
Json to_json(const TwistPair& pair);
TwistPair pair_from_json(const Json& j);

// {"components": [{"m": .., "n": .., "operator": <Operator>}, ...]}
Json to_json(const ComponentMap& components);
ComponentMap components_from_json(const Json& j);

// {"dimension": d, "basis": [<Operator>, ...]}
Json to_json(const SubspaceBasis& basis);
SubspaceBasis subspace_from_json(const Json& j);

// {"coefficients": ["p/q", ...]}
Json certificate_to_json(const Certificate& certificate);

/// Parses JSON text; syntax errors carry line and column.
Json parse_json(std::string_view text, std::string_view source);
Json read_json_file(const std::filesystem::path& path);
void write_json_file(const std::filesystem::path& path, const Json& j);

/// Canonical serialized text (two-space indent, trailing newline).
std::string dump(const Json& j);

}  // namespace ybt::io
