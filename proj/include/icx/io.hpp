#pragma once

// JSON forms of instances, fields and schemes.

#include <string>

#include <json.hpp>

#include "icx/galois.hpp"
#include "icx/model.hpp"
#include "icx/scheme.hpp"

namespace icx {

using Json = nlohmann::ordered_json;

/// "p=<prime>" or "gf2m=<m>".
Field parse_field_flag(const std::string& text);

Json field_to_json(const Field& f);
Field field_from_json(const Json& j);

Json matrix_to_json(const Matrix& m);
/// `rows` is the row count used when the array is empty.
Matrix matrix_from_json(const Field& f, const Json& j, std::size_t rows, const std::string& where);

Json instance_to_json(const Instance& inst);
/// Rejects unknown keys, and invalid instances too when `check` is set.
Instance instance_from_json(const Json& j, bool check = true);

/// Pretty-printed, newline-terminated.
std::string serialize_instance(const Instance& inst);
Instance parse_instance(const std::string& text);

Json scheme_to_json(const LinearScheme& s);
LinearScheme scheme_from_json(const Json& j);
std::string serialize_scheme(const LinearScheme& s);
LinearScheme parse_scheme(const std::string& text);

/// Parses text into JSON, mapping syntax errors to ParseError with a line number.
Json parse_json_text(const std::string& text);

std::string dump(const Json& j);

}  // namespace icx
