#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include "json.hpp"

#include "adhm/instance_gen.hpp"

namespace adhm {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view kSchemaVersion = "1";

/// {"re": "p/q", "im": "p/q"}; integers are written without "/1".
Json to_json(const GR& z);
Json to_json(const RationalMatrix& m);
/// {"schema_version", "kind", "k", "r", "matrices": {...}}.
Json to_json(const P2Tuple& m);
Json to_json(const BlowupTuple& m);
Json to_json(const GeneratedInstance& m);

/// Strict readers. Malformed JSON, missing keys, bad rationals and zero
/// denominators raise ParseError; shape errors raise DimensionMismatch.
GR gaussian_from_json(const Json& j);
RationalMatrix matrix_from_json(const Json& j, std::size_t rows, std::size_t cols, std::string_view name);
GeneratedInstance instance_from_json(const Json& j);
GeneratedInstance parse_instance(std::string_view text);

/// Pretty-printed document with a trailing newline; byte-stable.
std::string serialize_instance(const GeneratedInstance& m);

/// Throws ParseError when the file cannot be read.
GeneratedInstance read_instance_file(const std::filesystem::path& path);
/// Throws std::runtime_error when the file cannot be written.
void write_instance_file(const std::filesystem::path& path, const GeneratedInstance& m);

}  // namespace adhm
