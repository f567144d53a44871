#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

namespace swingcmp {

using Json = nlohmann::json;

// Canonical serialization: object keys sorted, no insignificant whitespace,
// floating-point values in shortest round-trip form, trailing newline.
std::string canonical_json(const Json& value);

// Parses JSON text. Bare NaN / Infinity / -Infinity tokens (as written by
// numpy and Python's json module) are accepted and surface as the strings
// "NaN", "Infinity", "-Infinity" so readers can report them as non-finite
// values instead of syntax errors.
Json parse_json_text(std::string_view text);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view contents);

// Reads a JSON file; MalformedFile on syntax errors, IoFailure when unreadable.
Json load_json_file(const std::filesystem::path& path);

// A numeric JSON value, or one of the non-finite marker strings. Returns
// nullopt for anything else.
std::optional<double> json_to_double(const Json& value);

}  // namespace swingcmp
