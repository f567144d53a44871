#include "swingcmp/json_io.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "swingcmp/error.hpp"

namespace swingcmp {
namespace {

void append_double(std::string& out, double v) {
  if (!std::isfinite(v)) {
    // JSON has no representation; callers validate before writing.
    out += "null";
    return;
  }
  if (v == 0.0) {
    out += std::signbit(v) ? "-0.0" : "0.0";
    return;
  }
  char buf[64];
  auto [end, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  std::string_view text(buf, static_cast<std::size_t>(end - buf));
  out += text;
  // Keep floats recognizable as floats after a round trip.
  if (text.find_first_of(".eE") == std::string_view::npos) out += ".0";
}

void append(std::string& out, const Json& v) {
  switch (v.type()) {
    case Json::value_t::null: out += "null"; break;
    case Json::value_t::boolean: out += v.get<bool>() ? "true" : "false"; break;
    case Json::value_t::number_integer: out += std::to_string(v.get<std::int64_t>()); break;
    case Json::value_t::number_unsigned: out += std::to_string(v.get<std::uint64_t>()); break;
    case Json::value_t::number_float: append_double(out, v.get<double>()); break;
    case Json::value_t::string: out += v.dump(); break;
    case Json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : v) {
        if (!first) out += ',';
        first = false;
        append(out, e);
      }
      out += ']';
      break;
    }
    case Json::value_t::object: {
      // nlohmann::json objects are std::map backed, so iteration is key-sorted.
      out += '{';
      bool first = true;
      for (const auto& [key, e] : v.items()) {
        if (!first) out += ',';
        first = false;
        out += Json(key).dump();
        out += ':';
        append(out, e);
      }
      out += '}';
      break;
    }
    default:
      throw Error(ErrorCode::Internal, "unsupported JSON value type in canonical writer");
  }
}

bool is_ident_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
}

}  // namespace

std::string canonical_json(const Json& value) {
  std::string out;
  append(out, value);
  out += '\n';
  return out;
}

Json parse_json_text(std::string_view text) {
  static constexpr std::string_view kTokens[] = {"-Infinity", "Infinity", "NaN"};
  std::string patched;
  patched.reserve(text.size());
  bool in_string = false;
  for (std::size_t i = 0; i < text.size();) {
    const char c = text[i];
    if (in_string) {
      patched += c;
      if (c == '\\' && i + 1 < text.size()) {
        patched += text[i + 1];
        i += 2;
        continue;
      }
      if (c == '"') in_string = false;
      ++i;
      continue;
    }
    if (c == '"') {
      in_string = true;
      patched += c;
      ++i;
      continue;
    }
    bool replaced = false;
    for (auto token : kTokens) {
      if (text.substr(i, token.size()) == token &&
          (i + token.size() == text.size() || !is_ident_char(text[i + token.size()])) &&
          (i == 0 || !is_ident_char(text[i - 1]))) {
        patched += '"';
        patched += token;
        patched += '"';
        i += token.size();
        replaced = true;
        break;
      }
    }
    if (!replaced) {
      patched += c;
      ++i;
    }
  }
  try {
    return Json::parse(patched);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::MalformedFile, std::string("invalid JSON: ") + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw Error(ErrorCode::IoFailure, "cannot open file for reading", {{"file", path.string()}});
  }
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) {
    throw Error(ErrorCode::IoFailure, "read failed", {{"file", path.string()}});
  }
  return ss.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error(ErrorCode::IoFailure, "cannot open file for writing", {{"file", path.string()}});
  }
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) {
    throw Error(ErrorCode::IoFailure, "write failed", {{"file", path.string()}});
  }
}

Json load_json_file(const std::filesystem::path& path) {
  const auto text = read_text_file(path);
  try {
    return parse_json_text(text);
  } catch (Error& e) {
    e.with("file", path.string());
    throw;
  }
}

std::optional<double> json_to_double(const Json& value) {
  if (value.is_number()) return value.get<double>();
  if (value.is_string()) {
    const auto& s = value.get_ref<const std::string&>();
    if (s == "NaN") return std::numeric_limits<double>::quiet_NaN();
    if (s == "Infinity") return std::numeric_limits<double>::infinity();
    if (s == "-Infinity") return -std::numeric_limits<double>::infinity();
  }
  return std::nullopt;
}

}  // namespace swingcmp
