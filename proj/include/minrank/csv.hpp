#pragma once

#include <optional>
#include <string>

namespace minrank::csv {

// RFC 4180 quoting, only when the field needs it.
inline std::string escape(const std::string& field) {
  if (field.find_first_of(",\"\n\r") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

template <typename T>
std::string optional_int(const std::optional<T>& x) {
  return x ? std::to_string(*x) : std::string();
}

}  // namespace minrank::csv
