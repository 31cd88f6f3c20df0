#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>

namespace pddlforge {

inline unsigned char uc(char c) { return static_cast<unsigned char>(c); }

inline char ascii_lower(char c) {
  return c >= 'A' && c <= 'Z' ? static_cast<char>(c - 'A' + 'a') : c;
}

inline std::string ascii_lower(std::string_view s) {
  std::string out;
  out.reserve(s.size());
  for (char c : s) out.push_back(ascii_lower(c));
  return out;
}

// Case-insensitive comparison for identifiers and keywords.
inline bool ieq(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
  return true;
}

// PDDL <name>: a letter followed by letters, digits, '-' or '_'.
inline bool is_name_start(char c) { return std::isalpha(uc(c)) != 0; }
inline bool is_name_char(char c) {
  return std::isalnum(uc(c)) != 0 || c == '-' || c == '_';
}

inline bool is_valid_name(std::string_view s) {
  if (s.empty() || !is_name_start(s[0])) return false;
  for (char c : s.substr(1))
    if (!is_name_char(c)) return false;
  return true;
}

// Levenshtein distance, case-insensitive. Used for keyword near-miss hints.
std::size_t edit_distance(std::string_view a, std::string_view b);

// Offset of the first invalid byte, or nullopt if the input is valid UTF-8.
std::optional<std::size_t> first_invalid_utf8(std::string_view text);

}  // namespace pddlforge
