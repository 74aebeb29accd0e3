#pragma once

#include <cstddef>
#include <string>
#include <string_view>

// Minimal UTF-8 helpers for the Latin script. Invalid bytes decode as
// single-byte code points so callers never lose input.
namespace spantag::text {

struct CodePoint {
  char32_t value = 0;
  std::size_t length = 0;
  bool valid = false;
};

CodePoint decode(std::string_view s, std::size_t pos);

bool is_space(char32_t c);
bool is_digit(char32_t c);
// Letters of the Latin script blocks plus any other code point that is not
// punctuation, whitespace or a symbol we know about.
bool is_letter(char32_t c);
bool is_upper(char32_t c);

// Lowercases ASCII and Latin-1 capitals; other bytes are copied.
std::string to_lower(std::string_view s);
bool starts_upper(std::string_view s);

// Drops the acute accent from á é í ó ú (either case).
std::string strip_acute(std::string_view s);
bool has_acute(std::string_view s);

bool ends_with(std::string_view s, std::string_view suffix);

}  // namespace spantag::text
