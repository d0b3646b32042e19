#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace koscope::utf8 {

// Decodes one code point starting at text[pos]; advances pos. Returns nothing
// (and leaves pos unchanged) on a malformed sequence.
std::optional<char32_t> next(std::string_view text, std::size_t& pos);

// Offset of the first malformed byte, or nothing if text is valid UTF-8.
std::optional<std::size_t> first_invalid(std::string_view text);

void append(std::string& out, char32_t cp);
std::string encode(char32_t cp);

// Simple one-to-one lowercase mapping for Latin, Latin-1, Greek and Cyrillic.
char32_t to_lower(char32_t cp);
std::string to_lower(std::string_view text);

bool is_space(char32_t cp);
bool is_decimal_digit(char32_t cp);
bool is_letter(char32_t cp);

}  // namespace koscope::utf8
