#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace koscope::text_util {

// Splits on '\n', dropping a trailing '\r' from each line. A final empty
// line after the last '\n' is not returned.
std::vector<std::string_view> split_lines(std::string_view text);
std::vector<std::string_view> split(std::string_view text, char sep);
// Splits on runs of ASCII spaces/tabs.
std::vector<std::string_view> split_ws(std::string_view text);
std::string_view trim(std::string_view text);
std::string_view rtrim(std::string_view text);
// Lines whose first non-blank character is '#' become empty.
std::string_view strip_comment(std::string_view line);
// Throws InputError when the file cannot be read.
std::string read_file(const std::string& path);
bool starts_with(std::string_view s, std::string_view prefix);
bool ends_with(std::string_view s, std::string_view suffix);

}  // namespace koscope::text_util
