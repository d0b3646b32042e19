#pragma once

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

// Minimal non-validating XML reader for tagged documents: elements,
// attributes, character data, comments, CDATA, processing instructions and a
// skipped DOCTYPE. Namespaces are not interpreted.
namespace koscope::xml {

struct Element {
  std::string name;
  std::vector<std::pair<std::string, std::string>> attributes;
  std::vector<Element> children;
  std::string text;  // concatenated character data directly inside
  std::size_t line = 0;

  const std::string* attr(std::string_view key) const;
};

// Throws ParseError (line, column) on malformed input.
Element parse(std::string_view text);

// Depth-first, document order.
template <typename F>
void for_each_element(const Element& root, F&& f) {
  f(root);
  for (const auto& child : root.children) for_each_element(child, f);
}

}  // namespace koscope::xml
