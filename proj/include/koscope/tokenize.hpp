#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koscope/diagnostics.hpp"
#include "koscope/types.hpp"

namespace koscope {

inline constexpr std::string_view kDefaultStripSet = "%*";

// Removes every character of strip_set (a UTF-8 string, one code point per
// symbol), collapses whitespace runs to one space and trims. Throws
// InputError when nothing is left.
std::string preprocess(std::string_view raw_label, std::string_view strip_set);

// Collapses whitespace runs and trims; no stripping.
std::string normalize_whitespace(std::string_view text);

// Splits a label into Word/Digit/Punct/Symbol tokens. Punctuation marks are
// separate tokens, decimal notations such as "070.1" stay whole and hyphenated
// words are not split. detokenize(tokenize(x)) == x whenever x has a
// non-space character; a blank label gives no tokens.
std::vector<Token> tokenize(std::string_view label);

std::string detokenize(const std::vector<Token>& tokens);

// Punctuation subtype for a Punct token surface: Comma, Terminal (. ! ? and
// the Greek ano teleia), OpenBracket, CloseBracket or OtherPunctuation.
Subtype punctuation_class(std::string_view surface);

struct DedupResult {
  std::vector<ConceptEntry> entries;
  std::size_t removed = 0;
};

// Keeps the first entry for each whitespace-normalized label; case and
// diacritics are significant.
DedupResult deduplicate(std::vector<ConceptEntry> entries);

struct UnitCounts {
  std::size_t entries = 0;
  std::size_t tokens = 0;
  std::size_t words = 0;
  // absent for an empty corpus
  std::optional<double> words_per_entry;
  std::optional<double> tokens_per_entry;

  friend bool operator==(const UnitCounts&, const UnitCounts&) = default;
};

UnitCounts unit_counts(const std::vector<ConceptEntry>& entries);
UnitCounts make_unit_counts(std::size_t entries, std::size_t tokens,
                            std::size_t words);

// TSV token dump: index, surface, kind.
std::string dump_tokens_tsv(const std::vector<Token>& tokens);

}  // namespace koscope
