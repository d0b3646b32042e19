#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "koscope/diagnostics.hpp"
#include "koscope/morphotag.hpp"
#include "koscope/token_pattern.hpp"
#include "koscope/types.hpp"

namespace koscope {

// Word -> candidate tags. File format: surface<TAB>tag[,tag...][<TAB>lemma]
class Lexicon {
 public:
  struct Entry {
    std::vector<MorphoTag> tags;
    std::optional<std::string> lemma;
  };

  static Lexicon parse(std::string_view text, const TagsetMapping& mapping,
                       std::string_view origin = "<lexicon>");
  static Lexicon load(const std::string& path, const TagsetMapping& mapping);

  void add(std::string surface, std::vector<MorphoTag> tags,
           std::optional<std::string> lemma = std::nullopt);

  // Exact surface first, then the lowercased surface.
  const Entry* lookup(std::string_view surface) const;
  std::size_t size() const { return entries_.size(); }

 private:
  std::unordered_map<std::string, Entry> entries_;
};

// Disambiguation rule for words with several lexicon tags. File format:
//   rule_id<TAB>trigger<TAB>choose
// trigger: pattern items around "_" (the ambiguous word), optionally
// anchored with "^" (entry start) and "$" (entry end), e.g.
//   Adj[agree=gender+number+case] _        _ Adp N        ^ _ N[case=Gen]
// choose: one pattern item selecting among the word's candidates.
struct ContextRule {
  std::string id;
  std::vector<PatternItem> before;
  std::vector<PatternItem> after;
  bool anchored_start = false;
  bool anchored_end = false;
  PatternItem choose;
};

class ContextRules {
 public:
  static ContextRules parse(std::string_view text,
                            std::string_view origin = "<context-rules>");
  static ContextRules load(const std::string& path);
  // Greek rules shipped with the tool.
  static const ContextRules& builtin_greek();

  const std::vector<ContextRule>& rules() const { return rules_; }

 private:
  std::vector<ContextRule> rules_;
};

// Tags every token of a tokenized entry. Words take their unique lexicon tag
// or the winner of the first applicable context rule; digits, punctuation and
// symbols get synthetic tags; unknown words become Residual (all-caps unknown
// words become Abbreviation). Deterministic.
ConceptEntry lexicon_tag(const ConceptEntry& entry, const Lexicon& lexicon,
                         const ContextRules& rules,
                         Diagnostics* diags = nullptr);

// Tag given to non-word tokens (Digit, Punct, Symbol).
MorphoTag synthetic_tag(const Token& token);

}  // namespace koscope
