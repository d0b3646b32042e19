#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koscope/morphotag.hpp"
#include "koscope/token_pattern.hpp"
#include "koscope/types.hpp"

namespace koscope {

struct SyntacticPattern {
  std::vector<Coarse> labels;
  std::string canonical;  // "N+Adj+N"; every punctuation mark renders as "Punct"

  friend bool operator==(const SyntacticPattern&, const SyntacticPattern&) = default;
};

// Throws InputError for an empty entry or an untagged token.
SyntacticPattern pattern_of(const ConceptEntry& entry);
std::string canonical_pattern(const std::vector<Coarse>& labels);

enum class MarkerKind { Conjunction, EtcExpression, CommaParataxis, Parenthesis, Adposition };
enum class DivisibilityType { Enumeration, Composite };

std::string_view to_string(MarkerKind k);
std::string_view to_string(DivisibilityType t);
std::optional<MarkerKind> parse_marker_kind(std::string_view name);
DivisibilityType type_of(MarkerKind k);

struct DivisibilityMarker {
  MarkerKind kind = MarkerKind::Conjunction;
  std::vector<std::size_t> token_indices;

  friend bool operator==(const DivisibilityMarker&, const DivisibilityMarker&) = default;
};

// Indivisibility rules and divisibility marker lexicons.
//
// Text format, tab separated, '#' comment lines:
//   rule<TAB>ID<TAB>template[<TAB>same-case]   consecutive lines with one ID
//                                              are alternatives of one rule
//   conjunction<TAB>lemma<TAB>lemma...          and/or equivalents
//   etc<TAB>phrase<TAB>phrase...                "etc", "and so forth", ...
//   etc-pronoun<TAB>lemma<TAB>lemma...          "other" in [Conj + Pn:Indefinite]
//   inversion<TAB>template                      single-comma inversions
// Templates use the token pattern syntax (see token_pattern.hpp).
class RuleSet {
 public:
  struct Template {
    std::vector<PatternItem> items;
    bool same_case = false;
    friend bool operator==(const Template&, const Template&) = default;
  };
  struct Rule {
    std::string id;
    std::vector<Template> alternatives;
    friend bool operator==(const Rule&, const Rule&) = default;
  };

  static RuleSet parse(std::string_view text, std::string_view origin = "<rules>");
  static RuleSet load(const std::string& path);
  // Greek/English defaults shipped with the tool.
  static const RuleSet& builtin();

  // Canonical text form; parse(to_text()) reproduces the rule set.
  std::string to_text() const;

  const std::vector<Rule>& rules() const { return rules_; }
  const std::vector<std::string>& conjunctions() const { return conjunctions_; }
  const std::vector<std::string>& etc_phrases() const { return etc_phrases_; }
  const std::vector<std::string>& etc_pronouns() const { return etc_pronouns_; }
  const std::vector<Template>& inversions() const { return inversions_; }

  friend bool operator==(const RuleSet&, const RuleSet&) = default;

 private:
  std::vector<Rule> rules_;
  std::vector<std::string> conjunctions_;
  std::vector<std::string> etc_phrases_;
  std::vector<std::string> etc_pronouns_;
  std::vector<Template> inversions_;
};

// Full-length match of a template against the entry's tags.
bool matches_template(const RuleSet::Template& tmpl, const std::vector<Token>& tokens);

std::vector<DivisibilityMarker> scan_markers(const ConceptEntry& entry, const RuleSet& rules);

// First indivisibility rule whose template matches, in rule order.
std::optional<std::string> match_indivisible(const ConceptEntry& entry, const RuleSet& rules);

struct Verdict {
  enum class Outcome { Indivisible, Divisible, Undetermined };

  Outcome outcome = Outcome::Undetermined;
  std::string rule_id;                   // Indivisible
  std::vector<DivisibilityType> types;   // Divisible: sorted, unique
  std::vector<DivisibilityMarker> markers;
  std::string reason;                    // Undetermined
  SyntacticPattern pattern;

  bool has_type(DivisibilityType t) const;
  friend bool operator==(const Verdict&, const Verdict&) = default;
};

std::string_view to_string(Verdict::Outcome o);

Verdict classify(const ConceptEntry& entry, const RuleSet& rules);

// "R7", "Enumeration+Composite: Conjunction@1 Parenthesis@3,5", or the reason.
std::string verdict_detail(const Verdict& v);
// entry_id, canonical pattern, outcome, detail
std::string verdict_tsv_row(const ConceptEntry& entry, const Verdict& v);
inline constexpr std::string_view kVerdictTsvHeader = "entry_id\tpattern\toutcome\tdetail\n";

}  // namespace koscope
