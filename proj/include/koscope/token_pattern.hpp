#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koscope/morphotag.hpp"
#include "koscope/types.hpp"

namespace koscope {

// One position of a token pattern, written as
//
//   LABELS            N   Adj|N   Comma   Word   *
//   LABELS[tests]     N[case=Gen]   Art[case=Gen|Acc,number=Pl]
//   LABELS[agree=..]  Adj[agree=gender+number+case]   (context rules only)
//
// LABELS are coarse names (N Adj Art Pn V Num Advb Adp Conj Pt Res Abbr Dig
// Punct) or the classes Comma, OPunct, CPunct (punctuation kinds), Word (any
// label except Punct and Dig) and * (anything). Tests name a feature (case,
// gender, number, subtype, degree) and the allowed values; a tag lacking the
// feature fails the test.
struct PatternItem {
  enum class Feature { Case, Gender, Number, Subtype, Degree };
  struct Test {
    Feature feature;
    std::vector<std::string> values;
    friend bool operator==(const Test&, const Test&) = default;
  };

  std::vector<std::string> labels;
  std::vector<Test> tests;
  std::vector<Feature> agree;

  friend bool operator==(const PatternItem&, const PatternItem&) = default;
};

// Throws ConfigError on bad syntax.
PatternItem parse_pattern_item(std::string_view text);
// Space separated items.
std::vector<PatternItem> parse_pattern(std::string_view text);

std::string to_string(const PatternItem& item);
std::string to_string(const std::vector<PatternItem>& items);

// Label and feature tests only; agreement is checked by the caller.
bool matches(const PatternItem& item, const MorphoTag& tag);

std::optional<std::string> feature_value(const MorphoTag& tag,
                                         PatternItem::Feature feature);
std::string_view to_string(PatternItem::Feature feature);

// True when a and b carry equal, present values for every listed feature.
bool agrees(const MorphoTag& a, const MorphoTag& b,
            const std::vector<PatternItem::Feature>& features);

}  // namespace koscope
