#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koscope/diagnostics.hpp"
#include "koscope/types.hpp"

namespace koscope {

// Tag string whose category prefix is not in the mapping.
class UnknownTagError : public InputError {
 public:
  using InputError::InputError;
};

enum class FeatureSlot { Subtype, Degree, Gender, Number, Case };

std::string_view to_string(FeatureSlot s);

// Positional tag layout: a category prefix followed by fixed-width feature
// codes, e.g. "No" + [subtype, gender, number, case] for "NoCmMaSgNm".
//
// File format, one directive per line, '#' starts a comment:
//   prefix<TAB>Category<TAB>layout      layout: comma list of slot names
//                                       and/or name=Value constants, or "-"
//   @slot<TAB>code<TAB>Value            feature code table entry
//   @absent<TAB>code                    code written for a missing feature
class TagsetMapping {
 public:
  struct Row {
    std::string prefix;
    Category category = Category::Residual;
    std::vector<FeatureSlot> slots;
    std::optional<Subtype> fixed_subtype;
  };

  static TagsetMapping parse(std::string_view text,
                             std::string_view origin = "<tagset>");
  static TagsetMapping load(const std::string& path);
  // Mapping shipped with the tool (ILSP-style positional tags).
  static const TagsetMapping& builtin();

  // Throws UnknownTagError for an unknown category prefix. Unknown or
  // malformed feature codes leave the feature absent and add a diagnostic.
  MorphoTag decode(std::string_view tag, Diagnostics* diags = nullptr) const;

  // Throws Error when the tag is invalid or no row can represent it.
  std::string encode(const MorphoTag& tag) const;

  const std::vector<Row>& rows() const { return rows_; }
  std::size_t code_width() const { return code_width_; }

 private:
  std::optional<std::string> code_for(FeatureSlot slot, const MorphoTag& t) const;

  std::vector<Row> rows_;
  // slot -> (code -> value name) and (value name -> code)
  std::map<FeatureSlot, std::map<std::string, std::string>> decode_codes_;
  std::map<FeatureSlot, std::map<std::string, std::string>> encode_codes_;
  std::string absent_code_ = "Xx";
  std::size_t code_width_ = 2;
};

inline MorphoTag decode_tag(std::string_view tag, const TagsetMapping& mapping,
                           Diagnostics* diags = nullptr) {
  return mapping.decode(tag, diags);
}
inline std::string encode_tag(const MorphoTag& tag, const TagsetMapping& mapping) {
  return mapping.encode(tag);
}

// Pattern alphabet used in syntactic patterns.
enum class CoarseLabel { N, Adj, Art, Pn, V, Num, Advb, Adp, Conj, Pt, Res, Abbr, Punct, Dig };
enum class PunctClass { Comma, OpenParen, CloseParen, Other };

struct Coarse {
  CoarseLabel label = CoarseLabel::Res;
  PunctClass punct = PunctClass::Other;  // meaningful for Punct only

  std::string_view name() const;  // "N", "Adj", ..., "Punct"
  friend bool operator==(const Coarse&, const Coarse&) = default;
};

Coarse coarse(const MorphoTag& tag);
std::optional<CoarseLabel> parse_coarse_label(std::string_view name);
std::string_view to_string(CoarseLabel label);

}  // namespace koscope
