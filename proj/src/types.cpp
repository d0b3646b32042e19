#include "koscope/types.hpp"

#include <algorithm>
#include <array>
#include <utility>

#include "koscope/diagnostics.hpp"

namespace koscope {

namespace {

template <typename E, std::size_t N>
using NameTable = std::array<std::pair<E, std::string_view>, N>;

constexpr NameTable<Category, 14> kCategoryNames{{
    {Category::Noun, "Noun"},
    {Category::Adjective, "Adjective"},
    {Category::Article, "Article"},
    {Category::Pronoun, "Pronoun"},
    {Category::Verb, "Verb"},
    {Category::Numeral, "Numeral"},
    {Category::Adverb, "Adverb"},
    {Category::Adposition, "Adposition"},
    {Category::Conjunction, "Conjunction"},
    {Category::Particle, "Particle"},
    {Category::Residual, "Residual"},
    {Category::Abbreviation, "Abbreviation"},
    {Category::Punctuation, "Punctuation"},
    {Category::Digit, "Digit"},
}};

constexpr NameTable<Subtype, 33> kSubtypeNames{{
    {Subtype::Common, "Common"},
    {Subtype::Proper, "Proper"},
    {Subtype::Basic, "Basic"},
    {Subtype::Comparative, "Comparative"},
    {Subtype::Superlative, "Superlative"},
    {Subtype::Definite, "Definite"},
    {Subtype::Indefinite, "Indefinite"},
    {Subtype::Demonstrative, "Demonstrative"},
    {Subtype::Personal, "Personal"},
    {Subtype::Possessive, "Possessive"},
    {Subtype::Relative, "Relative"},
    {Subtype::RelativeIndefinite, "RelativeIndefinite"},
    {Subtype::Indicative, "Indicative"},
    {Subtype::Imperative, "Imperative"},
    {Subtype::Participle, "Participle"},
    {Subtype::Cardinal, "Cardinal"},
    {Subtype::Ordinal, "Ordinal"},
    {Subtype::Multiplicative, "Multiplicative"},
    {Subtype::Prepart, "Prepart"},
    {Subtype::Simple, "Simple"},
    {Subtype::Coordinative, "Coordinative"},
    {Subtype::Subordinative, "Subordinative"},
    {Subtype::Negative, "Negative"},
    {Subtype::ForeignWord, "ForeignWord"},
    {Subtype::Symbol, "Symbol"},
    {Subtype::AllCaps, "AllCaps"},
    {Subtype::OtherAbbreviation, "OtherAbbreviation"},
    {Subtype::Comma, "Comma"},
    {Subtype::Terminal, "Terminal"},
    {Subtype::OpenBracket, "OpenBracket"},
    {Subtype::CloseBracket, "CloseBracket"},
    {Subtype::OtherPunctuation, "OtherPunctuation"},
    {Subtype::Numbers, "Numbers"},
}};

constexpr NameTable<Gender, 3> kGenderNames{
    {{Gender::Masc, "Masc"}, {Gender::Fem, "Fem"}, {Gender::Neut, "Neut"}}};
constexpr NameTable<Number, 2> kNumberNames{
    {{Number::Sg, "Sg"}, {Number::Pl, "Pl"}}};
constexpr NameTable<Case, 5> kCaseNames{{{Case::Nom, "Nom"},
                                         {Case::Gen, "Gen"},
                                         {Case::Acc, "Acc"},
                                         {Case::Voc, "Voc"},
                                         {Case::Dat, "Dat"}}};
constexpr NameTable<Degree, 3> kDegreeNames{
    {{Degree::Basic, "Basic"},
     {Degree::Comparative, "Comparative"},
     {Degree::Superlative, "Superlative"}}};
constexpr NameTable<WordClass, 3> kWordClassNames{
    {{WordClass::Open, "open"},
     {WordClass::Closed, "closed"},
     {WordClass::NotApplicable, "n/a"}}};
constexpr NameTable<TokenKind, 4> kTokenKindNames{
    {{TokenKind::Word, "Word"},
     {TokenKind::Digit, "Digit"},
     {TokenKind::Punct, "Punct"},
     {TokenKind::Symbol, "Symbol"}}};

template <typename E, std::size_t N>
std::string_view name_of(const NameTable<E, N>& table, E value) {
  for (const auto& [e, name] : table)
    if (e == value) return name;
  return "?";
}

template <typename E, std::size_t N>
std::optional<E> value_of(const NameTable<E, N>& table, std::string_view name) {
  for (const auto& [e, n] : table)
    if (n == name) return e;
  return std::nullopt;
}

struct CategoryInfo {
  WordClass word_class;
  bool inflected;
  std::vector<Subtype> subtypes;
};

const CategoryInfo& info(Category c) {
  using S = Subtype;
  using W = WordClass;
  static const std::array<CategoryInfo, 14> table{{
      {W::Open, true, {S::Common, S::Proper}},
      {W::Open, true, {S::Basic, S::Comparative, S::Superlative}},
      {W::Closed, true, {S::Definite, S::Indefinite}},
      {W::Closed,
       true,
       {S::Demonstrative, S::Indefinite, S::Personal, S::Possessive,
        S::Relative, S::RelativeIndefinite}},
      {W::Open, true, {S::Indicative, S::Imperative, S::Participle}},
      {W::Open, true, {S::Cardinal, S::Ordinal}},
      {W::Open,
       false,
       {S::Multiplicative, S::Basic, S::Comparative, S::Superlative}},
      {W::Closed, false, {S::Prepart, S::Simple}},
      {W::Closed, false, {S::Coordinative, S::Subordinative}},
      {W::Closed, false, {S::Negative}},
      {W::Open, false, {S::ForeignWord, S::Symbol}},
      {W::Open, false, {S::AllCaps, S::OtherAbbreviation}},
      {W::NotApplicable,
       false,
       {S::Comma, S::Terminal, S::OpenBracket, S::CloseBracket,
        S::OtherPunctuation}},
      {W::NotApplicable, false, {S::Numbers}},
  }};
  return table[static_cast<std::size_t>(c)];
}

}  // namespace

const char* to_string(Severity s) {
  switch (s) {
    case Severity::Info:
      return "info";
    case Severity::Warning:
      return "warning";
    case Severity::Error:
      return "error";
  }
  return "?";
}

std::string_view to_string(Category c) { return name_of(kCategoryNames, c); }
std::string_view to_string(Subtype s) { return name_of(kSubtypeNames, s); }
std::string_view to_string(Gender g) { return name_of(kGenderNames, g); }
std::string_view to_string(Number n) { return name_of(kNumberNames, n); }
std::string_view to_string(Case c) { return name_of(kCaseNames, c); }
std::string_view to_string(Degree d) { return name_of(kDegreeNames, d); }
std::string_view to_string(WordClass w) { return name_of(kWordClassNames, w); }
std::string_view to_string(TokenKind k) { return name_of(kTokenKindNames, k); }

std::optional<Category> parse_category(std::string_view n) {
  return value_of(kCategoryNames, n);
}
std::optional<Subtype> parse_subtype(std::string_view n) {
  return value_of(kSubtypeNames, n);
}
std::optional<Gender> parse_gender(std::string_view n) {
  return value_of(kGenderNames, n);
}
std::optional<Number> parse_number(std::string_view n) {
  return value_of(kNumberNames, n);
}
std::optional<Case> parse_case(std::string_view n) {
  return value_of(kCaseNames, n);
}
std::optional<Degree> parse_degree(std::string_view n) {
  return value_of(kDegreeNames, n);
}
std::optional<TokenKind> parse_token_kind(std::string_view n) {
  return value_of(kTokenKindNames, n);
}

WordClass word_class(Category c) { return info(c).word_class; }
bool is_inflected(Category c) { return info(c).inflected; }
const std::vector<Subtype>& allowed_subtypes(Category c) {
  return info(c).subtypes;
}

std::optional<std::string> validate(const MorphoTag& tag) {
  const auto& inf = info(tag.category);
  if (tag.subtype &&
      std::find(inf.subtypes.begin(), inf.subtypes.end(), *tag.subtype) ==
          inf.subtypes.end()) {
    return "subtype " + std::string(to_string(*tag.subtype)) +
           " not allowed for " + std::string(to_string(tag.category));
  }
  if (!inf.inflected &&
      (tag.gender || tag.number || tag.grammatical_case)) {
    return std::string(to_string(tag.category)) +
           " is not inflected but carries gender/number/case";
  }
  if (tag.degree && tag.category != Category::Adjective)
    return "degree is only defined for adjectives";
  if (tag.category == Category::Adjective &&
      (tag.degree.has_value() != tag.subtype.has_value() ||
       (tag.degree && to_string(*tag.degree) != to_string(*tag.subtype))))
    return "adjective subtype and degree must agree";
  return std::nullopt;
}

bool is_valid_lang(std::string_view lang) {
  const auto primary = primary_subtag(lang);
  if (primary.size() < 2 || primary.size() > 3) return false;
  if (!std::all_of(primary.begin(), primary.end(),
                   [](char ch) { return ch >= 'a' && ch <= 'z'; }))
    return false;
  // remaining subtags: alphanumeric, 1-8 chars
  std::size_t pos = primary.size();
  while (pos < lang.size()) {
    if (lang[pos] != '-') return false;
    const auto end = lang.find('-', pos + 1);
    const auto sub = lang.substr(pos + 1, end == std::string_view::npos
                                              ? std::string_view::npos
                                              : end - pos - 1);
    if (sub.empty() || sub.size() > 8) return false;
    for (char ch : sub) {
      const bool alnum = (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') ||
                         (ch >= '0' && ch <= '9');
      if (!alnum) return false;
    }
    pos = end == std::string_view::npos ? lang.size() : end;
  }
  return true;
}

std::string_view primary_subtag(std::string_view lang) {
  return lang.substr(0, lang.find('-'));
}

}  // namespace koscope
