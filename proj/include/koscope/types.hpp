#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace koscope {

// Part-of-speech categories counted by the POS distribution table.
enum class Category {
  Noun,
  Adjective,
  Article,
  Pronoun,
  Verb,
  Numeral,
  Adverb,
  Adposition,
  Conjunction,
  Particle,
  Residual,
  Abbreviation,
  Punctuation,
  Digit,
};

inline constexpr Category kAllCategories[] = {
    Category::Noun,        Category::Adjective,   Category::Article,
    Category::Pronoun,     Category::Verb,        Category::Numeral,
    Category::Adverb,      Category::Adposition,  Category::Conjunction,
    Category::Particle,    Category::Residual,    Category::Abbreviation,
    Category::Punctuation, Category::Digit,
};

// One shared vocabulary; which values are legal depends on the category
// (see allowed_subtypes()).
enum class Subtype {
  Common,
  Proper,
  Basic,
  Comparative,
  Superlative,
  Definite,
  Indefinite,
  Demonstrative,
  Personal,
  Possessive,
  Relative,
  RelativeIndefinite,
  Indicative,
  Imperative,
  Participle,
  Cardinal,
  Ordinal,
  Multiplicative,
  Prepart,
  Simple,
  Coordinative,
  Subordinative,
  Negative,
  ForeignWord,
  Symbol,
  AllCaps,
  OtherAbbreviation,
  Comma,
  Terminal,
  OpenBracket,
  CloseBracket,
  OtherPunctuation,
  Numbers,
};

enum class Gender { Masc, Fem, Neut };
enum class Number { Sg, Pl };
enum class Case { Nom, Gen, Acc, Voc, Dat };
enum class Degree { Basic, Comparative, Superlative };
enum class WordClass { Open, Closed, NotApplicable };

struct MorphoTag {
  Category category = Category::Residual;
  std::optional<Subtype> subtype;
  std::optional<Gender> gender;
  std::optional<Number> number;
  std::optional<Case> grammatical_case;
  std::optional<Degree> degree;

  friend bool operator==(const MorphoTag&, const MorphoTag&) = default;
};

enum class TokenKind { Word, Digit, Punct, Symbol };

struct Token {
  std::string surface;
  TokenKind kind = TokenKind::Word;
  std::optional<MorphoTag> tag;
  std::optional<std::string> lemma;
  std::size_t index = 0;
  // Exact whitespace preceding the token in the source label; the last token
  // also carries any trailing whitespace.
  std::string space_before;
  std::string space_after;

  friend bool operator==(const Token&, const Token&) = default;
};

struct ConceptEntry {
  std::string entry_id;
  std::string raw_label;
  std::string lang;
  std::string corpus_id;
  std::vector<Token> tokens;

  friend bool operator==(const ConceptEntry&, const ConceptEntry&) = default;
};

// Name <-> enum conversions. Names are the ones used in reports and data files.
std::string_view to_string(Category c);
std::string_view to_string(Subtype s);
std::string_view to_string(Gender g);
std::string_view to_string(Number n);
std::string_view to_string(Case c);
std::string_view to_string(Degree d);
std::string_view to_string(WordClass w);
std::string_view to_string(TokenKind k);

std::optional<Category> parse_category(std::string_view name);
std::optional<Subtype> parse_subtype(std::string_view name);
std::optional<Gender> parse_gender(std::string_view name);
std::optional<Number> parse_number(std::string_view name);
std::optional<Case> parse_case(std::string_view name);
std::optional<Degree> parse_degree(std::string_view name);
std::optional<TokenKind> parse_token_kind(std::string_view name);

// Open/closed class and inflection, one value per category.
WordClass word_class(Category c);
bool is_inflected(Category c);
const std::vector<Subtype>& allowed_subtypes(Category c);

// Checks the MorphoTag invariants; returns a description of the first
// violation, or nothing when the tag is valid.
std::optional<std::string> validate(const MorphoTag& tag);

// True when a language tag has a lowercase 2-3 letter primary subtag.
bool is_valid_lang(std::string_view lang);
// "el-GR" -> "el"
std::string_view primary_subtag(std::string_view lang);

}  // namespace koscope
