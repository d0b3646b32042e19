#include <gtest/gtest.h>

#include "koscope/tokenize.hpp"

using namespace koscope;

TEST(Preprocess, StripsSymbolsAndCollapsesSpace) {
  EXPECT_EQ(preprocess("foo %bar*", "%*"), "foo bar");
  EXPECT_EQ(preprocess("  a   b ", ""), "a b");
  EXPECT_EQ(preprocess("α\tβ", ""), "α β");
}

TEST(Preprocess, EmptyResultIsError) {
  EXPECT_THROW(preprocess("%%", "%"), InputError);
  EXPECT_THROW(preprocess("   ", ""), InputError);
}

TEST(Preprocess, MultibyteStripSet) {
  EXPECT_EQ(preprocess("α§β", "§"), "αβ");
}

TEST(Tokenize, CommaSeparatedList) {
  const auto t = tokenize("Ceiling, walls, doors, windows");
  ASSERT_EQ(t.size(), 7u);
  int words = 0, commas = 0;
  for (const auto& tok : t) {
    if (tok.kind == TokenKind::Word) ++words;
    if (tok.kind == TokenKind::Punct && punctuation_class(tok.surface) == Subtype::Comma) ++commas;
  }
  EXPECT_EQ(words, 4);
  EXPECT_EQ(commas, 3);
  for (std::size_t i = 0; i < t.size(); ++i) EXPECT_EQ(t[i].index, i);
}

TEST(Tokenize, DecimalNotationIsOneDigitToken) {
  const auto t = tokenize("070.1");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].kind, TokenKind::Digit);
}

TEST(Tokenize, SingleWord) {
  const auto t = tokenize("x");
  ASSERT_EQ(t.size(), 1u);
  EXPECT_EQ(t[0].kind, TokenKind::Word);
}

TEST(Tokenize, BracketsAndHyphens) {
  const auto t = tokenize("Art (Greek) well-being");
  ASSERT_EQ(t.size(), 5u);
  EXPECT_EQ(t[1].surface, "(");
  EXPECT_EQ(punctuation_class(t[1].surface), Subtype::OpenBracket);
  EXPECT_EQ(punctuation_class(t[3].surface), Subtype::CloseBracket);
  EXPECT_EQ(t[4].surface, "well-being");
}

TEST(Tokenize, TrailingPeriodSplitsFromNumber) {
  const auto t = tokenize("Chapter 12.");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[1].kind, TokenKind::Digit);
  EXPECT_EQ(t[2].kind, TokenKind::Punct);
}

TEST(Tokenize, GreekUpperDotIsTerminal) {
  EXPECT_EQ(punctuation_class("·"), Subtype::Terminal);
  EXPECT_EQ(punctuation_class(";"), Subtype::OtherPunctuation);
}

TEST(Tokenize, SymbolToken) {
  const auto t = tokenize("a & b");
  ASSERT_EQ(t.size(), 3u);
  EXPECT_EQ(t[1].kind, TokenKind::Symbol);
}

TEST(Tokenize, ReconstructsSurface) {
  EXPECT_TRUE(tokenize("").empty());
  EXPECT_TRUE(tokenize(" \t ").empty());
  for (const char* s : {"a", "  a  b\t", "Oil and natural gas", "(x),y", "070.1 , 3.",
                        "μέσα σε κοινότητες", "a--b", "α·β"}) {
    EXPECT_EQ(detokenize(tokenize(s)), s) << s;
  }
}

TEST(Dedup, RemovesWhitespaceVariants) {
  std::vector<ConceptEntry> es(2);
  es[0].raw_label = "a b";
  es[1].raw_label = "a  b";
  const auto r = deduplicate(es);
  EXPECT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.removed, 1u);
}

TEST(Dedup, CaseIsSignificant) {
  std::vector<ConceptEntry> es(2);
  es[0].raw_label = "Art";
  es[1].raw_label = "art";
  EXPECT_EQ(deduplicate(es).removed, 0u);
}

TEST(Dedup, RatioShape) {
  std::vector<ConceptEntry> es;
  for (const char* s : {"a", "b", "a", "c", "d", "b", "e", "f", "a", "g"}) {
    ConceptEntry e;
    e.raw_label = s;
    e.entry_id = std::to_string(es.size());
    es.push_back(e);
  }
  const auto r = deduplicate(es);
  EXPECT_EQ(r.entries.size(), 7u);
  EXPECT_EQ(r.removed, 3u);
  EXPECT_EQ(r.entries[0].entry_id, "0");  // first occurrence kept
  EXPECT_EQ(r.entries[1].entry_id, "1");
}

TEST(Dedup, NoDuplicatesUnchanged) {
  std::vector<ConceptEntry> es(3);
  es[0].raw_label = "x";
  es[1].raw_label = "y";
  es[2].raw_label = "z";
  const auto r = deduplicate(es);
  EXPECT_EQ(r.entries, es);
  EXPECT_EQ(r.removed, 0u);
}

TEST(UnitCounts, SingleEntry) {
  ConceptEntry e;
  e.tokens = tokenize("x");
  const auto u = unit_counts({e});
  EXPECT_EQ(u.entries, 1u);
  EXPECT_DOUBLE_EQ(*u.words_per_entry, 1.0);
  EXPECT_DOUBLE_EQ(*u.tokens_per_entry, 1.0);
}

TEST(UnitCounts, EmptyCorpusHasNoRatios) {
  const auto u = unit_counts({});
  EXPECT_EQ(u.entries, 0u);
  EXPECT_FALSE(u.words_per_entry.has_value());
}

TEST(UnitCounts, WordsExcludeDigitsAndPunct) {
  ConceptEntry e;
  e.tokens = tokenize("Dewey 070.1, media");
  const auto u = unit_counts({e});
  EXPECT_EQ(u.tokens, 4u);
  EXPECT_EQ(u.words, 2u);
}

TEST(DumpTokens, Tsv) {
  EXPECT_EQ(dump_tokens_tsv(tokenize("a, 1")), "index\tsurface\tkind\n0\ta\tWord\n1\t,\tPunct\n2\t1\tDigit\n");
}
