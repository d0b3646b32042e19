#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include "koscope/ingest.hpp"
#include "koscope/tokenize.hpp"
#include "support.hpp"

using namespace koscope;
using koscope::testing::data_path;

namespace {

const char* kFigureTtl = R"(@prefix skos: <http://www.w3.org/2004/02/skos/core#> .
<http://ex.org/c1> a skos:Concept ;
  skos:prefLabel "χάρτης εκπαιδευτικών ιδρυμάτων"@el ;
  skos:altLabel "χάρτες σχολείων"@el .
)";

const char* kFigureXml = R"(<?xml version="1.0" encoding="UTF-8"?>
<document xml:lang="el">
  <p id="p1">
    <s id="s1">
      <t id="t1" word="χάρτης" tag="NoCmMaSgNm" lemma="χάρτης"/>
      <t id="t2" word="εκπαιδευτικών" tag="AjBaNePlGe" lemma="εκπαιδευτικός"/>
      <t id="t3" word="ιδρυμάτων" tag="NoCmNePlGe" lemma="ίδρυμα"/>
    </s>
  </p>
</document>
)";

bool has_code(const Diagnostics& d, std::string_view code) {
  for (const auto& x : d)
    if (x.code == code) return true;
  return false;
}

}  // namespace

TEST(Skos, PrefLabelOnly) {
  const auto r = load_skos_text(kFigureTtl, rdf::Syntax::Turtle, "el", "fig");
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].raw_label, "χάρτης εκπαιδευτικών ιδρυμάτων");
  EXPECT_EQ(r.entries[0].entry_id, "http://ex.org/c1");
  EXPECT_EQ(r.entries[0].lang, "el");
  EXPECT_EQ(r.entries[0].corpus_id, "fig");
}

TEST(Skos, OtherLanguageGivesWarning) {
  const auto r = load_skos_text(kFigureTtl, rdf::Syntax::Turtle, "fr", "fig");
  EXPECT_TRUE(r.entries.empty());
  EXPECT_TRUE(has_code(r.diagnostics, "no-entries"));
}

TEST(Skos, ExtraLabelProperty) {
  const auto r = load_skos_text(kFigureTtl, rdf::Syntax::Turtle, "el", "fig",
                                {kSkosPrefLabel, std::string(rdf::kSkosNs) + "altLabel"});
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].entry_id, "http://ex.org/c1#1");
  EXPECT_EQ(r.entries[1].entry_id, "http://ex.org/c1#2");
}

TEST(Skos, RegionSubtagAndSchemesSkipped) {
  const auto r = load_skos_text(R"(@prefix skos: <http://www.w3.org/2004/02/skos/core#> .
<http://e/s> a skos:ConceptScheme ; skos:prefLabel "σχήμα"@el .
<http://e/b> skos:prefLabel "β"@EL-gr .
[] skos:prefLabel "ανώνυμο"@el .
)",
                                rdf::Syntax::Turtle, "el", "x");
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].raw_label, "β");
}

TEST(Skos, InvalidLangIsConfigError) {
  EXPECT_THROW(load_skos_text(kFigureTtl, rdf::Syntax::Turtle, "", "x"), ConfigError);
}

TEST(Skos, DeterministicOrder) {
  const auto a = load_skos_text(R"(@prefix skos: <http://www.w3.org/2004/02/skos/core#> .
<http://e/2> skos:prefLabel "δύο"@el . <http://e/1> skos:prefLabel "ένα"@el .
)",
                                rdf::Syntax::Turtle, "el", "x");
  ASSERT_EQ(a.entries.size(), 2u);
  EXPECT_EQ(a.entries[0].entry_id, "http://e/1");
}

TEST(Skos, MissingFileIsInputError) {
  auto src = make_source("/nonexistent/x.ttl");
  EXPECT_THROW(load_skos(src, "el"), InputError);
}

TEST(Skos, SyntaxErrorNamesFileAndLine) {
  const auto path = std::filesystem::temp_directory_path() / "koscope_bad.ttl";
  std::ofstream(path) << "<http://a> <http://b> .\n";
  try {
    load_skos(make_source(path.string()), "el");
    FAIL();
  } catch (const InputError& e) {
    const std::string what = e.what();
    EXPECT_NE(what.find("koscope_bad.ttl"), std::string::npos);
    EXPECT_NE(what.find("line 1"), std::string::npos);
  }
  std::filesystem::remove(path);
}

TEST(Plaintext, SkipsBlankLines) {
  const auto r = load_plaintext_text("a\n\nb\nOil and natural gas\n", "en", "p");
  ASSERT_EQ(r.entries.size(), 3u);
  EXPECT_EQ(r.entries[2].raw_label, "Oil and natural gas");
  EXPECT_EQ(r.entries[2].entry_id, "p:4");
}

TEST(Plaintext, EmptyFileWarns) {
  const auto r = load_plaintext_text("", "en", "p");
  EXPECT_TRUE(r.entries.empty());
  EXPECT_TRUE(has_code(r.diagnostics, "no-entries"));
}

TEST(Plaintext, CrlfAndBom) {
  const auto r = load_plaintext_text("\xEF\xBB\xBFx \r\ny\r\n", "en", "p");
  ASSERT_EQ(r.entries.size(), 2u);
  EXPECT_EQ(r.entries[0].raw_label, "x");
}

TEST(Plaintext, InvalidUtf8ReportsLine) {
  try {
    load_plaintext_text("ok\nbad\xff\n", "en", "p");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_NE(std::string(e.what()).find("2"), std::string::npos);
  }
}

TEST(Pretagged, FigureExcerpt) {
  const auto r = load_pretagged_text(kFigureXml, FormatHint::TaggedXml, TagsetMapping::builtin(),
                                     "el", "fig");
  ASSERT_EQ(r.entries.size(), 1u);
  const auto& e = r.entries[0];
  EXPECT_EQ(e.entry_id, "p1");
  ASSERT_EQ(e.tokens.size(), 3u);
  EXPECT_EQ(e.raw_label, "χάρτης εκπαιδευτικών ιδρυμάτων");
  EXPECT_EQ(e.tokens[0].tag->category, Category::Noun);
  EXPECT_EQ(e.tokens[0].tag->gender, Gender::Masc);
  EXPECT_EQ(e.tokens[1].tag->category, Category::Adjective);
  EXPECT_EQ(e.tokens[1].tag->grammatical_case, Case::Gen);
  EXPECT_EQ(e.tokens[2].tag->gender, Gender::Neut);
  EXPECT_EQ(e.tokens[2].lemma, "ίδρυμα");
}

TEST(Pretagged, NoEntriesWarns) {
  const auto r = load_pretagged_text("<document/>", FormatHint::TaggedXml,
                                     TagsetMapping::builtin(), "el", "x");
  EXPECT_TRUE(r.entries.empty());
  EXPECT_TRUE(has_code(r.diagnostics, "no-entries"));
}

TEST(Pretagged, UnknownTagKeptAsResidual) {
  const auto r = load_pretagged_text(R"(<d><p id="a"><t word="ζ" tag="XxYy"/></p></d>)",
                                     FormatHint::TaggedXml, TagsetMapping::builtin(), "el", "x");
  ASSERT_EQ(r.entries.size(), 1u);
  EXPECT_EQ(r.entries[0].tokens[0].tag->category, Category::Residual);
  EXPECT_TRUE(has_code(r.diagnostics, "unknown-tag"));
}

TEST(Pretagged, MalformedXmlIsParseError) {
  EXPECT_THROW(load_pretagged_text("<d><p>", FormatHint::TaggedXml, TagsetMapping::builtin(),
                                   "el", "x"),
               ParseError);
}

TEST(Pretagged, TokenTsvRoundTrip) {
  const auto r = load_pretagged_text(kFigureXml, FormatHint::TaggedXml, TagsetMapping::builtin(),
                                     "el", "fig");
  const auto tsv = tokens_tsv(r.entries, TagsetMapping::builtin());
  EXPECT_EQ(tsv.substr(0, kTokenTsvHeader.size()), kTokenTsvHeader);
  const auto back =
      load_pretagged_text(tsv, FormatHint::TokenTsv, TagsetMapping::builtin(), "el", "fig");
  EXPECT_EQ(back.entries, r.entries);
}

TEST(Pretagged, TsvBadHeader) {
  EXPECT_THROW(load_pretagged_text("a\tb\n", FormatHint::TokenTsv, TagsetMapping::builtin(), "el",
                                   "x"),
               InputError);
}

TEST(Sources, FormatInference) {
  EXPECT_EQ(infer_format("a/b.ttl"), FormatHint::Turtle);
  EXPECT_EQ(infer_format("b.nt"), FormatHint::NTriples);
  EXPECT_EQ(infer_format("b.txt"), FormatHint::Lines);
  EXPECT_EQ(infer_format("b.xml"), FormatHint::TaggedXml);
  EXPECT_EQ(infer_format("b.tsv"), FormatHint::TokenTsv);
  EXPECT_FALSE(infer_format("b.doc").has_value());
  EXPECT_EQ(corpus_id_for(make_source("data/eurovoc.ttl")), "eurovoc");
}

TEST(Sources, IncompatibleFormatIsConfigError) {
  CorpusSource s;
  s.kind = SourceKind::SkosRdf;
  s.format = FormatHint::Lines;
  s.path = "x";
  EXPECT_THROW(s.check(), ConfigError);
}

TEST(Sources, GoldenFileLoads) {
  const auto r = load(make_source(data_path("golden.xml")), TagsetMapping::builtin(), "el");
  EXPECT_GE(r.entries.size(), 30u);
}

TEST(JoinTokens, SpacingAroundMarks) {
  auto toks = tokenize("a(b)c,d");
  for (auto& t : toks) t.space_before.clear();
  EXPECT_EQ(join_tokens(toks), "a (b) c, d");
}
