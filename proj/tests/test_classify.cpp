#include <gtest/gtest.h>

#include <chrono>
#include <set>

#include "koscope/classify.hpp"
#include "koscope/token_pattern.hpp"
#include "support.hpp"

using namespace koscope;
using koscope::testing::tagged;
using Outcome = Verdict::Outcome;

namespace {
const RuleSet& R() { return RuleSet::builtin(); }
}  // namespace

TEST(Pattern, FigureEntry) {
  EXPECT_EQ(pattern_of(tagged("NoCmMaSgNm AjBaNePlGe NoCmNePlGe")).canonical, "N+Adj+N");
  EXPECT_EQ(pattern_of(tagged("DIG")).canonical, "Dig");
  EXPECT_EQ(pattern_of(tagged("NoCmMaSgNm OPUNCT NoCmMaSgNm CPUNCT")).canonical,
            "N+Punct+N+Punct");
}

TEST(Pattern, EmptyEntryIsError) {
  ConceptEntry e;
  EXPECT_THROW(pattern_of(e), InputError);
  auto u = tagged("NoCmMaSgNm");
  u.tokens[0].tag.reset();
  EXPECT_THROW(pattern_of(u), InputError);
}

TEST(TokenPattern, ParseAndMatch) {
  const auto item = parse_pattern_item("N[case=Gen|Acc,number=Pl]");
  const auto& m = TagsetMapping::builtin();
  EXPECT_TRUE(matches(item, m.decode("NoCmNePlGe")));
  EXPECT_FALSE(matches(item, m.decode("NoCmNeSgGe")));
  EXPECT_FALSE(matches(item, m.decode("AjBaNePlGe")));
  EXPECT_TRUE(matches(parse_pattern_item("Word"), m.decode("AjBaNePlGe")));
  EXPECT_FALSE(matches(parse_pattern_item("Word"), m.decode("COMMA")));
  EXPECT_TRUE(matches(parse_pattern_item("Comma"), m.decode("COMMA")));
  EXPECT_TRUE(matches(parse_pattern_item("*"), m.decode("DIG")));
  EXPECT_THROW(parse_pattern_item("N[case]"), ConfigError);
  EXPECT_THROW(parse_pattern_item("Bogus"), ConfigError);
  EXPECT_EQ(to_string(parse_pattern("Adj N[case=Gen]")), "Adj N[case=Gen]");
}

TEST(Markers, ConjunctionInOilAndNaturalGas) {
  const auto e = tagged("NoCmNeSgNm CjCo AjBaNeSgNm NoCmNeSgNm", "Oil and natural gas",
                        "oil and natural gas");
  const auto m = scan_markers(e, R());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].kind, MarkerKind::Conjunction);
  EXPECT_EQ(m[0].token_indices, std::vector<std::size_t>{1});
}

TEST(Markers, InversionHasNoMarkers) {
  const auto e = tagged("NoCmFeSgNm COMMA AjBaFeSgNm", "Literature , Portuguese");
  EXPECT_TRUE(scan_markers(e, R()).empty());
  EXPECT_EQ(classify(e, R()).rule_id, "R4");
}

TEST(Markers, TwoCommasParataxis) {
  const auto e = tagged("AjBaNePlNm NoCmNePlNm COMMA AjBaNePlNm NoCmNePlNm COMMA AjBaNePlNm NoCmNePlNm",
                        "Documentary media , educational media , news media");
  const auto m = scan_markers(e, R());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].kind, MarkerKind::CommaParataxis);
  EXPECT_EQ(m[0].token_indices, (std::vector<std::size_t>{2, 5}));
}

TEST(Markers, AdpositionInSportsForChildren) {
  const auto e = tagged("NoCmNePlNm AsPpSp NoCmNePlAc", "Sports for children", "sport for child");
  const auto m = scan_markers(e, R());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].kind, MarkerKind::Adposition);
}

TEST(Markers, EtcWithOtherIsOneMarker) {
  const auto e = tagged("NoCmFePlNm CjCo PnIdNePlNm", "τέχνες και άλλα", "τέχνη και άλλος");
  const auto m = scan_markers(e, R());
  ASSERT_EQ(m.size(), 1u);
  EXPECT_EQ(m[0].kind, MarkerKind::EtcExpression);
  EXPECT_EQ(m[0].token_indices, (std::vector<std::size_t>{1, 2}));
}

TEST(Markers, UnmatchedParenthesisIsNotAMarker) {
  const auto e = tagged("NoCmFeSgNm OPUNCT NoCmFeSgNm");
  EXPECT_TRUE(scan_markers(e, R()).empty());
}

TEST(Rules, Figure2IsR7) {
  const auto v = classify(tagged("NoCmMaSgNm AjBaNePlGe NoCmNePlGe"), R());
  EXPECT_EQ(v.outcome, Outcome::Indivisible);
  EXPECT_EQ(v.rule_id, "R7");
}

TEST(Rules, NounGenitiveIsR3) {
  EXPECT_EQ(classify(tagged("NoCmFeSgNm NoCmFeSgGe"), R()).rule_id, "R3");
}

TEST(Rules, ThreeNounsHaveNoRule) {
  EXPECT_FALSE(match_indivisible(tagged("NoCmFeSgNm NoCmFeSgGe NoCmFeSgGe"), R()).has_value());
  EXPECT_EQ(classify(tagged("NoCmFeSgNm NoCmFeSgGe NoCmFeSgGe"), R()).outcome,
            Outcome::Undetermined);
}

TEST(Rules, SameCaseConditionOnR6) {
  EXPECT_EQ(classify(tagged("AjBaFeSgNm NoCmFeSgNm NoCmFeSgNm"), R()).rule_id, "R6");
  EXPECT_EQ(classify(tagged("AjBaFeSgNm NoCmFeSgNm NoCmFeSgAc"), R()).outcome,
            Outcome::Undetermined);
}

TEST(Verdicts, ConjunctionIsEnumeration) {
  const auto v = classify(tagged("NoCmMaSgNm CjCo NoCmMaSgNm", "", "- και -"), R());
  EXPECT_EQ(v.outcome, Outcome::Divisible);
  EXPECT_EQ(v.types, std::vector<DivisibilityType>{DivisibilityType::Enumeration});
}

TEST(Verdicts, AdpositionIsComposite) {
  const auto v = classify(tagged("NoCmMaSgNm AsPpSp NoCmNePlAc", "", "- για -"), R());
  EXPECT_EQ(v.types, std::vector<DivisibilityType>{DivisibilityType::Composite});
}

TEST(Verdicts, ConjunctionAndParenthesisIsBoth) {
  const auto v =
      classify(tagged("NoCmMaSgNm CjCo NoCmMaSgNm OPUNCT NoPrFeSgNm CPUNCT", "", "- και - - - -"),
               R());
  EXPECT_TRUE(v.has_type(DivisibilityType::Enumeration));
  EXPECT_TRUE(v.has_type(DivisibilityType::Composite));
  EXPECT_EQ(verdict_detail(v), "Enumeration+Composite: Conjunction@1 Parenthesis@3,5");
}

TEST(Verdicts, SingleCommaWithoutInversionIsParataxis) {
  const auto v = classify(tagged("NoCmMaSgNm COMMA VbIcSg"), R());
  EXPECT_EQ(v.outcome, Outcome::Divisible);
  ASSERT_EQ(v.markers.size(), 1u);
  EXPECT_EQ(v.markers[0].kind, MarkerKind::CommaParataxis);
}

TEST(Verdicts, TsvRow) {
  const auto e = tagged("NoCmFeSgNm", "", "", "id1");
  EXPECT_EQ(verdict_tsv_row(e, classify(e, R())), "id1\tN\tIndivisible\tR1\n");
}

TEST(RuleFile, CanonicalTextRoundTrips) {
  const auto text = R().to_text();
  EXPECT_EQ(RuleSet::parse(text), R());
}

TEST(RuleFile, Errors) {
  EXPECT_THROW(RuleSet::parse("rule\tR1\n"), ConfigError);
  EXPECT_THROW(RuleSet::parse("rule\tR1\tN[case=Xyz]\n"), ConfigError);
  EXPECT_THROW(RuleSet::parse("bogus\tx\n"), ConfigError);
  EXPECT_THROW(RuleSet::parse("rule\tR1\tN\tsame-gender\n"), ConfigError);
}

TEST(RuleFile, CustomRuleOrderFirstMatchWins) {
  const auto rs = RuleSet::parse("rule\tX\tN\nrule\tY\tWord\n");
  EXPECT_EQ(classify(tagged("NoCmFeSgNm"), rs).rule_id, "X");
  EXPECT_EQ(classify(tagged("AjBaFeSgNm"), rs).rule_id, "Y");
}

TEST(Golden, EveryVerdictAgrees) {
  const auto start = std::chrono::steady_clock::now();
  const auto cases = koscope::testing::golden_corpus();
  ASSERT_GE(cases.size(), 30u);
  for (const auto& c : cases) {
    const auto v = classify(c.entry, R());
    EXPECT_EQ(v.pattern.canonical, c.pattern) << c.entry.entry_id;
    EXPECT_EQ(std::string(to_string(v.outcome)), c.outcome) << c.entry.entry_id;
    EXPECT_EQ(verdict_detail(v), c.detail) << c.entry.entry_id;
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(1));
}

TEST(Golden, CoversAllRulesAndMarkers) {
  std::set<std::string> rules;
  std::set<MarkerKind> markers;
  bool undetermined = false, inversion = false;
  for (const auto& c : koscope::testing::golden_corpus()) {
    const auto v = classify(c.entry, R());
    if (v.outcome == Outcome::Indivisible) rules.insert(v.rule_id);
    if (v.outcome == Outcome::Undetermined) undetermined = true;
    if (v.rule_id == "R4" || v.rule_id == "R9") inversion = true;
    for (const auto& m : v.markers) markers.insert(m.kind);
  }
  EXPECT_EQ(rules.size(), 9u);
  EXPECT_EQ(markers.size(), 5u);
  EXPECT_TRUE(undetermined);
  EXPECT_TRUE(inversion);
}
