#pragma once

#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "koscope/classify.hpp"
#include "koscope/lexicon_tagger.hpp"
#include "koscope/metrics.hpp"
#include "koscope/types.hpp"

namespace koscope::testing {

std::string data_path(std::string_view name);

// Tagged entry from space separated tags; words default to w1 w2 ...
// lemmas use "-" for none.
ConceptEntry tagged(std::string_view tags, std::string_view words = {},
                    std::string_view lemmas = {}, std::string id = "e");

struct GoldenCase {
  ConceptEntry entry;
  std::string pattern;
  std::string outcome;
  std::string detail;
};
std::vector<GoldenCase> golden_corpus();

// --- published counts ---------------------------------------------------

struct Table1Row {
  const char* kos;
  Count entries, tokens, words;
  const char* words_per_entry;
  const char* tokens_per_entry;
};
extern const Table1Row kTable1[3];

struct PatternFreq {
  const char* pattern;
  Count frequency;
  const char* printed_pct;
};
struct Table3Column {
  const char* kos;
  Count entries;
  std::vector<PatternFreq> rows;
  Count printed_sum;
  const char* printed_sum_pct;
  Count singletons;
  Count distinct;
};
const std::vector<Table3Column>& table3();
// Tally holding the column's rows plus filler patterns that reproduce the
// entry total and the singleton/distinct counts without entering the top 10.
CorpusTally table3_tally(const Table3Column& c);

struct Table4Column {
  const char* kos;
  Count entries, genitive, nom_acc, subsum, total;
  const char* genitive_pct;
  const char* nom_acc_pct;
  const char* total_pct;
};
extern const Table4Column kTable4[3];

struct Table5Column {
  const char* kos;
  Count entries, enumeration, composite, union_count;
  const char* enumeration_pct;
  const char* composite_pct;
  const char* union_pct;
  SuitabilityLevel expected;
};
extern const Table5Column kTable5[3];

// Plain labels whose tokenization gives exactly these totals.
std::vector<ConceptEntry> table1_entries(const Table1Row& row);
// Tagged entries reproducing a Table 4 column (N+N subsets, the rest single nouns).
std::vector<ConceptEntry> table4_entries(const Table4Column& c);
// Tagged entries reproducing a Table 5 column: enumeration-only,
// composite-only, both, and indivisible fillers.
std::vector<ConceptEntry> table5_entries(const Table5Column& c);

CorpusTally classify_and_tally(const std::vector<ConceptEntry>& entries,
                               const RuleSet& rules = RuleSet::builtin());

// --- generators and pipeline helpers ------------------------------------------

// Fixed seed shared by every randomized check.
inline constexpr std::uint32_t kSeed = 20240611;

// Labels mixing Greek and Latin words, digits, punctuation, symbols and
// irregular whitespace.
std::string random_label(std::mt19937& rng);
// n raw entries with distinct labels drawn from the test lexicon's words.
std::vector<ConceptEntry> random_label_entries(std::mt19937& rng, std::size_t n);
std::vector<ConceptEntry> golden_entries();
const Lexicon& greek_lexicon();
// JSON report for the entries after the full pipeline.
std::string report_bytes(std::vector<ConceptEntry> entries, bool pretagged, unsigned threads = 1);

}  // namespace koscope::testing
