#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koscope/classify.hpp"
#include "koscope/diagnostics.hpp"
#include "koscope/tokenize.hpp"
#include "koscope/types.hpp"

namespace koscope {

using Count = std::uint64_t;

struct PosKey {
  Category category = Category::Residual;
  std::optional<Subtype> subtype;
  friend bool operator==(const PosKey&, const PosKey&) = default;
  friend auto operator<=>(const PosKey&, const PosKey&) = default;
};

struct PatternCounts {
  Count frequency = 0;
  Count indivisible = 0;
  Count divisible = 0;
  Count undetermined = 0;
  friend bool operator==(const PatternCounts&, const PatternCounts&) = default;
};

// Everything the report needs, as plain counts. Merging two tallies equals
// tallying the concatenated corpora.
struct CorpusTally {
  Count entries = 0;
  Count tokens = 0;
  Count words = 0;
  Count closed_class_words = 0;
  std::map<PosKey, Count> pos;
  std::map<std::string, PatternCounts> patterns;  // canonical pattern -> counts
  // entries whose pattern is exactly N+N
  Count nn_total = 0;
  Count nn_genitive = 0;  // second noun Genitive
  Count nn_nom_acc = 0;   // Nom+Nom, Nom+Acc or Acc+Nom
  Count enumeration = 0;
  Count composite = 0;
  Count divisible = 0;
  Count single_comma_parataxis = 0;  // CommaParataxis fired by exactly one comma
  Count indivisible = 0;
  Count undetermined = 0;
  std::map<std::string, Count> rule_hits;

  void add(const ConceptEntry& entry, const Verdict& verdict);
  void merge(const CorpusTally& other);

  friend bool operator==(const CorpusTally&, const CorpusTally&) = default;
};

// entries[i] must be tagged and verdicts[i] its classification.
CorpusTally tally(const std::vector<ConceptEntry>& entries, const std::vector<Verdict>& verdicts);

struct PosRow {
  PosKey key;
  Count count = 0;
  friend bool operator==(const PosRow&, const PosRow&) = default;
};

struct PosDistribution {
  Count tokens = 0;  // denominator of every row
  std::vector<PosRow> rows;  // category order, then subtype order
  Count words = 0;
  Count closed_class_words = 0;
  friend bool operator==(const PosDistribution&, const PosDistribution&) = default;
};

struct PatternRow {
  std::string pattern;
  PatternCounts counts;
  Verdict::Outcome modal = Verdict::Outcome::Undetermined;
  friend bool operator==(const PatternRow&, const PatternRow&) = default;
};

struct PatternTable {
  std::size_t k = 10;
  Count entries = 0;
  std::vector<PatternRow> rows;
  Count sum = 0;
  Count singletons = 0;
  Count distinct = 0;
  Count indivisible_in_rows = 0;
  Count indivisible_total = 0;
  friend bool operator==(const PatternTable&, const PatternTable&) = default;
};

struct NnBreakdown {
  Count entries = 0;
  Count genitive = 0;
  Count nom_acc = 0;
  Count subsum = 0;
  Count total = 0;
  Count remainder = 0;
  friend bool operator==(const NnBreakdown&, const NnBreakdown&) = default;
};

struct DivisibilitySummary {
  Count entries = 0;
  Count enumeration = 0;
  Count composite = 0;
  Count union_count = 0;
  Count type_sum = 0;
  Count single_comma_parataxis = 0;
  friend bool operator==(const DivisibilitySummary&, const DivisibilitySummary&) = default;
};

// Suitability bands over the divisible share, in hundredths of a percent:
// High below high_below, Low above low_above, Moderate in between.
struct Thresholds {
  std::int64_t high_below = 1000;
  std::int64_t low_above = 3000;
  friend bool operator==(const Thresholds&, const Thresholds&) = default;
};

// "10,30" or "12.5,25" -> hundredths. Throws ConfigError unless both values
// are in [0, 100] and strictly increasing.
Thresholds parse_thresholds(std::string_view text);
std::string to_string(const Thresholds& t);

enum class SuitabilityLevel { High, Moderate, Low, Undefined };
std::string_view to_string(SuitabilityLevel s);
std::optional<SuitabilityLevel> parse_suitability_level(std::string_view s);

struct Suitability {
  SuitabilityLevel level = SuitabilityLevel::Undefined;
  Count divisible = 0;
  Count entries = 0;
  Thresholds thresholds;
  std::string rationale;
  friend bool operator==(const Suitability&, const Suitability&) = default;
};

PosDistribution pos_distribution(const CorpusTally& t, Diagnostics* diags = nullptr);
// Throws ConfigError for k < 1.
PatternTable pattern_table(const CorpusTally& t, std::size_t k = 10);
NnBreakdown nn_breakdown(const CorpusTally& t);
DivisibilitySummary divisibility_summary(const CorpusTally& t);
Suitability suitability(const DivisibilitySummary& d, const Thresholds& thresholds = {});

struct ReportSettings {
  std::size_t top_k = 10;
  Thresholds thresholds;
  bool dedup = true;
  std::string strip_set = "%*";
  Count duplicates_removed = 0;
  Count excluded = 0;  // entries dropped by preprocessing
  friend bool operator==(const ReportSettings&, const ReportSettings&) = default;
};

struct CorpusReport {
  std::string corpus_id;
  UnitCounts general;
  PosDistribution pos;
  PatternTable patterns;
  NnBreakdown nn;
  DivisibilitySummary divisibility;
  Suitability suitability;
  ReportSettings settings;
  Diagnostics diagnostics;
  friend bool operator==(const CorpusReport&, const CorpusReport&) = default;
};

CorpusReport build_report(const CorpusTally& t, std::string corpus_id,
                          const ReportSettings& settings = {}, Diagnostics diagnostics = {});

// A figure printed in a published table, checked against the report. Names:
// general.entries general.tokens general.words patterns.sum
// patterns.singletons patterns.distinct nn.genitive nn.nom_acc nn.subsum
// nn.total divisibility.enumeration divisibility.composite
// divisibility.union, or "patterns.row:<pattern>" for one row's frequency.
struct PublishedFigure {
  std::string name;
  Count value = 0;
};

// Adds a "published-mismatch" warning to report.diagnostics for every figure
// that differs from the computed value; returns the number of mismatches.
// Throws ConfigError for an unknown figure name.
std::size_t audit_published(CorpusReport& report, const std::vector<PublishedFigure>& figures);
std::optional<Count> report_figure(const CorpusReport& report, std::string_view name);

enum class ReportFormat { Json, Csv, Markdown };
std::optional<ReportFormat> parse_report_format(std::string_view name);
std::string_view extension(ReportFormat f);

std::string render(const CorpusReport& report, ReportFormat format);
std::string render_json(const CorpusReport& report);
std::string render_csv(const CorpusReport& report);
std::string render_markdown(const CorpusReport& report);
// Inverse of render_json. Throws InputError on a malformed document.
CorpusReport report_from_json(std::string_view text);

}  // namespace koscope
