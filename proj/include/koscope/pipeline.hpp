#pragma once

#include <optional>
#include <string>
#include <vector>

#include "koscope/classify.hpp"
#include "koscope/ingest.hpp"
#include "koscope/lexicon_tagger.hpp"
#include "koscope/metrics.hpp"
#include "koscope/morphotag.hpp"
#include "koscope/suggest.hpp"

namespace koscope {

struct Resources {
  const TagsetMapping* mapping = &TagsetMapping::builtin();
  const RuleSet* rules = &RuleSet::builtin();
  const Lexicon* lexicon = nullptr;  // nullptr: every word is unknown
  const ContextRules* context = &ContextRules::builtin_greek();
};

struct PipelineOptions {
  std::string lang = "el";
  std::string strip_set = std::string(kDefaultStripSet);
  bool dedup = true;
  std::size_t top_k = 10;
  Thresholds thresholds;
  unsigned threads = 1;
  // diagnostics kept per code in a report; the rest are summarized
  std::size_t diagnostics_per_code = 50;
};

// A loaded corpus after preprocessing, deduplication, tagging and
// classification. verdicts[i] belongs to entries[i].
struct CorpusRun {
  std::string corpus_id;
  std::vector<ConceptEntry> entries;
  std::vector<Verdict> verdicts;
  Diagnostics diagnostics;
  Count duplicates_removed = 0;
  Count excluded = 0;
};

// Raw labels are preprocessed, deduplicated, tokenized and lexicon-tagged;
// pre-tagged entries keep their tokens and are only deduplicated.
CorpusRun prepare(LoadResult loaded, bool pretagged, std::string corpus_id,
                  const Resources& res, const PipelineOptions& opt);
CorpusRun run_source(const CorpusSource& source, const Resources& res, const PipelineOptions& opt);

// Same verdicts for any thread count.
std::vector<Verdict> classify_all(const std::vector<ConceptEntry>& entries, const RuleSet& rules,
                                  unsigned threads = 1);

CorpusReport make_report(const CorpusRun& run, const PipelineOptions& opt);

std::vector<Decomposition> suggest_all(const CorpusRun& run, const RuleSet& rules);

// Sorts diagnostics and keeps at most per_code of each code, adding an info
// line with the number left out.
Diagnostics condense(Diagnostics diags, std::size_t per_code);

// Published figures file: name<TAB>value per line, '#' comments.
std::vector<PublishedFigure> parse_published(std::string_view text, std::string_view origin);

}  // namespace koscope
