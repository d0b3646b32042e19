#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koscope/diagnostics.hpp"
#include "koscope/morphotag.hpp"
#include "koscope/rdf.hpp"
#include "koscope/types.hpp"

namespace koscope {

enum class SourceKind { SkosRdf, Plaintext, Pretagged };
enum class FormatHint { Turtle, NTriples, Lines, TaggedXml, TokenTsv };

std::string_view to_string(SourceKind k);
std::string_view to_string(FormatHint f);
std::optional<FormatHint> parse_format_hint(std::string_view name);

SourceKind kind_of(FormatHint f);
bool compatible(SourceKind k, FormatHint f);
// From the file extension: .ttl .nt .txt/.lst .xml .tsv
std::optional<FormatHint> infer_format(std::string_view path);

inline const std::string kSkosPrefLabel = std::string(rdf::kSkosNs) + "prefLabel";

struct CorpusSource {
  SourceKind kind = SourceKind::Plaintext;
  std::string path;
  FormatHint format = FormatHint::Lines;
  std::vector<std::string> label_properties{kSkosPrefLabel};
  std::string corpus_id;  // empty: derived from the file name

  // Throws ConfigError when the format does not fit the kind or no label
  // property is given for RDF input.
  void check() const;
};

// Builds a source from a path and an optional explicit format.
CorpusSource make_source(const std::string& path, std::optional<FormatHint> format = {});

// "data/eurovoc.ttl" -> "eurovoc"
std::string corpus_id_for(const CorpusSource& source);

struct LoadResult {
  std::vector<ConceptEntry> entries;
  Diagnostics diagnostics;
};

// One entry per (concept IRI, label literal) whose primary language subtag
// equals lang. Concept schemes, collections and blank nodes are skipped.
// Entries are sorted by IRI then label; a concept with several harvested
// labels gets ids "IRI#1", "IRI#2", ...
LoadResult load_skos(const CorpusSource& source, std::string_view lang);
LoadResult load_skos_text(std::string_view text, rdf::Syntax syntax,
                          std::string_view lang, std::string_view corpus_id,
                          const std::vector<std::string>& label_properties = {kSkosPrefLabel});

// One entry per non-blank line (trailing whitespace removed); ids are
// "corpus_id:lineno".
LoadResult load_plaintext(const CorpusSource& source, std::string_view lang);
LoadResult load_plaintext_text(std::string_view text, std::string_view lang,
                               std::string_view corpus_id);

// Tagger output. XML: every <p> element is an entry whose tokens are its <t>
// descendants (attributes word, tag, lemma). TSV: header
// entry_id,index,surface,kind,tag,lemma with one row per token. Tags that
// cannot be decoded become Residual with a diagnostic.
LoadResult load_pretagged(const CorpusSource& source, const TagsetMapping& mapping,
                          std::string_view lang);
LoadResult load_pretagged_text(std::string_view text, FormatHint format,
                               const TagsetMapping& mapping, std::string_view lang,
                               std::string_view corpus_id);

// Dispatches on source.kind.
LoadResult load(const CorpusSource& source, const TagsetMapping& mapping,
                std::string_view lang);

// Token TSV for tagged entries; load_pretagged_text reads it back.
std::string tokens_tsv(const std::vector<ConceptEntry>& entries, const TagsetMapping& mapping);
inline constexpr std::string_view kTokenTsvHeader = "entry_id\tindex\tsurface\tkind\ttag\tlemma\n";

// Fills space_before so that detokenize() gives a label with single spaces
// between tokens, none before closing marks and none after opening brackets.
// Returns that label.
std::string join_tokens(std::vector<Token>& tokens);

}  // namespace koscope
