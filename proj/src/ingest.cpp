#include "koscope/ingest.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <set>

#include "koscope/tokenize.hpp"
#include "koscope/utf8.hpp"
#include "text_util.hpp"
#include "xml.hpp"

namespace koscope {

std::string_view to_string(SourceKind k) {
  switch (k) {
    case SourceKind::SkosRdf: return "skos-rdf";
    case SourceKind::Plaintext: return "plaintext";
    case SourceKind::Pretagged: return "pretagged";
  }
  return "?";
}

std::string_view to_string(FormatHint f) {
  switch (f) {
    case FormatHint::Turtle: return "turtle";
    case FormatHint::NTriples: return "ntriples";
    case FormatHint::Lines: return "lines";
    case FormatHint::TaggedXml: return "tagged-xml";
    case FormatHint::TokenTsv: return "token-tsv";
  }
  return "?";
}

std::optional<FormatHint> parse_format_hint(std::string_view name) {
  for (auto f : {FormatHint::Turtle, FormatHint::NTriples, FormatHint::Lines,
                 FormatHint::TaggedXml, FormatHint::TokenTsv})
    if (to_string(f) == name) return f;
  return std::nullopt;
}

SourceKind kind_of(FormatHint f) {
  switch (f) {
    case FormatHint::Turtle:
    case FormatHint::NTriples: return SourceKind::SkosRdf;
    case FormatHint::Lines: return SourceKind::Plaintext;
    case FormatHint::TaggedXml:
    case FormatHint::TokenTsv: return SourceKind::Pretagged;
  }
  return SourceKind::Plaintext;
}

bool compatible(SourceKind k, FormatHint f) { return kind_of(f) == k; }

std::optional<FormatHint> infer_format(std::string_view path) {
  const auto ext = utf8::to_lower(std::filesystem::path(std::string(path)).extension().string());
  if (ext == ".ttl") return FormatHint::Turtle;
  if (ext == ".nt") return FormatHint::NTriples;
  if (ext == ".txt" || ext == ".lst") return FormatHint::Lines;
  if (ext == ".xml") return FormatHint::TaggedXml;
  if (ext == ".tsv") return FormatHint::TokenTsv;
  return std::nullopt;
}

void CorpusSource::check() const {
  if (!compatible(kind, format))
    throw ConfigError("format " + std::string(to_string(format)) + " does not fit a " +
                      std::string(to_string(kind)) + " source");
  if (kind == SourceKind::SkosRdf && label_properties.empty())
    throw ConfigError("no label property to harvest");
  for (const auto& p : label_properties)
    if (!rdf::is_absolute_iri(p)) throw ConfigError("label property is not an IRI: " + p);
}

CorpusSource make_source(const std::string& path, std::optional<FormatHint> format) {
  if (!format) format = infer_format(path);
  if (!format)
    throw ConfigError("cannot infer the format of " + path + "; pass --format");
  CorpusSource s;
  s.path = path;
  s.format = *format;
  s.kind = kind_of(*format);
  return s;
}

std::string corpus_id_for(const CorpusSource& source) {
  if (!source.corpus_id.empty()) return source.corpus_id;
  auto stem = std::filesystem::path(source.path).stem().string();
  return stem.empty() ? "corpus" : stem;
}

namespace {

void require_lang(std::string_view lang) {
  if (!is_valid_lang(lang))
    throw ConfigError("invalid language tag '" + std::string(lang) + "'");
}

std::string lower_ascii(std::string_view s) {
  std::string out(s);
  for (auto& c : out)
    if (c >= 'A' && c <= 'Z') c = static_cast<char>(c + 32);
  return out;
}

bool lang_matches(std::string_view literal_lang, std::string_view lang) {
  return lower_ascii(primary_subtag(literal_lang)) == lower_ascii(primary_subtag(lang));
}

bool closing_mark(std::string_view s) {
  static const std::set<std::string_view> marks = {
      ",", ".", ";", ":", "!", "?", ")", "]", "}", "\xC2\xBB", "\xC2\xB7",
      "\xCE\x87", "\xCD\xBE", "\xE2\x80\xA6"};
  return marks.count(s) > 0;
}

bool opening_mark(std::string_view s) {
  return s == "(" || s == "[" || s == "{" || s == "\xC2\xAB";
}

TokenKind kind_of_surface(std::string_view surface) {
  const auto parts = tokenize(surface);
  return parts.size() == 1 ? parts.front().kind : TokenKind::Word;
}

MorphoTag decode_or_residual(std::string_view tag, const TagsetMapping& mapping,
                             const std::string& where, Diagnostics& diags) {
  try {
    Diagnostics local;
    auto t = mapping.decode(tag, &local);
    for (auto& d : local) {
      d.where = where;
      diags.push_back(std::move(d));
    }
    return t;
  } catch (const UnknownTagError& e) {
    warn(diags, "unknown-tag", e.what(), where);
    MorphoTag t;
    t.category = Category::Residual;
    t.subtype = Subtype::ForeignWord;
    return t;
  }
}

std::string valid_utf8_or_throw(std::string_view text, const std::string& origin) {
  if (const auto bad = utf8::first_invalid(text)) {
    const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<long>(*bad), '\n');
    throw InputError(origin + ":" + std::to_string(line) + ": invalid UTF-8");
  }
  return std::string(text);
}

std::string_view strip_bom(std::string_view text) {
  if (text_util::starts_with(text, "\xEF\xBB\xBF")) text.remove_prefix(3);
  return text;
}

}  // namespace

std::string join_tokens(std::vector<Token>& tokens) {
  std::string label;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    auto& t = tokens[i];
    t.index = i;
    t.space_after.clear();
    const bool glue = i == 0 || closing_mark(t.surface) || opening_mark(tokens[i - 1].surface);
    t.space_before = glue ? "" : " ";
    label += t.space_before;
    label += t.surface;
  }
  return label;
}

LoadResult load_skos_text(std::string_view text, rdf::Syntax syntax, std::string_view lang,
                          std::string_view corpus_id,
                          const std::vector<std::string>& label_properties) {
  require_lang(lang);
  const auto triples = rdf::parse(text, syntax);
  const std::string rdf_type = std::string(rdf::kRdfNs) + "type";
  const std::set<std::string> excluded = {std::string(rdf::kSkosNs) + "ConceptScheme",
                                          std::string(rdf::kSkosNs) + "Collection",
                                          std::string(rdf::kSkosNs) + "OrderedCollection"};
  const std::set<std::string> props(label_properties.begin(), label_properties.end());

  std::set<std::string> skipped_subjects;
  for (const auto& t : triples)
    if (t.predicate.value == rdf_type && t.object.is_iri() && excluded.count(t.object.value))
      skipped_subjects.insert(t.subject.value);

  // concept IRI -> label -> language tag (first seen)
  std::map<std::string, std::map<std::string, std::string>> labels;
  LoadResult out;
  for (const auto& t : triples) {
    if (!props.count(t.predicate.value) || !t.object.is_literal()) continue;
    if (!t.subject.is_iri() || skipped_subjects.count(t.subject.value)) continue;
    if (!lang_matches(t.object.lang, lang)) continue;
    if (normalize_whitespace(t.object.value).empty()) {
      warn(out.diagnostics, "empty-label", "blank label literal skipped", t.subject.value);
      continue;
    }
    labels[t.subject.value].emplace(t.object.value, lower_ascii(t.object.lang));
  }

  for (const auto& [iri, by_label] : labels) {
    std::size_t n = 0;
    for (const auto& [label, tag] : by_label) {
      ConceptEntry e;
      e.entry_id = by_label.size() > 1 ? iri + "#" + std::to_string(++n) : iri;
      e.raw_label = label;
      e.lang = tag;
      e.corpus_id = std::string(corpus_id);
      out.entries.push_back(std::move(e));
    }
  }
  if (out.entries.empty())
    warn(out.diagnostics, "no-entries",
         "no label literal with language '" + std::string(lang) + "' found",
         std::string(corpus_id));
  return out;
}

LoadResult load_skos(const CorpusSource& source, std::string_view lang) {
  source.check();
  if (source.kind != SourceKind::SkosRdf) throw ConfigError("not an RDF source: " + source.path);
  const auto text = text_util::read_file(source.path);
  const auto syntax =
      source.format == FormatHint::NTriples ? rdf::Syntax::NTriples : rdf::Syntax::Turtle;
  try {
    return load_skos_text(text, syntax, lang, corpus_id_for(source), source.label_properties);
  } catch (const ParseError& e) {
    throw InputError(source.path + ": " + e.what());
  }
}

LoadResult load_plaintext_text(std::string_view text, std::string_view lang,
                               std::string_view corpus_id) {
  require_lang(lang);
  text = strip_bom(text);
  valid_utf8_or_throw(text, std::string(corpus_id));
  LoadResult out;
  std::size_t lineno = 0;
  for (const auto raw : text_util::split_lines(text)) {
    ++lineno;
    const auto line = text_util::rtrim(raw);
    if (text_util::trim(line).empty()) continue;
    ConceptEntry e;
    e.entry_id = std::string(corpus_id) + ":" + std::to_string(lineno);
    e.raw_label = std::string(line);
    e.lang = std::string(lang);
    e.corpus_id = std::string(corpus_id);
    out.entries.push_back(std::move(e));
  }
  if (out.entries.empty())
    warn(out.diagnostics, "no-entries", "the entry list is empty", std::string(corpus_id));
  return out;
}

LoadResult load_plaintext(const CorpusSource& source, std::string_view lang) {
  source.check();
  if (source.kind != SourceKind::Plaintext)
    throw ConfigError("not a plaintext source: " + source.path);
  const auto id = corpus_id_for(source);
  try {
    return load_plaintext_text(text_util::read_file(source.path), lang, id);
  } catch (const ConfigError&) {
    throw;
  } catch (const InputError& e) {
    throw InputError(source.path + ": " + e.what());
  }
}

namespace {

LoadResult load_tagged_xml(std::string_view text, const TagsetMapping& mapping,
                           std::string_view lang, std::string_view corpus_id) {
  const auto root = xml::parse(text);
  LoadResult out;
  std::set<std::string> ids;
  std::size_t ordinal = 0;

  auto visit = [&](const xml::Element& el, const std::string& inherited_lang, auto&& self) -> void {
    std::string el_lang = inherited_lang;
    if (const auto* l = el.attr("xml:lang")) el_lang = *l;
    if (el.name != "p") {
      for (const auto& c : el.children) self(c, el_lang, self);
      return;
    }
    ++ordinal;
    ConceptEntry e;
    const auto* id = el.attr("id");
    e.entry_id = id ? *id : std::string(corpus_id) + ":p" + std::to_string(ordinal);
    e.lang = el_lang;
    e.corpus_id = std::string(corpus_id);
    const auto where = std::string(corpus_id) + ":" + std::to_string(el.line);
    xml::for_each_element(el, [&](const xml::Element& t) {
      if (t.name != "t") return;
      const auto* word = t.attr("word");
      const auto* tag = t.attr("tag");
      const auto at = std::string(corpus_id) + ":" + std::to_string(t.line);
      if (!word || word->empty()) throw InputError(at + ": token without a word attribute");
      if (!tag || tag->empty()) throw InputError(at + ": token without a tag attribute");
      Token tok;
      tok.surface = *word;
      tok.kind = kind_of_surface(*word);
      tok.tag = decode_or_residual(*tag, mapping, e.entry_id, out.diagnostics);
      if (const auto* lemma = t.attr("lemma"); lemma && !lemma->empty()) tok.lemma = *lemma;
      e.tokens.push_back(std::move(tok));
    });
    if (e.tokens.empty()) {
      warn(out.diagnostics, "empty-entry", "entry without tokens skipped", where);
      return;
    }
    if (!ids.insert(e.entry_id).second)
      throw InputError(where + ": duplicate entry id '" + e.entry_id + "'");
    e.raw_label = join_tokens(e.tokens);
    out.entries.push_back(std::move(e));
  };
  visit(root, std::string(lang), visit);

  if (out.entries.empty())
    warn(out.diagnostics, "no-entries", "the tagged document has no entries",
         std::string(corpus_id));
  return out;
}

LoadResult load_token_tsv(std::string_view text, const TagsetMapping& mapping,
                          std::string_view lang, std::string_view corpus_id) {
  text = strip_bom(text);
  valid_utf8_or_throw(text, std::string(corpus_id));
  LoadResult out;
  std::set<std::string> finished;
  const auto lines = text_util::split_lines(text);
  std::size_t lineno = 0;
  bool header_seen = false;
  auto close_entry = [&]() {
    if (out.entries.empty()) return;
    auto& e = out.entries.back();
    if (!e.raw_label.empty()) return;
    e.raw_label = join_tokens(e.tokens);
  };
  for (const auto line : lines) {
    ++lineno;
    const auto where = std::string(corpus_id) + ":" + std::to_string(lineno);
    if (text_util::trim(line).empty()) continue;
    if (!header_seen) {
      if (std::string(line) + "\n" != kTokenTsvHeader)
        throw InputError(where + ": expected header " +
                         std::string(kTokenTsvHeader.substr(0, kTokenTsvHeader.size() - 1)));
      header_seen = true;
      continue;
    }
    const auto cols = text_util::split(line, '\t');
    if (cols.size() != 6) throw InputError(where + ": expected 6 tab-separated columns");
    const std::string id(cols[0]);
    if (id.empty()) throw InputError(where + ": empty entry id");
    if (out.entries.empty() || out.entries.back().entry_id != id) {
      close_entry();
      if (finished.count(id))
        throw InputError(where + ": rows of entry '" + id + "' are not contiguous");
      finished.insert(id);
      ConceptEntry e;
      e.entry_id = id;
      e.lang = std::string(lang);
      e.corpus_id = std::string(corpus_id);
      out.entries.push_back(std::move(e));
    }
    auto& e = out.entries.back();
    if (cols[1] != std::to_string(e.tokens.size()))
      throw InputError(where + ": token index " + std::string(cols[1]) + " out of sequence");
    if (cols[2].empty()) throw InputError(where + ": empty surface");
    Token tok;
    tok.surface = std::string(cols[2]);
    const auto kind = parse_token_kind(cols[3]);
    if (!kind) throw InputError(where + ": unknown token kind '" + std::string(cols[3]) + "'");
    tok.kind = *kind;
    if (cols[4].empty()) throw InputError(where + ": token without a tag");
    tok.tag = decode_or_residual(cols[4], mapping, id, out.diagnostics);
    if (!cols[5].empty()) tok.lemma = std::string(cols[5]);
    e.tokens.push_back(std::move(tok));
  }
  close_entry();
  if (out.entries.empty())
    warn(out.diagnostics, "no-entries", "the token table has no entries", std::string(corpus_id));
  return out;
}

}  // namespace

LoadResult load_pretagged_text(std::string_view text, FormatHint format,
                               const TagsetMapping& mapping, std::string_view lang,
                               std::string_view corpus_id) {
  require_lang(lang);
  if (format == FormatHint::TaggedXml) return load_tagged_xml(text, mapping, lang, corpus_id);
  if (format == FormatHint::TokenTsv) return load_token_tsv(text, mapping, lang, corpus_id);
  throw ConfigError("format " + std::string(to_string(format)) + " is not a tagged format");
}

LoadResult load_pretagged(const CorpusSource& source, const TagsetMapping& mapping,
                          std::string_view lang) {
  source.check();
  if (source.kind != SourceKind::Pretagged)
    throw ConfigError("not a pre-tagged source: " + source.path);
  const auto text = text_util::read_file(source.path);
  try {
    return load_pretagged_text(text, source.format, mapping, lang, corpus_id_for(source));
  } catch (const ParseError& e) {
    throw InputError(source.path + ": " + e.what());
  }
}

LoadResult load(const CorpusSource& source, const TagsetMapping& mapping,
                std::string_view lang) {
  switch (source.kind) {
    case SourceKind::SkosRdf: return load_skos(source, lang);
    case SourceKind::Plaintext: return load_plaintext(source, lang);
    case SourceKind::Pretagged: return load_pretagged(source, mapping, lang);
  }
  throw ConfigError("unknown source kind");
}

std::string tokens_tsv(const std::vector<ConceptEntry>& entries, const TagsetMapping& mapping) {
  std::string out(kTokenTsvHeader);
  for (const auto& e : entries) {
    for (std::size_t i = 0; i < e.tokens.size(); ++i) {
      const auto& t = e.tokens[i];
      if (!t.tag) throw InputError(e.entry_id + ": token " + std::to_string(i) + " is untagged");
      out += e.entry_id;
      out += '\t';
      out += std::to_string(i);
      out += '\t';
      out += t.surface;
      out += '\t';
      out += to_string(t.kind);
      out += '\t';
      out += mapping.encode(*t.tag);
      out += '\t';
      out += t.lemma.value_or("");
      out += '\n';
    }
  }
  return out;
}

}  // namespace koscope
