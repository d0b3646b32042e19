#include "support.hpp"

#include <fstream>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "koscope/ingest.hpp"
#include "koscope/morphotag.hpp"
#include "koscope/pipeline.hpp"
#include "koscope/tokenize.hpp"
#include "text_util.hpp"

namespace koscope::testing {

std::string data_path(std::string_view name) {
  return std::string(KOSCOPE_TEST_DATA) + "/" + std::string(name);
}

ConceptEntry tagged(std::string_view tags, std::string_view words, std::string_view lemmas,
                    std::string id) {
  const auto& mapping = TagsetMapping::builtin();
  const auto ts = text_util::split_ws(tags);
  const auto ws = text_util::split_ws(words);
  const auto ls = text_util::split_ws(lemmas);
  if (!ws.empty() && ws.size() != ts.size()) throw std::invalid_argument("word count");
  if (!ls.empty() && ls.size() != ts.size()) throw std::invalid_argument("lemma count");
  ConceptEntry e;
  e.entry_id = std::move(id);
  e.lang = "el";
  e.corpus_id = "test";
  for (std::size_t i = 0; i < ts.size(); ++i) {
    Token t;
    t.index = i;
    t.surface = ws.empty() ? "w" + std::to_string(i + 1) : std::string(ws[i]);
    t.tag = mapping.decode(ts[i]);
    if (!ls.empty() && ls[i] != "-") t.lemma = std::string(ls[i]);
    const auto parts = tokenize(t.surface);
    t.kind = parts.size() == 1 ? parts[0].kind : TokenKind::Word;
    e.tokens.push_back(std::move(t));
  }
  e.raw_label = join_tokens(e.tokens);
  return e;
}

std::vector<GoldenCase> golden_corpus() {
  const auto loaded = load_pretagged_text(text_util::read_file(data_path("golden.xml")),
                                          FormatHint::TaggedXml, TagsetMapping::builtin(), "el",
                                          "golden");
  std::map<std::string, ConceptEntry> by_id;
  for (const auto& e : loaded.entries) by_id[e.entry_id] = e;
  std::vector<GoldenCase> out;
  const auto expected = text_util::read_file(data_path("golden.expected.tsv"));
  bool header = true;
  for (const auto line : text_util::split_lines(expected)) {
    if (header) {
      header = false;
      continue;
    }
    if (line.empty()) continue;
    const auto cols = text_util::split(line, '\t');
    if (cols.size() != 4) throw std::runtime_error("bad expected row");
    const auto it = by_id.find(std::string(cols[0]));
    if (it == by_id.end()) throw std::runtime_error("missing golden entry " + std::string(cols[0]));
    out.push_back({it->second, std::string(cols[1]), std::string(cols[2]), std::string(cols[3])});
  }
  if (out.size() != loaded.entries.size()) throw std::runtime_error("golden size mismatch");
  return out;
}

const Table1Row kTable1[3] = {
    {"Eurovoc", 6882, 15234, 15067, "2.19", "2.21"},
    {"LCSH", 10308, 23670, 20497, "1.99", "2.30"},
    {"DDC", 3811, 16414, 14613, "3.83", "4.31"},
};

const std::vector<Table3Column>& table3() {
  static const std::vector<Table3Column> cols = {
      {"Eurovoc",
       6882,
       {{"Adj+N", 2182, "31.71"},
        {"N", 1364, "19.82"},
        {"N+N", 819, "11.90"},
        {"N+Art+N", 454, "6.60"},
        {"Res", 191, "2.78"},
        {"N+Adj+N", 171, "2.48"},
        {"Adj+Adj+N", 143, "2.08"},
        {"N+Adp+N", 118, "1.71"},
        {"Adj", 103, "1.50"},
        {"Adj+N+N", 93, "1.35"}},
       5638,
       "81.92",
       149,
       286},
      {"LCSH",
       10308,
       {{"N", 3353, "32.53"},
        {"Adj+N", 1936, "18.78"},
        {"N+Punct+Adj", 677, "6.57"},
        {"N+N", 548, "5.32"},
        {"N+Punct+N+Punct", 369, "3.58"},
        {"N+Adp+N", 361, "3.50"},
        {"N+Conj+N", 311, "3.02"},
        {"Adj", 261, "2.53"},
        {"Adj+Adj", 134, "1.30"},
        {"Adj+N+Punct+Adj", 124, "1.20"}},
       8084,
       "78.33",
       266,
       474},
      {"DDC",
       3811,
       {{"N", 634, "16.64"},
        {"Adj+N", 387, "10.15"},
        {"N+N", 156, "4.09"},
        {"N+Conj+N", 112, "2.94"},
        {"Dig", 112, "2.94"},
        {"Adj", 63, "1.65"},
        {"N+Adj+N", 61, "1.60"},
        {"Adj+Adj+N", 50, "1.31"},
        {"N+Art+N", 44, "1.15"},
        {"Adj+N+Conj+N", 40, "1.05"}},
       1659,
       "43.53",
       855,
       1128},
  };
  return cols;
}

CorpusTally table3_tally(const Table3Column& c) {
  CorpusTally t;
  Count listed = 0;
  Count smallest = c.rows.front().frequency;
  for (const auto& r : c.rows) {
    t.patterns[r.pattern].frequency = r.frequency;
    listed += r.frequency;
    smallest = std::min(smallest, r.frequency);
  }
  // fillers: `singletons` patterns seen once, the other unlisted patterns
  // share what is left, each below the smallest listed frequency
  const Count others = c.distinct - c.rows.size() - c.singletons;
  const Count rest = c.entries - listed - c.singletons;
  if (others == 0 || rest < 2 * others) throw std::logic_error("fixture cannot be filled");
  Count filler = 0;
  for (Count i = 0; i < c.singletons; ++i)
    t.patterns["Filler+S" + std::to_string(++filler)].frequency = 1;
  for (Count i = 0; i < others; ++i) {
    const Count f = rest / others + (i < rest % others ? 1 : 0);
    if (f >= smallest) throw std::logic_error("filler would enter the top rows");
    t.patterns["Filler+M" + std::to_string(++filler)].frequency = f;
  }
  t.entries = c.entries;
  return t;
}

const Table4Column kTable4[3] = {
    {"Eurovoc", 6882, 724, 95, 819, 819, "10.52", "1.38", "11.90"},
    {"LCSH", 10308, 305, 241, 546, 548, "2.96", "2.34", "5.32"},
    {"DDC", 3811, 98, 50, 148, 156, "2.57", "1.31", "4.09"},
};

const Table5Column kTable5[3] = {
    {"Eurovoc", 6882, 97, 449, 536, "1.41", "6.52", "7.79", SuitabilityLevel::High},
    {"LCSH", 10308, 704, 1504, 2118, "6.83", "14.59", "20.55", SuitabilityLevel::Moderate},
    {"DDC", 3811, 1224, 894, 1766, "32.12", "23.46", "46.34", SuitabilityLevel::Low},
};

namespace {

template <typename T>
const T& pick(std::mt19937& rng, const std::vector<T>& v) {
  return v[std::uniform_int_distribution<std::size_t>(0, v.size() - 1)(rng)];
}

void repeat(const ConceptEntry& proto, Count n, const char* prefix,
            std::vector<ConceptEntry>& out) {
  for (Count i = 0; i < n; ++i) {
    auto e = proto;
    e.entry_id = std::string(prefix) + std::to_string(i + 1);
    out.push_back(std::move(e));
  }
}

}  // namespace

std::vector<ConceptEntry> table1_entries(const Table1Row& row) {
  std::vector<ConceptEntry> out;
  const Count others = row.tokens - row.words;
  for (Count i = 0; i < row.entries; ++i) {
    const Count words = row.words / row.entries + (i < row.words % row.entries ? 1 : 0);
    const Count marks = others / row.entries + (i < others % row.entries ? 1 : 0);
    std::string label;
    for (Count w = 0; w < words; ++w) label += (w ? " " : "") + std::string("λέξη");
    for (Count m = 0; m < marks; ++m) label += " " + std::to_string(m + 1);
    ConceptEntry e;
    e.entry_id = std::string(row.kos) + ":" + std::to_string(i + 1);
    e.raw_label = label;
    e.lang = "el";
    e.corpus_id = row.kos;
    e.tokens = tokenize(label);
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<ConceptEntry> table4_entries(const Table4Column& c) {
  std::vector<ConceptEntry> out;
  repeat(tagged("NoCmFeSgNm NoCmFeSgGe"), c.genitive, "gen", out);
  const Count nn = c.nom_acc / 2;
  repeat(tagged("NoCmFePlNm NoCmFePlNm"), nn, "nomnom", out);
  repeat(tagged("NoCmNeSgNm NoCmNeSgAc"), c.nom_acc - nn, "nomacc", out);
  repeat(tagged("NoCmFeSgGe NoCmFeSgNm"), c.total - c.subsum, "other", out);
  repeat(tagged("NoCmFeSgNm"), c.entries - c.total, "single", out);
  return out;
}

std::vector<ConceptEntry> table5_entries(const Table5Column& c) {
  std::vector<ConceptEntry> out;
  const Count both = c.enumeration + c.composite - c.union_count;
  repeat(tagged("NoCmNeSgNm CjCo NoCmNeSgNm", "", "- και -"), c.enumeration - both, "enum", out);
  repeat(tagged("NoCmMaSgNm AsPpSp NoCmNePlAc", "", "- για -"), c.composite - both, "comp", out);
  repeat(tagged("NoCmNeSgNm CjCo NoCmNeSgNm AsPpSp NoCmNePlAc", "", "- και - για -"), both,
         "both", out);
  repeat(tagged("NoCmFeSgNm"), c.entries - c.union_count, "single", out);
  return out;
}

CorpusTally classify_and_tally(const std::vector<ConceptEntry>& entries, const RuleSet& rules) {
  CorpusTally t;
  for (const auto& e : entries) t.add(e, classify(e, rules));
  return t;
}

// Labels mixing Greek and Latin words, digits, decimals, punctuation,
// symbols, brackets and irregular whitespace.
std::string random_label(std::mt19937& rng) {
  static const std::vector<std::string> pieces = {
      "μέσα", "εκπαίδευση", "Oil", "gas", "well-being", "070.1", "12", "3.", ",", ".", ";", "·",
      "(",    ")",          "[",   "]",   "&",          "%",     "*",  "και", "κλπ", "e.g", "é",
      "ΝΑΤΟ", "x",          "'",   "\"",  "-",          "/",     "…",  "«",   "»"};
  static const std::vector<std::string> spaces = {"", " ", " ", "  ", "\t", " \t "};
  std::string out;
  const int n = std::uniform_int_distribution<int>(0, 8)(rng);
  for (int i = 0; i < n; ++i) out += pick(rng, spaces) + pick(rng, pieces);
  if (rng() % 4 == 0) out += pick(rng, spaces);
  return out;
}

std::vector<ConceptEntry> golden_entries() {
  std::vector<ConceptEntry> out;
  for (auto& c : golden_corpus()) out.push_back(std::move(c.entry));
  return out;
}

const Lexicon& greek_lexicon() {
  static const Lexicon l = Lexicon::load(data_path("greek.lex"), TagsetMapping::builtin());
  return l;
}

std::vector<ConceptEntry> random_label_entries(std::mt19937& rng, std::size_t n) {
  static const std::vector<std::string> words = {
      "εκπαίδευση", "παιδεία",  "φυσικό",  "αέριο",  "ασφάλεια", "ζωής",       "χάρτης",
      "ιδρυμάτων",  "και",      "για",     "παιδιά", "βιβλία",   "περιοδικά",  "μέσα",
      "σε",         "κοινότητες", "ρώμη",  "(",      ")",        ",",          "κλπ",
      "άγνωστη",    "UNESCO",   "070.1",   "του",    "διαστήματος"};
  std::vector<ConceptEntry> out;
  std::set<std::string> seen;
  while (out.size() < n) {
    std::string label;
    const int len = std::uniform_int_distribution<int>(1, 5)(rng);
    for (int i = 0; i < len; ++i) label += (i ? " " : "") + pick(rng, words);
    if (!seen.insert(normalize_whitespace(label)).second) continue;
    ConceptEntry e;
    e.entry_id = "r:" + std::to_string(out.size() + 1);
    e.raw_label = label;
    e.lang = "el";
    e.corpus_id = "random";
    out.push_back(std::move(e));
  }
  return out;
}

std::string report_bytes(std::vector<ConceptEntry> entries, bool pretagged, unsigned threads) {
  Resources res;
  res.lexicon = &greek_lexicon();
  PipelineOptions opt;
  opt.threads = threads;
  LoadResult loaded{std::move(entries), {}};
  const auto run = prepare(std::move(loaded), pretagged, "corpus", res, opt);
  return render_json(make_report(run, opt));
}

}  // namespace koscope::testing
