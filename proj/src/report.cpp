// Report rendering: JSON (canonical), CSV sections and Markdown tables.
#include <json.hpp>

#include "koscope/metrics.hpp"
#include "koscope/numfmt.hpp"

namespace koscope {

using ojson = nlohmann::ordered_json;

namespace {

ojson pct(Count num, Count den) {
  if (den == 0) return nullptr;
  return percent2(num, den);
}

std::string pct_text(Count num, Count den) {
  return den == 0 ? std::string("n/a") : percent2(num, den);
}

std::string annotation(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::Indivisible: return "i";
    case Verdict::Outcome::Divisible: return "d";
    case Verdict::Outcome::Undetermined: return "u";
  }
  return "?";
}

std::optional<Verdict::Outcome> parse_outcome(std::string_view s) {
  for (auto o : {Verdict::Outcome::Indivisible, Verdict::Outcome::Divisible,
                 Verdict::Outcome::Undetermined})
    if (to_string(o) == s) return o;
  return std::nullopt;
}

ojson general_json(const UnitCounts& g) {
  ojson j;
  j["entries"] = g.entries;
  j["tokens"] = g.tokens;
  j["words"] = g.words;
  j["words_per_entry"] = g.entries ? ojson(ratio2(g.words, g.entries)) : ojson(nullptr);
  j["tokens_per_entry"] = g.entries ? ojson(ratio2(g.tokens, g.entries)) : ojson(nullptr);
  return j;
}

ojson pos_json(const PosDistribution& d) {
  ojson j;
  j["tokens"] = d.tokens;
  j["words"] = d.words;
  j["closed_class_words"] = d.closed_class_words;
  j["closed_class_pct"] = pct(d.closed_class_words, d.words);
  ojson rows = ojson::array();
  for (const auto& r : d.rows) {
    ojson row;
    row["category"] = to_string(r.key.category);
    row["subtype"] = r.key.subtype ? ojson(to_string(*r.key.subtype)) : ojson(nullptr);
    row["word_class"] = to_string(word_class(r.key.category));
    row["inflected"] = is_inflected(r.key.category);
    row["count"] = r.count;
    row["pct"] = pct(r.count, d.tokens);
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  return j;
}

ojson patterns_json(const PatternTable& t) {
  ojson j;
  j["k"] = t.k;
  j["entries"] = t.entries;
  ojson rows = ojson::array();
  std::size_t rank = 0;
  for (const auto& r : t.rows) {
    ojson row;
    row["rank"] = ++rank;
    row["pattern"] = r.pattern;
    row["frequency"] = r.counts.frequency;
    row["pct"] = pct(r.counts.frequency, t.entries);
    row["annotation"] = to_string(r.modal);
    row["indivisible"] = r.counts.indivisible;
    row["divisible"] = r.counts.divisible;
    row["undetermined"] = r.counts.undetermined;
    rows.push_back(std::move(row));
  }
  j["rows"] = std::move(rows);
  j["sum"] = t.sum;
  j["sum_pct"] = pct(t.sum, t.entries);
  j["singletons"] = t.singletons;
  j["distinct"] = t.distinct;
  j["indivisible_in_rows"] = t.indivisible_in_rows;
  j["indivisible_in_rows_pct"] = pct(t.indivisible_in_rows, t.entries);
  j["indivisible_total"] = t.indivisible_total;
  j["indivisible_total_pct"] = pct(t.indivisible_total, t.entries);
  return j;
}

ojson nn_json(const NnBreakdown& n) {
  ojson j;
  j["entries"] = n.entries;
  j["genitive"] = n.genitive;
  j["genitive_pct"] = pct(n.genitive, n.entries);
  j["nom_acc"] = n.nom_acc;
  j["nom_acc_pct"] = pct(n.nom_acc, n.entries);
  j["subsum"] = n.subsum;
  j["total"] = n.total;
  j["total_pct"] = pct(n.total, n.entries);
  j["remainder"] = n.remainder;
  return j;
}

ojson divisibility_json(const DivisibilitySummary& d) {
  ojson j;
  j["entries"] = d.entries;
  j["enumeration"] = d.enumeration;
  j["enumeration_pct"] = pct(d.enumeration, d.entries);
  j["composite"] = d.composite;
  j["composite_pct"] = pct(d.composite, d.entries);
  j["union"] = d.union_count;
  j["union_pct"] = pct(d.union_count, d.entries);
  j["type_sum"] = d.type_sum;
  j["single_comma_parataxis"] = d.single_comma_parataxis;
  return j;
}

ojson suitability_json(const Suitability& s) {
  ojson j;
  j["level"] = to_string(s.level);
  j["divisible"] = s.divisible;
  j["entries"] = s.entries;
  j["divisible_pct"] = pct(s.divisible, s.entries);
  j["thresholds"] = to_string(s.thresholds);
  j["heuristic"] = true;
  j["rationale"] = s.rationale;
  return j;
}

ojson settings_json(const ReportSettings& s) {
  ojson j;
  j["top_k"] = s.top_k;
  j["thresholds"] = to_string(s.thresholds);
  j["dedup"] = s.dedup;
  j["dedup_key"] = "whitespace-normalized, case-sensitive";
  j["strip_set"] = s.strip_set;
  j["duplicates_removed"] = s.duplicates_removed;
  j["excluded"] = s.excluded;
  return j;
}

// --- JSON reading -----------------------------------------------------------

template <typename T>
T get(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key))
    throw InputError(std::string("report JSON: missing key '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw InputError(std::string("report JSON: bad value for '") + key + "'");
  }
}

const ojson& obj(const ojson& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j.at(key).is_object())
    throw InputError(std::string("report JSON: missing object '") + key + "'");
  return j.at(key);
}

}  // namespace

std::string render_json(const CorpusReport& r) {
  ojson j;
  j["corpus_id"] = r.corpus_id;
  j["general"] = general_json(r.general);
  j["pos_distribution"] = pos_json(r.pos);
  j["pattern_table"] = patterns_json(r.patterns);
  j["nn_breakdown"] = nn_json(r.nn);
  j["divisibility_summary"] = divisibility_json(r.divisibility);
  j["suitability"] = suitability_json(r.suitability);
  ojson diags = ojson::array();
  for (const auto& d : r.diagnostics)
    diags.push_back({{"severity", to_string(d.severity)},
                     {"code", d.code},
                     {"message", d.message},
                     {"where", d.where}});
  j["diagnostics"] = std::move(diags);
  j["settings"] = settings_json(r.settings);
  return j.dump(2) + "\n";
}

CorpusReport report_from_json(std::string_view text) {
  ojson j;
  try {
    j = ojson::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError(std::string("report JSON: ") + e.what());
  }
  CorpusReport r;
  r.corpus_id = get<std::string>(j, "corpus_id");

  const auto& g = obj(j, "general");
  r.general = make_unit_counts(get<Count>(g, "entries"), get<Count>(g, "tokens"),
                               get<Count>(g, "words"));

  const auto& p = obj(j, "pos_distribution");
  r.pos.tokens = get<Count>(p, "tokens");
  r.pos.words = get<Count>(p, "words");
  r.pos.closed_class_words = get<Count>(p, "closed_class_words");
  for (const auto& row : get<ojson>(p, "rows")) {
    PosRow pr;
    const auto cat = parse_category(get<std::string>(row, "category"));
    if (!cat) throw InputError("report JSON: unknown category");
    pr.key.category = *cat;
    if (!row.at("subtype").is_null()) {
      const auto st = parse_subtype(get<std::string>(row, "subtype"));
      if (!st) throw InputError("report JSON: unknown subtype");
      pr.key.subtype = *st;
    }
    pr.count = get<Count>(row, "count");
    r.pos.rows.push_back(pr);
  }

  const auto& t = obj(j, "pattern_table");
  r.patterns.k = get<std::size_t>(t, "k");
  r.patterns.entries = get<Count>(t, "entries");
  for (const auto& row : get<ojson>(t, "rows")) {
    PatternRow pr;
    pr.pattern = get<std::string>(row, "pattern");
    pr.counts.frequency = get<Count>(row, "frequency");
    pr.counts.indivisible = get<Count>(row, "indivisible");
    pr.counts.divisible = get<Count>(row, "divisible");
    pr.counts.undetermined = get<Count>(row, "undetermined");
    const auto o = parse_outcome(get<std::string>(row, "annotation"));
    if (!o) throw InputError("report JSON: unknown annotation");
    pr.modal = *o;
    r.patterns.rows.push_back(std::move(pr));
  }
  r.patterns.sum = get<Count>(t, "sum");
  r.patterns.singletons = get<Count>(t, "singletons");
  r.patterns.distinct = get<Count>(t, "distinct");
  r.patterns.indivisible_in_rows = get<Count>(t, "indivisible_in_rows");
  r.patterns.indivisible_total = get<Count>(t, "indivisible_total");

  const auto& n = obj(j, "nn_breakdown");
  r.nn = {get<Count>(n, "entries"), get<Count>(n, "genitive"), get<Count>(n, "nom_acc"),
          get<Count>(n, "subsum"),  get<Count>(n, "total"),    get<Count>(n, "remainder")};

  const auto& d = obj(j, "divisibility_summary");
  r.divisibility = {get<Count>(d, "entries"),   get<Count>(d, "enumeration"),
                    get<Count>(d, "composite"), get<Count>(d, "union"),
                    get<Count>(d, "type_sum"),  get<Count>(d, "single_comma_parataxis")};

  const auto& s = obj(j, "suitability");
  const auto level = parse_suitability_level(get<std::string>(s, "level"));
  if (!level) throw InputError("report JSON: unknown suitability level");
  r.suitability.level = *level;
  r.suitability.divisible = get<Count>(s, "divisible");
  r.suitability.entries = get<Count>(s, "entries");
  try {
    r.suitability.thresholds = parse_thresholds(get<std::string>(s, "thresholds"));
  } catch (const ConfigError& e) {
    throw InputError(std::string("report JSON: ") + e.what());
  }
  r.suitability.rationale = get<std::string>(s, "rationale");

  for (const auto& dj : get<ojson>(j, "diagnostics")) {
    Diagnostic diag;
    const auto sev = get<std::string>(dj, "severity");
    diag.severity = sev == "error" ? Severity::Error
                    : sev == "info" ? Severity::Info
                                    : Severity::Warning;
    diag.code = get<std::string>(dj, "code");
    diag.message = get<std::string>(dj, "message");
    diag.where = get<std::string>(dj, "where");
    r.diagnostics.push_back(std::move(diag));
  }

  const auto& st = obj(j, "settings");
  r.settings.top_k = get<std::size_t>(st, "top_k");
  r.settings.thresholds = r.suitability.thresholds;
  r.settings.dedup = get<bool>(st, "dedup");
  r.settings.strip_set = get<std::string>(st, "strip_set");
  r.settings.duplicates_removed = get<Count>(st, "duplicates_removed");
  r.settings.excluded = get<Count>(st, "excluded");
  return r;
}

// --- CSV --------------------------------------------------------------------

namespace {

std::string csv_field(std::string_view s) {
  if (s.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(s);
  std::string out = "\"";
  for (const char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

class Csv {
 public:
  void section(std::string_view name) {
    if (!out_.empty()) out_ += "\r\n";
    row({"section", std::string(name)});
  }
  void row(std::initializer_list<std::string> cells) {
    bool first = true;
    for (const auto& c : cells) {
      if (!first) out_ += ',';
      first = false;
      out_ += csv_field(c);
    }
    out_ += "\r\n";
  }
  std::string take() { return std::move(out_); }

 private:
  std::string out_;
};

std::string num(Count c) { return std::to_string(c); }

std::string opt_pct(Count a, Count b) { return b ? percent2(a, b) : std::string(); }

}  // namespace

std::string render_csv(const CorpusReport& r) {
  Csv csv;
  const auto& g = r.general;
  csv.section("general");
  csv.row({"corpus_id", "entries", "tokens", "words", "words_per_entry", "tokens_per_entry"});
  csv.row({r.corpus_id, num(g.entries), num(g.tokens), num(g.words),
           g.entries ? ratio2(g.words, g.entries) : "", g.entries ? ratio2(g.tokens, g.entries) : ""});

  csv.section("pos_distribution");
  csv.row({"category", "subtype", "word_class", "inflected", "count", "pct"});
  for (const auto& p : r.pos.rows)
    csv.row({std::string(to_string(p.key.category)),
             p.key.subtype ? std::string(to_string(*p.key.subtype)) : "",
             std::string(to_string(word_class(p.key.category))),
             is_inflected(p.key.category) ? "yes" : "no", num(p.count),
             opt_pct(p.count, r.pos.tokens)});
  csv.row({"closed_class_words", "", "", "", num(r.pos.closed_class_words),
           opt_pct(r.pos.closed_class_words, r.pos.words)});

  csv.section("pattern_table");
  csv.row({"rank", "pattern", "frequency", "pct", "annotation", "indivisible", "divisible",
           "undetermined"});
  std::size_t rank = 0;
  for (const auto& p : r.patterns.rows)
    csv.row({num(++rank), p.pattern, num(p.counts.frequency),
             opt_pct(p.counts.frequency, r.patterns.entries), std::string(to_string(p.modal)),
             num(p.counts.indivisible), num(p.counts.divisible), num(p.counts.undetermined)});
  csv.row({"sum", "", num(r.patterns.sum), opt_pct(r.patterns.sum, r.patterns.entries), "", "",
           "", ""});
  csv.row({"singletons", "", num(r.patterns.singletons), "", "", "", "", ""});
  csv.row({"distinct", "", num(r.patterns.distinct), "", "", "", "", ""});

  const auto& n = r.nn;
  csv.section("nn_breakdown");
  csv.row({"row", "count", "pct"});
  csv.row({"second noun genitive", num(n.genitive), opt_pct(n.genitive, n.entries)});
  csv.row({"nominative/accusative", num(n.nom_acc), opt_pct(n.nom_acc, n.entries)});
  csv.row({"subsum", num(n.subsum), ""});
  csv.row({"total", num(n.total), opt_pct(n.total, n.entries)});
  csv.row({"remainder", num(n.remainder), ""});

  const auto& d = r.divisibility;
  csv.section("divisibility_summary");
  csv.row({"type", "count", "pct"});
  csv.row({"enumeration", num(d.enumeration), opt_pct(d.enumeration, d.entries)});
  csv.row({"composite", num(d.composite), opt_pct(d.composite, d.entries)});
  csv.row({"union", num(d.union_count), opt_pct(d.union_count, d.entries)});

  csv.section("suitability");
  csv.row({"level", "divisible_pct", "thresholds", "rationale"});
  csv.row({std::string(to_string(r.suitability.level)),
           opt_pct(r.suitability.divisible, r.suitability.entries),
           to_string(r.suitability.thresholds), r.suitability.rationale});

  csv.section("diagnostics");
  csv.row({"severity", "code", "message", "where"});
  for (const auto& diag : r.diagnostics)
    csv.row({to_string(diag.severity), diag.code, diag.message, diag.where});
  return csv.take();
}

// --- Markdown ---------------------------------------------------------------

namespace {

std::string md_escape(std::string_view s) {
  std::string out;
  for (const char c : s) {
    if (c == '|' || c == '\\' || c == '*' || c == '_' || c == '`') out += '\\';
    out += (c == '\n' || c == '\r') ? ' ' : c;
  }
  return out;
}

std::string with_pct(Count c, Count den) {
  return std::to_string(c) + " (" + pct_text(c, den) + "%)";
}

}  // namespace

std::string render_markdown(const CorpusReport& r) {
  std::string o;
  o += "# Report: " + md_escape(r.corpus_id) + "\n\n";

  const auto& g = r.general;
  o += "## Entries, tokens and words\n\n| | " + md_escape(r.corpus_id) + " |\n|---|---:|\n";
  o += "| Number of entries | " + std::to_string(g.entries) + " |\n";
  o += "| Number of tokens | " + std::to_string(g.tokens) + " |\n";
  o += "| Number of words | " + std::to_string(g.words) + " |\n";
  o += "| Words per entry (avg) | " + (g.entries ? ratio2(g.words, g.entries) : "n/a") + " |\n";
  o += "| Tokens per entry (avg) | " + (g.entries ? ratio2(g.tokens, g.entries) : "n/a") + " |\n\n";

  o += "## Part-of-speech distribution\n\n| POS | Type | Tokens |\n|---|---|---:|\n";
  std::optional<Category> last;
  for (const auto& p : r.pos.rows) {
    std::string cat;
    if (last != p.key.category) {
      cat = std::string(to_string(p.key.category)) + " [" +
            std::string(to_string(word_class(p.key.category))) + "], [" +
            (p.key.category == Category::Punctuation || p.key.category == Category::Digit ||
                     p.key.category == Category::Residual ||
                     p.key.category == Category::Abbreviation
                 ? "n/a"
                 : is_inflected(p.key.category) ? "inflected" : "invariable") +
            "]";
      last = p.key.category;
    }
    o += "| " + cat + " | " + (p.key.subtype ? std::string(to_string(*p.key.subtype)) : "-") +
         " | " + with_pct(p.count, r.pos.tokens) + " |\n";
  }
  o += "\nClosed-class words: " + with_pct(r.pos.closed_class_words, r.pos.words) +
       " of words.\n\n";

  o += "## Most frequent syntactic patterns\n\n| Syntactic pattern | Frequency | i/d/u |\n"
       "|---|---:|---|\n";
  for (const auto& p : r.patterns.rows)
    o += "| " + md_escape(p.pattern) + " [" + annotation(p.modal) + "] | " +
         with_pct(p.counts.frequency, r.patterns.entries) + " | " +
         std::to_string(p.counts.indivisible) + "/" + std::to_string(p.counts.divisible) + "/" +
         std::to_string(p.counts.undetermined) + " |\n";
  o += "| Sum | " + with_pct(r.patterns.sum, r.patterns.entries) + " | |\n\n";
  o += std::to_string(r.patterns.singletons) + " patterns occur once, out of " +
       std::to_string(r.patterns.distinct) + " distinct patterns. Indivisible entries: " +
       with_pct(r.patterns.indivisible_in_rows, r.patterns.entries) + " within the listed rows, " +
       with_pct(r.patterns.indivisible_total, r.patterns.entries) + " overall.\n\n";

  const auto& n = r.nn;
  o += "## Noun + noun pattern\n\n| | " + md_escape(r.corpus_id) + " |\n|---|---:|\n";
  o += "| [N + N] with 2nd N in Gen | " + with_pct(n.genitive, n.entries) + " |\n";
  o += "| [N + N] with Nom - Acc combination | " + with_pct(n.nom_acc, n.entries) + " |\n";
  o += "| SUBSUM 1st & 2nd subsets | " + std::to_string(n.subsum) + " |\n";
  o += "| SUM [N + N] syntactic pattern | " + with_pct(n.total, n.entries) + " |\n";
  o += "| Not complying | " + std::to_string(n.remainder) + " |\n\n";

  const auto& d = r.divisibility;
  o += "## Divisible terms\n\n| | " + md_escape(r.corpus_id) + " |\n|---|---:|\n";
  o += "| Type: Enumeration/parataxis | " + with_pct(d.enumeration, d.entries) + " |\n";
  o += "| Type: Composite | " + with_pct(d.composite, d.entries) + " |\n";
  o += "| SUM (unique) | " + with_pct(d.union_count, d.entries) + " |\n\n";

  o += "## Suitability\n\n**" + std::string(to_string(r.suitability.level)) + "**: " +
       md_escape(r.suitability.rationale) + ". Thresholds " + to_string(r.suitability.thresholds) +
       " (heuristic).\n";

  if (!r.diagnostics.empty()) {
    o += "\n## Diagnostics\n\n";
    for (const auto& diag : r.diagnostics)
      o += "- " + std::string(to_string(diag.severity)) + " `" + diag.code + "` " +
           md_escape(diag.message) + (diag.where.empty() ? "" : " (" + md_escape(diag.where) + ")") +
           "\n";
  }
  return o;
}

}  // namespace koscope
