#include "koscope/metrics.hpp"

#include <algorithm>
#include <charconv>

#include "koscope/numfmt.hpp"
#include "u128.hpp"
#include "text_util.hpp"

namespace koscope {

namespace {

bool nom_acc_pair(std::optional<Case> a, std::optional<Case> b) {
  return (a == Case::Nom && (b == Case::Nom || b == Case::Acc)) ||
         (a == Case::Acc && b == Case::Nom);
}

}  // namespace

void CorpusTally::add(const ConceptEntry& entry, const Verdict& verdict) {
  ++entries;
  for (const auto& t : entry.tokens) {
    ++tokens;
    if (t.kind == TokenKind::Word) ++words;
    if (!t.tag) throw InputError(entry.entry_id + ": untagged token '" + t.surface + "'");
    ++pos[{t.tag->category, t.tag->subtype}];
    if (t.kind == TokenKind::Word && word_class(t.tag->category) == WordClass::Closed)
      ++closed_class_words;
  }

  auto& p = patterns[verdict.pattern.canonical];
  ++p.frequency;
  switch (verdict.outcome) {
    case Verdict::Outcome::Indivisible:
      ++p.indivisible;
      ++indivisible;
      ++rule_hits[verdict.rule_id];
      break;
    case Verdict::Outcome::Divisible:
      ++p.divisible;
      ++divisible;
      if (verdict.has_type(DivisibilityType::Enumeration)) ++enumeration;
      if (verdict.has_type(DivisibilityType::Composite)) ++composite;
      for (const auto& m : verdict.markers)
        if (m.kind == MarkerKind::CommaParataxis && m.token_indices.size() == 1)
          ++single_comma_parataxis;
      break;
    case Verdict::Outcome::Undetermined:
      ++p.undetermined;
      ++undetermined;
      break;
  }

  if (verdict.pattern.canonical == "N+N") {
    ++nn_total;
    const auto& a = entry.tokens[0].tag->grammatical_case;
    const auto& b = entry.tokens[1].tag->grammatical_case;
    if (b == Case::Gen)
      ++nn_genitive;
    else if (nom_acc_pair(a, b))
      ++nn_nom_acc;
  }
}

void CorpusTally::merge(const CorpusTally& o) {
  entries += o.entries;
  tokens += o.tokens;
  words += o.words;
  closed_class_words += o.closed_class_words;
  for (const auto& [k, v] : o.pos) pos[k] += v;
  for (const auto& [k, v] : o.patterns) {
    auto& p = patterns[k];
    p.frequency += v.frequency;
    p.indivisible += v.indivisible;
    p.divisible += v.divisible;
    p.undetermined += v.undetermined;
  }
  nn_total += o.nn_total;
  nn_genitive += o.nn_genitive;
  nn_nom_acc += o.nn_nom_acc;
  enumeration += o.enumeration;
  composite += o.composite;
  divisible += o.divisible;
  single_comma_parataxis += o.single_comma_parataxis;
  indivisible += o.indivisible;
  undetermined += o.undetermined;
  for (const auto& [k, v] : o.rule_hits) rule_hits[k] += v;
}

CorpusTally tally(const std::vector<ConceptEntry>& entries, const std::vector<Verdict>& verdicts) {
  if (entries.size() != verdicts.size())
    throw Error("tally: " + std::to_string(entries.size()) + " entries but " +
                std::to_string(verdicts.size()) + " verdicts");
  CorpusTally t;
  for (std::size_t i = 0; i < entries.size(); ++i) t.add(entries[i], verdicts[i]);
  return t;
}

PosDistribution pos_distribution(const CorpusTally& t, Diagnostics* diags) {
  PosDistribution d;
  d.tokens = t.tokens;
  d.words = t.words;
  d.closed_class_words = t.closed_class_words;
  for (const auto& [key, count] : t.pos) d.rows.push_back({key, count});
  if (t.tokens == 0 && diags) warn(*diags, "empty-corpus", "no tokens to distribute");
  return d;
}

PatternTable pattern_table(const CorpusTally& t, std::size_t k) {
  if (k < 1) throw ConfigError("top-k must be at least 1");
  PatternTable table;
  table.k = k;
  table.entries = t.entries;
  table.indivisible_total = t.indivisible;
  std::vector<PatternRow> all;
  for (const auto& [pattern, counts] : t.patterns) {
    if (counts.frequency == 0) continue;
    PatternRow row{pattern, counts, Verdict::Outcome::Indivisible};
    // ties between verdict counts go to the earlier of Indivisible,
    // Divisible, Undetermined
    Count best = counts.indivisible;
    if (counts.divisible > best) {
      best = counts.divisible;
      row.modal = Verdict::Outcome::Divisible;
    }
    if (counts.undetermined > best) row.modal = Verdict::Outcome::Undetermined;
    all.push_back(std::move(row));
    ++table.distinct;
    if (counts.frequency == 1) ++table.singletons;
  }
  std::sort(all.begin(), all.end(), [](const PatternRow& a, const PatternRow& b) {
    if (a.counts.frequency != b.counts.frequency) return a.counts.frequency > b.counts.frequency;
    return a.pattern < b.pattern;
  });
  if (all.size() > k) all.resize(k);
  for (const auto& row : all) {
    table.sum += row.counts.frequency;
    table.indivisible_in_rows += row.counts.indivisible;
  }
  table.rows = std::move(all);
  return table;
}

NnBreakdown nn_breakdown(const CorpusTally& t) {
  NnBreakdown n;
  n.entries = t.entries;
  n.genitive = t.nn_genitive;
  n.nom_acc = t.nn_nom_acc;
  n.subsum = n.genitive + n.nom_acc;
  n.total = t.nn_total;
  n.remainder = n.total - n.subsum;
  return n;
}

DivisibilitySummary divisibility_summary(const CorpusTally& t) {
  DivisibilitySummary d;
  d.entries = t.entries;
  d.enumeration = t.enumeration;
  d.composite = t.composite;
  d.union_count = t.divisible;
  d.type_sum = t.enumeration + t.composite;
  d.single_comma_parataxis = t.single_comma_parataxis;
  return d;
}

namespace {

std::string hundredths_text(std::int64_t v) {
  auto s = std::to_string(v / 100);
  if (v % 100) {
    const auto frac = v % 100;
    s += '.';
    s += static_cast<char>('0' + frac / 10);
    if (frac % 10) s += static_cast<char>('0' + frac % 10);
  }
  return s;
}

std::int64_t parse_hundredths(std::string_view text) {
  text = text_util::trim(text);
  const auto dot = text.find('.');
  const auto whole = text.substr(0, dot);
  auto frac = dot == std::string_view::npos ? std::string_view{} : text.substr(dot + 1);
  if (whole.empty() || frac.size() > 2 || (dot != std::string_view::npos && frac.empty()))
    throw ConfigError("bad threshold '" + std::string(text) + "'");
  std::int64_t w = 0;
  for (const char c : whole) {
    if (c < '0' || c > '9') throw ConfigError("bad threshold '" + std::string(text) + "'");
    w = w * 10 + (c - '0');
    if (w > 1000) throw ConfigError("threshold out of range: " + std::string(text));
  }
  std::int64_t f = 0;
  for (std::size_t i = 0; i < 2; ++i) {
    f *= 10;
    if (i < frac.size()) {
      if (frac[i] < '0' || frac[i] > '9')
        throw ConfigError("bad threshold '" + std::string(text) + "'");
      f += frac[i] - '0';
    }
  }
  return w * 100 + f;
}

}  // namespace

Thresholds parse_thresholds(std::string_view text) {
  const auto parts = text_util::split(text, ',');
  if (parts.size() != 2) throw ConfigError("thresholds must be two numbers, e.g. \"10,30\"");
  Thresholds t{parse_hundredths(parts[0]), parse_hundredths(parts[1])};
  if (t.high_below > 10000 || t.low_above > 10000)
    throw ConfigError("thresholds must be percentages between 0 and 100");
  if (t.high_below >= t.low_above) throw ConfigError("thresholds must be strictly increasing");
  return t;
}

std::string to_string(const Thresholds& t) {
  return hundredths_text(t.high_below) + "," + hundredths_text(t.low_above);
}

std::string_view to_string(SuitabilityLevel s) {
  switch (s) {
    case SuitabilityLevel::High: return "High";
    case SuitabilityLevel::Moderate: return "Moderate";
    case SuitabilityLevel::Low: return "Low";
    case SuitabilityLevel::Undefined: return "Undefined";
  }
  return "?";
}

std::optional<SuitabilityLevel> parse_suitability_level(std::string_view s) {
  for (auto l : {SuitabilityLevel::High, SuitabilityLevel::Moderate, SuitabilityLevel::Low,
                 SuitabilityLevel::Undefined})
    if (to_string(l) == s) return l;
  return std::nullopt;
}

Suitability suitability(const DivisibilitySummary& d, const Thresholds& thresholds) {
  Suitability s;
  s.divisible = d.union_count;
  s.entries = d.entries;
  s.thresholds = thresholds;
  if (d.entries == 0) {
    s.rationale = "no entries; suitability is undefined";
    return s;
  }
  // compare union/entries against the thresholds exactly:
  // union * 10000 vs threshold(hundredths of %) * entries
  const auto scaled = static_cast<u128>(d.union_count) * 10000u;
  const auto high = static_cast<u128>(thresholds.high_below) * d.entries;
  const auto low = static_cast<u128>(thresholds.low_above) * d.entries;
  const auto share = percent2(d.union_count, d.entries) + "%";
  const auto hb = hundredths_text(thresholds.high_below) + "%";
  const auto la = hundredths_text(thresholds.low_above) + "%";
  if (scaled < high) {
    s.level = SuitabilityLevel::High;
    s.rationale = share + " of entries are divisible, below the " + hb + " threshold";
  } else if (scaled > low) {
    s.level = SuitabilityLevel::Low;
    s.rationale = share + " of entries are divisible, above the " + la + " threshold";
  } else {
    s.level = SuitabilityLevel::Moderate;
    s.rationale = share + " of entries are divisible, between " + hb + " and " + la;
  }
  s.rationale += " (enumeration " + percent2(d.enumeration, d.entries) + "%, composite " +
                 percent2(d.composite, d.entries) + "%)";
  return s;
}

CorpusReport build_report(const CorpusTally& t, std::string corpus_id,
                          const ReportSettings& settings, Diagnostics diagnostics) {
  CorpusReport r;
  r.corpus_id = std::move(corpus_id);
  r.settings = settings;
  r.diagnostics = std::move(diagnostics);
  r.general = make_unit_counts(t.entries, t.tokens, t.words);
  r.pos = pos_distribution(t, &r.diagnostics);
  r.patterns = pattern_table(t, settings.top_k);
  r.nn = nn_breakdown(t);
  r.divisibility = divisibility_summary(t);
  r.suitability = suitability(r.divisibility, settings.thresholds);
  if (r.divisibility.single_comma_parataxis > 0)
    note(r.diagnostics, "single-comma-parataxis",
         std::to_string(r.divisibility.single_comma_parataxis) +
             " entries counted as enumeration on a single comma that matches no inversion "
             "template");
  return r;
}

std::optional<Count> report_figure(const CorpusReport& r, std::string_view name) {
  if (name == "general.entries") return r.general.entries;
  if (name == "general.tokens") return r.general.tokens;
  if (name == "general.words") return r.general.words;
  if (name == "patterns.sum") return r.patterns.sum;
  if (name == "patterns.singletons") return r.patterns.singletons;
  if (name == "patterns.distinct") return r.patterns.distinct;
  if (name == "nn.genitive") return r.nn.genitive;
  if (name == "nn.nom_acc") return r.nn.nom_acc;
  if (name == "nn.subsum") return r.nn.subsum;
  if (name == "nn.total") return r.nn.total;
  if (name == "divisibility.enumeration") return r.divisibility.enumeration;
  if (name == "divisibility.composite") return r.divisibility.composite;
  if (name == "divisibility.union") return r.divisibility.union_count;
  if (text_util::starts_with(name, "patterns.row:")) {
    const auto pattern = name.substr(13);
    for (const auto& row : r.patterns.rows)
      if (row.pattern == pattern) return row.counts.frequency;
    return Count{0};
  }
  return std::nullopt;
}

std::size_t audit_published(CorpusReport& report, const std::vector<PublishedFigure>& figures) {
  std::size_t mismatches = 0;
  for (const auto& f : figures) {
    const auto computed = report_figure(report, f.name);
    if (!computed) throw ConfigError("unknown published figure '" + f.name + "'");
    if (*computed == f.value) continue;
    ++mismatches;
    warn(report.diagnostics, "published-mismatch",
         f.name + ": computed " + std::to_string(*computed) + ", published " +
             std::to_string(f.value),
         report.corpus_id);
  }
  return mismatches;
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  if (name == "markdown" || name == "md") return ReportFormat::Markdown;
  return std::nullopt;
}

std::string_view extension(ReportFormat f) {
  switch (f) {
    case ReportFormat::Json: return ".json";
    case ReportFormat::Csv: return ".csv";
    case ReportFormat::Markdown: return ".md";
  }
  return "";
}

std::string render(const CorpusReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::Json: return render_json(report);
    case ReportFormat::Csv: return render_csv(report);
    case ReportFormat::Markdown: return render_markdown(report);
  }
  throw ConfigError("unknown report format");
}

}  // namespace koscope
