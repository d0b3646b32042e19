#include "koscope/pipeline.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <thread>
#include <unordered_set>

#include "koscope/tokenize.hpp"
#include "text_util.hpp"

namespace koscope {

CorpusRun prepare(LoadResult loaded, bool pretagged, std::string corpus_id, const Resources& res,
                  const PipelineOptions& opt) {
  CorpusRun run;
  run.corpus_id = std::move(corpus_id);
  run.diagnostics = std::move(loaded.diagnostics);

  std::vector<ConceptEntry> kept;
  kept.reserve(loaded.entries.size());
  for (auto& e : loaded.entries) {
    if (!pretagged) {
      try {
        e.raw_label = preprocess(e.raw_label, opt.strip_set);
      } catch (const InputError& err) {
        ++run.excluded;
        warn(run.diagnostics, "excluded-entry", err.what(), e.entry_id);
        continue;
      }
    }
    kept.push_back(std::move(e));
  }

  if (opt.dedup) {
    auto d = deduplicate(std::move(kept));
    kept = std::move(d.entries);
    run.duplicates_removed = d.removed;
  }

  static const Lexicon empty_lexicon;
  const Lexicon& lexicon = res.lexicon ? *res.lexicon : empty_lexicon;
  if (!pretagged && !res.lexicon)
    warn(run.diagnostics, "no-lexicon", "no lexicon given; words are tagged as unknown",
         run.corpus_id);
  for (auto& e : kept) {
    if (!pretagged) {
      e.tokens = tokenize(e.raw_label);
      e = lexicon_tag(e, lexicon, *res.context, &run.diagnostics);
    }
  }
  run.entries = std::move(kept);
  run.verdicts = classify_all(run.entries, *res.rules, opt.threads);
  return run;
}

CorpusRun run_source(const CorpusSource& source, const Resources& res,
                     const PipelineOptions& opt) {
  auto loaded = load(source, *res.mapping, opt.lang);
  return prepare(std::move(loaded), source.kind == SourceKind::Pretagged, corpus_id_for(source),
                 res, opt);
}

std::vector<Verdict> classify_all(const std::vector<ConceptEntry>& entries, const RuleSet& rules,
                                  unsigned threads) {
  std::vector<Verdict> out(entries.size());
  const auto n = entries.size();
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (threads == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = classify(entries[i], rules);
    return out;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(threads);
  const auto chunk = (n + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (std::size_t i = t * chunk; i < std::min(n, (t + 1) * chunk); ++i)
          out[i] = classify(entries[i], rules);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

Diagnostics condense(Diagnostics diags, std::size_t per_code) {
  std::stable_sort(diags.begin(), diags.end(), [](const Diagnostic& a, const Diagnostic& b) {
    return std::tie(a.code, a.where, a.message, a.severity) <
           std::tie(b.code, b.where, b.message, b.severity);
  });
  diags.erase(std::unique(diags.begin(), diags.end()), diags.end());
  Diagnostics out;
  std::map<std::string, std::size_t> seen;
  for (auto& d : diags) {
    if (++seen[d.code] <= per_code) out.push_back(std::move(d));
  }
  for (const auto& [code, count] : seen)
    if (count > per_code)
      note(out, "omitted", std::to_string(count - per_code) + " more '" + code +
                               "' diagnostics not shown");
  return out;
}

CorpusReport make_report(const CorpusRun& run, const PipelineOptions& opt) {
  ReportSettings settings;
  settings.top_k = opt.top_k;
  settings.thresholds = opt.thresholds;
  settings.dedup = opt.dedup;
  settings.strip_set = opt.strip_set;
  settings.duplicates_removed = run.duplicates_removed;
  settings.excluded = run.excluded;
  auto report = build_report(tally(run.entries, run.verdicts), run.corpus_id, settings);
  auto all = run.diagnostics;
  all.insert(all.end(), report.diagnostics.begin(), report.diagnostics.end());
  report.diagnostics = condense(std::move(all), opt.diagnostics_per_code);
  return report;
}

std::vector<Decomposition> suggest_all(const CorpusRun& run, const RuleSet& rules) {
  std::vector<Decomposition> out;
  for (std::size_t i = 0; i < run.entries.size(); ++i)
    if (auto d = split(run.entries[i], run.verdicts[i], rules)) out.push_back(std::move(*d));
  return out;
}

std::vector<PublishedFigure> parse_published(std::string_view text, std::string_view origin) {
  std::vector<PublishedFigure> out;
  std::size_t lineno = 0;
  for (const auto raw : text_util::split_lines(text)) {
    ++lineno;
    const auto line = text_util::strip_comment(raw);
    if (text_util::trim(line).empty()) continue;
    const auto where = std::string(origin) + ":" + std::to_string(lineno);
    const auto cols = text_util::split(line, '\t');
    if (cols.size() != 2) throw ConfigError(where + ": expected name<TAB>value");
    const auto value = text_util::trim(cols[1]);
    Count v = 0;
    if (value.empty()) throw ConfigError(where + ": empty value");
    for (const char c : value) {
      if (c < '0' || c > '9') throw ConfigError(where + ": value is not a count");
      if (v > (std::numeric_limits<Count>::max() - 9) / 10) throw ConfigError(where + ": value too large");
      v = v * 10 + static_cast<Count>(c - '0');
    }
    out.push_back({std::string(text_util::trim(cols[0])), v});
  }
  return out;
}

}  // namespace koscope
