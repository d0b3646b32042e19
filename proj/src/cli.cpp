#include "koscope/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>

#include "koscope/pipeline.hpp"
#include "koscope/tokenize.hpp"
#include "text_util.hpp"

namespace koscope {

namespace {

namespace fs = std::filesystem;

struct Settings {
  std::vector<std::string> inputs;
  std::string format;
  std::string lang = "el";
  std::string rules_path;
  std::string tagset_path;
  std::string lexicon_path;
  std::string context_path;
  int top_k = 10;
  std::string out_dir;
  std::string report_format = "json";
  std::string strip = std::string(kDefaultStripSet);
  bool no_dedup = false;
  bool suggest = false;
  std::string base_iri = "urn:koscope:proposal:";
  std::string thresholds = "10,30";
  std::vector<std::string> label_properties;
  std::string published_path;
  unsigned threads = 1;
  // classify
  std::string label;
  std::string tags;
  std::string lemmas;
};

// Loaded configuration files; Resources points into this.
struct Loaded {
  std::unique_ptr<TagsetMapping> mapping;
  std::unique_ptr<RuleSet> rules;
  std::unique_ptr<Lexicon> lexicon;
  std::unique_ptr<ContextRules> context;
  Resources res;
};

// Configuration files that cannot be read are configuration errors.
template <typename F>
auto load_config_file(const std::string& what, F&& f) {
  try {
    return f();
  } catch (const ConfigError&) {
    throw;
  } catch (const InputError& e) {
    throw ConfigError(what + ": " + e.what());
  }
}

Loaded load_resources(const Settings& s) {
  Loaded l;
  if (!s.tagset_path.empty()) {
    l.mapping = std::make_unique<TagsetMapping>(
        load_config_file("tagset", [&] { return TagsetMapping::load(s.tagset_path); }));
    l.res.mapping = l.mapping.get();
  }
  if (!s.rules_path.empty()) {
    l.rules = std::make_unique<RuleSet>(
        load_config_file("rules", [&] { return RuleSet::load(s.rules_path); }));
    l.res.rules = l.rules.get();
  }
  if (!s.context_path.empty()) {
    l.context = std::make_unique<ContextRules>(
        load_config_file("context rules", [&] { return ContextRules::load(s.context_path); }));
    l.res.context = l.context.get();
  }
  if (!s.lexicon_path.empty()) {
    l.lexicon = std::make_unique<Lexicon>(load_config_file(
        "lexicon", [&] { return Lexicon::load(s.lexicon_path, *l.res.mapping); }));
    l.res.lexicon = l.lexicon.get();
  }
  return l;
}

PipelineOptions options_of(const Settings& s) {
  PipelineOptions o;
  if (!is_valid_lang(s.lang)) throw ConfigError("invalid language tag '" + s.lang + "'");
  o.lang = s.lang;
  o.strip_set = s.strip;
  o.dedup = !s.no_dedup;
  if (s.top_k < 1) throw ConfigError("--top-k must be at least 1");
  o.top_k = static_cast<std::size_t>(s.top_k);
  o.thresholds = parse_thresholds(s.thresholds);
  o.threads = std::max(1u, s.threads);
  return o;
}

std::vector<CorpusSource> sources_of(const Settings& s) {
  if (s.inputs.empty()) throw ConfigError("at least one --input is required");
  std::optional<FormatHint> format;
  if (!s.format.empty()) {
    format = parse_format_hint(s.format);
    if (!format) throw ConfigError("unknown --format '" + s.format + "'");
  }
  std::vector<CorpusSource> out;
  for (const auto& path : s.inputs) {
    auto src = make_source(path, format);
    if (!s.label_properties.empty()) src.label_properties = s.label_properties;
    src.check();
    out.push_back(std::move(src));
  }
  return out;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw InputError("cannot write " + path.string());
  f << content;
  if (!f) throw InputError("cannot write " + path.string());
}

fs::path out_dir(const Settings& s) {
  fs::path dir(s.out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw InputError("cannot create output directory " + s.out_dir + ": " + ec.message());
  return dir;
}

void print_warnings(const Diagnostics& diags, std::ostream& err) {
  std::size_t warnings = 0;
  for (const auto& d : diags)
    if (d.severity != Severity::Info) ++warnings;
  if (warnings) err << "koscope: " << warnings << " warning(s); see the report diagnostics\n";
}

int cmd_analyze(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto opt = options_of(s);
  const auto format = parse_report_format(s.report_format);
  if (!format) throw ConfigError("unknown --report-format '" + s.report_format + "'");
  if (s.suggest && !rdf::is_absolute_iri(s.base_iri))
    throw ConfigError("--base-iri is not an absolute IRI: '" + s.base_iri + "'");
  if (s.suggest && s.out_dir.empty()) throw ConfigError("--suggest needs --out");
  std::vector<PublishedFigure> published;
  if (!s.published_path.empty())
    published = load_config_file("published figures", [&] {
      return parse_published(text_util::read_file(s.published_path), s.published_path);
    });
  const auto sources = sources_of(s);
  auto loaded = load_resources(s);

  for (const auto& src : sources) {
    const auto run = run_source(src, loaded.res, opt);
    auto report = make_report(run, opt);
    if (!published.empty()) audit_published(report, published);
    const auto text = render(report, *format);
    print_warnings(report.diagnostics, err);
    if (s.out_dir.empty()) {
      out << text;
      continue;
    }
    const auto dir = out_dir(s);
    write_file(dir / (run.corpus_id + std::string(extension(*format))), text);
    if (s.suggest) {
      const auto ds = suggest_all(run, *loaded.res.rules);
      write_file(dir / (run.corpus_id + ".proposals.nt"), proposal_ntriples(ds, s.base_iri));
      write_file(dir / (run.corpus_id + ".proposals.json"),
                 proposal_sidecar_json(ds, s.base_iri));
    }
  }
  return kExitOk;
}

int cmd_suggest(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto opt = options_of(s);
  if (!rdf::is_absolute_iri(s.base_iri))
    throw ConfigError("--base-iri is not an absolute IRI: '" + s.base_iri + "'");
  const auto sources = sources_of(s);
  auto loaded = load_resources(s);
  for (const auto& src : sources) {
    const auto run = run_source(src, loaded.res, opt);
    const auto ds = suggest_all(run, *loaded.res.rules);
    err << "koscope: " << run.corpus_id << ": " << ds.size() << " decomposition(s)\n";
    if (s.out_dir.empty()) {
      out << proposal_ntriples(ds, s.base_iri);
      continue;
    }
    const auto dir = out_dir(s);
    write_file(dir / (run.corpus_id + ".proposals.nt"), proposal_ntriples(ds, s.base_iri));
    write_file(dir / (run.corpus_id + ".proposals.json"), proposal_sidecar_json(ds, s.base_iri));
  }
  return kExitOk;
}

int cmd_tag(const Settings& s, std::ostream& out, std::ostream& err) {
  const auto opt = options_of(s);
  const auto sources = sources_of(s);
  auto loaded = load_resources(s);
  for (const auto& src : sources) {
    const auto run = run_source(src, loaded.res, opt);
    print_warnings(condense(run.diagnostics, 0), err);
    const auto tsv = tokens_tsv(run.entries, *loaded.res.mapping);
    std::string verdicts(kVerdictTsvHeader);
    for (std::size_t i = 0; i < run.entries.size(); ++i)
      verdicts += verdict_tsv_row(run.entries[i], run.verdicts[i]);
    if (s.out_dir.empty()) {
      out << tsv;
      continue;
    }
    const auto dir = out_dir(s);
    write_file(dir / (run.corpus_id + ".tokens.tsv"), tsv);
    write_file(dir / (run.corpus_id + ".verdicts.tsv"), verdicts);
  }
  return kExitOk;
}

int cmd_classify(const Settings& s, std::ostream& out, std::ostream&) {
  if (!is_valid_lang(s.lang)) throw ConfigError("invalid language tag '" + s.lang + "'");
  auto loaded = load_resources(s);
  const auto tags = text_util::split_ws(s.tags);
  if (tags.empty()) throw InputError("--tags is empty");
  ConceptEntry e;
  e.entry_id = "cli:1";
  e.lang = s.lang;
  e.corpus_id = "cli";
  if (!s.label.empty()) {
    e.raw_label = normalize_whitespace(s.label);
    e.tokens = tokenize(e.raw_label);
    if (e.tokens.size() != tags.size())
      throw InputError("the label has " + std::to_string(e.tokens.size()) + " tokens but " +
                       std::to_string(tags.size()) + " tags were given");
  } else {
    for (std::size_t i = 0; i < tags.size(); ++i) {
      Token t;
      t.surface = "w" + std::to_string(i + 1);
      t.space_before = i ? " " : "";
      t.index = i;
      e.tokens.push_back(std::move(t));
    }
    e.raw_label = detokenize(e.tokens);
  }
  const auto lemmas = text_util::split_ws(s.lemmas);
  if (!lemmas.empty() && lemmas.size() != tags.size())
    throw InputError("--lemmas needs one lemma per tag");
  Diagnostics diags;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    e.tokens[i].tag = loaded.res.mapping->decode(tags[i], &diags);
    if (!lemmas.empty() && lemmas[i] != "-") e.tokens[i].lemma = std::string(lemmas[i]);
  }
  if (!diags.empty()) throw InputError(diags.front().message);
  const auto v = classify(e, *loaded.res.rules);

  nlohmann::ordered_json j;
  j["label"] = e.raw_label;
  nlohmann::ordered_json toks = nlohmann::ordered_json::array();
  for (const auto& t : e.tokens)
    toks.push_back({{"surface", t.surface},
                    {"tag", loaded.res.mapping->encode(*t.tag)},
                    {"coarse", coarse(*t.tag).name()}});
  j["tokens"] = std::move(toks);
  j["pattern"] = v.pattern.canonical;
  j["outcome"] = to_string(v.outcome);
  switch (v.outcome) {
    case Verdict::Outcome::Indivisible:
      j["rule_id"] = v.rule_id;
      break;
    case Verdict::Outcome::Divisible: {
      nlohmann::ordered_json types = nlohmann::ordered_json::array();
      for (const auto t : v.types) types.push_back(to_string(t));
      j["types"] = std::move(types);
      nlohmann::ordered_json markers = nlohmann::ordered_json::array();
      for (const auto& m : v.markers)
        markers.push_back({{"kind", to_string(m.kind)}, {"tokens", m.token_indices}});
      j["markers"] = std::move(markers);
      break;
    }
    case Verdict::Outcome::Undetermined:
      j["reason"] = v.reason;
      break;
  }
  out << j.dump(2) << "\n";
  return kExitOk;
}

int cmd_dump_rules(const Settings& s, std::ostream& out, std::ostream&) {
  auto loaded = load_resources(s);
  out << loaded.res.rules->to_text();
  return kExitOk;
}

void add_resource_flags(CLI::App& app, Settings& s) {
  app.add_option("--rules", s.rules_path, "Rule set file (default: built-in)")
      ->envname("KOSCOPE_RULES");
  app.add_option("--tagset", s.tagset_path, "Tagset mapping file (default: built-in)");
}

void add_input_flags(CLI::App& app, Settings& s) {
  app.add_option("-i,--input", s.inputs, "Input file (repeatable)")->required();
  app.add_option("--format", s.format,
                 "turtle, ntriples, lines, tagged-xml or token-tsv (default: from extension)");
  app.add_option("--lang", s.lang, "Language of the labels")->capture_default_str();
  app.add_option("--lexicon", s.lexicon_path, "Lexicon for tagging raw labels");
  app.add_option("--context-rules", s.context_path,
                 "Disambiguation rules (default: built-in Greek rules)");
  app.add_option("--strip", s.strip, "Symbols removed from labels")->capture_default_str();
  app.add_flag("--no-dedup", s.no_dedup, "Keep duplicate labels");
  app.add_option("--label-property", s.label_properties,
                 "Label property IRI to harvest from RDF (repeatable; default skos:prefLabel)");
  app.add_option("--threads", s.threads, "Classification threads")->capture_default_str();
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Settings s;
  CLI::App app{"Classify KOS labels as indivisible or divisible concepts and report corpus "
               "statistics.",
               "koscope"};
  app.set_config("--config", "", "Read options from a TOML/INI file; flags override it");
  app.require_subcommand(1);

  auto* analyze = app.add_subcommand("analyze", "Run the full pipeline and write reports");
  add_input_flags(*analyze, s);
  add_resource_flags(*analyze, s);
  analyze->add_option("--top-k", s.top_k, "Rows in the pattern table")->capture_default_str();
  analyze->add_option("--out", s.out_dir, "Output directory (default: report to stdout)");
  analyze->add_option("--report-format", s.report_format, "json, csv or markdown")
      ->capture_default_str();
  analyze->add_flag("--suggest", s.suggest, "Also write decomposition proposals");
  analyze->add_option("--base-iri", s.base_iri, "Namespace for proposed concepts")
      ->capture_default_str();
  analyze->add_option("--thresholds", s.thresholds,
                      "Suitability bands in percent: high-below,low-above")
      ->capture_default_str();
  analyze->add_option("--published", s.published_path,
                      "Published figures to check (name<TAB>value per line)");

  auto* classify_cmd = app.add_subcommand("classify", "Classify one label from inline tags");
  classify_cmd->add_option("label", s.label, "Label text (optional)");
  classify_cmd->add_option("--tags", s.tags, "Space separated tag strings, one per token")
      ->required();
  classify_cmd->add_option("--lemmas", s.lemmas, "Space separated lemmas ('-' for none)");
  classify_cmd->add_option("--lang", s.lang, "Language of the label")->capture_default_str();
  add_resource_flags(*classify_cmd, s);

  auto* tag = app.add_subcommand("tag", "Tokenize, tag and classify; write token and verdict tables");
  add_input_flags(*tag, s);
  add_resource_flags(*tag, s);
  tag->add_option("--out", s.out_dir, "Output directory (default: token table to stdout)");

  auto* suggest = app.add_subcommand("suggest", "Propose decompositions of divisible labels");
  add_input_flags(*suggest, s);
  add_resource_flags(*suggest, s);
  suggest->add_option("--out", s.out_dir, "Output directory (default: N-Triples to stdout)");
  suggest->add_option("--base-iri", s.base_iri, "Namespace for proposed concepts")
      ->capture_default_str();

  auto* dump = app.add_subcommand("dump-rules", "Print the effective rule set");
  add_resource_flags(*dump, s);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << "koscope 0.1.0\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "koscope: " << e.what() << "\n";
    return kExitConfig;
  }

  try {
    if (analyze->parsed()) return cmd_analyze(s, out, err);
    if (classify_cmd->parsed()) return cmd_classify(s, out, err);
    if (tag->parsed()) return cmd_tag(s, out, err);
    if (suggest->parsed()) return cmd_suggest(s, out, err);
    if (dump->parsed()) return cmd_dump_rules(s, out, err);
  } catch (const ConfigError& e) {
    err << "koscope: configuration error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const InputError& e) {
    err << "koscope: input error: " << e.what() << "\n";
    return kExitInput;
  } catch (const Error& e) {
    err << "koscope: error: " << e.what() << "\n";
    return kExitInput;
  }
  return kExitConfig;
}

}  // namespace koscope
