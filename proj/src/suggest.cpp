#include "koscope/suggest.hpp"

#include <algorithm>
#include <map>
#include <set>

#include <json.hpp>

#include "koscope/tokenize.hpp"
#include "koscope/utf8.hpp"

namespace koscope {

const std::string kProvDerivedFrom = "http://www.w3.org/ns/prov#wasDerivedFrom";
const std::string kDctermsSource = "http://purl.org/dc/terms/source";

std::string_view to_string(Confidence c) { return c == Confidence::High ? "high" : "low"; }

namespace {

std::string span_label(const std::vector<Token>& tokens) {
  std::string out;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i) out += tokens[i].space_before;
    out += tokens[i].surface;
  }
  return out;
}

std::string hint_between(const std::vector<Token>& tokens, std::size_t from, std::size_t to) {
  for (std::size_t i = from; i < to; ++i) {
    const auto& t = tokens[i];
    if (t.tag && t.tag->category == Category::Adposition)
      return utf8::to_lower(t.lemma ? *t.lemma : t.surface);
  }
  for (std::size_t i = from; i < to; ++i) {
    const auto& t = tokens[i];
    if (t.tag && t.tag->category == Category::Punctuation &&
        (t.tag->subtype == Subtype::OpenBracket || t.tag->subtype == Subtype::CloseBracket))
      return "qualifier";
  }
  return "enumeration";
}

}  // namespace

std::optional<Decomposition> split(const ConceptEntry& entry, const Verdict& verdict,
                                   const RuleSet& rules) {
  if (verdict.outcome != Verdict::Outcome::Divisible) return std::nullopt;
  const auto n = entry.tokens.size();
  std::vector<bool> separator(n, false);
  for (const auto& m : verdict.markers)
    for (const auto i : m.token_indices)
      if (i < n) separator[i] = true;

  std::vector<std::pair<std::size_t, std::size_t>> spans;
  for (std::size_t i = 0; i < n;) {
    if (separator[i]) {
      ++i;
      continue;
    }
    const auto b = i;
    while (i < n && !separator[i]) ++i;
    const bool has_word = std::any_of(entry.tokens.begin() + static_cast<long>(b),
                                      entry.tokens.begin() + static_cast<long>(i),
                                      [](const Token& t) { return t.kind == TokenKind::Word; });
    if (has_word) spans.emplace_back(b, i);
  }
  if (spans.size() < 2) return std::nullopt;

  Decomposition d;
  d.source_id = entry.entry_id;
  d.source_label = entry.raw_label;
  d.lang = entry.lang;
  bool all_indivisible = true;
  for (std::size_t s = 0; s < spans.size(); ++s) {
    const auto [b, e] = spans[s];
    ConceptEntry sub;
    sub.entry_id = entry.entry_id + "/" + std::to_string(s + 1);
    sub.lang = entry.lang;
    sub.corpus_id = entry.corpus_id;
    sub.tokens.assign(entry.tokens.begin() + static_cast<long>(b),
                      entry.tokens.begin() + static_cast<long>(e));
    for (std::size_t k = 0; k < sub.tokens.size(); ++k) sub.tokens[k].index = k;
    sub.tokens.front().space_before.clear();
    sub.tokens.back().space_after.clear();
    sub.raw_label = span_label(sub.tokens);
    Constituent c{b, e, sub.raw_label, classify(sub, rules)};
    if (c.verdict.outcome != Verdict::Outcome::Indivisible) all_indivisible = false;
    if (s > 0) d.relation_hints.push_back(hint_between(entry.tokens, spans[s - 1].second, b));
    d.constituents.push_back(std::move(c));
  }
  d.confidence = all_indivisible ? Confidence::High : Confidence::Low;
  return d;
}

std::string slug(std::string_view label) {
  const auto lower = utf8::to_lower(label);
  std::string out;
  bool dash = false;
  std::size_t pos = 0;
  while (pos < lower.size()) {
    const auto before = pos;
    const auto cp = utf8::next(lower, pos);
    if (!cp) {
      pos = before + 1;
      dash = !out.empty();
      continue;
    }
    if (utf8::is_letter(*cp) || utf8::is_decimal_digit(*cp)) {
      if (dash) out += '-';
      dash = false;
      out.append(lower, before, pos - before);
    } else {
      dash = !out.empty();
    }
  }
  return out.empty() ? "concept" : out;
}

namespace {

// Plaintext and tagger ids ("corpus:12") are syntactically IRIs too; only
// hierarchical or URN identifiers count as links to a source concept.
bool source_is_iri(std::string_view id) {
  if (!rdf::is_absolute_iri(id)) return false;
  return id.find("://") != std::string_view::npos || id.rfind("urn:", 0) == 0;
}

}  // namespace

std::vector<rdf::Triple> emit_fragment(const Decomposition& d, std::string_view base_iri) {
  if (!rdf::is_absolute_iri(base_iri))
    throw ConfigError("base IRI is not an absolute IRI: '" + std::string(base_iri) + "'");
  const auto type = rdf::Term::iri(std::string(rdf::kRdfNs) + "type");
  const auto concept_class = rdf::Term::iri(std::string(rdf::kSkosNs) + "Concept");
  const auto pref = rdf::Term::iri(std::string(rdf::kSkosNs) + "prefLabel");
  const auto related = rdf::Term::iri(std::string(rdf::kSkosNs) + "related");
  const auto source = source_is_iri(d.source_id)
                          ? rdf::Term::iri(d.source_id)
                          : rdf::Term::literal(d.source_id);
  const auto prov = rdf::Term::iri(source.is_iri() ? kProvDerivedFrom : kDctermsSource);

  std::vector<rdf::Triple> out;
  std::vector<rdf::Term> nodes;
  std::set<std::string> seen;
  for (const auto& c : d.constituents) {
    auto node = rdf::Term::iri(std::string(base_iri) + slug(c.label));
    nodes.push_back(node);
    if (!seen.insert(node.value).second) continue;
    out.push_back({node, type, concept_class});
    out.push_back({node, pref, rdf::Term::literal(c.label, d.lang)});
    out.push_back({node, prov, source});
  }
  std::set<std::pair<std::string, std::string>> links;
  for (std::size_t i = 0; i + 1 < nodes.size(); ++i) {
    const auto& a = nodes[i];
    const auto& b = nodes[i + 1];
    if (a == b) continue;
    if (!links.insert(std::minmax(a.value, b.value)).second) continue;
    out.push_back({a, related, b});
  }
  return out;
}

std::string proposal_ntriples(const std::vector<Decomposition>& ds, std::string_view base_iri) {
  std::string out =
      "# PROPOSAL: candidate decompositions of divisible labels, for review.\n"
      "# These triples are not part of the source vocabulary.\n";
  for (const auto& d : ds) {
    auto id = d.source_id;
    std::replace(id.begin(), id.end(), '\n', ' ');
    std::replace(id.begin(), id.end(), '\r', ' ');
    out += "\n# source: " + id + " (" + std::string(to_string(d.confidence)) +
           " confidence)\n";
    for (const auto& t : emit_fragment(d, base_iri)) out += rdf::to_ntriples(t);
  }
  return out;
}

std::string proposal_sidecar_json(const std::vector<Decomposition>& ds,
                                  std::string_view base_iri) {
  using ojson = nlohmann::ordered_json;
  ojson concepts = ojson::object();
  ojson decompositions = ojson::array();
  if (!rdf::is_absolute_iri(base_iri))
    throw ConfigError("base IRI is not an absolute IRI: '" + std::string(base_iri) + "'");
  for (const auto& d : ds) {
    ojson dj;
    dj["source"] = d.source_id;
    dj["label"] = d.source_label;
    dj["confidence"] = to_string(d.confidence);
    ojson cs = ojson::array();
    for (const auto& c : d.constituents) {
      const auto iri = std::string(base_iri) + slug(c.label);
      cs.push_back({{"iri", iri},
                    {"label", c.label},
                    {"tokens", {c.begin, c.end}},
                    {"verdict", to_string(c.verdict.outcome)},
                    {"detail", verdict_detail(c.verdict)}});
      auto& entry = concepts[iri];
      if (entry.is_null()) {
        entry["label"] = c.label;
        entry["lang"] = d.lang;
        entry["sources"] = ojson::array();
      }
      ojson src = {{"entry_id", d.source_id}, {"confidence", to_string(d.confidence)}};
      if (std::find(entry["sources"].begin(), entry["sources"].end(), src) ==
          entry["sources"].end())
        entry["sources"].push_back(std::move(src));
    }
    dj["constituents"] = std::move(cs);
    dj["relation_hints"] = d.relation_hints;
    decompositions.push_back(std::move(dj));
  }
  ojson root;
  root["status"] = "proposal";
  root["base_iri"] = std::string(base_iri);
  root["concepts"] = std::move(concepts);
  root["decompositions"] = std::move(decompositions);
  return root.dump(2) + "\n";
}

}  // namespace koscope
