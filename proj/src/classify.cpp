#include "koscope/classify.hpp"

#include <algorithm>

#include "builtin_data.hpp"
#include "koscope/utf8.hpp"
#include "text_util.hpp"

namespace koscope {

std::string canonical_pattern(const std::vector<Coarse>& labels) {
  std::string out;
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += '+';
    out += labels[i].name();
  }
  return out;
}

SyntacticPattern pattern_of(const ConceptEntry& entry) {
  if (entry.tokens.empty())
    throw InputError("entry '" + entry.entry_id + "' has no tokens");
  SyntacticPattern p;
  p.labels.reserve(entry.tokens.size());
  for (const auto& t : entry.tokens) {
    if (!t.tag)
      throw InputError("token " + std::to_string(t.index) + " ('" + t.surface +
                       "') of entry '" + entry.entry_id + "' is untagged");
    p.labels.push_back(coarse(*t.tag));
  }
  p.canonical = canonical_pattern(p.labels);
  return p;
}

std::string_view to_string(MarkerKind k) {
  switch (k) {
    case MarkerKind::Conjunction:
      return "Conjunction";
    case MarkerKind::EtcExpression:
      return "EtcExpression";
    case MarkerKind::CommaParataxis:
      return "CommaParataxis";
    case MarkerKind::Parenthesis:
      return "Parenthesis";
    case MarkerKind::Adposition:
      return "Adposition";
  }
  return "?";
}

std::optional<MarkerKind> parse_marker_kind(std::string_view name) {
  for (auto k : {MarkerKind::Conjunction, MarkerKind::EtcExpression,
                 MarkerKind::CommaParataxis, MarkerKind::Parenthesis,
                 MarkerKind::Adposition})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

std::string_view to_string(DivisibilityType t) {
  return t == DivisibilityType::Enumeration ? "Enumeration" : "Composite";
}

DivisibilityType type_of(MarkerKind k) {
  switch (k) {
    case MarkerKind::Conjunction:
    case MarkerKind::EtcExpression:
    case MarkerKind::CommaParataxis:
      return DivisibilityType::Enumeration;
    case MarkerKind::Parenthesis:
    case MarkerKind::Adposition:
      return DivisibilityType::Composite;
  }
  return DivisibilityType::Enumeration;
}

std::string_view to_string(Verdict::Outcome o) {
  switch (o) {
    case Verdict::Outcome::Indivisible:
      return "Indivisible";
    case Verdict::Outcome::Divisible:
      return "Divisible";
    case Verdict::Outcome::Undetermined:
      return "Undetermined";
  }
  return "?";
}

bool Verdict::has_type(DivisibilityType t) const {
  return std::find(types.begin(), types.end(), t) != types.end();
}

// --- rule set --------------------------------------------------------------

namespace {

std::vector<std::string> list_items(const std::vector<std::string_view>& cols) {
  std::vector<std::string> out;
  for (std::size_t i = 1; i < cols.size(); ++i) {
    const auto item = text_util::trim(cols[i]);
    if (!item.empty()) out.emplace_back(item);
  }
  return out;
}

RuleSet::Template parse_template(std::string_view text, std::string_view predicate) {
  RuleSet::Template t;
  t.items = parse_pattern(text);
  if (t.items.empty()) throw ConfigError("empty template");
  for (const auto& item : t.items)
    if (!item.agree.empty()) throw ConfigError("agree= is not allowed in rule templates");
  predicate = text_util::trim(predicate);
  if (predicate == "same-case")
    t.same_case = true;
  else if (!predicate.empty())
    throw ConfigError("unknown predicate '" + std::string(predicate) + "'");
  return t;
}

void append_list(std::string& out, std::string_view key, const std::vector<std::string>& items) {
  if (items.empty()) return;
  out += key;
  for (const auto& i : items) {
    out += '\t';
    out += i;
  }
  out += '\n';
}

}  // namespace

RuleSet RuleSet::parse(std::string_view text, std::string_view origin) {
  RuleSet rs;
  std::size_t lineno = 0;
  for (const auto raw : text_util::split_lines(text)) {
    ++lineno;
    const auto line = text_util::strip_comment(raw);
    if (text_util::trim(line).empty()) continue;
    const auto where = std::string(origin) + ":" + std::to_string(lineno);
    const auto cols = text_util::split(line, '\t');
    const auto key = text_util::trim(cols[0]);
    try {
      if (key == "rule") {
        if (cols.size() < 3 || cols.size() > 4)
          throw ConfigError("expected rule<TAB>id<TAB>template[<TAB>predicate]");
        const auto id = std::string(text_util::trim(cols[1]));
        if (id.empty()) throw ConfigError("empty rule id");
        auto tmpl = parse_template(cols[2], cols.size() == 4 ? cols[3] : "");
        if (!rs.rules_.empty() && rs.rules_.back().id == id) {
          rs.rules_.back().alternatives.push_back(std::move(tmpl));
        } else {
          for (const auto& r : rs.rules_)
            if (r.id == id) throw ConfigError("rule id " + id + " is not unique");
          rs.rules_.push_back({id, {std::move(tmpl)}});
        }
      } else if (key == "conjunction") {
        for (auto& s : list_items(cols)) rs.conjunctions_.push_back(utf8::to_lower(s));
      } else if (key == "etc") {
        for (auto& s : list_items(cols)) rs.etc_phrases_.push_back(utf8::to_lower(s));
      } else if (key == "etc-pronoun") {
        for (auto& s : list_items(cols)) rs.etc_pronouns_.push_back(utf8::to_lower(s));
      } else if (key == "inversion") {
        if (cols.size() != 2) throw ConfigError("expected inversion<TAB>template");
        rs.inversions_.push_back(parse_template(cols[1], ""));
      } else {
        throw ConfigError("unknown directive '" + std::string(key) + "'");
      }
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
  }
  if (rs.rules_.empty()) throw ConfigError(std::string(origin) + ": no rules");
  return rs;
}

RuleSet RuleSet::load(const std::string& path) {
  return parse(text_util::read_file(path), path);
}

const RuleSet& RuleSet::builtin() {
  static const RuleSet rs = parse(builtin::rules(), "<builtin rules>");
  return rs;
}

std::string RuleSet::to_text() const {
  std::string out;
  for (const auto& r : rules_) {
    for (const auto& alt : r.alternatives) {
      out += "rule\t" + r.id + '\t' + to_string(alt.items);
      if (alt.same_case) out += "\tsame-case";
      out += '\n';
    }
  }
  append_list(out, "conjunction", conjunctions_);
  append_list(out, "etc", etc_phrases_);
  append_list(out, "etc-pronoun", etc_pronouns_);
  for (const auto& inv : inversions_) out += "inversion\t" + to_string(inv.items) + '\n';
  return out;
}

// --- matching --------------------------------------------------------------

bool matches_template(const RuleSet::Template& tmpl, const std::vector<Token>& tokens) {
  if (tokens.size() != tmpl.items.size()) return false;
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (!tokens[i].tag || !matches(tmpl.items[i], *tokens[i].tag)) return false;
  }
  if (tmpl.same_case) {
    const auto& first = tokens.front().tag->grammatical_case;
    if (!first) return false;
    for (const auto& t : tokens)
      if (t.tag->grammatical_case != first) return false;
  }
  return true;
}

namespace {

bool listed(const std::vector<std::string>& list, std::string_view word) {
  return std::find(list.begin(), list.end(), word) != list.end();
}

std::string lemma_key(const Token& t) {
  return utf8::to_lower(t.lemma ? *t.lemma : t.surface);
}

// Lowercased surface without trailing periods ("etc." and "etc" compare equal).
std::string phrase_key(std::string_view word) {
  auto s = utf8::to_lower(word);
  while (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

bool is_coordinating(const Token& t, const RuleSet& rules) {
  return t.tag && t.tag->category == Category::Conjunction &&
         t.tag->subtype != Subtype::Subordinative &&
         (!t.lemma || listed(rules.conjunctions(), lemma_key(t)));
}

bool is_punct(const Token& t, PunctClass pc) {
  if (!t.tag) return false;
  const auto c = coarse(*t.tag);
  return c.label == CoarseLabel::Punct && c.punct == pc;
}

// Length of the longest etc phrase starting at token i, 0 when none.
std::size_t etc_phrase_at(const std::vector<Token>& tokens, std::size_t i,
                          const RuleSet& rules) {
  std::size_t best = 0;
  for (const auto& phrase : rules.etc_phrases()) {
    const auto words = text_util::split_ws(phrase);
    if (words.empty() || i + words.size() > tokens.size()) continue;
    bool ok = true;
    for (std::size_t k = 0; k < words.size() && ok; ++k) {
      const auto& tok = tokens[i + k];
      ok = tok.kind != TokenKind::Punct && phrase_key(tok.surface) == phrase_key(words[k]);
    }
    if (ok) best = std::max(best, words.size());
  }
  return best;
}

}  // namespace

std::vector<DivisibilityMarker> scan_markers(const ConceptEntry& entry, const RuleSet& rules) {
  const auto& tokens = entry.tokens;
  const auto n = tokens.size();
  std::vector<DivisibilityMarker> markers;
  std::vector<bool> consumed(n, false);

  for (std::size_t i = 0; i < n;) {
    if (const auto len = etc_phrase_at(tokens, i, rules)) {
      DivisibilityMarker m{MarkerKind::EtcExpression, {}};
      for (std::size_t k = i; k < i + len; ++k) {
        m.token_indices.push_back(k);
        consumed[k] = true;
      }
      markers.push_back(std::move(m));
      i += len;
    } else {
      ++i;
    }
  }

  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (consumed[i] || consumed[i + 1] || !is_coordinating(tokens[i], rules)) continue;
    const auto& next = tokens[i + 1];
    if (next.tag && next.tag->category == Category::Pronoun &&
        next.tag->subtype == Subtype::Indefinite &&
        listed(rules.etc_pronouns(), lemma_key(next))) {
      markers.push_back({MarkerKind::EtcExpression, {i, i + 1}});
      consumed[i] = consumed[i + 1] = true;
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    if (!consumed[i] && is_coordinating(tokens[i], rules))
      markers.push_back({MarkerKind::Conjunction, {i}});

  std::vector<std::size_t> commas;
  for (std::size_t i = 0; i < n; ++i)
    if (is_punct(tokens[i], PunctClass::Comma)) commas.push_back(i);
  if (commas.size() >= 2 ||
      (commas.size() == 1 &&
       std::none_of(rules.inversions().begin(), rules.inversions().end(),
                    [&](const RuleSet::Template& t) { return matches_template(t, tokens); })))
    markers.push_back({MarkerKind::CommaParataxis, commas});

  std::vector<std::size_t> open;
  for (std::size_t i = 0; i < n; ++i) {
    if (is_punct(tokens[i], PunctClass::OpenParen)) {
      open.push_back(i);
    } else if (is_punct(tokens[i], PunctClass::CloseParen) && !open.empty()) {
      markers.push_back({MarkerKind::Parenthesis, {open.back(), i}});
      open.pop_back();
    }
  }

  for (std::size_t i = 0; i < n; ++i)
    if (tokens[i].tag && tokens[i].tag->category == Category::Adposition)
      markers.push_back({MarkerKind::Adposition, {i}});

  std::stable_sort(markers.begin(), markers.end(),
                   [](const DivisibilityMarker& a, const DivisibilityMarker& b) {
                     return a.token_indices.front() < b.token_indices.front();
                   });
  return markers;
}

std::optional<std::string> match_indivisible(const ConceptEntry& entry, const RuleSet& rules) {
  for (const auto& rule : rules.rules())
    for (const auto& alt : rule.alternatives)
      if (matches_template(alt, entry.tokens)) return rule.id;
  return std::nullopt;
}

Verdict classify(const ConceptEntry& entry, const RuleSet& rules) {
  Verdict v;
  v.pattern = pattern_of(entry);
  v.markers = scan_markers(entry, rules);
  if (!v.markers.empty()) {
    v.outcome = Verdict::Outcome::Divisible;
    for (const auto& m : v.markers) {
      const auto t = type_of(m.kind);
      if (!v.has_type(t)) v.types.push_back(t);
    }
    std::sort(v.types.begin(), v.types.end());
    return v;
  }
  if (auto id = match_indivisible(entry, rules)) {
    v.outcome = Verdict::Outcome::Indivisible;
    v.rule_id = std::move(*id);
    return v;
  }
  v.outcome = Verdict::Outcome::Undetermined;
  v.reason = "no rule matched";
  return v;
}

std::string verdict_detail(const Verdict& v) {
  switch (v.outcome) {
    case Verdict::Outcome::Indivisible:
      return v.rule_id;
    case Verdict::Outcome::Undetermined:
      return v.reason;
    case Verdict::Outcome::Divisible:
      break;
  }
  std::string out;
  for (std::size_t i = 0; i < v.types.size(); ++i) {
    if (i) out += '+';
    out += to_string(v.types[i]);
  }
  out += ':';
  for (const auto& m : v.markers) {
    out += ' ';
    out += to_string(m.kind);
    out += '@';
    for (std::size_t i = 0; i < m.token_indices.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(m.token_indices[i]);
    }
  }
  return out;
}

std::string verdict_tsv_row(const ConceptEntry& entry, const Verdict& v) {
  return entry.entry_id + '\t' + v.pattern.canonical + '\t' +
         std::string(to_string(v.outcome)) + '\t' + verdict_detail(v) + '\n';
}

}  // namespace koscope
