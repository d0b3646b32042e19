#include "koscope/lexicon_tagger.hpp"

#include <algorithm>

#include "builtin_data.hpp"
#include "koscope/tokenize.hpp"
#include "koscope/utf8.hpp"
#include "text_util.hpp"

namespace koscope {

Lexicon Lexicon::parse(std::string_view text, const TagsetMapping& mapping,
                       std::string_view origin) {
  Lexicon lex;
  std::size_t lineno = 0;
  for (const auto raw : text_util::split_lines(text)) {
    ++lineno;
    const auto line = text_util::strip_comment(raw);
    if (text_util::trim(line).empty()) continue;
    const auto where = std::string(origin) + ":" + std::to_string(lineno);
    const auto cols = text_util::split(line, '\t');
    if (cols.size() < 2 || cols.size() > 3 || cols[0].empty())
      throw ConfigError(where + ": expected surface<TAB>tag[,tag...][<TAB>lemma]");
    std::vector<MorphoTag> tags;
    for (const auto code : text_util::split(text_util::trim(cols[1]), ',')) {
      Diagnostics diags;
      try {
        tags.push_back(mapping.decode(text_util::trim(code), &diags));
      } catch (const UnknownTagError& e) {
        throw ConfigError(where + ": " + e.what());
      }
      if (!diags.empty()) throw ConfigError(where + ": " + diags.front().message);
    }
    std::optional<std::string> lemma;
    if (cols.size() == 3 && !text_util::trim(cols[2]).empty())
      lemma = std::string(text_util::trim(cols[2]));
    lex.add(std::string(cols[0]), std::move(tags), std::move(lemma));
  }
  return lex;
}

Lexicon Lexicon::load(const std::string& path, const TagsetMapping& mapping) {
  return parse(text_util::read_file(path), mapping, path);
}

void Lexicon::add(std::string surface, std::vector<MorphoTag> tags,
                  std::optional<std::string> lemma) {
  auto& entry = entries_[std::move(surface)];
  for (auto& t : tags)
    if (std::find(entry.tags.begin(), entry.tags.end(), t) == entry.tags.end())
      entry.tags.push_back(std::move(t));
  if (lemma && !entry.lemma) entry.lemma = std::move(lemma);
}

const Lexicon::Entry* Lexicon::lookup(std::string_view surface) const {
  if (auto it = entries_.find(std::string(surface)); it != entries_.end())
    return &it->second;
  if (auto it = entries_.find(utf8::to_lower(surface)); it != entries_.end())
    return &it->second;
  return nullptr;
}

ContextRules ContextRules::parse(std::string_view text, std::string_view origin) {
  ContextRules out;
  std::size_t lineno = 0;
  for (const auto raw : text_util::split_lines(text)) {
    ++lineno;
    const auto line = text_util::strip_comment(raw);
    if (text_util::trim(line).empty()) continue;
    const auto where = std::string(origin) + ":" + std::to_string(lineno);
    const auto cols = text_util::split(line, '\t');
    if (cols.size() != 3)
      throw ConfigError(where + ": expected rule_id<TAB>trigger<TAB>choose");
    ContextRule rule;
    rule.id = std::string(text_util::trim(cols[0]));
    for (const auto& r : out.rules_)
      if (r.id == rule.id) throw ConfigError(where + ": duplicate rule id " + rule.id);
    try {
      auto parts = text_util::split_ws(cols[1]);
      if (!parts.empty() && parts.front() == "^") {
        rule.anchored_start = true;
        parts.erase(parts.begin());
      }
      if (!parts.empty() && parts.back() == "$") {
        rule.anchored_end = true;
        parts.pop_back();
      }
      const auto focus = std::find(parts.begin(), parts.end(), "_");
      if (focus == parts.end() || std::count(parts.begin(), parts.end(), "_") != 1)
        throw ConfigError("trigger needs exactly one '_'");
      for (auto it = parts.begin(); it != focus; ++it)
        rule.before.push_back(parse_pattern_item(*it));
      for (auto it = focus + 1; it != parts.end(); ++it)
        rule.after.push_back(parse_pattern_item(*it));
      rule.choose = parse_pattern_item(text_util::trim(cols[2]));
      if (!rule.choose.agree.empty())
        throw ConfigError("the choose filter cannot use agree=");
    } catch (const ConfigError& e) {
      throw ConfigError(where + ": " + e.what());
    }
    out.rules_.push_back(std::move(rule));
  }
  return out;
}

ContextRules ContextRules::load(const std::string& path) {
  return parse(text_util::read_file(path), path);
}

const ContextRules& ContextRules::builtin_greek() {
  static const ContextRules rules =
      parse(builtin::context_rules_el(), "<builtin context rules>");
  return rules;
}

MorphoTag synthetic_tag(const Token& token) {
  MorphoTag t;
  switch (token.kind) {
    case TokenKind::Digit:
      t.category = Category::Digit;
      t.subtype = Subtype::Numbers;
      break;
    case TokenKind::Punct:
      t.category = Category::Punctuation;
      t.subtype = punctuation_class(token.surface);
      break;
    case TokenKind::Symbol:
    case TokenKind::Word:
      t.category = Category::Residual;
      t.subtype = token.kind == TokenKind::Symbol ? Subtype::Symbol : Subtype::ForeignWord;
      break;
  }
  return t;
}

namespace {

bool all_caps(std::string_view word) {
  std::size_t pos = 0;
  std::size_t letters = 0;
  while (pos < word.size()) {
    const auto cp = utf8::next(word, pos);
    if (!cp) return false;
    if (!utf8::is_letter(*cp)) continue;
    if (utf8::to_lower(*cp) == *cp) return false;
    ++letters;
  }
  return letters >= 2;
}

bool item_accepts(const PatternItem& item, const MorphoTag& neighbour,
                  const MorphoTag& candidate) {
  return matches(item, neighbour) &&
         (item.agree.empty() || agrees(neighbour, candidate, item.agree));
}

bool context_holds(const ContextRule& rule, std::size_t i,
                   const std::vector<std::vector<MorphoTag>>& candidates,
                   const std::vector<MorphoTag>& resolved,
                   const MorphoTag& candidate) {
  const auto n = candidates.size();
  if (rule.before.size() > i) return false;
  if (rule.anchored_start && rule.before.size() != i) return false;
  if (i + rule.after.size() >= n && !rule.after.empty()) return false;
  if (rule.anchored_end && i + rule.after.size() != n - 1) return false;
  const auto first = i - rule.before.size();
  for (std::size_t k = 0; k < rule.before.size(); ++k)
    if (!item_accepts(rule.before[k], resolved[first + k], candidate)) return false;
  for (std::size_t k = 0; k < rule.after.size(); ++k) {
    const auto& options = candidates[i + 1 + k];
    if (std::none_of(options.begin(), options.end(), [&](const MorphoTag& t) {
          return item_accepts(rule.after[k], t, candidate);
        }))
      return false;
  }
  return true;
}

}  // namespace

ConceptEntry lexicon_tag(const ConceptEntry& entry, const Lexicon& lexicon,
                         const ContextRules& rules, Diagnostics* diags) {
  ConceptEntry out = entry;
  const auto n = out.tokens.size();
  std::vector<std::vector<MorphoTag>> candidates(n);
  std::vector<std::optional<std::string>> lemmas(n);

  for (std::size_t i = 0; i < n; ++i) {
    const auto& tok = out.tokens[i];
    if (tok.kind != TokenKind::Word) {
      candidates[i] = {synthetic_tag(tok)};
      continue;
    }
    if (const auto* hit = lexicon.lookup(tok.surface); hit && !hit->tags.empty()) {
      candidates[i] = hit->tags;
      lemmas[i] = hit->lemma ? hit->lemma : utf8::to_lower(tok.surface);
      continue;
    }
    if (all_caps(tok.surface)) {
      MorphoTag abbr;
      abbr.category = Category::Abbreviation;
      abbr.subtype = Subtype::AllCaps;
      candidates[i] = {abbr};
    } else {
      candidates[i] = {synthetic_tag(tok)};
    }
    lemmas[i] = utf8::to_lower(tok.surface);
    if (diags)
      warn(*diags, "unknown-word", "'" + tok.surface + "' is not in the lexicon",
           entry.entry_id);
  }

  std::vector<MorphoTag> resolved(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& options = candidates[i];
    std::optional<MorphoTag> chosen;
    if (options.size() == 1) chosen = options.front();
    for (const auto& rule : rules.rules()) {
      if (chosen) break;
      for (const auto& cand : options) {
        if (matches(rule.choose, cand) && context_holds(rule, i, candidates, resolved, cand)) {
          chosen = cand;
          break;
        }
      }
    }
    if (!chosen) {
      chosen = options.front();
      if (diags)
        warn(*diags, "ambiguous-word",
             "no context rule resolved '" + out.tokens[i].surface +
                 "'; took the first lexicon tag",
             entry.entry_id);
    }
    resolved[i] = *chosen;
    out.tokens[i].tag = *chosen;
    if (!out.tokens[i].lemma) out.tokens[i].lemma = lemmas[i];
  }
  return out;
}

}  // namespace koscope
