#include "koscope/token_pattern.hpp"

#include <algorithm>

#include "text_util.hpp"

namespace koscope {

namespace {

using Feature = PatternItem::Feature;

std::optional<Feature> parse_feature(std::string_view name) {
  if (name == "case") return Feature::Case;
  if (name == "gender") return Feature::Gender;
  if (name == "number") return Feature::Number;
  if (name == "subtype") return Feature::Subtype;
  if (name == "degree") return Feature::Degree;
  return std::nullopt;
}

bool valid_feature_value(Feature f, std::string_view v) {
  switch (f) {
    case Feature::Case:
      return parse_case(v).has_value();
    case Feature::Gender:
      return parse_gender(v).has_value();
    case Feature::Number:
      return parse_number(v).has_value();
    case Feature::Subtype:
      return parse_subtype(v).has_value();
    case Feature::Degree:
      return parse_degree(v).has_value();
  }
  return false;
}

bool valid_label(std::string_view l) {
  return parse_coarse_label(l) || l == "Comma" || l == "OPunct" ||
         l == "CPunct" || l == "Word" || l == "*";
}

bool label_matches(std::string_view label, const Coarse& c) {
  if (label == "*") return true;
  if (label == "Word")
    return c.label != CoarseLabel::Punct && c.label != CoarseLabel::Dig;
  if (label == "Comma")
    return c.label == CoarseLabel::Punct && c.punct == PunctClass::Comma;
  if (label == "OPunct")
    return c.label == CoarseLabel::Punct && c.punct == PunctClass::OpenParen;
  if (label == "CPunct")
    return c.label == CoarseLabel::Punct && c.punct == PunctClass::CloseParen;
  return c.name() == label;
}

}  // namespace

std::string_view to_string(Feature f) {
  switch (f) {
    case Feature::Case:
      return "case";
    case Feature::Gender:
      return "gender";
    case Feature::Number:
      return "number";
    case Feature::Subtype:
      return "subtype";
    case Feature::Degree:
      return "degree";
  }
  return "?";
}

PatternItem parse_pattern_item(std::string_view text) {
  PatternItem item;
  const auto bracket = text.find('[');
  const auto labels = text.substr(0, bracket);
  if (labels.empty()) throw ConfigError("empty pattern item '" + std::string(text) + "'");
  for (const auto l : text_util::split(labels, '|')) {
    if (!valid_label(l))
      throw ConfigError("unknown pattern label '" + std::string(l) + "' in '" +
                        std::string(text) + "'");
    item.labels.emplace_back(l);
  }
  if (bracket == std::string_view::npos) return item;
  if (text.back() != ']')
    throw ConfigError("unterminated '[' in pattern item '" + std::string(text) + "'");
  const auto body = text.substr(bracket + 1, text.size() - bracket - 2);
  for (const auto test : text_util::split(body, ',')) {
    const auto eq = test.find('=');
    if (eq == std::string_view::npos)
      throw ConfigError("expected feature=value in '" + std::string(text) + "'");
    const auto name = test.substr(0, eq);
    const auto values = test.substr(eq + 1);
    if (name == "agree") {
      for (const auto f : text_util::split(values, '+')) {
        const auto feature = parse_feature(f);
        if (!feature || *feature == Feature::Subtype || *feature == Feature::Degree)
          throw ConfigError("cannot agree on '" + std::string(f) + "'");
        item.agree.push_back(*feature);
      }
      continue;
    }
    const auto feature = parse_feature(name);
    if (!feature)
      throw ConfigError("unknown feature '" + std::string(name) + "' in '" +
                        std::string(text) + "'");
    PatternItem::Test t{*feature, {}};
    for (const auto v : text_util::split(values, '|')) {
      if (!valid_feature_value(*feature, v))
        throw ConfigError("unknown " + std::string(name) + " value '" +
                          std::string(v) + "'");
      t.values.emplace_back(v);
    }
    item.tests.push_back(std::move(t));
  }
  return item;
}

std::vector<PatternItem> parse_pattern(std::string_view text) {
  std::vector<PatternItem> items;
  for (const auto part : text_util::split_ws(text)) items.push_back(parse_pattern_item(part));
  return items;
}

std::string to_string(const PatternItem& item) {
  std::string out;
  for (std::size_t i = 0; i < item.labels.size(); ++i) {
    if (i) out += '|';
    out += item.labels[i];
  }
  if (item.tests.empty() && item.agree.empty()) return out;
  out += '[';
  bool first = true;
  for (const auto& t : item.tests) {
    if (!first) out += ',';
    first = false;
    out += to_string(t.feature);
    out += '=';
    for (std::size_t i = 0; i < t.values.size(); ++i) {
      if (i) out += '|';
      out += t.values[i];
    }
  }
  if (!item.agree.empty()) {
    if (!first) out += ',';
    out += "agree=";
    for (std::size_t i = 0; i < item.agree.size(); ++i) {
      if (i) out += '+';
      out += to_string(item.agree[i]);
    }
  }
  out += ']';
  return out;
}

std::string to_string(const std::vector<PatternItem>& items) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ' ';
    out += to_string(items[i]);
  }
  return out;
}

std::optional<std::string> feature_value(const MorphoTag& tag, Feature f) {
  switch (f) {
    case Feature::Case:
      if (tag.grammatical_case) return std::string(to_string(*tag.grammatical_case));
      break;
    case Feature::Gender:
      if (tag.gender) return std::string(to_string(*tag.gender));
      break;
    case Feature::Number:
      if (tag.number) return std::string(to_string(*tag.number));
      break;
    case Feature::Subtype:
      if (tag.subtype) return std::string(to_string(*tag.subtype));
      break;
    case Feature::Degree:
      if (tag.degree) return std::string(to_string(*tag.degree));
      break;
  }
  return std::nullopt;
}

bool matches(const PatternItem& item, const MorphoTag& tag) {
  const auto c = coarse(tag);
  if (std::none_of(item.labels.begin(), item.labels.end(),
                   [&](const std::string& l) { return label_matches(l, c); }))
    return false;
  for (const auto& t : item.tests) {
    const auto v = feature_value(tag, t.feature);
    if (!v || std::find(t.values.begin(), t.values.end(), *v) == t.values.end())
      return false;
  }
  return true;
}

bool agrees(const MorphoTag& a, const MorphoTag& b,
            const std::vector<Feature>& features) {
  for (const auto f : features) {
    const auto va = feature_value(a, f);
    if (!va || va != feature_value(b, f)) return false;
  }
  return true;
}

}  // namespace koscope
