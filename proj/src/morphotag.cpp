#include "koscope/morphotag.hpp"

#include <algorithm>

#include "builtin_data.hpp"
#include "text_util.hpp"

namespace koscope {

namespace {

std::optional<FeatureSlot> parse_slot(std::string_view name) {
  if (name == "subtype") return FeatureSlot::Subtype;
  if (name == "degree") return FeatureSlot::Degree;
  if (name == "gender") return FeatureSlot::Gender;
  if (name == "number") return FeatureSlot::Number;
  if (name == "case") return FeatureSlot::Case;
  return std::nullopt;
}

bool valid_value(FeatureSlot slot, std::string_view value) {
  switch (slot) {
    case FeatureSlot::Subtype:
      return parse_subtype(value).has_value();
    case FeatureSlot::Degree:
      return parse_degree(value).has_value();
    case FeatureSlot::Gender:
      return parse_gender(value).has_value();
    case FeatureSlot::Number:
      return parse_number(value).has_value();
    case FeatureSlot::Case:
      return parse_case(value).has_value();
  }
  return false;
}

bool is_inflectional(FeatureSlot s) {
  return s == FeatureSlot::Gender || s == FeatureSlot::Number ||
         s == FeatureSlot::Case;
}

// Sets one feature from its value name; returns false when the value is not
// legal for the tag's category.
bool assign(MorphoTag& tag, FeatureSlot slot, std::string_view value) {
  switch (slot) {
    case FeatureSlot::Subtype: {
      const auto st = parse_subtype(value);
      const auto& allowed = allowed_subtypes(tag.category);
      if (!st || std::find(allowed.begin(), allowed.end(), *st) == allowed.end())
        return false;
      tag.subtype = st;
      return true;
    }
    case FeatureSlot::Degree: {
      const auto d = parse_degree(value);
      if (!d || tag.category != Category::Adjective) return false;
      tag.degree = d;
      tag.subtype = parse_subtype(value);
      return true;
    }
    case FeatureSlot::Gender:
      tag.gender = parse_gender(value);
      return tag.gender.has_value();
    case FeatureSlot::Number:
      tag.number = parse_number(value);
      return tag.number.has_value();
    case FeatureSlot::Case:
      tag.grammatical_case = parse_case(value);
      return tag.grammatical_case.has_value();
  }
  return false;
}

std::optional<std::string> value_name(FeatureSlot slot, const MorphoTag& t) {
  switch (slot) {
    case FeatureSlot::Subtype:
      if (t.subtype) return std::string(to_string(*t.subtype));
      break;
    case FeatureSlot::Degree:
      if (t.degree) return std::string(to_string(*t.degree));
      break;
    case FeatureSlot::Gender:
      if (t.gender) return std::string(to_string(*t.gender));
      break;
    case FeatureSlot::Number:
      if (t.number) return std::string(to_string(*t.number));
      break;
    case FeatureSlot::Case:
      if (t.grammatical_case) return std::string(to_string(*t.grammatical_case));
      break;
  }
  return std::nullopt;
}

}  // namespace

std::string_view to_string(FeatureSlot s) {
  switch (s) {
    case FeatureSlot::Subtype:
      return "subtype";
    case FeatureSlot::Degree:
      return "degree";
    case FeatureSlot::Gender:
      return "gender";
    case FeatureSlot::Number:
      return "number";
    case FeatureSlot::Case:
      return "case";
  }
  return "?";
}

TagsetMapping TagsetMapping::parse(std::string_view text, std::string_view origin) {
  TagsetMapping m;
  std::size_t lineno = 0;
  for (const auto& raw : text_util::split_lines(text)) {
    ++lineno;
    const auto line = text_util::strip_comment(raw);
    if (text_util::trim(line).empty()) continue;
    const auto where = std::string(origin) + ":" + std::to_string(lineno);
    const auto cols = text_util::split(line, '\t');
    if (cols[0] == "@absent") {
      if (cols.size() != 2) throw ConfigError(where + ": @absent takes one code");
      m.absent_code_ = std::string(text_util::trim(cols[1]));
      continue;
    }
    if (!cols[0].empty() && cols[0][0] == '@') {
      const auto slot = parse_slot(cols[0].substr(1));
      if (!slot || cols.size() != 3)
        throw ConfigError(where + ": expected @slot<TAB>code<TAB>Value");
      const auto code = std::string(text_util::trim(cols[1]));
      const auto value = std::string(text_util::trim(cols[2]));
      if (!valid_value(*slot, value))
        throw ConfigError(where + ": unknown " + std::string(to_string(*slot)) +
                          " value '" + value + "'");
      if (!m.decode_codes_[*slot].emplace(code, value).second)
        throw ConfigError(where + ": duplicate code '" + code + "'");
      m.encode_codes_[*slot].emplace(value, code);
      continue;
    }
    if (cols.size() != 3)
      throw ConfigError(where + ": expected prefix<TAB>category<TAB>layout");
    Row row;
    row.prefix = std::string(text_util::trim(cols[0]));
    const auto cat = parse_category(text_util::trim(cols[1]));
    if (row.prefix.empty() || !cat)
      throw ConfigError(where + ": bad prefix or category '" + std::string(cols[1]) + "'");
    row.category = *cat;
    const auto layout = text_util::trim(cols[2]);
    if (layout != "-" && !layout.empty()) {
      for (auto item : text_util::split(layout, ',')) {
        item = text_util::trim(item);
        if (const auto eq = item.find('='); eq != std::string_view::npos) {
          if (item.substr(0, eq) != "subtype")
            throw ConfigError(where + ": only subtype can be a constant");
          const auto st = parse_subtype(item.substr(eq + 1));
          const auto& allowed = allowed_subtypes(row.category);
          if (!st || std::find(allowed.begin(), allowed.end(), *st) == allowed.end())
            throw ConfigError(where + ": bad constant '" + std::string(item) + "'");
          row.fixed_subtype = st;
          continue;
        }
        const auto slot = parse_slot(item);
        if (!slot) throw ConfigError(where + ": unknown slot '" + std::string(item) + "'");
        if (is_inflectional(*slot) && !is_inflected(row.category))
          throw ConfigError(where + ": " + std::string(to_string(row.category)) +
                            " is not inflected");
        if (*slot == FeatureSlot::Degree && row.category != Category::Adjective)
          throw ConfigError(where + ": degree slot is for adjectives only");
        row.slots.push_back(*slot);
      }
    }
    for (const auto& other : m.rows_)
      if (other.prefix == row.prefix)
        throw ConfigError(where + ": duplicate prefix '" + row.prefix + "'");
    m.rows_.push_back(std::move(row));
  }
  if (m.rows_.empty()) throw ConfigError(std::string(origin) + ": no tag rows");
  for (const auto& [slot, codes] : m.decode_codes_)
    for (const auto& [code, value] : codes)
      if (code.size() != m.code_width_ || code == m.absent_code_)
        throw ConfigError(std::string(origin) + ": code '" + code +
                          "' must be " + std::to_string(m.code_width_) +
                          " characters and differ from the absent code");
  return m;
}

TagsetMapping TagsetMapping::load(const std::string& path) {
  return parse(text_util::read_file(path), path);
}

const TagsetMapping& TagsetMapping::builtin() {
  static const TagsetMapping mapping = parse(builtin::tagset(), "<builtin tagset>");
  return mapping;
}

MorphoTag TagsetMapping::decode(std::string_view tag, Diagnostics* diags) const {
  const Row* best = nullptr;
  for (const auto& row : rows_) {
    if (tag.substr(0, row.prefix.size()) == row.prefix &&
        (!best || row.prefix.size() > best->prefix.size()))
      best = &row;
  }
  if (!best)
    throw UnknownTagError("unknown category prefix in tag '" + std::string(tag) + "'");

  MorphoTag out;
  out.category = best->category;
  if (best->fixed_subtype) out.subtype = best->fixed_subtype;
  auto report = [&](const std::string& msg) {
    if (diags) warn(*diags, "tag-feature", msg, std::string(tag));
  };

  std::size_t pos = best->prefix.size();
  for (const auto slot : best->slots) {
    if (pos + code_width_ > tag.size()) {
      report("tag '" + std::string(tag) + "' is missing its " +
             std::string(to_string(slot)) + " code");
      pos = tag.size();
      continue;
    }
    const auto code = std::string(tag.substr(pos, code_width_));
    pos += code_width_;
    if (code == absent_code_) continue;
    const std::string* value = nullptr;
    if (const auto table = decode_codes_.find(slot); table != decode_codes_.end())
      if (const auto it = table->second.find(code); it != table->second.end())
        value = &it->second;
    if (!value || !assign(out, slot, *value)) {
      report("unknown " + std::string(to_string(slot)) + " code '" + code +
             "' in tag '" + std::string(tag) + "'");
    }
  }
  if (pos < tag.size())
    report("trailing characters '" + std::string(tag.substr(pos)) +
           "' ignored in tag '" + std::string(tag) + "'");
  return out;
}

std::optional<std::string> TagsetMapping::code_for(FeatureSlot slot,
                                                   const MorphoTag& t) const {
  const auto value = value_name(slot, t);
  if (!value) return absent_code_;
  const auto table = encode_codes_.find(slot);
  if (table == encode_codes_.end()) return std::nullopt;
  const auto it = table->second.find(*value);
  if (it == table->second.end()) return std::nullopt;
  return it->second;
}

std::string TagsetMapping::encode(const MorphoTag& tag) const {
  if (const auto bad = validate(tag)) throw Error("cannot encode invalid tag: " + *bad);
  for (const auto& row : rows_) {
    if (row.category != tag.category) continue;
    if (row.fixed_subtype && tag.subtype != row.fixed_subtype) continue;
    const auto has_slot = [&](FeatureSlot s) {
      return std::find(row.slots.begin(), row.slots.end(), s) != row.slots.end();
    };
    // every present feature must be representable by this row
    const bool subtype_ok = !tag.subtype || row.fixed_subtype ||
                            has_slot(FeatureSlot::Subtype) ||
                            has_slot(FeatureSlot::Degree);
    if (!subtype_ok || (tag.degree && !has_slot(FeatureSlot::Degree)) ||
        (tag.gender && !has_slot(FeatureSlot::Gender)) ||
        (tag.number && !has_slot(FeatureSlot::Number)) ||
        (tag.grammatical_case && !has_slot(FeatureSlot::Case)))
      continue;
    std::string out = row.prefix;
    bool ok = true;
    for (const auto slot : row.slots) {
      const auto code = code_for(slot, tag);
      if (!code) {
        ok = false;
        break;
      }
      out += *code;
    }
    if (ok) return out;
  }
  throw Error("tagset has no encoding for a " + std::string(to_string(tag.category)) +
              " tag with these features");
}

std::string_view to_string(CoarseLabel label) {
  static constexpr std::string_view kNames[] = {
      "N", "Adj", "Art", "Pn", "V", "Num", "Advb",
      "Adp", "Conj", "Pt", "Res", "Abbr", "Punct", "Dig"};
  return kNames[static_cast<std::size_t>(label)];
}

std::optional<CoarseLabel> parse_coarse_label(std::string_view name) {
  for (int i = 0; i <= static_cast<int>(CoarseLabel::Dig); ++i) {
    const auto label = static_cast<CoarseLabel>(i);
    if (to_string(label) == name) return label;
  }
  return std::nullopt;
}

std::string_view Coarse::name() const { return to_string(label); }

Coarse coarse(const MorphoTag& tag) {
  switch (tag.category) {
    case Category::Noun:
      return {CoarseLabel::N};
    case Category::Adjective:
      return {CoarseLabel::Adj};
    case Category::Article:
      return {CoarseLabel::Art};
    case Category::Pronoun:
      return {CoarseLabel::Pn};
    case Category::Verb:
      return {CoarseLabel::V};
    case Category::Numeral:
      return {CoarseLabel::Num};
    case Category::Adverb:
      return {CoarseLabel::Advb};
    case Category::Adposition:
      return {CoarseLabel::Adp};
    case Category::Conjunction:
      return {CoarseLabel::Conj};
    case Category::Particle:
      return {CoarseLabel::Pt};
    case Category::Residual:
      return {CoarseLabel::Res};
    case Category::Abbreviation:
      return {CoarseLabel::Abbr};
    case Category::Digit:
      return {CoarseLabel::Dig};
    case Category::Punctuation: {
      PunctClass pc = PunctClass::Other;
      if (tag.subtype == Subtype::Comma) pc = PunctClass::Comma;
      if (tag.subtype == Subtype::OpenBracket) pc = PunctClass::OpenParen;
      if (tag.subtype == Subtype::CloseBracket) pc = PunctClass::CloseParen;
      return {CoarseLabel::Punct, pc};
    }
  }
  return {CoarseLabel::Res};
}

}  // namespace koscope
