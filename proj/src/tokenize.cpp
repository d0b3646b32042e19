#include "koscope/tokenize.hpp"

#include <algorithm>
#include <unordered_set>

#include "koscope/diagnostics.hpp"
#include "koscope/utf8.hpp"

namespace koscope {

namespace {

struct Cp {
  char32_t value;
  std::size_t begin;  // byte offsets into the label
  std::size_t end;
};

std::vector<Cp> decode(std::string_view text) {
  std::vector<Cp> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto begin = pos;
    auto cp = utf8::next(text, pos);
    if (!cp) {
      // Keep malformed bytes as opaque symbols so tokenize stays total.
      pos = begin + 1;
      out.push_back({0xFFFD, begin, pos});
      continue;
    }
    out.push_back({*cp, begin, pos});
  }
  return out;
}

bool is_punct(char32_t c) {
  switch (c) {
    case U',': case U'.': case U';': case U':': case U'!': case U'?':
    case U'(': case U')': case U'[': case U']': case U'{': case U'}':
    case U'"': case U'\'': case U'-':
    case 0x00AB: case 0x00BB:                 // « »
    case 0x2018: case 0x2019: case 0x201C: case 0x201D: case 0x201E:
    case 0x00B7: case 0x0387: case 0x037E:    // middle dot, ano teleia, ;
    case 0x2026:                              // …
    case 0x2013: case 0x2014:                 // – —
      return true;
    default:
      return false;
  }
}

// Marks that always form their own token wherever they occur.
bool always_split(char32_t c) {
  switch (c) {
    case U'(': case U')': case U'[': case U']': case U'{': case U'}':
    case U';': case U'!': case U'?': case U'"':
    case 0x00AB: case 0x00BB: case 0x201C: case 0x201D: case 0x201E:
    case 0x00B7: case 0x0387: case 0x037E: case 0x2026:
      return true;
    default:
      return false;
  }
}

bool is_dash(char32_t c) { return c == U'-' || c == 0x2013 || c == 0x2014; }

bool is_edge_punct(char32_t c) {
  return c == U'.' || c == U'\'' || c == 0x2018 || c == 0x2019 || c == U',' ||
         c == U':';
}

bool is_symbol(char32_t c) {
  return !is_punct(c) && !utf8::is_letter(c) && !utf8::is_decimal_digit(c) &&
         !utf8::is_space(c);
}

bool is_digit_group(const std::vector<Cp>& cps, std::size_t b, std::size_t e) {
  if (b >= e) return false;
  if (!utf8::is_decimal_digit(cps[b].value) ||
      !utf8::is_decimal_digit(cps[e - 1].value))
    return false;
  for (std::size_t i = b; i < e; ++i) {
    const auto c = cps[i].value;
    if (utf8::is_decimal_digit(c)) continue;
    if ((c == U'.' || c == U',') && utf8::is_decimal_digit(cps[i - 1].value) &&
        utf8::is_decimal_digit(cps[i + 1].value))
      continue;
    return false;
  }
  return true;
}

TokenKind kind_of(const std::vector<Cp>& cps, std::size_t b, std::size_t e) {
  if (is_digit_group(cps, b, e)) return TokenKind::Digit;
  if (e - b == 1) {
    if (is_punct(cps[b].value)) return TokenKind::Punct;
    if (is_symbol(cps[b].value)) return TokenKind::Symbol;
  }
  return TokenKind::Word;
}

class Splitter {
 public:
  Splitter(std::string_view label, const std::vector<Cp>& cps,
           std::vector<Token>& out)
      : label_(label), cps_(cps), out_(out) {}

  void chunk(std::size_t b, std::size_t e, std::string gap) {
    gap_ = std::move(gap);
    // Split on marks that are always separate, and on commas/colons that do
    // not sit between two digits.
    std::size_t seg = b;
    for (std::size_t i = b; i < e; ++i) {
      const auto c = cps_[i].value;
      bool split = always_split(c);
      if ((c == U',' || c == U':') && !(i > b && i + 1 < e &&
                                        utf8::is_decimal_digit(cps_[i - 1].value) &&
                                        utf8::is_decimal_digit(cps_[i + 1].value)))
        split = true;
      if (split) {
        segment(seg, i);
        emit(i, i + 1);
        seg = i + 1;
      }
    }
    segment(seg, e);
  }

 private:
  void segment(std::size_t b, std::size_t e) {
    if (b >= e) return;
    // A run of dashes ("-" between spaces) is punctuation, one token per mark.
    if (std::all_of(cps_.begin() + b, cps_.begin() + e,
                    [](const Cp& c) { return is_dash(c.value); })) {
      for (auto i = b; i < e; ++i) emit(i, i + 1);
      return;
    }
    std::size_t lb = b;
    std::size_t le = e;
    while (lb < le && (is_symbol(cps_[lb].value) || is_edge_punct(cps_[lb].value)) &&
           !is_digit_group(cps_, lb, le))
      ++lb;
    while (le > lb && (is_symbol(cps_[le - 1].value) || is_edge_punct(cps_[le - 1].value)) &&
           !is_digit_group(cps_, lb, le))
      --le;
    for (auto i = b; i < lb; ++i) emit(i, i + 1);
    if (lb < le) emit(lb, le);
    for (auto i = le; i < e; ++i) emit(i, i + 1);
  }

  void emit(std::size_t b, std::size_t e) {
    Token t;
    const auto byte_b = cps_[b].begin;
    const auto byte_e = cps_[e - 1].end;
    t.surface = std::string(label_.substr(byte_b, byte_e - byte_b));
    t.kind = kind_of(cps_, b, e);
    t.index = out_.size();
    t.space_before = std::move(gap_);
    gap_.clear();
    out_.push_back(std::move(t));
  }

  std::string_view label_;
  const std::vector<Cp>& cps_;
  std::vector<Token>& out_;
  std::string gap_;
};

std::unordered_set<char32_t> code_points(std::string_view text) {
  std::unordered_set<char32_t> set;
  for (const auto& cp : decode(text)) set.insert(cp.value);
  return set;
}

}  // namespace

std::string normalize_whitespace(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  bool pending_space = false;
  for (const auto& cp : decode(text)) {
    if (utf8::is_space(cp.value)) {
      pending_space = !out.empty();
      continue;
    }
    if (pending_space) out.push_back(' ');
    pending_space = false;
    out.append(text.substr(cp.begin, cp.end - cp.begin));
  }
  return out;
}

std::string preprocess(std::string_view raw_label, std::string_view strip_set) {
  const auto strip = code_points(strip_set);
  std::string kept;
  kept.reserve(raw_label.size());
  for (const auto& cp : decode(raw_label)) {
    if (strip.count(cp.value)) continue;
    kept.append(raw_label.substr(cp.begin, cp.end - cp.begin));
  }
  auto out = normalize_whitespace(kept);
  if (out.empty())
    throw InputError("label is empty after preprocessing: \"" +
                     std::string(raw_label) + "\"");
  return out;
}

std::vector<Token> tokenize(std::string_view label) {
  const auto cps = decode(label);
  std::vector<Token> out;
  Splitter splitter(label, cps, out);
  std::size_t i = 0;
  std::size_t gap_begin = 0;
  while (i < cps.size()) {
    if (utf8::is_space(cps[i].value)) {
      ++i;
      continue;
    }
    const auto start = i;
    while (i < cps.size() && !utf8::is_space(cps[i].value)) ++i;
    const auto gap_end = cps[start].begin;
    splitter.chunk(start, i, std::string(label.substr(gap_begin, gap_end - gap_begin)));
    gap_begin = cps[i - 1].end;
  }
  if (!out.empty()) out.back().space_after = std::string(label.substr(gap_begin));
  return out;
}

std::string detokenize(const std::vector<Token>& tokens) {
  std::string out;
  for (const auto& t : tokens) {
    out += t.space_before;
    out += t.surface;
    out += t.space_after;
  }
  return out;
}

Subtype punctuation_class(std::string_view surface) {
  std::size_t pos = 0;
  const auto cp = utf8::next(surface, pos);
  if (!cp) return Subtype::OtherPunctuation;
  switch (*cp) {
    case U',':
      return Subtype::Comma;
    case U'.': case U'!': case U'?': case 0x00B7: case 0x0387: case 0x037E:
    case 0x2026:
      return Subtype::Terminal;
    case U'(': case U'[': case U'{':
      return Subtype::OpenBracket;
    case U')': case U']': case U'}':
      return Subtype::CloseBracket;
    default:
      return Subtype::OtherPunctuation;
  }
}

DedupResult deduplicate(std::vector<ConceptEntry> entries) {
  DedupResult result;
  std::unordered_set<std::string> seen;
  result.entries.reserve(entries.size());
  for (auto& e : entries) {
    if (seen.insert(normalize_whitespace(e.raw_label)).second)
      result.entries.push_back(std::move(e));
    else
      ++result.removed;
  }
  return result;
}

UnitCounts make_unit_counts(std::size_t entries, std::size_t tokens,
                            std::size_t words) {
  UnitCounts c{entries, tokens, words, std::nullopt, std::nullopt};
  if (entries > 0) {
    c.words_per_entry = static_cast<double>(words) / static_cast<double>(entries);
    c.tokens_per_entry = static_cast<double>(tokens) / static_cast<double>(entries);
  }
  return c;
}

UnitCounts unit_counts(const std::vector<ConceptEntry>& entries) {
  std::size_t tokens = 0;
  std::size_t words = 0;
  for (const auto& e : entries) {
    tokens += e.tokens.size();
    words += static_cast<std::size_t>(
        std::count_if(e.tokens.begin(), e.tokens.end(),
                      [](const Token& t) { return t.kind == TokenKind::Word; }));
  }
  return make_unit_counts(entries.size(), tokens, words);
}

std::string dump_tokens_tsv(const std::vector<Token>& tokens) {
  std::string out = "index\tsurface\tkind\n";
  for (const auto& t : tokens) {
    out += std::to_string(t.index);
    out += '\t';
    out += t.surface;
    out += '\t';
    out += to_string(t.kind);
    out += '\n';
  }
  return out;
}

}  // namespace koscope
