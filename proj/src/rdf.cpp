#include "koscope/rdf.hpp"

#include <cstdio>
#include <map>
#include <optional>

#include "koscope/diagnostics.hpp"
#include "koscope/utf8.hpp"

namespace koscope::rdf {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }

bool iri_forbidden(char32_t c) {
  return c <= 0x20 || c == '<' || c == '>' || c == '"' || c == '{' || c == '}' ||
         c == '|' || c == '^' || c == '`' || c == '\\';
}

// Characters that end a prefixed name or blank node label.
bool name_delimiter(char c) {
  return is_ws(c) || c == ';' || c == ',' || c == '(' || c == ')' || c == '[' ||
         c == ']' || c == '"' || c == '\'' || c == '<' || c == '>' || c == '#' ||
         c == '^' || c == '@';
}

class Parser {
 public:
  Parser(std::string_view text, Syntax syntax, std::string_view base)
      : text_(text), syntax_(syntax), base_(base) {}

  std::vector<Triple> run() {
    skip();
    while (!eof()) {
      statement();
      skip();
    }
    return std::move(out_);
  }

 private:
  bool turtle() const { return syntax_ == Syntax::Turtle; }
  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }

  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void advance(std::size_t n = 1) { pos_ += n; }

  void skip() {
    while (!eof()) {
      if (is_ws(peek())) {
        advance();
      } else if (peek() == '#') {
        while (!eof() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    advance();
  }

  bool keyword(std::string_view kw, bool case_insensitive) {
    if (pos_ + kw.size() > text_.size()) return false;
    for (std::size_t i = 0; i < kw.size(); ++i) {
      char a = text_[pos_ + i];
      char b = kw[i];
      if (case_insensitive) {
        if (a >= 'A' && a <= 'Z') a = static_cast<char>(a + 32);
        if (b >= 'A' && b <= 'Z') b = static_cast<char>(b + 32);
      }
      if (a != b) return false;
    }
    const char after = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : ' ';
    return is_ws(after) || after == '<' || after == '#';
  }

  void statement() {
    if (turtle()) {
      if (peek() == '@') {
        if (keyword("@prefix", false)) {
          advance(7);
          prefix_decl();
          expect('.');
          return;
        }
        if (keyword("@base", false)) {
          advance(5);
          skip();
          base_ = iri_ref();
          expect('.');
          return;
        }
        fail("unknown directive");
      }
      if (keyword("PREFIX", true)) {
        advance(6);
        prefix_decl();
        return;
      }
      if (keyword("BASE", true)) {
        advance(4);
        skip();
        base_ = iri_ref();
        return;
      }
    }
    triples();
    expect('.');
  }

  void prefix_decl() {
    skip();
    const auto start = pos_;
    while (!eof() && peek() != ':' && !name_delimiter(peek())) advance();
    if (peek() != ':') fail("expected prefix name ending in ':'");
    const auto name = std::string(text_.substr(start, pos_ - start));
    advance();
    skip();
    prefixes_[name] = iri_ref();
  }

  void triples() {
    skip();
    Term subj;
    if (turtle() && peek() == '[') {
      subj = blank_property_list();
      skip();
      if (peek() == '.') return;  // "[ ... ] ."
    } else {
      subj = subject();
    }
    predicate_object_list(subj);
  }

  Term subject() {
    skip();
    if (peek() == '<') return Term::iri(iri_ref());
    if (peek() == '_' && peek(1) == ':') return blank_label();
    if (turtle() && peek() == '(') return collection();
    if (turtle()) return Term::iri(prefixed_name());
    fail("expected subject IRI or blank node");
  }

  void predicate_object_list(const Term& subj) {
    while (true) {
      skip();
      const auto pred = verb();
      object_list(subj, pred);
      if (!turtle()) return;
      skip();
      if (peek() != ';') return;
      while (peek() == ';') {
        advance();
        skip();
      }
      // a trailing ';' may be followed directly by the statement end
      if (peek() == '.' || peek() == ']' || eof()) return;
    }
  }

  Term verb() {
    skip();
    if (turtle() && peek() == 'a' &&
        (is_ws(peek(1)) || peek(1) == '<' || peek(1) == '[' || peek(1) == '"')) {
      advance();
      return Term::iri(std::string(kRdfNs) + "type");
    }
    if (peek() == '<') return Term::iri(iri_ref());
    if (turtle()) return Term::iri(prefixed_name());
    fail("expected predicate IRI");
  }

  void object_list(const Term& subj, const Term& pred) {
    while (true) {
      auto obj = object();
      out_.push_back({subj, pred, std::move(obj)});
      if (!turtle()) return;
      skip();
      if (peek() != ',') return;
      advance();
    }
  }

  Term object() {
    skip();
    const char c = peek();
    if (c == '<') return Term::iri(iri_ref());
    if (c == '_' && peek(1) == ':') return blank_label();
    if (c == '"' || (turtle() && c == '\'')) return rdf_literal();
    if (!turtle()) fail("expected object");
    if (c == '[') return blank_property_list();
    if (c == '(') return collection();
    if (is_digit(c) || c == '+' || c == '-' || (c == '.' && is_digit(peek(1))))
      return numeric_literal();
    if (keyword("true", false) || (pos_ + 4 <= text_.size() && text_.substr(pos_, 4) == "true" &&
                                   (pos_ + 4 == text_.size() || name_delimiter(text_[pos_ + 4]) ||
                                    text_[pos_ + 4] == '.'))) {
      advance(4);
      return Term::literal("true", {}, std::string(kXsdNs) + "boolean");
    }
    if (pos_ + 5 <= text_.size() && text_.substr(pos_, 5) == "false" &&
        (pos_ + 5 == text_.size() || name_delimiter(text_[pos_ + 5]) || text_[pos_ + 5] == '.')) {
      advance(5);
      return Term::literal("false", {}, std::string(kXsdNs) + "boolean");
    }
    return Term::iri(prefixed_name());
  }

  Term blank_property_list() {
    expect('[');
    auto node = fresh_blank();
    skip();
    if (peek() == ']') {
      advance();
      return node;
    }
    predicate_object_list(node);
    expect(']');
    return node;
  }

  Term collection() {
    expect('(');
    std::vector<Term> items;
    skip();
    while (peek() != ')') {
      if (eof()) fail("unterminated collection");
      items.push_back(object());
      skip();
    }
    advance();
    const auto nil = Term::iri(std::string(kRdfNs) + "nil");
    if (items.empty()) return nil;
    const auto first = Term::iri(std::string(kRdfNs) + "first");
    const auto rest = Term::iri(std::string(kRdfNs) + "rest");
    const auto head = fresh_blank();
    auto cur = head;
    for (std::size_t i = 0; i < items.size(); ++i) {
      out_.push_back({cur, first, items[i]});
      auto next = i + 1 < items.size() ? fresh_blank() : nil;
      out_.push_back({cur, rest, next});
      cur = next;
    }
    return head;
  }

  Term fresh_blank() { return Term::blank("genid" + std::to_string(++blank_counter_)); }

  Term blank_label() {
    advance(2);
    const auto start = pos_;
    while (!eof() && !name_delimiter(peek()) && peek() != ',' ) advance();
    while (pos_ > start && text_[pos_ - 1] == '.') --pos_;
    if (pos_ == start) fail("empty blank node label");
    return Term::blank("b_" + std::string(text_.substr(start, pos_ - start)));
  }

  // Reference resolution against the base, with dot-segment removal.
  std::string resolve(std::string iri) const {
    if (is_absolute_iri(iri) || base_.empty()) return iri;
    const auto colon = base_.find(':');
    const auto scheme = base_.substr(0, colon + 1);
    auto rest = std::string_view(base_).substr(colon + 1);
    std::string authority;
    if (rest.substr(0, 2) == "//") {
      const auto end = rest.find_first_of("/?#", 2);
      authority = std::string(rest.substr(0, end));
      rest = end == std::string_view::npos ? std::string_view{} : rest.substr(end);
    }
    const auto base_path = std::string(rest.substr(0, rest.find_first_of("?#")));
    const auto base_no_frag = base_.substr(0, base_.find('#'));

    if (iri.rfind("//", 0) == 0) return scheme + iri;
    if (iri.empty()) return base_no_frag;
    if (iri[0] == '#') return base_no_frag + iri;
    if (iri[0] == '?') return scheme + authority + base_path + iri;

    const auto tail_at = iri.find_first_of("?#");
    const auto ref_path = iri.substr(0, tail_at);
    const auto tail = tail_at == std::string::npos ? std::string() : iri.substr(tail_at);
    std::string merged;
    if (ref_path[0] == '/') {
      merged = ref_path;
    } else if (!authority.empty() && base_path.empty()) {
      merged = "/" + ref_path;
    } else {
      const auto slash = base_path.rfind('/');
      merged = (slash == std::string::npos ? std::string() : base_path.substr(0, slash + 1)) +
               ref_path;
    }
    return scheme + authority + remove_dot_segments(merged) + tail;
  }

  static std::string remove_dot_segments(std::string_view in) {
    std::string out;
    while (!in.empty()) {
      if (in.substr(0, 3) == "../") {
        in.remove_prefix(3);
      } else if (in.substr(0, 2) == "./") {
        in.remove_prefix(2);
      } else if (in.substr(0, 3) == "/./") {
        in.remove_prefix(2);
      } else if (in == "/.") {
        in = "/";
      } else if (in.substr(0, 4) == "/../" || in == "/..") {
        in = in.size() == 3 ? std::string_view("/") : in.substr(3);
        const auto cut = out.rfind('/');
        out.erase(cut == std::string::npos ? 0 : cut);
      } else if (in == "." || in == "..") {
        in = {};
      } else {
        const auto next = in.find('/', in[0] == '/' ? 1 : 0);
        out += in.substr(0, next);
        in = next == std::string_view::npos ? std::string_view{} : in.substr(next);
      }
    }
    return out;
  }

  std::string iri_ref() {
    skip();
    if (peek() != '<') fail("expected '<'");
    advance();
    std::string out;
    while (true) {
      if (eof()) fail("unterminated IRI");
      const char c = peek();
      if (c == '>') {
        advance();
        break;
      }
      if (c == '\\') {
        append_uchar(out);
        continue;
      }
      const auto before = pos_;
      const auto cp = utf8::next(text_, pos_);
      if (!cp) fail("invalid UTF-8 in IRI");
      if (iri_forbidden(*cp)) {
        pos_ = before;
        fail("character not allowed in IRI");
      }
      out.append(text_.substr(before, pos_ - before));
    }
    if (syntax_ == Syntax::NTriples && !is_absolute_iri(out)) fail("relative IRI in N-Triples");
    return resolve(std::move(out));
  }

  void append_uchar(std::string& out) {
    advance();  // backslash
    const char kind = peek();
    std::size_t digits = kind == 'u' ? 4 : kind == 'U' ? 8 : 0;
    if (!digits) fail("bad escape");
    advance();
    char32_t cp = 0;
    for (std::size_t i = 0; i < digits; ++i) {
      const char h = peek();
      int v;
      if (h >= '0' && h <= '9') v = h - '0';
      else if (h >= 'a' && h <= 'f') v = h - 'a' + 10;
      else if (h >= 'A' && h <= 'F') v = h - 'A' + 10;
      else fail("bad hex digit in escape");
      cp = cp * 16 + static_cast<char32_t>(v);
      advance();
    }
    if (cp > 0x10FFFF || (cp >= 0xD800 && cp <= 0xDFFF)) fail("escape out of range");
    utf8::append(out, cp);
  }

  std::string prefixed_name() {
    skip();
    const auto start = pos_;
    while (!eof() && peek() != ':' && !name_delimiter(peek())) advance();
    if (peek() != ':') {
      pos_ = start;
      fail("expected IRI, prefixed name or literal");
    }
    const auto prefix = std::string(text_.substr(start, pos_ - start));
    advance();
    std::string local;
    while (!eof() && !name_delimiter(peek()) && peek() != ',') {
      if (peek() == '\\') {
        advance();
        if (eof()) fail("dangling escape in prefixed name");
      }
      local.push_back(peek());
      advance();
    }
    while (!local.empty() && local.back() == '.') {
      local.pop_back();
      --pos_;
    }
    const auto it = prefixes_.find(prefix);
    if (it == prefixes_.end()) {
      pos_ = start;
      fail("undeclared prefix '" + prefix + ":'");
    }
    return it->second + local;
  }

  Term rdf_literal() {
    auto value = string_literal();
    if (peek() == '@') {
      advance();
      const auto start = pos_;
      while (!eof() && (is_alpha(peek()) || is_digit(peek()) || peek() == '-')) advance();
      if (pos_ == start) fail("empty language tag");
      return Term::literal(std::move(value), std::string(text_.substr(start, pos_ - start)));
    }
    if (peek() == '^' && peek(1) == '^') {
      advance(2);
      std::string dt = peek() == '<' ? iri_ref() : (turtle() ? prefixed_name() : "");
      if (dt.empty()) fail("expected datatype IRI");
      return Term::literal(std::move(value), {}, std::move(dt));
    }
    return Term::literal(std::move(value));
  }

  std::string string_literal() {
    const char quote = peek();
    const bool long_form =
        turtle() && peek(1) == quote && peek(2) == quote;
    advance(long_form ? 3 : 1);
    std::string out;
    while (true) {
      if (eof()) fail("unterminated string literal");
      const char c = peek();
      if (long_form) {
        if (c == quote && peek(1) == quote && peek(2) == quote) {
          // a closing run may be preceded by up to two quote characters
          while (peek(3) == quote) {
            out.push_back(quote);
            advance();
          }
          advance(3);
          break;
        }
      } else {
        if (c == quote) {
          advance();
          break;
        }
        if (c == '\n' || c == '\r') fail("newline in string literal");
      }
      if (c == '\\') {
        switch (peek(1)) {
          case 't': out.push_back('\t'); advance(2); continue;
          case 'b': out.push_back('\b'); advance(2); continue;
          case 'n': out.push_back('\n'); advance(2); continue;
          case 'r': out.push_back('\r'); advance(2); continue;
          case 'f': out.push_back('\f'); advance(2); continue;
          case '"': out.push_back('"'); advance(2); continue;
          case '\'': out.push_back('\''); advance(2); continue;
          case '\\': out.push_back('\\'); advance(2); continue;
          case 'u':
          case 'U': append_uchar(out); continue;
          default: fail("bad escape in string literal");
        }
      }
      const auto before = pos_;
      if (!utf8::next(text_, pos_)) fail("invalid UTF-8 in string literal");
      out.append(text_.substr(before, pos_ - before));
    }
    return out;
  }

  Term numeric_literal() {
    const auto start = pos_;
    if (peek() == '+' || peek() == '-') advance();
    bool dot = false;
    bool exp = false;
    while (!eof()) {
      const char c = peek();
      if (is_digit(c)) {
        advance();
      } else if (c == '.' && !dot && !exp && is_digit(peek(1))) {
        dot = true;
        advance();
      } else if ((c == 'e' || c == 'E') && !exp) {
        exp = true;
        advance();
        if (peek() == '+' || peek() == '-') advance();
      } else {
        break;
      }
    }
    const auto lexical = std::string(text_.substr(start, pos_ - start));
    if (lexical.empty() || lexical == "+" || lexical == "-") fail("bad numeric literal");
    const char* type = exp ? "double" : dot ? "decimal" : "integer";
    return Term::literal(lexical, {}, std::string(kXsdNs) + type);
  }

  std::string_view text_;
  Syntax syntax_;
  std::string base_;
  std::size_t pos_ = 0;
  std::map<std::string, std::string> prefixes_;
  std::size_t blank_counter_ = 0;
  std::vector<Triple> out_;
};

void escape_iri(std::string& out, std::string_view iri) {
  std::size_t pos = 0;
  while (pos < iri.size()) {
    const auto before = pos;
    const auto cp = utf8::next(iri, pos);
    if (!cp) {
      pos = before + 1;
      continue;
    }
    if (iri_forbidden(*cp)) {
      char buf[16];
      std::snprintf(buf, sizeof buf, "\\u%04X", static_cast<unsigned>(*cp));
      out += buf;
    } else {
      out.append(iri.substr(before, pos - before));
    }
  }
}

void escape_literal(std::string& out, std::string_view value) {
  for (const char c : value) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\t': out += "\\t"; break;
      default: out.push_back(c);
    }
  }
}

}  // namespace

std::vector<Triple> parse(std::string_view text, Syntax syntax, std::string_view base_iri) {
  if (const auto bad = utf8::first_invalid(text)) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < *bad; ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("invalid UTF-8", line, 1);
  }
  if (text.substr(0, 3) == "\xEF\xBB\xBF") text.remove_prefix(3);
  return Parser(text, syntax, base_iri).run();
}

std::string to_ntriples(const Term& t) {
  std::string out;
  switch (t.kind) {
    case Term::Kind::Iri:
      out += '<';
      escape_iri(out, t.value);
      out += '>';
      break;
    case Term::Kind::BlankNode:
      out += "_:" + t.value;
      break;
    case Term::Kind::Literal:
      out += '"';
      escape_literal(out, t.value);
      out += '"';
      if (!t.lang.empty()) {
        out += '@' + t.lang;
      } else if (!t.datatype.empty()) {
        out += "^^<";
        escape_iri(out, t.datatype);
        out += '>';
      }
      break;
  }
  return out;
}

std::string to_ntriples(const Triple& t) {
  return to_ntriples(t.subject) + ' ' + to_ntriples(t.predicate) + ' ' +
         to_ntriples(t.object) + " .\n";
}

bool is_absolute_iri(std::string_view iri) {
  const auto colon = iri.find(':');
  if (colon == std::string_view::npos || colon == 0 || !is_alpha(iri[0])) return false;
  for (std::size_t i = 1; i < colon; ++i) {
    const char c = iri[i];
    if (!is_alpha(c) && !is_digit(c) && c != '+' && c != '-' && c != '.') return false;
  }
  std::size_t pos = 0;
  while (pos < iri.size()) {
    const auto cp = utf8::next(iri, pos);
    if (!cp || iri_forbidden(*cp)) return false;
  }
  return true;
}

}  // namespace koscope::rdf
