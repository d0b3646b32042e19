#include "xml.hpp"

#include "koscope/diagnostics.hpp"
#include "koscope/utf8.hpp"

namespace koscope::xml {

const std::string* Element::attr(std::string_view key) const {
  for (const auto& [k, v] : attributes)
    if (k == key) return &v;
  return nullptr;
}

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool is_name_char(char c) {
  return !is_ws(c) && c != '=' && c != '>' && c != '/' && c != '<' && c != '"' &&
         c != '\'' && c != '\0';
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  Element document() {
    prolog();
    if (peek() != '<') fail("expected root element");
    auto root = element();
    misc();
    if (!eof()) fail("content after the root element");
    return root;
  }

 private:
  bool eof() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const {
    return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
  }
  bool at(std::string_view s) const { return text_.substr(pos_, s.size()) == s; }

  [[noreturn]] void fail(const std::string& what) const {
    auto [line, col] = position(pos_);
    throw ParseError(what, line, col);
  }

  std::pair<std::size_t, std::size_t> position(std::size_t offset) const {
    std::size_t line = 1;
    std::size_t col = 1;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else if ((static_cast<unsigned char>(text_[i]) & 0xC0) != 0x80) {
        ++col;
      }
    }
    return {line, col};
  }

  void skip_ws() {
    while (!eof() && is_ws(peek())) ++pos_;
  }

  void skip_past(std::string_view terminator, const char* what) {
    const auto end = text_.find(terminator, pos_);
    if (end == std::string_view::npos) fail(std::string("unterminated ") + what);
    pos_ = end + terminator.size();
  }

  void prolog() {
    if (at("\xEF\xBB\xBF")) pos_ += 3;
    misc();
    if (at("<!DOCTYPE")) {
      // skip, including an internal subset in brackets
      int depth = 0;
      while (!eof()) {
        const char c = peek();
        ++pos_;
        if (c == '[') ++depth;
        else if (c == ']') --depth;
        else if (c == '>' && depth <= 0) break;
      }
      misc();
    }
  }

  void misc() {
    while (true) {
      skip_ws();
      if (at("<?")) {
        skip_past("?>", "processing instruction");
      } else if (at("<!--")) {
        skip_past("-->", "comment");
      } else {
        return;
      }
    }
  }

  std::string name() {
    const auto start = pos_;
    while (!eof() && is_name_char(peek())) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void entity(std::string& out) {
    const auto semi = text_.find(';', pos_);
    if (semi == std::string_view::npos || semi - pos_ > 12) fail("bad entity reference");
    const auto ref = text_.substr(pos_ + 1, semi - pos_ - 1);
    if (ref == "lt") out += '<';
    else if (ref == "gt") out += '>';
    else if (ref == "amp") out += '&';
    else if (ref == "quot") out += '"';
    else if (ref == "apos") out += '\'';
    else if (!ref.empty() && ref[0] == '#') {
      char32_t cp = 0;
      const bool hex = ref.size() > 1 && (ref[1] == 'x' || ref[1] == 'X');
      const auto digits = ref.substr(hex ? 2 : 1);
      if (digits.empty()) fail("bad character reference");
      for (const char c : digits) {
        int v;
        if (c >= '0' && c <= '9') v = c - '0';
        else if (hex && c >= 'a' && c <= 'f') v = c - 'a' + 10;
        else if (hex && c >= 'A' && c <= 'F') v = c - 'A' + 10;
        else fail("bad character reference");
        cp = cp * (hex ? 16 : 10) + static_cast<char32_t>(v);
        if (cp > 0x10FFFF) fail("character reference out of range");
      }
      if (cp == 0 || (cp >= 0xD800 && cp <= 0xDFFF)) fail("character reference out of range");
      utf8::append(out, cp);
    } else {
      fail("unknown entity '&" + std::string(ref) + ";'");
    }
    pos_ = semi + 1;
  }

  std::string attribute_value() {
    const char quote = peek();
    if (quote != '"' && quote != '\'') fail("expected quoted attribute value");
    ++pos_;
    std::string out;
    while (true) {
      if (eof()) fail("unterminated attribute value");
      const char c = peek();
      if (c == quote) {
        ++pos_;
        break;
      }
      if (c == '<') fail("'<' in attribute value");
      if (c == '&') {
        entity(out);
        continue;
      }
      // attribute value normalization of whitespace characters
      out += (c == '\t' || c == '\n' || c == '\r') ? ' ' : c;
      ++pos_;
    }
    return out;
  }

  Element element() {
    Element el;
    el.line = position(pos_).first;
    ++pos_;  // '<'
    el.name = name();
    while (true) {
      skip_ws();
      if (at("/>")) {
        pos_ += 2;
        return el;
      }
      if (peek() == '>') {
        ++pos_;
        break;
      }
      if (eof()) fail("unterminated start tag");
      auto key = name();
      skip_ws();
      if (peek() != '=') fail("expected '=' after attribute name");
      ++pos_;
      skip_ws();
      auto value = attribute_value();
      if (el.attr(key)) fail("duplicate attribute '" + key + "'");
      el.attributes.emplace_back(std::move(key), std::move(value));
    }
    content(el);
    return el;
  }

  void content(Element& el) {
    while (true) {
      if (eof()) fail("missing end tag for <" + el.name + ">");
      const char c = peek();
      if (c == '<') {
        if (at("</")) {
          pos_ += 2;
          const auto closing = name();
          if (closing != el.name)
            fail("end tag </" + closing + "> does not match <" + el.name + ">");
          skip_ws();
          if (peek() != '>') fail("expected '>'");
          ++pos_;
          return;
        }
        if (at("<!--")) {
          skip_past("-->", "comment");
        } else if (at("<![CDATA[")) {
          const auto start = pos_ + 9;
          skip_past("]]>", "CDATA section");
          el.text.append(text_.substr(start, pos_ - 3 - start));
        } else if (at("<?")) {
          skip_past("?>", "processing instruction");
        } else if (at("<!")) {
          fail("unexpected markup declaration");
        } else {
          el.children.push_back(element());
        }
      } else if (c == '&') {
        entity(el.text);
      } else {
        el.text += c;
        ++pos_;
      }
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Element parse(std::string_view text) {
  if (const auto bad = utf8::first_invalid(text)) {
    std::size_t line = 1;
    for (std::size_t i = 0; i < *bad; ++i)
      if (text[i] == '\n') ++line;
    throw ParseError("invalid UTF-8", line, 1);
  }
  return Reader(text).document();
}

}  // namespace koscope::xml
