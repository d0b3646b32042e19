#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace koscope::rdf {

inline constexpr std::string_view kRdfNs = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view kSkosNs = "http://www.w3.org/2004/02/skos/core#";
inline constexpr std::string_view kXsdNs = "http://www.w3.org/2001/XMLSchema#";

struct Term {
  enum class Kind { Iri, BlankNode, Literal };

  Kind kind = Kind::Iri;
  std::string value;     // IRI, blank node label (without "_:"), or lexical form
  std::string lang;      // literals only
  std::string datatype;  // literals only; empty for plain/lang-tagged

  static Term iri(std::string v) { return {Kind::Iri, std::move(v), {}, {}}; }
  static Term blank(std::string v) { return {Kind::BlankNode, std::move(v), {}, {}}; }
  static Term literal(std::string v, std::string lang = {}, std::string datatype = {}) {
    return {Kind::Literal, std::move(v), std::move(lang), std::move(datatype)};
  }

  bool is_iri() const { return kind == Kind::Iri; }
  bool is_literal() const { return kind == Kind::Literal; }
  friend bool operator==(const Term&, const Term&) = default;
  friend auto operator<=>(const Term&, const Term&) = default;
};

struct Triple {
  Term subject;
  Term predicate;
  Term object;
  friend bool operator==(const Triple&, const Triple&) = default;
  friend auto operator<=>(const Triple&, const Triple&) = default;
};

enum class Syntax { Turtle, NTriples };

// Parses a Turtle or N-Triples document. Throws ParseError with the line and
// column of the first syntax error. Blank node labels are document-scoped:
// labels written in the document come back as "b_<label>" and generated
// nodes are named "genid<n>", so the two never collide.
std::vector<Triple> parse(std::string_view text, Syntax syntax,
                          std::string_view base_iri = {});

// One N-Triples line, terminated by " .\n".
std::string to_ntriples(const Triple& t);
std::string to_ntriples(const Term& t);

// Accepts an absolute IRI: scheme ":" followed by characters allowed in an
// IRIREF (no spaces, <>"{}|^`\).
bool is_absolute_iri(std::string_view iri);

}  // namespace koscope::rdf
