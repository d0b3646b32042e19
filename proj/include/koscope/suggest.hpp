#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "koscope/classify.hpp"
#include "koscope/rdf.hpp"
#include "koscope/types.hpp"

namespace koscope {

enum class Confidence { High, Low };
std::string_view to_string(Confidence c);

struct Constituent {
  std::size_t begin = 0;  // token span [begin, end) in the source entry
  std::size_t end = 0;
  std::string label;
  Verdict verdict;  // the span classified on its own
};

struct Decomposition {
  std::string source_id;
  std::string source_label;
  std::string lang;
  std::vector<Constituent> constituents;
  // one per adjacent pair: an adposition lemma, "qualifier" or "enumeration"
  std::vector<std::string> relation_hints;
  Confidence confidence = Confidence::Low;
};

// Splits a Divisible entry at its marker tokens (conjunctions, etc phrases,
// commas, parentheses, adpositions). Spans without a word are dropped; the
// result is absent unless at least two constituents remain, and always
// absent for Indivisible or Undetermined verdicts.
std::optional<Decomposition> split(const ConceptEntry& entry, const Verdict& verdict,
                                   const RuleSet& rules);

// "Natural gas" -> "natural-gas"
std::string slug(std::string_view label);

extern const std::string kProvDerivedFrom;
extern const std::string kDctermsSource;

// Proposed concepts for one decomposition: per distinct slug a node
// base_iri + slug with rdf:type skos:Concept, a skos:prefLabel in the entry's
// language and a provenance link to the source entry (prov:wasDerivedFrom for
// an id with "://" or a urn: id, dcterms:source literal otherwise); skos:related between adjacent
// distinct nodes. Throws ConfigError unless base_iri is an absolute IRI.
std::vector<rdf::Triple> emit_fragment(const Decomposition& d, std::string_view base_iri);

// N-Triples document with a PROPOSAL comment header.
std::string proposal_ntriples(const std::vector<Decomposition>& ds, std::string_view base_iri);
// JSON sidecar: proposed IRI -> label, source entries, confidence and hints.
std::string proposal_sidecar_json(const std::vector<Decomposition>& ds, std::string_view base_iri);

}  // namespace koscope
