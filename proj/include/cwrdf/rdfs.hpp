#ifndef CWRDF_RDFS_HPP
#define CWRDF_RDFS_HPP

#include <string>
#include <utility>
#include <vector>

#include "cwrdf/rdf.hpp"

namespace cwrdf {

// Forward-rule profile for the deductive closure. The RDF rule set is a
// subset of the RDFS rule set; NONE enables no rules. The infinite axiomatic
// triples (container membership properties, rdf:_n) are never materialized.
struct ClosureProfile {
    enum class Name { NONE, RDF, RDFS };

    Name name = Name::NONE;
    std::vector<std::string> rules;

    static ClosureProfile none() { return {Name::NONE, {}}; }
    static ClosureProfile rdf() { return {Name::RDF, {"rdf1"}}; }
    static ClosureProfile rdfs() {
        return {Name::RDFS,
                {"rdf1", "rdfs2", "rdfs3", "rdfs5", "rdfs7", "rdfs9", "rdfs11",
                 "scp-refl", "spo-refl"}};
    }

    const char* nameString() const {
        switch (name) {
        case Name::NONE: return "NONE";
        case Name::RDF: return "RDF";
        case Name::RDFS: return "RDFS";
        }
        return "NONE";
    }
};

// g plus all triples derivable by the enabled rules, to fixpoint.
// Inflationary, idempotent, and monotone in g.
//
// Enabled rules (RDFS profile):
//   rdf1    every predicate p          ->  p rdf:type rdf:Property
//   rdfs2   p rdfs:domain C, s p o    ->  s rdf:type C
//   rdfs3   p rdfs:range C, s p o,
//           o not a literal            ->  o rdf:type C
//   rdfs5   subPropertyOf transitivity
//   rdfs7   p rdfs:subPropertyOf q, s p o  ->  s q o
//   rdfs9   s rdf:type C, C rdfs:subClassOf D  ->  s rdf:type D
//   rdfs11  subClassOf transitivity
//   scp-refl / spo-refl   reflexive subClassOf / subPropertyOf for every
//           mentioned class / property
Graph closure(const Graph& g, const ClosureProfile& profile);

// Split an ontology into (stripped, removed) where removed holds exactly
// the rdfs:domain and rdfs:range triples.
std::pair<Graph, Graph> strip_domain_range(const Graph& ontology);

} // namespace cwrdf

#endif
