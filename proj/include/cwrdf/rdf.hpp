#ifndef CWRDF_RDF_HPP
#define CWRDF_RDF_HPP

#include <cstddef>
#include <functional>
#include <set>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace cwrdf {

// Well-known IRIs.
namespace iris {
inline const std::string rdf_ns = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline const std::string rdfs_ns = "http://www.w3.org/2000/01/rdf-schema#";
inline const std::string xsd_ns = "http://www.w3.org/2001/XMLSchema#";

inline const std::string rdf_type = rdf_ns + "type";
inline const std::string rdf_Property = rdf_ns + "Property";
inline const std::string rdf_langString = rdf_ns + "langString";
inline const std::string rdfs_Class = rdfs_ns + "Class";
inline const std::string rdfs_subClassOf = rdfs_ns + "subClassOf";
inline const std::string rdfs_subPropertyOf = rdfs_ns + "subPropertyOf";
inline const std::string rdfs_domain = rdfs_ns + "domain";
inline const std::string rdfs_range = rdfs_ns + "range";

inline const std::string xsd_string = xsd_ns + "string";
inline const std::string xsd_integer = xsd_ns + "integer";
inline const std::string xsd_decimal = xsd_ns + "decimal";
inline const std::string xsd_double = xsd_ns + "double";
inline const std::string xsd_boolean = xsd_ns + "boolean";
} // namespace iris

enum class TermKind { Iri, BlankNode, Literal };

// An RDF term. IRIs are absolute after prefix/base resolution; blank node
// labels are graph-scoped identifiers; every literal carries a datatype IRI.
struct Term {
    TermKind kind = TermKind::Iri;
    std::string value;    // IRI string, blank node label, or lexical form
    std::string datatype; // datatype IRI for literals, empty otherwise

    static Term iri(std::string v) { return {TermKind::Iri, std::move(v), {}}; }
    static Term blank(std::string label) { return {TermKind::BlankNode, std::move(label), {}}; }
    static Term literal(std::string lexical, std::string datatypeIri) {
        return {TermKind::Literal, std::move(lexical), std::move(datatypeIri)};
    }

    bool isIri() const { return kind == TermKind::Iri; }
    bool isBlank() const { return kind == TermKind::BlankNode; }
    bool isLiteral() const { return kind == TermKind::Literal; }

    friend bool operator==(const Term& a, const Term& b) {
        return a.kind == b.kind && a.value == b.value && a.datatype == b.datatype;
    }
    friend bool operator!=(const Term& a, const Term& b) { return !(a == b); }
    friend bool operator<(const Term& a, const Term& b) {
        if (a.kind != b.kind) return a.kind < b.kind;
        if (a.value != b.value) return a.value < b.value;
        return a.datatype < b.datatype;
    }
};

// N-Triples-style rendering: <iri>, _:label, "lexical"^^<datatype>.
std::string to_string(const Term& t);

struct TermHash {
    size_t operator()(const Term& t) const {
        size_t h = std::hash<std::string>()(t.value);
        h ^= std::hash<std::string>()(t.datatype) + 0x9e3779b9 + (h << 6) + (h >> 2);
        return h * 3 + static_cast<size_t>(t.kind);
    }
};

// Subject is never a literal; predicate is always an IRI (checked at
// construction).
struct Triple {
    Term subject;
    Term predicate;
    Term object;

    Triple() = default;
    Triple(Term s, Term p, Term o);

    friend bool operator==(const Triple& a, const Triple& b) {
        return a.subject == b.subject && a.predicate == b.predicate && a.object == b.object;
    }
    friend bool operator<(const Triple& a, const Triple& b) {
        if (!(a.subject == b.subject)) return a.subject < b.subject;
        if (!(a.predicate == b.predicate)) return a.predicate < b.predicate;
        return a.object < b.object;
    }
};

std::string to_string(const Triple& t);

struct TripleHash {
    size_t operator()(const Triple& t) const {
        TermHash h;
        size_t r = h(t.subject);
        r = r * 31 + h(t.predicate);
        r = r * 31 + h(t.object);
        return r;
    }
};

// A finite set of triples. Insertion is idempotent; iteration order is the
// insertion order of first occurrence.
class Graph {
public:
    Graph() = default;

    // Returns true if the triple was new.
    bool insert(Triple t);
    bool contains(const Triple& t) const { return index_.count(t) != 0; }
    size_t size() const { return triples_.size(); }
    bool empty() const { return triples_.empty(); }

    std::vector<Triple>::const_iterator begin() const { return triples_.begin(); }
    std::vector<Triple>::const_iterator end() const { return triples_.end(); }
    const std::vector<Triple>& triples() const { return triples_; }

    void insertAll(const Graph& other);

    friend bool operator==(const Graph& a, const Graph& b);

private:
    std::vector<Triple> triples_;
    std::unordered_set<Triple, TripleHash> index_;
};

// Classes, properties, and individuals mentioned by a graph. The three
// components need not be disjoint.
struct Vocabulary {
    std::set<Term> classes;     // V_C
    std::set<Term> properties;  // V_P
    std::set<Term> individuals; // V_I
};

// V_C = objects of rdf:type triples plus subjects typed rdfs:Class;
// V_P = all predicates plus subjects typed rdf:Property;
// V_I = all non-literal nodes (subjects and non-literal objects).
Vocabulary vocabulary(const Graph& g);

// Symmetric set difference, both directions.
std::pair<Graph, Graph> graph_diff(const Graph& g1, const Graph& g2);

Graph graph_union(const Graph& g1, const Graph& g2);

// Canonical serialization: one triple per line, terms fully expanded,
// sorted. The output is parseable by the Turtle parser.
std::string to_ntriples(const Graph& g);

} // namespace cwrdf

#endif
