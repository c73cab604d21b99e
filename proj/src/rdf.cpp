#include "cwrdf/rdf.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "cwrdf/errors.hpp"

namespace cwrdf {

Triple::Triple(Term s, Term p, Term o)
    : subject(std::move(s)), predicate(std::move(p)), object(std::move(o)) {
    if (subject.isLiteral())
        throw Error("triple subject must not be a literal");
    if (!predicate.isIri())
        throw Error("triple predicate must be an IRI");
}

static void escapeInto(std::ostringstream& out, const std::string& s) {
    for (char c : s) {
        switch (c) {
        case '"': out << "\\\""; break;
        case '\\': out << "\\\\"; break;
        case '\n': out << "\\n"; break;
        case '\r': out << "\\r"; break;
        case '\t': out << "\\t"; break;
        default: out << c;
        }
    }
}

std::string to_string(const Term& t) {
    std::ostringstream out;
    switch (t.kind) {
    case TermKind::Iri:
        out << '<' << t.value << '>';
        break;
    case TermKind::BlankNode:
        out << "_:" << t.value;
        break;
    case TermKind::Literal:
        out << '"';
        escapeInto(out, t.value);
        out << "\"^^<" << t.datatype << '>';
        break;
    }
    return out.str();
}

std::string to_string(const Triple& t) {
    return to_string(t.subject) + " " + to_string(t.predicate) + " " +
           to_string(t.object) + " .";
}

bool Graph::insert(Triple t) {
    auto [it, fresh] = index_.insert(t);
    (void)it;
    if (fresh) triples_.push_back(std::move(t));
    return fresh;
}

void Graph::insertAll(const Graph& other) {
    for (const Triple& t : other) insert(t);
}

bool operator==(const Graph& a, const Graph& b) {
    if (a.size() != b.size()) return false;
    for (const Triple& t : a)
        if (!b.contains(t)) return false;
    return true;
}

Vocabulary vocabulary(const Graph& g) {
    Vocabulary v;
    const Term rdfType = Term::iri(iris::rdf_type);
    for (const Triple& t : g) {
        v.individuals.insert(t.subject);
        if (!t.object.isLiteral()) v.individuals.insert(t.object);
        v.properties.insert(t.predicate);
        if (t.predicate.value == iris::rdf_type && t.predicate.isIri()) {
            if (!t.object.isLiteral()) v.classes.insert(t.object);
            if (t.object.isIri() && t.object.value == iris::rdfs_Class)
                v.classes.insert(t.subject);
            if (t.object.isIri() && t.object.value == iris::rdf_Property)
                v.properties.insert(t.subject);
        }
    }
    (void)rdfType;
    return v;
}

std::pair<Graph, Graph> graph_diff(const Graph& g1, const Graph& g2) {
    Graph only1, only2;
    for (const Triple& t : g1)
        if (!g2.contains(t)) only1.insert(t);
    for (const Triple& t : g2)
        if (!g1.contains(t)) only2.insert(t);
    return {only1, only2};
}

Graph graph_union(const Graph& g1, const Graph& g2) {
    Graph g = g1;
    g.insertAll(g2);
    return g;
}

std::string to_ntriples(const Graph& g) {
    std::vector<std::string> lines;
    lines.reserve(g.size());
    for (const Triple& t : g) lines.push_back(to_string(t));
    std::sort(lines.begin(), lines.end());
    std::string out;
    for (const std::string& l : lines) {
        out += l;
        out += '\n';
    }
    return out;
}

} // namespace cwrdf
