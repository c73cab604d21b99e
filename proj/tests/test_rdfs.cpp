#include <doctest.h>

#include "cwrdf/rdfs.hpp"
#include "cwrdf/turtle.hpp"

using namespace cwrdf;

namespace {
Term iri(const std::string& local) { return Term::iri("http://e/" + local); }
Term T(const std::string& s) { return Term::iri(s); }
const Term type = T(iris::rdf_type);
}

TEST_CASE("rdf1: predicates become rdf:Property members") {
    Graph g;
    g.insert({iri("a"), iri("p"), iri("b")});
    Graph c = closure(g, ClosureProfile::rdf());
    CHECK(c.contains({iri("p"), type, T(iris::rdf_Property)}));
    CHECK(c.contains({type, type, T(iris::rdf_Property)}));
    // rdf profile does not run rdfs rules
    Graph g2;
    g2.insert({iri("p"), T(iris::rdfs_domain), iri("C")});
    g2.insert({iri("a"), iri("p"), iri("b")});
    Graph c2 = closure(g2, ClosureProfile::rdf());
    CHECK_FALSE(c2.contains({iri("a"), type, iri("C")}));
}

TEST_CASE("rdfs2: domain inference") {
    Graph g;
    g.insert({iri("p"), T(iris::rdfs_domain), iri("C")});
    g.insert({iri("a"), iri("p"), iri("b")});
    Graph c = closure(g, ClosureProfile::rdfs());
    CHECK(c.contains({iri("a"), type, iri("C")}));
    CHECK_FALSE(c.contains({iri("b"), type, iri("C")}));
}

TEST_CASE("rdfs3: range inference skips literal objects") {
    Graph g;
    g.insert({iri("p"), T(iris::rdfs_range), iri("C")});
    g.insert({iri("a"), iri("p"), iri("b")});
    g.insert({iri("a"), iri("p"), Term::literal("x", iris::xsd_string)});
    Graph c = closure(g, ClosureProfile::rdfs());
    CHECK(c.contains({iri("b"), type, iri("C")}));
    for (const Triple& t : c) CHECK_FALSE(t.subject.isLiteral());
}

TEST_CASE("rdfs5: subPropertyOf transitivity") {
    Graph g;
    g.insert({iri("p"), T(iris::rdfs_subPropertyOf), iri("q")});
    g.insert({iri("q"), T(iris::rdfs_subPropertyOf), iri("r")});
    Graph c = closure(g, ClosureProfile::rdfs());
    CHECK(c.contains({iri("p"), T(iris::rdfs_subPropertyOf), iri("r")}));
}

TEST_CASE("rdfs7: subproperty propagation") {
    Graph g;
    g.insert({iri("p"), T(iris::rdfs_subPropertyOf), iri("q")});
    g.insert({iri("a"), iri("p"), Term::literal("1", iris::xsd_integer)});
    Graph c = closure(g, ClosureProfile::rdfs());
    CHECK(c.contains({iri("a"), iri("q"), Term::literal("1", iris::xsd_integer)}));
}

TEST_CASE("rdfs9 and rdfs11: subclass membership and transitivity") {
    Graph g;
    g.insert({iri("C"), T(iris::rdfs_subClassOf), iri("D")});
    g.insert({iri("D"), T(iris::rdfs_subClassOf), iri("E")});
    g.insert({iri("a"), type, iri("C")});
    Graph c = closure(g, ClosureProfile::rdfs());
    CHECK(c.contains({iri("C"), T(iris::rdfs_subClassOf), iri("E")}));
    CHECK(c.contains({iri("a"), type, iri("D")}));
    CHECK(c.contains({iri("a"), type, iri("E")}));
}

TEST_CASE("reflexive subClassOf/subPropertyOf for mentioned names") {
    Graph g;
    g.insert({iri("a"), type, iri("C")});
    g.insert({iri("p"), T(iris::rdfs_subPropertyOf), iri("q")});
    Graph c = closure(g, ClosureProfile::rdfs());
    CHECK(c.contains({iri("C"), T(iris::rdfs_subClassOf), iri("C")}));
    CHECK(c.contains({iri("p"), T(iris::rdfs_subPropertyOf), iri("p")}));
    CHECK(c.contains({iri("q"), T(iris::rdfs_subPropertyOf), iri("q")}));
}

TEST_CASE("combined rule interaction through schema triples derived late") {
    // the domain triple itself arrives via rdfs7; rdfs2 must still fire
    Graph g;
    g.insert({iri("d0"), T(iris::rdfs_subPropertyOf), T(iris::rdfs_domain)});
    g.insert({iri("p"), iri("d0"), iri("C")});
    g.insert({iri("a"), iri("p"), iri("b")});
    Graph c = closure(g, ClosureProfile::rdfs());
    CHECK(c.contains({iri("p"), T(iris::rdfs_domain), iri("C")}));
    CHECK(c.contains({iri("a"), type, iri("C")}));
}

TEST_CASE("none profile is the identity") {
    Graph g;
    g.insert({iri("C"), T(iris::rdfs_subClassOf), iri("D")});
    g.insert({iri("a"), type, iri("C")});
    CHECK(closure(g, ClosureProfile::none()) == g);
}

TEST_CASE("strip_domain_range") {
    Graph g = parse_turtle(
        "@prefix rdfs: <http://www.w3.org/2000/01/rdf-schema#> .\n"
        "@prefix ex: <http://e/> .\n"
        "ex:p rdfs:domain ex:C .\n"
        "ex:p rdfs:range ex:D .\n"
        "ex:C rdfs:subClassOf ex:D .\n");
    auto [stripped, removed] = strip_domain_range(g);
    CHECK(stripped.size() == 1);
    CHECK(removed.size() == 2);
    CHECK(stripped.contains({iri("C"), T(iris::rdfs_subClassOf), iri("D")}));
    CHECK(removed.contains({iri("p"), T(iris::rdfs_domain), iri("C")}));
    CHECK(removed.contains({iri("p"), T(iris::rdfs_range), iri("D")}));
}

TEST_CASE("figure ontology closure size is stable") {
    Graph data = parse_turtle_file(CORPUS_DIR "/fig1.ttl");
    Graph ont = parse_turtle_file(CORPUS_DIR "/fig2.ttl");
    Graph c = closure(graph_union(data, ont), ClosureProfile::rdfs());
    CHECK(c.size() == 83);
    // closure of a closure adds nothing
    CHECK(closure(c, ClosureProfile::rdfs()) == c);
}
