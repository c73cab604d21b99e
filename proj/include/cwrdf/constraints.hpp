#ifndef CWRDF_CONSTRAINTS_HPP
#define CWRDF_CONSTRAINTS_HPP

#include <map>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "cwrdf/datatypes.hpp"
#include "cwrdf/rdf.hpp"

namespace cwrdf {

struct ClassExpr;
struct PropExpr;
using ClassExprPtr = std::shared_ptr<const ClassExpr>;
using PropExprPtr = std::shared_ptr<const PropExpr>;

// Property expressions: named properties, inverses, chains, and
// domain-restricted properties.
struct PropExpr {
    enum class Kind { Named, Inv, Chain, Restrict };

    Kind kind = Kind::Named;
    Term name;              // Named
    PropExprPtr left, right; // Inv uses left; Chain uses left/right; Restrict uses left
    ClassExprPtr dom;       // Restrict

    static PropExprPtr named(Term t);
    static PropExprPtr inverse(PropExprPtr p);
    static PropExprPtr chain(PropExprPtr p, PropExprPtr q);
    static PropExprPtr restrict_(PropExprPtr p, ClassExprPtr dom);
};

// Class expressions. Nominal may be empty (denotes the empty class).
// Min/Max/Exact carry an optional qualifier; an absent qualifier counts
// both individual and data-value fillers.
struct ClassExpr {
    enum class Kind {
        Named, Thing, Nominal, DatatypeRef, And, Or, Not, All, Some,
        Min, Max, Exact
    };

    Kind kind = Kind::Named;
    Term name;                          // Named / DatatypeRef
    std::vector<Term> individuals;      // Nominal
    std::vector<ClassExprPtr> args;     // And/Or operands; Not/All/Some argument
    PropExprPtr prop;                   // All/Some/Min/Max/Exact
    unsigned card = 0;                  // Min/Max/Exact
    ClassExprPtr qualifier;             // Min/Max/Exact (may be null)

    static ClassExprPtr namedClass(Term t);
    static ClassExprPtr thing();
    static ClassExprPtr nominal(std::vector<Term> individuals);
    static ClassExprPtr datatypeRef(Term iri);
    static ClassExprPtr and_(std::vector<ClassExprPtr> args);
    static ClassExprPtr or_(std::vector<ClassExprPtr> args);
    static ClassExprPtr not_(ClassExprPtr c);
    static ClassExprPtr all(PropExprPtr p, ClassExprPtr c);
    static ClassExprPtr some(PropExprPtr p, ClassExprPtr c);
    static ClassExprPtr min(unsigned n, PropExprPtr p, ClassExprPtr q = nullptr);
    static ClassExprPtr max(unsigned n, PropExprPtr p, ClassExprPtr q = nullptr);
    static ClassExprPtr exact(unsigned n, PropExprPtr p, ClassExprPtr q = nullptr);
};

struct Axiom {
    enum class Kind { SubClass, EquivClass, SubProp, Member, Different };

    Kind kind = Kind::SubClass;
    ClassExprPtr lhs, rhs;          // SubClass/EquivClass; Member uses rhs
    PropExprPtr plhs, prhs;         // SubProp
    Term individual;                // Member
    std::vector<Term> individuals;  // Different (>= 2, syntactically distinct)
    std::string source;             // original text, for reports
};

struct AxiomSet {
    std::vector<Axiom> axioms;
    // Class IRIs appearing as a bare name on the lhs of an EquivalentTo or
    // SubClassOf axiom; candidates for definitions of new classes.
    std::set<Term> definitionCandidates;
    // New-vocabulary classes, filled in by new_vocabulary() once the graph
    // vocabulary is known.
    std::set<Term> definedClasses;
    bool bound = false;
};

// Canonical concrete syntax, reparseable by parse_constraints.
std::string to_string(const ClassExpr& c);
std::string to_string(const PropExpr& p);
std::string to_string(const Axiom& a);

// Parse a constraint document: line-oriented, '#' comments,
// `Prefix pfx: <iri>` headers, one axiom per line.
AxiomSet parse_constraints(const std::string& text);
AxiomSet parse_constraints_file(const std::string& path);

// Determine the new-vocabulary classes of the axioms relative to a graph
// vocabulary, and bind them into the axiom set. New properties or new
// individuals are errors. Datatype IRIs registered in `registry` are not
// class names.
std::set<Term> new_vocabulary(AxiomSet& axioms, const Vocabulary& v,
                              const DatatypeRegistry& registry);

enum class Monotonicity { MONOTONE, NON_MONOTONE, NON_RECURSIVE };

const char* to_string(Monotonicity m);

// Syntactic polarity analysis over the definitions of the new classes.
// Conservative: a class it cannot certify is NON_MONOTONE.
std::map<Term, Monotonicity> monotonicity_check(const AxiomSet& axioms);

// Translate removed rdfs:domain/rdfs:range triples into constraints:
//   (p rdfs:domain C) -> Some(p, Thing) SubClassOf C
//   (p rdfs:range C)  -> Thing SubClassOf All(p, C)
// where a range object that names a registered datatype becomes a
// Datatype(...) reference.
AxiomSet domain_range_to_constraints(const Graph& removed,
                                     const DatatypeRegistry& registry);

} // namespace cwrdf

#endif
