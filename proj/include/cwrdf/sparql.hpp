#ifndef CWRDF_SPARQL_HPP
#define CWRDF_SPARQL_HPP

#include <set>
#include <string>
#include <vector>

#include "cwrdf/constraints.hpp"
#include "cwrdf/datatypes.hpp"

namespace cwrdf {

// A violation query: it returns no rows over the closed graph iff the axiom
// is satisfied by the graph's canonical interpretation.
struct CompiledQuery {
    enum class Coverage { FULL, UNSUPPORTED };

    size_t axiomIndex = 0;
    std::string source;    // axiom text
    std::string queryText; // SPARQL 1.1 SELECT, empty when UNSUPPORTED
    Coverage coverage = Coverage::FULL;
    std::string reason;    // set when UNSUPPORTED
};

// Compile one axiom. Unsupported constructs yield an UNSUPPORTED result;
// axioms mentioning a class in `definedClasses` throw DefinedClassInAxiomError.
CompiledQuery compile_axiom(const Axiom& a,
                            const std::set<Term>& definedClasses = {});

// One entry per axiom; defined-class axioms become UNSUPPORTED entries.
std::vector<CompiledQuery> compile_set(const AxiomSet& axioms);

// Replace every parseable literal with its canonical form (canonical lexical
// plus most-specific registered datatype) so that DISTINCT counting and
// datatype() filters in compiled queries agree with value-level semantics.
// Literals with unregistered datatypes pass through unchanged.
Graph normalize_for_query(const Graph& g, const DatatypeRegistry& reg);

} // namespace cwrdf

#endif
