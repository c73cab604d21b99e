#ifndef CWRDF_ERRORS_HPP
#define CWRDF_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace cwrdf {

// Base for all library errors.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

// Syntax error in a Turtle document, constraint file, or query; carries
// a 1-based line/column position.
class ParseError : public Error {
public:
    ParseError(size_t line, size_t column, const std::string& message)
        : Error("line " + std::to_string(line) + ", column " +
                std::to_string(column) + ": " + message),
          line(line), column(column) {}
    size_t line;
    size_t column;
};

class UnknownDatatypeError : public Error {
public:
    explicit UnknownDatatypeError(const std::string& iri)
        : Error("unknown datatype <" + iri + ">"), iri(iri) {}
    std::string iri;
};

class IllFormedLiteralError : public Error {
public:
    IllFormedLiteralError(const std::string& lexical, const std::string& datatypeIri)
        : Error("ill-formed literal \"" + lexical + "\"^^<" + datatypeIri + ">") {}
};

// The graph contains a triple asserting membership in a registered datatype,
// e.g. `x rdf:type xsd:string`.
class DatatypeMembershipError : public Error {
public:
    explicit DatatypeMembershipError(const std::string& detail)
        : Error("datatype membership triple: " + detail) {}
};

// The interpretation domain would be empty; validating nothing is vacuous.
class EmptyGraphError : public Error {
public:
    EmptyGraphError()
        : Error("empty graph: the interpretation domain must be non-empty; "
                "there is nothing to validate") {}
};

class NewPropertyError : public Error {
public:
    explicit NewPropertyError(const std::string& iri)
        : Error("constraint uses property <" + iri +
                "> which is not in the graph vocabulary") {}
};

class NewIndividualError : public Error {
public:
    explicit NewIndividualError(const std::string& name)
        : Error("constraint uses individual " + name +
                " which is not in the graph vocabulary") {}
};

class UnboundClassNameError : public Error {
public:
    explicit UnboundClassNameError(const std::string& iri)
        : Error("class <" + iri + "> has no extension (not a graph class and "
                "not a defined class with a fixed extension)") {}
};

class UnboundPropertyNameError : public Error {
public:
    explicit UnboundPropertyNameError(const std::string& iri)
        : Error("property <" + iri + "> is not a property of the interpretation") {}
};

// A complement (or a datatype reference outside a qualifier position) whose
// meaning would require enumerating the infinite data domain.
class UnsupportedDataComplementError : public Error {
public:
    explicit UnsupportedDataComplementError(const std::string& detail)
        : Error("unsupported data complement: " + detail) {}
};

class NonMonotoneDefinitionError : public Error {
public:
    explicit NonMonotoneDefinitionError(const std::string& iri)
        : Error("defined class <" + iri + "> has a non-monotone recursive "
                "definition; the fixpoint method does not apply") {}
};

class DefinedClassInAxiomError : public Error {
public:
    explicit DefinedClassInAxiomError(const std::string& iri)
        : Error("axiom uses defined class <" + iri +
                "> and cannot be compiled to SPARQL") {}
};

class BudgetExceededError : public Error {
public:
    BudgetExceededError(size_t domain, size_t classes, unsigned long long limit)
        : Error("brute-force enumeration over " + std::to_string(domain) +
                " domain elements and " + std::to_string(classes) +
                " defined classes exceeds the budget of " +
                std::to_string(limit) + " assignments") {}
};

class NoModelExistsError : public Error {
public:
    NoModelExistsError()
        : Error("no extension of the canonical interpretation satisfies the "
                "axiom set") {}
};

} // namespace cwrdf

#endif
