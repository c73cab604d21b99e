#ifndef CWRDF_DATATYPES_HPP
#define CWRDF_DATATYPES_HPP

#include <functional>
#include <map>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "cwrdf/rdf.hpp"

namespace cwrdf {

using Rational = boost::multiprecision::cpp_rational;

// A data value. Value equality is semantic: "1" and "01" as integers map to
// the same value, and integers share the decimal value space (both use the
// Numeric kind). Values of different kinds always compare unequal.
struct Value {
    enum class Kind { String, LangString, Boolean, Double, Numeric };

    Kind kind = Kind::String;
    std::string str;  // String / LangString ("value@tag")
    bool boolean = false;
    double dbl = 0.0;
    Rational num;     // Numeric (integers and decimals)

    static Value string(std::string s) { Value v; v.kind = Kind::String; v.str = std::move(s); return v; }
    static Value langString(std::string s) { Value v; v.kind = Kind::LangString; v.str = std::move(s); return v; }
    static Value boolean_(bool b) { Value v; v.kind = Kind::Boolean; v.boolean = b; return v; }
    static Value double_(double d) { Value v; v.kind = Kind::Double; v.dbl = d; return v; }
    static Value numeric(Rational r) { Value v; v.kind = Kind::Numeric; v.num = std::move(r); return v; }

    bool isIntegral() const {
        return kind == Kind::Numeric && boost::multiprecision::denominator(num) == 1;
    }

    friend bool operator==(const Value& a, const Value& b);
    friend bool operator!=(const Value& a, const Value& b) { return !(a == b); }
    friend bool operator<(const Value& a, const Value& b);

    // Canonical lexical form, used for deterministic output and for the
    // normalized-graph transformation before SPARQL querying.
    std::string canonicalLexical() const;
    // Most specific registered datatype of this value (integral numerics map
    // to xsd:integer).
    std::string canonicalDatatype() const;
    // Canonical literal term.
    Term toLiteral() const { return Term::literal(canonicalLexical(), canonicalDatatype()); }
};

// A datatype: a lexical-to-value partial map and a value-space predicate.
struct Datatype {
    std::string iri;
    std::function<std::optional<Value>(const std::string&)> valueOf;
    std::function<bool(const Value&)> valueSpaceContains;
};

class DatatypeRegistry {
public:
    // xsd:string, xsd:integer, xsd:decimal, xsd:double, xsd:boolean and
    // rdf:langString.
    static DatatypeRegistry defaults();

    void add(Datatype d);
    bool has(const std::string& iri) const { return datatypes_.count(iri) != 0; }
    const Datatype& get(const std::string& iri) const; // throws UnknownDatatypeError

private:
    std::map<std::string, Datatype> datatypes_;
};

// Map a literal term to its value. Throws UnknownDatatypeError or
// IllFormedLiteralError.
Value literal_value(const Term& literal, const DatatypeRegistry& registry);

} // namespace cwrdf

#endif
