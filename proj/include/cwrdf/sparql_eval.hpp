#ifndef CWRDF_SPARQL_EVAL_HPP
#define CWRDF_SPARQL_EVAL_HPP

#include <map>
#include <string>
#include <vector>

#include "cwrdf/rdf.hpp"

namespace cwrdf {

using Binding = std::map<std::string, Term>; // var name (no '?') -> term

// Minimal SPARQL 1.1 subset evaluator for differential testing of compiled
// violation queries; not a general engine. Supports: SELECT [DISTINCT],
// basic graph patterns, FILTER expressions (!, &&, ||, comparisons, IN,
// isLiteral, datatype), FILTER [NOT] EXISTS with substitution semantics,
// GROUP UNION, VALUES, and nested SELECT ... GROUP BY ... HAVING
// (COUNT(DISTINCT ?v) >= n) subqueries (also with substitution semantics).
// Blank-node labels act as constants. Throws ParseError on syntax errors.
std::vector<Binding> eval_query(const std::string& queryText, const Graph& g);

} // namespace cwrdf

#endif
