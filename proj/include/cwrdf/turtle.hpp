#ifndef CWRDF_TURTLE_HPP
#define CWRDF_TURTLE_HPP

#include <istream>
#include <optional>
#include <string>

#include "cwrdf/rdf.hpp"

namespace cwrdf {

// Parse a document in the supported Turtle subset: @prefix/@base, IRIs,
// prefixed names, blank node labels, `a`, object lists, predicate-object
// lists, string/numeric/boolean shorthands, datatyped literals, and language
// tags. Collections, anonymous blank nodes and quoted triples are rejected
// with a diagnostic. Language-tagged literals become rdf:langString literals
// with the tag folded into the lexical form ("value@tag").
//
// Throws ParseError on malformed input, unresolved prefixes, or relative
// IRIs with no base.
Graph parse_turtle(std::istream& in, const std::optional<std::string>& baseIri = std::nullopt);
Graph parse_turtle(const std::string& text, const std::optional<std::string>& baseIri = std::nullopt);

Graph parse_turtle_file(const std::string& path, const std::optional<std::string>& baseIri = std::nullopt);

} // namespace cwrdf

#endif
