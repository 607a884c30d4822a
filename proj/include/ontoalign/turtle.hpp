#pragma once

#include <string_view>

#include "ontoalign/parse_error.hpp"
#include "ontoalign/triple_graph.hpp"

namespace ontoalign {

/// Parses a Turtle document (the subset below) into a TripleGraph.
///
/// Supported: @prefix/@base and SPARQL-style PREFIX/BASE, the `a` keyword,
/// predicate lists (';'), object lists (','), blank node property lists,
/// collections, blank node labels, string literals in all four quoting forms
/// with language tags and datatypes, numeric and boolean literals, comments.
///
/// Anything outside the subset raises ParseError with a 1-based line/column.
/// Blank node labels are renamed "b0", "b1", ... in document order so that
/// repeated parses of the same document produce equal graphs.
TripleGraph parse_turtle(std::string_view text);

} // namespace ontoalign
