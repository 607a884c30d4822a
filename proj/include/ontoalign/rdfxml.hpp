#pragma once

#include <string_view>

#include "ontoalign/parse_error.hpp"
#include "ontoalign/triple_graph.hpp"

namespace ontoalign {

/// Parses an RDF/XML document (the subset below) into a TripleGraph.
///
/// Supported: rdf:RDF roots and bare node elements, rdf:Description and typed
/// node elements, rdf:about / rdf:ID / rdf:nodeID / rdf:resource, property
/// attributes, nested node elements, rdf:datatype, xml:lang and xml:base
/// scoping, rdf:parseType="Resource" and "Collection", DOCTYPE-declared
/// entities. Unsupported constructs (rdf:parseType="Literal", rdf:li,
/// reification via rdf:ID on property elements) raise ParseError with a
/// location. Blank nodes are labelled "b0", "b1", ... in document order.
TripleGraph parse_rdfxml(std::string_view text);

} // namespace ontoalign
