#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

namespace ontoalign {

/// Absolute IRI. Equality is exact string equality.
struct Iri {
    std::string value;

    Iri() = default;
    explicit Iri(std::string v) : value(std::move(v)) {}

    auto operator<=>(const Iri&) const = default;
};

/// True if `s` is non-empty and starts with a scheme ("ex:" counts, ":x" does not).
bool looks_absolute_iri(std::string_view s);

/// Local name of an IRI: the part after the last '#' or '/', the whole IRI if neither occurs.
std::string_view iri_local_name(std::string_view iri);

enum class TermKind : std::uint8_t { Iri, Blank, Literal };

/// One RDF term. For literals, `value` is the lexical form and `lang`/`datatype`
/// are optional (at most one of them is set).
struct Term {
    TermKind kind = TermKind::Iri;
    std::string value;
    std::string lang;
    std::string datatype;

    static Term iri(std::string v) { return Term{TermKind::Iri, std::move(v), {}, {}}; }
    static Term blank(std::string label) { return Term{TermKind::Blank, std::move(label), {}, {}}; }
    static Term literal(std::string lexical, std::string lang = {}, std::string datatype = {}) {
        return Term{TermKind::Literal, std::move(lexical), std::move(lang), std::move(datatype)};
    }

    bool is_iri() const { return kind == TermKind::Iri; }
    bool is_blank() const { return kind == TermKind::Blank; }
    bool is_literal() const { return kind == TermKind::Literal; }

    auto operator<=>(const Term&) const = default;
};

/// N-Triples-style rendering, used by diagnostics and the Turtle writer.
std::string to_ntriples(const Term& t);

namespace vocab {
inline constexpr std::string_view rdf = "http://www.w3.org/1999/02/22-rdf-syntax-ns#";
inline constexpr std::string_view rdfs = "http://www.w3.org/2000/01/rdf-schema#";
inline constexpr std::string_view owl = "http://www.w3.org/2002/07/owl#";
inline constexpr std::string_view xsd = "http://www.w3.org/2001/XMLSchema#";
inline constexpr std::string_view obo_in_owl = "http://www.geneontology.org/formats/oboInOwl#";

inline const std::string rdf_type = std::string(rdf) + "type";
inline const std::string rdf_first = std::string(rdf) + "first";
inline const std::string rdf_rest = std::string(rdf) + "rest";
inline const std::string rdf_nil = std::string(rdf) + "nil";
inline const std::string rdfs_label = std::string(rdfs) + "label";
inline const std::string rdfs_sub_class_of = std::string(rdfs) + "subClassOf";
inline const std::string rdfs_sub_property_of = std::string(rdfs) + "subPropertyOf";
inline const std::string rdfs_domain = std::string(rdfs) + "domain";
inline const std::string rdfs_range = std::string(rdfs) + "range";
inline const std::string owl_class = std::string(owl) + "Class";
inline const std::string owl_restriction = std::string(owl) + "Restriction";
inline const std::string owl_on_property = std::string(owl) + "onProperty";
inline const std::string owl_some_values_from = std::string(owl) + "someValuesFrom";
inline const std::string owl_all_values_from = std::string(owl) + "allValuesFrom";
inline const std::string owl_has_value = std::string(owl) + "hasValue";
inline const std::string xsd_integer = std::string(xsd) + "integer";
inline const std::string xsd_decimal = std::string(xsd) + "decimal";
inline const std::string xsd_double = std::string(xsd) + "double";
inline const std::string xsd_boolean = std::string(xsd) + "boolean";
inline const std::string xsd_string = std::string(xsd) + "string";
} // namespace vocab

} // namespace ontoalign
