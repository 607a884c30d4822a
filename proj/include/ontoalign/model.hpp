#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "ontoalign/term.hpp"
#include "ontoalign/tokenize.hpp"
#include "ontoalign/triple_graph.hpp"

namespace ontoalign {

/// A label after normalize_label: ordered tokens plus their space-joined form.
struct NormalizedLabel {
    std::vector<std::string> tokens;
    std::string joined;

    auto operator<=>(const NormalizedLabel&) const = default;
};

enum class RestrictionType { SomeValuesFrom, AllValuesFrom, HasValue, Cardinality };

/// One owl:Restriction reached from a class through rdfs:subClassOf.
/// `filler` is the filler class/individual IRI, or the lexical form for
/// literal fillers (hasValue on data properties, cardinality bounds).
struct RestrictionKey {
    Iri property;
    RestrictionType type = RestrictionType::SomeValuesFrom;
    std::string filler;
    bool filler_is_literal = false;

    auto operator<=>(const RestrictionKey&) const = default;
};

/// Per-class record feeding the six similarity signals.
struct ClassEntity {
    Iri iri;
    std::vector<NormalizedLabel> labels; // sorted, unique, each non-empty
    std::string primary_label;           // smallest rdfs:label after normalization; "" if unlabelled
    std::set<Iri> parents;               // direct named superclasses (never contains `iri`)
    std::set<Iri> children;
    std::set<Iri> properties; // via rdfs:domain / rdfs:range / restriction onProperty
    std::set<Iri> instances;  // individuals typed by this class
    std::vector<RestrictionKey> restrictions; // sorted, unique
    std::set<Iri> neighbours; // parents + children + one restriction / domain-range hop
};

/// All class records extracted from one parsed ontology, keyed and iterated
/// in IRI order. Immutable after build_model; safe for concurrent reads.
struct OntologyModel {
    std::map<Iri, ClassEntity> classes;

    std::size_t class_count() const { return classes.size(); }
    const ClassEntity* find(const Iri& iri) const {
        auto it = classes.find(iri);
        return it == classes.end() ? nullptr : &it->second;
    }
};

/// Extracts class records from a parsed graph. Classes are subjects of
/// `rdf:type owl:Class` plus named classes on either side of rdfs:subClassOf.
/// Labels come from rdfs:label and, when `synonyms_enabled`, from the
/// oboInOwl hasExactSynonym / hasRelatedSynonym annotation properties.
/// Unlabelled classes are retained with an empty label set.
OntologyModel build_model(const TripleGraph& graph, bool synonyms_enabled = true);

} // namespace ontoalign
