#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "ontoalign/parse_error.hpp"
#include "ontoalign/triple_graph.hpp"

namespace ontoalign {

/// One position of a rule pattern: either a named variable or a constant term.
struct PatternTerm {
    bool is_variable = false;
    std::string variable; // when is_variable
    Term constant;        // otherwise
};

struct TriplePattern {
    PatternTerm subject, predicate, object;
};

/// A named forward-chaining rule. Every conclusion variable must be bound by
/// some premise (checked by the rule parser / RuleSet::validate).
struct Rule {
    std::string name;
    std::vector<TriplePattern> premises;
    TriplePattern conclusion;
};

struct RuleSet {
    std::vector<Rule> rules;

    /// Throws ConfigError on duplicate names or unbound conclusion variables.
    void validate() const;
};

/// Parses the rule text format, one rule per line:
///
///   name: ?s pred ?o . ?o pred2 ?x => ?s pred ?x
///
/// Terms are variables (?name), <absolute-iri>, or prefixed names over the
/// built-in prefixes rdf:, rdfs:, owl:, xsd:. '#' starts a comment.
RuleSet parse_rules(std::string_view text);

/// The shipped OWL-RL subset: subclass/subproperty transitivity and
/// propagation, domain/range typing, symmetric/transitive property
/// characteristics, inverseOf, equivalence/subsumption interplay, and sameAs
/// symmetry/transitivity with subject/object substitution.
const RuleSet& default_ruleset();

/// The default_ruleset in the parse_rules text format (for --rules templates).
std::string_view default_ruleset_text();

struct MaterializeStats {
    std::size_t input_triples = 0;
    std::size_t output_triples = 0;
    std::size_t rounds = 0; // full semi-naive rounds, including the final empty one
};

/// Least fixpoint of `rules` over `graph` by semi-naive iteration: each round
/// joins at least one premise against the previous round's delta. Output
/// contains the input; terminates because rules introduce no fresh terms.
TripleGraph materialize(const TripleGraph& graph, const RuleSet& rules,
                        MaterializeStats* stats = nullptr);

TripleGraph materialize(const TripleGraph& graph, MaterializeStats* stats = nullptr);

} // namespace ontoalign
