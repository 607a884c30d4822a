#include "ontoalign/model.hpp"

#include <algorithm>
#include <optional>

namespace ontoalign {

namespace {

struct Vocab {
    std::optional<TermId> rdf_type, owl_class, sub_class_of, label, domain, range, on_property,
        some_values, all_values, has_value, restriction, exact_syn, related_syn;
    std::vector<TermId> cardinality;

    explicit Vocab(const TripleGraph& g) {
        auto find = [&](const std::string& iri) { return g.find_term(Term::iri(iri)); };
        rdf_type = find(vocab::rdf_type);
        owl_class = find(vocab::owl_class);
        sub_class_of = find(vocab::rdfs_sub_class_of);
        label = find(vocab::rdfs_label);
        domain = find(vocab::rdfs_domain);
        range = find(vocab::rdfs_range);
        on_property = find(vocab::owl_on_property);
        some_values = find(vocab::owl_some_values_from);
        all_values = find(vocab::owl_all_values_from);
        has_value = find(vocab::owl_has_value);
        restriction = find(vocab::owl_restriction);
        exact_syn = find(std::string(vocab::obo_in_owl) + "hasExactSynonym");
        related_syn = find(std::string(vocab::obo_in_owl) + "hasRelatedSynonym");
        for (const char* name :
             {"cardinality", "minCardinality", "maxCardinality", "qualifiedCardinality",
              "minQualifiedCardinality", "maxQualifiedCardinality"}) {
            if (auto id = find(std::string(vocab::owl) + name)) cardinality.push_back(*id);
        }
    }
};

void add_label(ClassEntity& entity, const std::string& raw) {
    NormalizedLabel label;
    label.tokens = normalize_label(raw);
    if (label.tokens.empty()) return;
    label.joined = join_tokens(label.tokens);
    entity.labels.push_back(std::move(label));
}

} // namespace

OntologyModel build_model(const TripleGraph& graph, bool synonyms_enabled) {
    OntologyModel model;
    Vocab v(graph);

    auto term_iri = [&](TermId id) -> std::optional<Iri> {
        const Term& t = graph.term(id);
        if (!t.is_iri()) return std::nullopt;
        return Iri(t.value);
    };

    // Pass 1: the class set.
    if (v.rdf_type && v.owl_class) {
        for (auto idx : graph.match(std::nullopt, v.rdf_type, v.owl_class)) {
            if (auto iri = term_iri(graph.triples()[idx].s)) model.classes[*iri].iri = *iri;
        }
    }
    if (v.sub_class_of) {
        for (auto idx : graph.by_predicate(*v.sub_class_of)) {
            const TripleIds& t = graph.triples()[idx];
            if (auto s = term_iri(t.s)) model.classes[*s].iri = *s;
            if (auto o = term_iri(t.o)) model.classes[*o].iri = *o;
        }
    }

    auto is_class = [&](const Iri& iri) { return model.classes.count(iri) != 0; };

    // Pass 2: parents/children and restrictions from rdfs:subClassOf.
    if (v.sub_class_of) {
        for (auto idx : graph.by_predicate(*v.sub_class_of)) {
            const TripleIds& t = graph.triples()[idx];
            auto subject = term_iri(t.s);
            if (!subject) continue;
            const Term& object = graph.term(t.o);
            if (object.is_iri()) {
                Iri parent(object.value);
                if (parent == *subject) continue; // self-loops carry no signal
                model.classes[*subject].parents.insert(parent);
                model.classes[parent].children.insert(*subject);
                continue;
            }
            if (!object.is_blank() || !v.rdf_type || !v.restriction || !v.on_property) continue;
            // one-level owl:Restriction target
            bool is_restriction = false;
            for (TermId type : graph.objects(t.o, *v.rdf_type))
                if (type == *v.restriction) is_restriction = true;
            if (!is_restriction) continue;

            std::optional<Iri> on_property;
            for (TermId p : graph.objects(t.o, *v.on_property))
                if (auto iri = term_iri(p)) on_property = *iri;
            if (!on_property) continue;

            auto read_filler = [&](std::optional<TermId> pred, RestrictionType type) {
                if (!pred) return;
                for (TermId filler_id : graph.objects(t.o, *pred)) {
                    const Term& filler = graph.term(filler_id);
                    if (filler.is_blank()) continue; // nested expressions are out of scope
                    RestrictionKey key;
                    key.property = *on_property;
                    key.type = type;
                    key.filler = filler.value;
                    key.filler_is_literal = filler.is_literal();
                    ClassEntity& entity = model.classes[*subject];
                    entity.restrictions.push_back(key);
                    entity.properties.insert(*on_property);
                    if (filler.is_iri() && is_class(Iri(filler.value)))
                        entity.neighbours.insert(Iri(filler.value));
                }
            };
            read_filler(v.some_values, RestrictionType::SomeValuesFrom);
            read_filler(v.all_values, RestrictionType::AllValuesFrom);
            read_filler(v.has_value, RestrictionType::HasValue);
            for (TermId card : v.cardinality)
                read_filler(card, RestrictionType::Cardinality);
        }
    }

    // Pass 3: properties and domain/range neighbour links.
    if (v.domain || v.range) {
        // property -> (domain classes, range classes)
        std::map<Iri, std::pair<std::vector<Iri>, std::vector<Iri>>> prop_links;
        auto collect = [&](std::optional<TermId> pred, bool is_domain) {
            if (!pred) return;
            for (auto idx : graph.by_predicate(*pred)) {
                const TripleIds& t = graph.triples()[idx];
                auto prop = term_iri(t.s);
                auto cls = term_iri(t.o);
                if (!prop || !cls || !is_class(*cls)) continue;
                model.classes[*cls].properties.insert(*prop);
                auto& links = prop_links[*prop];
                (is_domain ? links.first : links.second).push_back(*cls);
            }
        };
        collect(v.domain, true);
        collect(v.range, false);
        for (const auto& [prop, links] : prop_links) {
            for (const Iri& d : links.first)
                for (const Iri& r : links.second) {
                    if (d != r) {
                        model.classes[d].neighbours.insert(r);
                        model.classes[r].neighbours.insert(d);
                    }
                }
        }
    }

    // Pass 4: instances.
    if (v.rdf_type) {
        for (auto idx : graph.by_predicate(*v.rdf_type)) {
            const TripleIds& t = graph.triples()[idx];
            auto cls = term_iri(t.o);
            auto instance = term_iri(t.s);
            if (!cls || !instance || !is_class(*cls)) continue;
            if (is_class(*instance)) continue; // class declarations are not instances
            model.classes[*cls].instances.insert(*instance);
        }
    }

    // Pass 5: labels.
    for (auto& [iri, entity] : model.classes) {
        entity.iri = iri;
        if (auto subject = graph.find_term(Term::iri(iri.value))) {
            std::vector<std::string> primary_candidates;
            if (v.label) {
                for (TermId o : graph.objects(*subject, *v.label)) {
                    const Term& t = graph.term(o);
                    if (!t.is_literal()) continue;
                    add_label(entity, t.value);
                    std::string joined = join_tokens(normalize_label(t.value));
                    if (!joined.empty()) primary_candidates.push_back(std::move(joined));
                }
            }
            if (synonyms_enabled) {
                for (auto pred : {v.exact_syn, v.related_syn}) {
                    if (!pred) continue;
                    for (TermId o : graph.objects(*subject, *pred)) {
                        const Term& t = graph.term(o);
                        if (t.is_literal()) add_label(entity, t.value);
                    }
                }
            }
            if (!primary_candidates.empty())
                entity.primary_label =
                    *std::min_element(primary_candidates.begin(), primary_candidates.end());
        }
        std::sort(entity.labels.begin(), entity.labels.end());
        entity.labels.erase(std::unique(entity.labels.begin(), entity.labels.end()),
                            entity.labels.end());
        std::sort(entity.restrictions.begin(), entity.restrictions.end());
        entity.restrictions.erase(
            std::unique(entity.restrictions.begin(), entity.restrictions.end()),
            entity.restrictions.end());
    }

    // Pass 6: neighbours include parents and children.
    for (auto& [iri, entity] : model.classes) {
        entity.neighbours.insert(entity.parents.begin(), entity.parents.end());
        entity.neighbours.insert(entity.children.begin(), entity.children.end());
        entity.neighbours.erase(iri);
    }

    return model;
}

} // namespace ontoalign
