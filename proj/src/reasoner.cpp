#include "ontoalign/reasoner.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <set>

namespace ontoalign {

namespace {

constexpr std::string_view kDefaultRules = R"(# OWL-RL forward-chaining subset (W3C rule names; split rules carry a/b suffixes)
scm-sco:   ?c1 rdfs:subClassOf ?c2 . ?c2 rdfs:subClassOf ?c3 => ?c1 rdfs:subClassOf ?c3
cax-sco:   ?c1 rdfs:subClassOf ?c2 . ?x rdf:type ?c1 => ?x rdf:type ?c2
scm-spo:   ?p1 rdfs:subPropertyOf ?p2 . ?p2 rdfs:subPropertyOf ?p3 => ?p1 rdfs:subPropertyOf ?p3
prp-spo1:  ?p1 rdfs:subPropertyOf ?p2 . ?x ?p1 ?y => ?x ?p2 ?y
prp-dom:   ?p rdfs:domain ?c . ?x ?p ?y => ?x rdf:type ?c
prp-rng:   ?p rdfs:range ?c . ?x ?p ?y => ?y rdf:type ?c
prp-symp:  ?p rdf:type owl:SymmetricProperty . ?x ?p ?y => ?y ?p ?x
prp-trp:   ?p rdf:type owl:TransitiveProperty . ?x ?p ?y . ?y ?p ?z => ?x ?p ?z
prp-inv1:  ?p1 owl:inverseOf ?p2 . ?x ?p1 ?y => ?y ?p2 ?x
prp-inv2:  ?p1 owl:inverseOf ?p2 . ?x ?p2 ?y => ?y ?p1 ?x
scm-eqc1a: ?c1 owl:equivalentClass ?c2 => ?c1 rdfs:subClassOf ?c2
scm-eqc1b: ?c1 owl:equivalentClass ?c2 => ?c2 rdfs:subClassOf ?c1
scm-eqc2:  ?c1 rdfs:subClassOf ?c2 . ?c2 rdfs:subClassOf ?c1 => ?c1 owl:equivalentClass ?c2
scm-eqp1a: ?p1 owl:equivalentProperty ?p2 => ?p1 rdfs:subPropertyOf ?p2
scm-eqp1b: ?p1 owl:equivalentProperty ?p2 => ?p2 rdfs:subPropertyOf ?p1
scm-eqp2:  ?p1 rdfs:subPropertyOf ?p2 . ?p2 rdfs:subPropertyOf ?p1 => ?p1 owl:equivalentProperty ?p2
eq-sym:    ?x owl:sameAs ?y => ?y owl:sameAs ?x
eq-trans:  ?x owl:sameAs ?y . ?y owl:sameAs ?z => ?x owl:sameAs ?z
eq-rep-s:  ?s owl:sameAs ?s2 . ?s ?p ?o => ?s2 ?p ?o
eq-rep-o:  ?o owl:sameAs ?o2 . ?s ?p ?o => ?s ?p ?o2
)";

std::string expand_prefixed(const std::string& token, std::size_t line, std::size_t col) {
    auto colon = token.find(':');
    if (colon == std::string::npos)
        throw ParseError("expected variable, <iri>, or prefixed name: '" + token + "'", line, col);
    std::string prefix = token.substr(0, colon);
    std::string local = token.substr(colon + 1);
    if (prefix == "rdf") return std::string(vocab::rdf) + local;
    if (prefix == "rdfs") return std::string(vocab::rdfs) + local;
    if (prefix == "owl") return std::string(vocab::owl) + local;
    if (prefix == "xsd") return std::string(vocab::xsd) + local;
    throw ParseError("unknown rule prefix '" + prefix + ":'", line, col);
}

PatternTerm parse_pattern_term(const std::string& token, std::size_t line, std::size_t col) {
    PatternTerm term;
    if (token.empty()) throw ParseError("empty pattern term", line, col);
    if (token[0] == '?') {
        if (token.size() == 1) throw ParseError("empty variable name", line, col);
        for (char c : token.substr(1)) {
            bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                      (c >= '0' && c <= '9') || c == '_';
            if (!ok)
                throw ParseError("invalid variable '" + token +
                                     "' (premises are separated by ' . ' with spaces)",
                                 line, col);
        }
        term.is_variable = true;
        term.variable = token.substr(1);
        return term;
    }
    if (token.front() == '<' && token.back() == '>') {
        std::string iri = token.substr(1, token.size() - 2);
        if (!looks_absolute_iri(iri))
            throw ParseError("rule IRIs must be absolute: '" + iri + "'", line, col);
        term.constant = Term::iri(iri);
        return term;
    }
    term.constant = Term::iri(expand_prefixed(token, line, col));
    return term;
}

std::vector<std::string> split_ws(const std::string& s) {
    std::vector<std::string> out;
    std::string current;
    for (char c : s) {
        if (c == ' ' || c == '\t') {
            if (!current.empty()) {
                out.push_back(current);
                current.clear();
            }
        } else {
            current += c;
        }
    }
    if (!current.empty()) out.push_back(current);
    return out;
}

TriplePattern parse_triple_pattern(const std::string& text, std::size_t line, std::size_t col) {
    auto tokens = split_ws(text);
    if (tokens.size() != 3)
        throw ParseError("a pattern needs exactly 3 terms: '" + text + "'", line, col);
    TriplePattern p;
    p.subject = parse_pattern_term(tokens[0], line, col);
    p.predicate = parse_pattern_term(tokens[1], line, col);
    p.object = parse_pattern_term(tokens[2], line, col);
    return p;
}

} // namespace

void RuleSet::validate() const {
    std::set<std::string> names;
    for (const auto& rule : rules) {
        if (!names.insert(rule.name).second)
            throw ConfigError("duplicate rule name '" + rule.name + "'");
        if (rule.premises.empty())
            throw ConfigError("rule '" + rule.name + "' has no premises");
        std::set<std::string> bound;
        for (const auto& premise : rule.premises)
            for (const PatternTerm* t : {&premise.subject, &premise.predicate, &premise.object})
                if (t->is_variable) bound.insert(t->variable);
        for (const PatternTerm* t :
             {&rule.conclusion.subject, &rule.conclusion.predicate, &rule.conclusion.object})
            if (t->is_variable && !bound.count(t->variable))
                throw ConfigError("rule '" + rule.name + "': conclusion variable '?" +
                                  t->variable + "' is not bound by any premise");
    }
}

RuleSet parse_rules(std::string_view text) {
    RuleSet ruleset;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string line(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        bool blank = true;
        for (char c : line)
            if (c != ' ' && c != '\t' && c != '\r') blank = false;
        if (blank) continue;

        auto colon = line.find(':');
        if (colon == std::string::npos)
            throw ParseError("expected 'name: premises => conclusion'", line_no, 1);
        Rule rule;
        auto name_begin = line.find_first_not_of(" \t");
        rule.name = line.substr(name_begin, colon - name_begin);
        if (rule.name.empty()) throw ParseError("empty rule name", line_no, 1);

        auto arrow = line.find("=>", colon);
        if (arrow == std::string::npos)
            throw ParseError("rule '" + rule.name + "' is missing '=>'", line_no, colon + 1);
        std::string premises_text = line.substr(colon + 1, arrow - colon - 1);
        std::string conclusion_text = line.substr(arrow + 2);
        if (line.find("=>", arrow + 2) != std::string::npos)
            throw ParseError("rule '" + rule.name + "' has more than one '=>'", line_no,
                             arrow + 1);

        std::size_t start = 0;
        while (start <= premises_text.size()) {
            auto dot = premises_text.find(" . ", start);
            std::string part = dot == std::string::npos ? premises_text.substr(start)
                                                        : premises_text.substr(start, dot - start);
            rule.premises.push_back(parse_triple_pattern(part, line_no, colon + 2 + start));
            if (dot == std::string::npos) break;
            start = dot + 3;
        }
        rule.conclusion = parse_triple_pattern(conclusion_text, line_no, arrow + 3);
        ruleset.rules.push_back(std::move(rule));
    }
    ruleset.validate();
    return ruleset;
}

std::string_view default_ruleset_text() { return kDefaultRules; }

const RuleSet& default_ruleset() {
    static const RuleSet ruleset = parse_rules(kDefaultRules);
    return ruleset;
}

namespace {

// A rule compiled against one graph's term ids. Constants that do not occur
// in the graph make the premise unmatchable; they are interned anyway so the
// conclusion can still be instantiated (e.g. scm-eqc2 deriving a triple whose
// predicate never occurred in the input).
struct CompiledTerm {
    bool is_variable = false;
    std::uint32_t slot = 0; // variable slot
    TermId constant = 0;
};

struct CompiledPattern {
    CompiledTerm s, p, o;
};

struct CompiledRule {
    std::string name;
    std::vector<CompiledPattern> premises;
    CompiledPattern conclusion;
    std::uint32_t slot_count = 0;
};

constexpr TermId kUnbound = 0xFFFFFFFFu;

CompiledRule compile_rule(const Rule& rule, TripleGraph& graph) {
    CompiledRule compiled;
    compiled.name = rule.name;
    std::map<std::string, std::uint32_t> slots;
    auto compile_term = [&](const PatternTerm& t) {
        CompiledTerm out;
        if (t.is_variable) {
            out.is_variable = true;
            auto [it, inserted] = slots.emplace(t.variable, static_cast<std::uint32_t>(slots.size()));
            out.slot = it->second;
        } else {
            out.constant = graph.intern(t.constant);
        }
        return out;
    };
    auto compile_pattern = [&](const TriplePattern& p) {
        return CompiledPattern{compile_term(p.subject), compile_term(p.predicate),
                               compile_term(p.object)};
    };
    for (const auto& premise : rule.premises) compiled.premises.push_back(compile_pattern(premise));
    compiled.conclusion = compile_pattern(rule.conclusion);
    compiled.slot_count = static_cast<std::uint32_t>(slots.size());
    return compiled;
}

class SemiNaiveEngine {
public:
    SemiNaiveEngine(TripleGraph& graph, const RuleSet& rules) : graph_(graph) {
        rules.validate();
        for (const auto& rule : rules.rules) compiled_.push_back(compile_rule(rule, graph));
    }

    std::size_t run() {
        // Round 0 treats the whole input as the delta.
        std::vector<TripleIds> delta(graph_.triples().begin(), graph_.triples().end());
        std::size_t rounds = 0;
        while (!delta.empty()) {
            ++rounds;
            std::vector<TripleIds> next_delta;
            for (const auto& rule : compiled_) {
                // Semi-naive: require the delta at one premise position, the
                // full graph elsewhere. Combinations with several delta
                // premises are derived more than once; set insertion dedups.
                for (std::size_t delta_pos = 0; delta_pos < rule.premises.size(); ++delta_pos)
                    apply_rule(rule, delta_pos, delta, next_delta);
            }
            delta = std::move(next_delta);
        }
        return rounds + 1; // the final empty round confirms the fixpoint
    }

private:
    struct Bindings {
        std::vector<TermId> values;
        explicit Bindings(std::uint32_t slots) : values(slots, kUnbound) {}
    };

    static bool unify(const CompiledTerm& term, TermId value, Bindings& b,
                      std::vector<std::uint32_t>& trail) {
        if (!term.is_variable) return term.constant == value;
        TermId& slot = b.values[term.slot];
        if (slot == kUnbound) {
            slot = value;
            trail.push_back(term.slot);
            return true;
        }
        return slot == value;
    }

    bool match_triple(const CompiledPattern& pattern, const TripleIds& triple, Bindings& b,
                      std::vector<std::uint32_t>& trail) {
        std::size_t trail_start = trail.size();
        if (unify(pattern.s, triple.s, b, trail) && unify(pattern.p, triple.p, b, trail) &&
            unify(pattern.o, triple.o, b, trail))
            return true;
        while (trail.size() > trail_start) {
            b.values[trail.back()] = kUnbound;
            trail.pop_back();
        }
        return false;
    }

    std::optional<TermId> resolved(const CompiledTerm& term, const Bindings& b) const {
        if (!term.is_variable) return term.constant;
        TermId v = b.values[term.slot];
        if (v == kUnbound) return std::nullopt;
        return v;
    }

    void apply_rule(const CompiledRule& rule, std::size_t delta_pos,
                    const std::vector<TripleIds>& delta, std::vector<TripleIds>& next_delta) {
        Bindings bindings(rule.slot_count);
        std::vector<std::uint32_t> trail;
        const CompiledPattern& delta_pattern = rule.premises[delta_pos];
        for (const TripleIds& seed : delta) {
            std::size_t trail_start = trail.size();
            if (!match_triple(delta_pattern, seed, bindings, trail)) continue;
            join(rule, delta_pos, 0, bindings, trail, next_delta);
            while (trail.size() > trail_start) {
                bindings.values[trail.back()] = kUnbound;
                trail.pop_back();
            }
        }
    }

    void join(const CompiledRule& rule, std::size_t delta_pos, std::size_t premise_idx,
              Bindings& bindings, std::vector<std::uint32_t>& trail,
              std::vector<TripleIds>& next_delta) {
        if (premise_idx == rule.premises.size()) {
            derive(rule, bindings, next_delta);
            return;
        }
        if (premise_idx == delta_pos) {
            join(rule, delta_pos, premise_idx + 1, bindings, trail, next_delta);
            return;
        }
        const CompiledPattern& pattern = rule.premises[premise_idx];
        auto matches = graph_.match(resolved(pattern.s, bindings), resolved(pattern.p, bindings),
                                    resolved(pattern.o, bindings));
        for (std::uint32_t idx : matches) {
            const TripleIds triple = graph_.triples()[idx];
            std::size_t trail_start = trail.size();
            if (!match_triple(pattern, triple, bindings, trail)) continue;
            join(rule, delta_pos, premise_idx + 1, bindings, trail, next_delta);
            while (trail.size() > trail_start) {
                bindings.values[trail.back()] = kUnbound;
                trail.pop_back();
            }
        }
    }

    void derive(const CompiledRule& rule, const Bindings& bindings,
                std::vector<TripleIds>& next_delta) {
        TripleIds t{*resolved(rule.conclusion.s, bindings), *resolved(rule.conclusion.p, bindings),
                    *resolved(rule.conclusion.o, bindings)};
        // A predicate position bound to a literal or blank node would break
        // the triple invariant; such bindings are dropped, matching the
        // RDF-compatible reading of the rules.
        if (!graph_.term(t.p).is_iri()) return;
        if (graph_.term(t.s).is_literal()) return;
        if (graph_.insert(t)) next_delta.push_back(t);
    }

    TripleGraph& graph_;
    std::vector<CompiledRule> compiled_;
};

} // namespace

TripleGraph materialize(const TripleGraph& graph, const RuleSet& rules, MaterializeStats* stats) {
    TripleGraph out;
    for (std::size_t i = 0; i < graph.size(); ++i) {
        Triple t = graph.triple_at(i);
        out.insert(t.subject, t.predicate, t.object);
    }
    SemiNaiveEngine engine(out, rules);
    std::size_t rounds = engine.run();
    if (stats) {
        stats->input_triples = graph.size();
        stats->output_triples = out.size();
        stats->rounds = rounds;
    }
    return out;
}

TripleGraph materialize(const TripleGraph& graph, MaterializeStats* stats) {
    return materialize(graph, default_ruleset(), stats);
}

} // namespace ontoalign
