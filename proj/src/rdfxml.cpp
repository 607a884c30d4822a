#include "ontoalign/rdfxml.hpp"

#include <map>
#include <optional>
#include <vector>

#include "xml_reader.hpp"

namespace ontoalign {

namespace {

using xml::Event;
using xml::EventKind;

const std::string kRdfNs = std::string(vocab::rdf);

struct Scope {
    std::map<std::string, std::string> ns; // prefix -> namespace ("" = default)
    std::string lang;
    std::string base;
};

bool all_ws(const std::string& s) {
    for (char c : s)
        if (c != ' ' && c != '\t' && c != '\r' && c != '\n') return false;
    return true;
}

class RdfXmlParser {
public:
    RdfXmlParser(std::string_view text, TripleGraph& graph) : reader_(text), graph_(graph) {}

    void run() {
        Event ev = reader_.next();
        if (ev.kind == EventKind::Eof) return; // empty document -> empty graph
        if (ev.kind != EventKind::StartElement)
            throw ParseError("expected root element", ev.line, ev.column);
        Scope scope = enter(ev, Scope{});
        if (expand_name(ev, scope) == kRdfNs + "RDF") {
            if (ev.self_closing) return;
            while (true) {
                Event child = next_content(ev);
                if (child.kind == EventKind::EndElement) break;
                node_element(child, scope);
            }
        } else {
            node_element(ev, Scope{});
        }
        Event trailing = reader_.next();
        if (trailing.kind != EventKind::Eof)
            throw ParseError("unexpected content after document element", trailing.line,
                             trailing.column);
    }

private:
    // Skips ignorable whitespace/comments between elements; returns the next
    // StartElement or EndElement. Non-whitespace text where elements are
    // expected is an error.
    Event next_content(const Event& parent) {
        while (true) {
            Event ev = reader_.next();
            if (ev.kind == EventKind::Text) {
                if (!all_ws(ev.text))
                    throw ParseError("unexpected character data", ev.line, ev.column);
                continue;
            }
            if (ev.kind == EventKind::Eof)
                throw ParseError("unexpected end of document inside <" + parent.name + ">",
                                 reader_.line(), reader_.column());
            return ev;
        }
    }

    Scope enter(const Event& ev, const Scope& parent) {
        Scope scope = parent;
        for (const auto& attr : ev.attributes) {
            if (attr.name == "xmlns") {
                scope.ns[""] = attr.value;
            } else if (attr.name.rfind("xmlns:", 0) == 0) {
                scope.ns[attr.name.substr(6)] = attr.value;
            } else if (attr.name == "xml:lang") {
                scope.lang = attr.value;
            } else if (attr.name == "xml:base") {
                scope.base = attr.value;
            }
        }
        return scope;
    }

    std::string expand_name(const Event& ev, const Scope& scope) {
        auto [prefix, local] = xml::split_qname(ev.name);
        if (prefix == "xml") return "http://www.w3.org/XML/1998/namespace" + local;
        auto it = scope.ns.find(prefix);
        if (it == scope.ns.end() || (prefix.empty() && it->second.empty()))
            throw ParseError(prefix.empty() ? "element '" + ev.name + "' has no namespace"
                                            : "undefined namespace prefix '" + prefix + "'",
                             ev.line, ev.column);
        return it->second + local;
    }

    // Attribute names: unprefixed attributes have no namespace; "xml:*" and
    // "xmlns*" are handled by the caller and skipped here.
    std::optional<std::string> expand_attr(const xml::Attribute& attr, const Scope& scope,
                                           const Event& ev) {
        if (attr.name == "xmlns" || attr.name.rfind("xmlns:", 0) == 0) return std::nullopt;
        auto [prefix, local] = xml::split_qname(attr.name);
        if (prefix == "xml") return std::nullopt;
        if (prefix.empty()) {
            // RDF/XML allows a bare rdf-less attribute only as a property
            // attribute in the default namespace -- but an unprefixed
            // attribute has no namespace, so reject it loudly.
            throw ParseError("unnamespaced attribute '" + attr.name + "'", ev.line, ev.column);
        }
        auto it = scope.ns.find(prefix);
        if (it == scope.ns.end())
            throw ParseError("undefined namespace prefix '" + prefix + "'", ev.line, ev.column);
        return it->second + local;
    }

    std::string resolve(const std::string& ref, const Scope& scope, const Event& ev) {
        if (looks_absolute_iri(ref)) return ref;
        if (scope.base.empty())
            throw ParseError("relative IRI '" + ref + "' without xml:base", ev.line, ev.column);
        if (ref.empty()) {
            auto hash = scope.base.find('#');
            return hash == std::string::npos ? scope.base : scope.base.substr(0, hash);
        }
        if (ref[0] == '#') {
            auto hash = scope.base.find('#');
            return (hash == std::string::npos ? scope.base : scope.base.substr(0, hash)) + ref;
        }
        if (ref[0] == '/') {
            auto scheme_end = scope.base.find("://");
            if (scheme_end == std::string::npos) return scope.base + ref;
            auto path = scope.base.find('/', scheme_end + 3);
            return (path == std::string::npos ? scope.base : scope.base.substr(0, path)) + ref;
        }
        auto slash = scope.base.rfind('/');
        return (slash == std::string::npos ? scope.base + "/" : scope.base.substr(0, slash + 1)) +
               ref;
    }

    Term fresh_blank() { return Term::blank("b" + std::to_string(blank_counter_++)); }

    Term named_blank(const std::string& node_id) {
        auto it = blank_ids_.find(node_id);
        if (it != blank_ids_.end()) return Term::blank(it->second);
        std::string label = "b" + std::to_string(blank_counter_++);
        blank_ids_.emplace(node_id, label);
        return Term::blank(label);
    }

    // A node element: <rdf:Description> or a typed element. Returns its subject.
    Term node_element(const Event& ev, const Scope& parent_scope) {
        Scope scope = enter(ev, parent_scope);
        std::string name = expand_name(ev, scope);
        if (name == kRdfNs + "RDF" || name == kRdfNs + "li")
            throw ParseError("'" + ev.name + "' cannot be used as a node element", ev.line,
                             ev.column);

        std::optional<Term> subject;
        for (const auto& attr : ev.attributes) {
            auto expanded = expand_attr(attr, scope, ev);
            if (!expanded) continue;
            if (*expanded == kRdfNs + "about") {
                subject = Term::iri(resolve(attr.value, scope, ev));
            } else if (*expanded == kRdfNs + "ID") {
                if (scope.base.empty())
                    throw ParseError("rdf:ID requires xml:base", ev.line, ev.column);
                subject = Term::iri(resolve("#" + attr.value, scope, ev));
            } else if (*expanded == kRdfNs + "nodeID") {
                subject = named_blank(attr.value);
            }
        }
        if (!subject) subject = fresh_blank();

        if (name != kRdfNs + "Description")
            graph_.insert(*subject, Term::iri(vocab::rdf_type), Term::iri(name));

        // property attributes
        for (const auto& attr : ev.attributes) {
            auto expanded = expand_attr(attr, scope, ev);
            if (!expanded) continue;
            if (*expanded == kRdfNs + "about" || *expanded == kRdfNs + "ID" ||
                *expanded == kRdfNs + "nodeID")
                continue;
            if (*expanded == kRdfNs + "type") {
                graph_.insert(*subject, Term::iri(vocab::rdf_type),
                              Term::iri(resolve(attr.value, scope, ev)));
            } else if (expanded->rfind(kRdfNs, 0) == 0) {
                throw ParseError("unsupported rdf attribute '" + attr.name + "' on node element",
                                 ev.line, ev.column);
            } else {
                graph_.insert(*subject, Term::iri(*expanded),
                              Term::literal(attr.value, scope.lang));
            }
        }

        if (!ev.self_closing) {
            while (true) {
                Event child = next_content(ev);
                if (child.kind == EventKind::EndElement) break;
                property_element(*subject, child, scope);
            }
        }
        return *subject;
    }

    void property_element(const Term& subject, const Event& ev, const Scope& parent_scope) {
        Scope scope = enter(ev, parent_scope);
        std::string name = expand_name(ev, scope);
        if (name == kRdfNs + "li")
            throw ParseError("rdf:li containers are not supported", ev.line, ev.column);
        Term predicate = Term::iri(name);

        std::optional<std::string> resource, node_id, datatype, parse_type;
        for (const auto& attr : ev.attributes) {
            auto expanded = expand_attr(attr, scope, ev);
            if (!expanded) continue;
            if (*expanded == kRdfNs + "resource")
                resource = attr.value;
            else if (*expanded == kRdfNs + "nodeID")
                node_id = attr.value;
            else if (*expanded == kRdfNs + "datatype")
                datatype = attr.value;
            else if (*expanded == kRdfNs + "parseType")
                parse_type = attr.value;
            else if (*expanded == kRdfNs + "ID")
                throw ParseError("rdf:ID reification on property elements is not supported",
                                 ev.line, ev.column);
            else
                throw ParseError("unsupported attribute '" + attr.name + "' on property element",
                                 ev.line, ev.column);
        }

        if (parse_type) {
            if (*parse_type == "Resource") {
                Term node = fresh_blank();
                graph_.insert(subject, predicate, node);
                if (!ev.self_closing) {
                    while (true) {
                        Event child = next_content(ev);
                        if (child.kind == EventKind::EndElement) break;
                        property_element(node, child, scope);
                    }
                }
                return;
            }
            if (*parse_type == "Collection") {
                std::vector<Term> items;
                if (!ev.self_closing) {
                    while (true) {
                        Event child = next_content(ev);
                        if (child.kind == EventKind::EndElement) break;
                        items.push_back(node_element(child, scope));
                    }
                }
                Term head = Term::iri(vocab::rdf_nil);
                if (!items.empty()) {
                    std::vector<Term> nodes;
                    nodes.reserve(items.size());
                    for (std::size_t i = 0; i < items.size(); ++i) nodes.push_back(fresh_blank());
                    for (std::size_t i = 0; i < items.size(); ++i) {
                        graph_.insert(nodes[i], Term::iri(vocab::rdf_first), items[i]);
                        Term tail =
                            i + 1 < items.size() ? nodes[i + 1] : Term::iri(vocab::rdf_nil);
                        graph_.insert(nodes[i], Term::iri(vocab::rdf_rest), tail);
                    }
                    head = nodes[0];
                }
                graph_.insert(subject, predicate, head);
                return;
            }
            throw ParseError("unsupported rdf:parseType=\"" + *parse_type + "\"", ev.line,
                             ev.column);
        }

        if (resource || node_id) {
            if (resource && node_id)
                throw ParseError("property element has both rdf:resource and rdf:nodeID", ev.line,
                                 ev.column);
            Term object = resource ? Term::iri(resolve(*resource, scope, ev))
                                   : named_blank(*node_id);
            graph_.insert(subject, predicate, object);
            if (!ev.self_closing) {
                Event end = next_content(ev);
                if (end.kind != EventKind::EndElement)
                    throw ParseError("rdf:resource property element must be empty", end.line,
                                     end.column);
            }
            return;
        }

        if (ev.self_closing) {
            Term empty = datatype ? Term::literal("", {}, *datatype) : Term::literal("", scope.lang);
            graph_.insert(subject, predicate, empty);
            return;
        }

        // Content: either one nested node element or literal text.
        std::string text;
        bool has_text = false;
        std::optional<Term> object;
        while (true) {
            Event child = reader_.next();
            if (child.kind == EventKind::EndElement) break;
            if (child.kind == EventKind::Eof)
                throw ParseError("unexpected end of document inside <" + ev.name + ">",
                                 reader_.line(), reader_.column());
            if (child.kind == EventKind::Text) {
                text += child.text;
                if (!all_ws(child.text)) has_text = true;
                continue;
            }
            if (object)
                throw ParseError("property element has more than one nested node element",
                                 child.line, child.column);
            object = node_element(child, scope);
        }
        if (object) {
            if (has_text)
                throw ParseError("property element mixes text and element content", ev.line,
                                 ev.column);
            graph_.insert(subject, predicate, *object);
            return;
        }
        if (datatype)
            graph_.insert(subject, predicate, Term::literal(text, {}, *datatype));
        else
            graph_.insert(subject, predicate, Term::literal(text, scope.lang));
    }

    xml::Reader reader_;
    TripleGraph& graph_;
    std::size_t blank_counter_ = 0;
    std::map<std::string, std::string> blank_ids_;
};

} // namespace

TripleGraph parse_rdfxml(std::string_view text) {
    TripleGraph graph;
    RdfXmlParser parser(text, graph);
    parser.run();
    return graph;
}

} // namespace ontoalign
