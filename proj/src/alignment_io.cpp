#include "ontoalign/alignment_io.hpp"

#include <algorithm>
#include <cstdio>
#include <optional>

#include "ontoalign/matcher.hpp"
#include "xml_reader.hpp"

namespace ontoalign {

namespace {

using xml::Event;
using xml::EventKind;

std::string local_of(const std::string& qname) { return xml::split_qname(qname).second; }

bool attr_local_is(const xml::Attribute& attr, std::string_view local) {
    return local_of(attr.name) == local;
}

void skip_element(xml::Reader& reader, const Event& start);

// Collects the text content of the current element, erroring on child elements.
std::string text_content(xml::Reader& reader, const Event& start) {
    if (start.self_closing) return "";
    std::string text;
    while (true) {
        Event ev = reader.next();
        if (ev.kind == EventKind::EndElement) break;
        if (ev.kind == EventKind::Text) {
            text += ev.text;
            continue;
        }
        if (ev.kind == EventKind::Eof)
            throw ParseError("unexpected end of document in <" + start.name + ">", reader.line(),
                             reader.column());
        // Nested element (e.g. <Ontology rdf:about=...> under onto1): take its
        // rdf:about when present and skip the rest.
        for (const auto& attr : ev.attributes)
            if (attr_local_is(attr, "about")) text = attr.value;
        skip_element(reader, ev);
    }
    return text;
}

void skip_element(xml::Reader& reader, const Event& start) {
    if (start.self_closing) return;
    while (true) {
        Event ev = reader.next();
        if (ev.kind == EventKind::EndElement) return;
        if (ev.kind == EventKind::Eof)
            throw ParseError("unexpected end of document in <" + start.name + ">", reader.line(),
                             reader.column());
        if (ev.kind == EventKind::StartElement) skip_element(reader, ev);
    }
}

AlignmentCell parse_cell(xml::Reader& reader, const Event& cell_start) {
    AlignmentCell cell;
    bool has_e1 = false, has_e2 = false;
    if (!cell_start.self_closing) {
        while (true) {
            Event ev = reader.next();
            if (ev.kind == EventKind::EndElement) break;
            if (ev.kind == EventKind::Eof)
                throw ParseError("unexpected end of document in <Cell>", reader.line(),
                                 reader.column());
            if (ev.kind == EventKind::Text) continue;
            std::string local = local_of(ev.name);
            if (local == "entity1" || local == "entity2") {
                std::optional<std::string> res;
                for (const auto& attr : ev.attributes)
                    if (attr_local_is(attr, "resource")) res = attr.value;
                if (!res)
                    throw ParseError("<" + local + "> is missing an rdf:resource attribute",
                                     ev.line, ev.column);
                if (local == "entity1") {
                    cell.entity1 = Iri(*res);
                    has_e1 = true;
                } else {
                    cell.entity2 = Iri(*res);
                    has_e2 = true;
                }
                skip_element(reader, ev);
            } else if (local == "measure") {
                std::string text = text_content(reader, ev);
                try {
                    std::size_t used = 0;
                    cell.measure = std::stod(text, &used);
                    while (used < text.size() &&
                           (text[used] == ' ' || text[used] == '\n' || text[used] == '\t' ||
                            text[used] == '\r'))
                        ++used;
                    if (used != text.size()) throw std::invalid_argument(text);
                } catch (const std::exception&) {
                    throw ParseError("non-numeric measure '" + text + "'", ev.line, ev.column);
                }
            } else if (local == "relation") {
                std::string text = text_content(reader, ev);
                // trim surrounding whitespace
                auto b = text.find_first_not_of(" \t\r\n");
                auto e = text.find_last_not_of(" \t\r\n");
                cell.relation = b == std::string::npos ? "" : text.substr(b, e - b + 1);
            } else {
                skip_element(reader, ev);
            }
        }
    }
    if (!has_e1 || !has_e2)
        throw ParseError("<Cell> is missing entity1 or entity2", cell_start.line,
                         cell_start.column);
    return cell;
}

} // namespace

std::vector<AlignmentCell> ReferenceAlignment::equivalence_cells() const {
    std::vector<AlignmentCell> out;
    for (const auto& c : cells)
        if (c.relation == "=") out.push_back(c);
    return out;
}

ReferenceAlignment parse_alignment(std::string_view text) {
    xml::Reader reader(text);
    ReferenceAlignment result;
    // Scan for Cell / onto1 / onto2 elements anywhere under the root; OAEI
    // files wrap them in <rdf:RDF><Alignment><map> but the nesting varies.
    std::vector<std::string> stack;
    while (true) {
        Event ev = reader.next();
        if (ev.kind == EventKind::Eof) break;
        if (ev.kind == EventKind::EndElement) {
            if (!stack.empty()) stack.pop_back();
            continue;
        }
        if (ev.kind == EventKind::Text) continue;
        std::string local = local_of(ev.name);
        if (local == "Cell") {
            result.cells.push_back(parse_cell(reader, ev));
        } else if (local == "onto1" || local == "onto2") {
            std::string value = text_content(reader, ev);
            auto b = value.find_first_not_of(" \t\r\n");
            auto e = value.find_last_not_of(" \t\r\n");
            value = b == std::string::npos ? "" : value.substr(b, e - b + 1);
            (local == "onto1" ? result.onto1 : result.onto2) = value;
        } else if (!ev.self_closing) {
            stack.push_back(ev.name);
        }
    }
    std::sort(result.cells.begin(), result.cells.end());
    result.cells.erase(std::unique(result.cells.begin(), result.cells.end(),
                                   [](const AlignmentCell& a, const AlignmentCell& b) {
                                       return a.entity1 == b.entity1 && a.entity2 == b.entity2 &&
                                              a.relation == b.relation;
                                   }),
                       result.cells.end());
    return result;
}

std::string write_alignment_cells(std::vector<AlignmentCell> cells, const std::string& onto1,
                                  const std::string& onto2) {
    std::sort(cells.begin(), cells.end());
    std::string out;
    out += "<?xml version='1.0' encoding='utf-8'?>\n";
    out += "<rdf:RDF xmlns='http://knowledgeweb.semanticweb.org/heterogeneity/alignment'\n";
    out += "         xmlns:rdf='http://www.w3.org/1999/02/22-rdf-syntax-ns#'\n";
    out += "         xmlns:xsd='http://www.w3.org/2001/XMLSchema#'>\n";
    out += "<Alignment>\n";
    out += "  <xml>yes</xml>\n";
    out += "  <level>0</level>\n";
    out += "  <type>11</type>\n";
    if (!onto1.empty()) out += "  <onto1>" + xml::escape(onto1) + "</onto1>\n";
    if (!onto2.empty()) out += "  <onto2>" + xml::escape(onto2) + "</onto2>\n";
    char measure[32];
    for (const auto& cell : cells) {
        std::snprintf(measure, sizeof measure, "%.6f", cell.measure);
        out += "  <map>\n";
        out += "    <Cell>\n";
        out += "      <entity1 rdf:resource=\"" + xml::escape(cell.entity1.value) + "\"/>\n";
        out += "      <entity2 rdf:resource=\"" + xml::escape(cell.entity2.value) + "\"/>\n";
        out += "      <relation>" + xml::escape(cell.relation) + "</relation>\n";
        out += "      <measure rdf:datatype=\"http://www.w3.org/2001/XMLSchema#float\">";
        out += measure;
        out += "</measure>\n";
        out += "    </Cell>\n";
        out += "  </map>\n";
    }
    out += "</Alignment>\n";
    out += "</rdf:RDF>\n";
    return out;
}

std::string write_alignment(const std::vector<CandidateMapping>& mappings, const Iri& onto1,
                            const Iri& onto2) {
    std::vector<AlignmentCell> cells;
    cells.reserve(mappings.size());
    for (const auto& m : mappings)
        cells.push_back(AlignmentCell{m.source, m.target, "=", m.confidence});
    return write_alignment_cells(std::move(cells), onto1.value, onto2.value);
}

} // namespace ontoalign
