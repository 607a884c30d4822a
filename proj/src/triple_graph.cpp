#include "ontoalign/triple_graph.hpp"

#include <algorithm>

namespace ontoalign {

std::size_t TripleGraph::TermHash::operator()(const Term& t) const {
    std::size_t h = std::hash<std::string>()(t.value);
    h = h * 31 + static_cast<std::size_t>(t.kind);
    if (!t.lang.empty()) h = h * 31 + std::hash<std::string>()(t.lang);
    if (!t.datatype.empty()) h = h * 31 + std::hash<std::string>()(t.datatype);
    return h;
}

std::size_t TripleGraph::TripleHash::operator()(const TripleIds& t) const {
    std::uint64_t h = 1469598103934665603ull;
    for (std::uint64_t v : {t.s, t.p, t.o}) h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
}

TermId TripleGraph::intern(const Term& t) {
    auto it = term_ids_.find(t);
    if (it != term_ids_.end()) return it->second;
    TermId id = static_cast<TermId>(terms_.size());
    terms_.push_back(t);
    term_ids_.emplace(t, id);
    return id;
}

std::optional<TermId> TripleGraph::find_term(const Term& t) const {
    auto it = term_ids_.find(t);
    if (it == term_ids_.end()) return std::nullopt;
    return it->second;
}

bool TripleGraph::insert(TripleIds t) {
    if (!present_.insert(t).second) return false;
    auto idx = static_cast<std::uint32_t>(triples_.size());
    triples_.push_back(t);
    by_s_[t.s].push_back(idx);
    by_p_[t.p].push_back(idx);
    by_o_[t.o].push_back(idx);
    return true;
}

bool TripleGraph::insert(const Term& s, const Term& p, const Term& o) {
    return insert(TripleIds{intern(s), intern(p), intern(o)});
}

Triple TripleGraph::triple_at(std::size_t idx) const {
    const TripleIds& t = triples_[idx];
    return Triple{terms_[t.s], terms_[t.p], terms_[t.o]};
}

static const std::vector<std::uint32_t> kEmpty;

const std::vector<std::uint32_t>& TripleGraph::by_subject(TermId s) const {
    auto it = by_s_.find(s);
    return it == by_s_.end() ? kEmpty : it->second;
}

const std::vector<std::uint32_t>& TripleGraph::by_predicate(TermId p) const {
    auto it = by_p_.find(p);
    return it == by_p_.end() ? kEmpty : it->second;
}

const std::vector<std::uint32_t>& TripleGraph::by_object(TermId o) const {
    auto it = by_o_.find(o);
    return it == by_o_.end() ? kEmpty : it->second;
}

std::vector<std::uint32_t> TripleGraph::match(std::optional<TermId> s, std::optional<TermId> p,
                                              std::optional<TermId> o) const {
    const std::vector<std::uint32_t>* base = nullptr;
    if (s) base = &by_subject(*s);
    if (p) {
        const auto& v = by_predicate(*p);
        if (!base || v.size() < base->size()) base = &v;
    }
    if (o) {
        const auto& v = by_object(*o);
        if (!base || v.size() < base->size()) base = &v;
    }
    std::vector<std::uint32_t> out;
    if (!base) {
        out.resize(triples_.size());
        for (std::uint32_t i = 0; i < triples_.size(); ++i) out[i] = i;
    } else {
        for (auto idx : *base) {
            const TripleIds& t = triples_[idx];
            if (s && t.s != *s) continue;
            if (p && t.p != *p) continue;
            if (o && t.o != *o) continue;
            out.push_back(idx);
        }
    }
    return out;
}

std::vector<TermId> TripleGraph::objects(TermId s, TermId p) const {
    std::vector<TermId> out;
    for (auto idx : by_subject(s)) {
        const TripleIds& t = triples_[idx];
        if (t.p == p) out.push_back(t.o);
    }
    return out;
}

std::vector<TermId> TripleGraph::subjects(TermId p, TermId o) const {
    std::vector<TermId> out;
    for (auto idx : by_object(o)) {
        const TripleIds& t = triples_[idx];
        if (t.p == p) out.push_back(t.s);
    }
    return out;
}

std::vector<std::string> canonical_lines(const TripleGraph& g) {
    std::vector<std::string> lines;
    lines.reserve(g.size());
    for (std::size_t i = 0; i < g.size(); ++i) {
        Triple t = g.triple_at(i);
        std::string line = to_ntriples(t.subject);
        line += ' ';
        line += to_ntriples(t.predicate);
        line += ' ';
        line += to_ntriples(t.object);
        line += " .";
        lines.push_back(std::move(line));
    }
    std::sort(lines.begin(), lines.end());
    return lines;
}

bool TripleGraph::operator==(const TripleGraph& other) const {
    if (size() != other.size()) return false;
    return canonical_lines(*this) == canonical_lines(other);
}

std::string write_turtle(const TripleGraph& g) {
    std::string out;
    for (const auto& line : canonical_lines(g)) {
        out += line;
        out += '\n';
    }
    return out;
}

} // namespace ontoalign
