#include "ontoalign/term.hpp"

namespace ontoalign {

bool looks_absolute_iri(std::string_view s) {
    if (s.empty()) return false;
    char c = s[0];
    if (!((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'))) return false;
    for (std::size_t i = 1; i < s.size(); ++i) {
        char d = s[i];
        if (d == ':') return true;
        bool scheme_char = (d >= 'a' && d <= 'z') || (d >= 'A' && d <= 'Z') ||
                           (d >= '0' && d <= '9') || d == '+' || d == '-' || d == '.';
        if (!scheme_char) return false;
    }
    return false;
}

std::string_view iri_local_name(std::string_view iri) {
    auto hash = iri.rfind('#');
    if (hash != std::string_view::npos) return iri.substr(hash + 1);
    auto slash = iri.rfind('/');
    if (slash != std::string_view::npos) return iri.substr(slash + 1);
    return iri;
}

static void escape_into(std::string& out, const std::string& s) {
    for (char c : s) {
        switch (c) {
            case '\\': out += "\\\\"; break;
            case '"': out += "\\\""; break;
            case '\n': out += "\\n"; break;
            case '\r': out += "\\r"; break;
            case '\t': out += "\\t"; break;
            default: out += c;
        }
    }
}

std::string to_ntriples(const Term& t) {
    std::string out;
    switch (t.kind) {
        case TermKind::Iri:
            out += '<';
            out += t.value;
            out += '>';
            break;
        case TermKind::Blank:
            out += "_:";
            out += t.value;
            break;
        case TermKind::Literal:
            out += '"';
            escape_into(out, t.value);
            out += '"';
            if (!t.lang.empty()) {
                out += '@';
                out += t.lang;
            } else if (!t.datatype.empty()) {
                out += "^^<";
                out += t.datatype;
                out += '>';
            }
            break;
    }
    return out;
}

} // namespace ontoalign
