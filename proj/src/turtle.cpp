#include "ontoalign/turtle.hpp"

#include <cstdint>
#include <map>
#include <optional>

namespace ontoalign {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_pn_char(char c) {
    return is_alpha(c) || is_digit(c) || c == '_' || c == '-' ||
           static_cast<unsigned char>(c) >= 0x80;
}

void append_utf8(std::string& out, std::uint32_t cp) {
    if (cp < 0x80) {
        out += static_cast<char>(cp);
    } else if (cp < 0x800) {
        out += static_cast<char>(0xC0 | (cp >> 6));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else if (cp < 0x10000) {
        out += static_cast<char>(0xE0 | (cp >> 12));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    } else {
        out += static_cast<char>(0xF0 | (cp >> 18));
        out += static_cast<char>(0x80 | ((cp >> 12) & 0x3F));
        out += static_cast<char>(0x80 | ((cp >> 6) & 0x3F));
        out += static_cast<char>(0x80 | (cp & 0x3F));
    }
}

class TurtleParser {
public:
    TurtleParser(std::string_view text, TripleGraph& graph) : text_(text), graph_(graph) {}

    void run() {
        skip_ws();
        while (!at_end()) {
            statement();
            skip_ws();
        }
    }

private:
    // --- character stream ------------------------------------------------

    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char advance() {
        char c = text_[pos_++];
        if (c == '\n') {
            ++line_;
            col_ = 1;
        } else {
            ++col_;
        }
        return c;
    }

    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }
    [[noreturn]] void fail_at(const std::string& msg, std::size_t line, std::size_t col) const {
        throw ParseError(msg, line, col);
    }

    void skip_ws() {
        while (!at_end()) {
            char c = peek();
            if (is_ws(c)) {
                advance();
            } else if (c == '#') {
                while (!at_end() && peek() != '\n') advance();
            } else {
                break;
            }
        }
    }

    void expect(char c) {
        if (at_end() || peek() != c) fail(std::string("expected '") + c + "'");
        advance();
    }

    bool match_keyword(std::string_view kw) {
        if (text_.size() - pos_ < kw.size()) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) {
            char a = text_[pos_ + i];
            char b = kw[i];
            if (a != b && a != (b - 'A' + 'a') && a != (b - 'a' + 'A')) return false;
        }
        char next = pos_ + kw.size() < text_.size() ? text_[pos_ + kw.size()] : '\0';
        if (is_pn_char(next)) return false;
        for (std::size_t i = 0; i < kw.size(); ++i) advance();
        return true;
    }

    // --- statements ------------------------------------------------------

    void statement() {
        if (peek() == '@') {
            directive();
            return;
        }
        // SPARQL-style PREFIX/BASE (no trailing dot). The keyword must be
        // followed by whitespace or '<' to rule out pnames like "prefix:x".
        std::size_t save_pos = pos_, save_line = line_, save_col = col_;
        if (match_keyword("PREFIX") && (is_ws(peek()) || peek() == '#')) {
            skip_ws();
            read_prefix_decl();
            return;
        }
        pos_ = save_pos;
        line_ = save_line;
        col_ = save_col;
        if (match_keyword("BASE") && (is_ws(peek()) || peek() == '<' || peek() == '#')) {
            skip_ws();
            base_ = read_iriref();
            return;
        }
        pos_ = save_pos;
        line_ = save_line;
        col_ = save_col;
        triples_block();
        skip_ws();
        expect('.');
    }

    void directive() {
        expect('@');
        if (match_keyword("prefix")) {
            skip_ws();
            read_prefix_decl();
            skip_ws();
            expect('.');
        } else if (match_keyword("base")) {
            skip_ws();
            base_ = read_iriref();
            skip_ws();
            expect('.');
        } else {
            fail("unknown directive");
        }
    }

    void read_prefix_decl() {
        std::string prefix = read_pname_prefix();
        expect(':');
        skip_ws();
        prefixes_[prefix] = read_iriref();
    }

    void triples_block() {
        Term subject;
        if (peek() == '[') {
            subject = blank_node_property_list();
            skip_ws();
            if (peek() == '.') return; // bare [ ... ] . form
        } else if (peek() == '(') {
            subject = collection();
        } else {
            subject = resource();
        }
        skip_ws();
        predicate_object_list(subject);
    }

    void predicate_object_list(const Term& subject) {
        while (true) {
            Term predicate = verb();
            skip_ws();
            object_list(subject, predicate);
            skip_ws();
            if (peek() == ';') {
                advance();
                skip_ws();
                // trailing ';' before '.' or ']' is allowed
                if (peek() == '.' || peek() == ']' || peek() == ';') {
                    while (peek() == ';') {
                        advance();
                        skip_ws();
                    }
                    if (peek() == '.' || peek() == ']') return;
                }
                continue;
            }
            return;
        }
    }

    Term verb() {
        if (peek() == 'a' && !is_pn_char(peek(1)) && peek(1) != ':') {
            advance();
            return Term::iri(vocab::rdf_type);
        }
        Term t = resource();
        if (!t.is_iri()) fail("predicate must be an IRI");
        return t;
    }

    void object_list(const Term& subject, const Term& predicate) {
        while (true) {
            Term obj = object();
            graph_.insert(subject, predicate, obj);
            skip_ws();
            if (peek() == ',') {
                advance();
                skip_ws();
                continue;
            }
            return;
        }
    }

    Term object() {
        char c = peek();
        if (c == '[') return blank_node_property_list();
        if (c == '(') return collection();
        if (c == '"' || c == '\'') return literal();
        if (c == '+' || c == '-' || is_digit(c)) return numeric_literal();
        if (match_keyword("true")) return Term::literal("true", {}, vocab::xsd_boolean);
        if (match_keyword("false")) return Term::literal("false", {}, vocab::xsd_boolean);
        return resource();
    }

    // --- terms -----------------------------------------------------------

    Term resource() {
        char c = peek();
        if (c == '<') return Term::iri(read_iriref());
        if (c == '_' && peek(1) == ':') return labelled_blank();
        return prefixed_name();
    }

    std::string read_iriref() {
        std::size_t l = line_, col = col_;
        expect('<');
        std::string raw;
        while (true) {
            if (at_end()) fail_at("unterminated IRI", l, col);
            char c = advance();
            if (c == '>') break;
            if (c == '\\') {
                char e = at_end() ? '\0' : advance();
                if (e == 'u')
                    append_utf8(raw, read_hex(4));
                else if (e == 'U')
                    append_utf8(raw, read_hex(8));
                else
                    fail("invalid escape in IRI");
            } else if (c == ' ' || c == '\n' || c == '\t') {
                fail_at("whitespace in IRI", l, col);
            } else {
                raw += c;
            }
        }
        return resolve_iri(raw, l, col);
    }

    std::string resolve_iri(const std::string& ref, std::size_t l, std::size_t col) {
        if (looks_absolute_iri(ref)) return ref;
        if (base_.empty()) fail_at("relative IRI '" + ref + "' without @base", l, col);
        if (ref.empty()) return base_;
        if (ref[0] == '#') {
            auto hash = base_.find('#');
            return (hash == std::string::npos ? base_ : base_.substr(0, hash)) + ref;
        }
        if (ref[0] == '/') {
            auto scheme_end = base_.find("://");
            if (scheme_end == std::string::npos) return base_ + ref;
            auto path = base_.find('/', scheme_end + 3);
            return (path == std::string::npos ? base_ : base_.substr(0, path)) + ref;
        }
        auto slash = base_.rfind('/');
        return (slash == std::string::npos ? base_ + "/" : base_.substr(0, slash + 1)) + ref;
    }

    std::string read_pname_prefix() {
        std::string out;
        while (is_pn_char(peek()) || (peek() == '.' && is_pn_char(peek(1)))) out += advance();
        return out;
    }

    Term prefixed_name() {
        std::size_t l = line_, col = col_;
        std::string prefix = read_pname_prefix();
        if (peek() != ':') fail_at("expected IRI, prefixed name, literal, or blank node", l, col);
        advance();
        std::string local;
        while (true) {
            char c = peek();
            if (is_pn_char(c) || c == '%') {
                local += advance();
            } else if (c == '.' && (is_pn_char(peek(1)) || peek(1) == '.' || peek(1) == '%')) {
                // dots are allowed inside a local name but a trailing dot ends the statement
                local += advance();
            } else if (c == '\\') {
                advance();
                if (at_end()) fail("dangling escape in local name");
                local += advance();
            } else {
                break;
            }
        }
        auto it = prefixes_.find(prefix);
        if (it == prefixes_.end()) fail_at("undefined prefix '" + prefix + ":'", l, col);
        return Term::iri(it->second + local);
    }

    Term labelled_blank() {
        advance(); // _
        advance(); // :
        std::string label;
        while (is_pn_char(peek()) || (peek() == '.' && is_pn_char(peek(1)))) label += advance();
        if (label.empty()) fail("empty blank node label");
        auto it = blank_labels_.find(label);
        if (it != blank_labels_.end()) return Term::blank(it->second);
        std::string fresh = next_blank();
        blank_labels_.emplace(label, fresh);
        return Term::blank(fresh);
    }

    std::string next_blank() { return "b" + std::to_string(blank_counter_++); }

    Term blank_node_property_list() {
        expect('[');
        Term node = Term::blank(next_blank());
        skip_ws();
        if (peek() == ']') {
            advance();
            return node;
        }
        predicate_object_list(node);
        skip_ws();
        expect(']');
        return node;
    }

    Term collection() {
        expect('(');
        skip_ws();
        std::vector<Term> items;
        while (peek() != ')') {
            if (at_end()) fail("unterminated collection");
            items.push_back(object());
            skip_ws();
        }
        advance(); // )
        if (items.empty()) return Term::iri(vocab::rdf_nil);
        std::vector<Term> nodes;
        nodes.reserve(items.size());
        for (std::size_t i = 0; i < items.size(); ++i) nodes.push_back(Term::blank(next_blank()));
        Term first = Term::iri(vocab::rdf_first);
        Term rest = Term::iri(vocab::rdf_rest);
        for (std::size_t i = 0; i < items.size(); ++i) {
            graph_.insert(nodes[i], first, items[i]);
            Term tail = i + 1 < items.size() ? nodes[i + 1] : Term::iri(vocab::rdf_nil);
            graph_.insert(nodes[i], rest, tail);
        }
        return nodes[0];
    }

    std::uint32_t read_hex(int digits) {
        std::uint32_t cp = 0;
        for (int i = 0; i < digits; ++i) {
            if (at_end()) fail("truncated \\u escape");
            char c = advance();
            cp <<= 4;
            if (c >= '0' && c <= '9')
                cp |= static_cast<std::uint32_t>(c - '0');
            else if (c >= 'a' && c <= 'f')
                cp |= static_cast<std::uint32_t>(c - 'a' + 10);
            else if (c >= 'A' && c <= 'F')
                cp |= static_cast<std::uint32_t>(c - 'A' + 10);
            else
                fail("invalid hex digit in escape");
        }
        return cp;
    }

    Term literal() {
        std::size_t l = line_, col = col_;
        char quote = advance();
        bool long_form = false;
        if (peek() == quote && peek(1) == quote) {
            advance();
            advance();
            long_form = true;
        } else if (peek() == quote) {
            // empty short literal
            advance();
            return literal_suffix("");
        }
        std::string value;
        while (true) {
            if (at_end()) fail_at("unterminated string literal", l, col);
            char c = peek();
            if (!long_form && (c == '\n' || c == '\r')) fail_at("unterminated string literal", l, col);
            if (c == quote) {
                if (!long_form) {
                    advance();
                    break;
                }
                if (peek(1) == quote && peek(2) == quote) {
                    advance();
                    advance();
                    advance();
                    break;
                }
                value += advance();
                continue;
            }
            advance();
            if (c == '\\') {
                if (at_end()) fail_at("unterminated string literal", l, col);
                char e = advance();
                switch (e) {
                    case 't': value += '\t'; break;
                    case 'b': value += '\b'; break;
                    case 'n': value += '\n'; break;
                    case 'r': value += '\r'; break;
                    case 'f': value += '\f'; break;
                    case '"': value += '"'; break;
                    case '\'': value += '\''; break;
                    case '\\': value += '\\'; break;
                    case 'u': append_utf8(value, read_hex(4)); break;
                    case 'U': append_utf8(value, read_hex(8)); break;
                    default: fail("invalid string escape");
                }
            } else {
                value += c;
            }
        }
        return literal_suffix(value);
    }

    Term literal_suffix(std::string value) {
        if (peek() == '@') {
            advance();
            std::string lang;
            while (is_alpha(peek()) || is_digit(peek()) || peek() == '-') lang += advance();
            if (lang.empty()) fail("empty language tag");
            return Term::literal(std::move(value), lang);
        }
        if (peek() == '^' && peek(1) == '^') {
            advance();
            advance();
            Term dt = resource();
            if (!dt.is_iri()) fail("datatype must be an IRI");
            return Term::literal(std::move(value), {}, dt.value);
        }
        return Term::literal(std::move(value));
    }

    Term numeric_literal() {
        std::string lex;
        bool has_dot = false, has_exp = false;
        if (peek() == '+' || peek() == '-') lex += advance();
        while (true) {
            char c = peek();
            if (is_digit(c)) {
                lex += advance();
            } else if (c == '.' && !has_dot && !has_exp && is_digit(peek(1))) {
                has_dot = true;
                lex += advance();
            } else if ((c == 'e' || c == 'E') && !has_exp) {
                has_exp = true;
                lex += advance();
                if (peek() == '+' || peek() == '-') lex += advance();
            } else {
                break;
            }
        }
        if (lex.empty() || lex == "+" || lex == "-") fail("malformed numeric literal");
        const std::string& dt =
            has_exp ? vocab::xsd_double : (has_dot ? vocab::xsd_decimal : vocab::xsd_integer);
        return Term::literal(std::move(lex), {}, dt);
    }

    std::string_view text_;
    TripleGraph& graph_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    std::string base_;
    std::map<std::string, std::string> prefixes_;
    std::map<std::string, std::string> blank_labels_;
    std::size_t blank_counter_ = 0;
};

} // namespace

TripleGraph parse_turtle(std::string_view text) {
    TripleGraph graph;
    TurtleParser parser(text, graph);
    parser.run();
    return graph;
}

} // namespace ontoalign
