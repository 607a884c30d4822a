#include "xml_reader.hpp"

#include <cstdint>

namespace ontoalign::xml {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

bool is_name_start(char c) {
    return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_' || c == ':' ||
           static_cast<unsigned char>(c) >= 0x80;
}

bool is_name_char(char c) { return is_name_start(c) || (c >= '0' && c <= '9') || c == '-' || c == '.'; }

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

} // namespace

char Reader::advance() {
    char c = text_[pos_++];
    if (c == '\n') {
        ++line_;
        col_ = 1;
    } else {
        ++col_;
    }
    return c;
}

bool Reader::starts_with(std::string_view s) const {
    return text_.substr(pos_, s.size()) == s;
}

void Reader::consume(std::string_view s) {
    if (!starts_with(s)) fail("expected '" + std::string(s) + "'");
    for (std::size_t i = 0; i < s.size(); ++i) advance();
}

void Reader::skip_ws() {
    while (!at_end() && is_ws(peek())) advance();
}

std::string Reader::read_name() {
    if (at_end() || !is_name_start(peek())) fail("expected XML name");
    std::string name;
    name += advance();
    while (!at_end() && is_name_char(peek())) name += advance();
    return name;
}

void Reader::expand_reference(std::string& out) {
    // positioned just past '&'
    if (peek() == '#') {
        advance();
        std::uint32_t cp = 0;
        if (peek() == 'x' || peek() == 'X') {
            advance();
            bool any = false;
            while (!at_end() && peek() != ';') {
                char c = advance();
                cp <<= 4;
                if (c >= '0' && c <= '9')
                    cp |= static_cast<std::uint32_t>(c - '0');
                else if (c >= 'a' && c <= 'f')
                    cp |= static_cast<std::uint32_t>(c - 'a' + 10);
                else if (c >= 'A' && c <= 'F')
                    cp |= static_cast<std::uint32_t>(c - 'A' + 10);
                else
                    fail("invalid character reference");
                any = true;
            }
            if (!any) fail("invalid character reference");
        } else {
            bool any = false;
            while (!at_end() && peek() != ';') {
                char c = advance();
                if (c < '0' || c > '9') fail("invalid character reference");
                cp = cp * 10 + static_cast<std::uint32_t>(c - '0');
                any = true;
            }
            if (!any) fail("invalid character reference");
        }
        if (at_end()) fail("unterminated character reference");
        advance(); // ';'
        append_utf8(out, cp);
        return;
    }
    std::string name;
    while (!at_end() && peek() != ';') {
        if (is_ws(peek())) fail("unterminated entity reference");
        name += advance();
    }
    if (at_end()) fail("unterminated entity reference");
    advance(); // ';'
    if (name == "amp")
        out += '&';
    else if (name == "lt")
        out += '<';
    else if (name == "gt")
        out += '>';
    else if (name == "quot")
        out += '"';
    else if (name == "apos")
        out += '\'';
    else {
        auto it = entities_.find(name);
        if (it == entities_.end()) fail("undefined entity '&" + name + ";'");
        out += it->second;
    }
}

std::string Reader::read_quoted(bool expand_entities) {
    if (peek() != '"' && peek() != '\'') fail("expected quoted value");
    char quote = advance();
    std::string value;
    while (true) {
        if (at_end()) fail("unterminated quoted value");
        char c = peek();
        if (c == quote) {
            advance();
            break;
        }
        if (c == '&' && expand_entities) {
            advance();
            expand_reference(value);
            continue;
        }
        if (c == '<') fail("'<' in attribute value");
        value += advance();
    }
    return value;
}

void Reader::parse_doctype() {
    consume("<!DOCTYPE");
    // read until '[' (internal subset) or '>'
    while (!at_end() && peek() != '[' && peek() != '>') advance();
    if (at_end()) fail("unterminated DOCTYPE");
    if (peek() == '>') {
        advance();
        return;
    }
    advance(); // '['
    while (true) {
        skip_ws();
        if (at_end()) fail("unterminated DOCTYPE internal subset");
        if (peek() == ']') {
            advance();
            break;
        }
        if (starts_with("<!ENTITY")) {
            consume("<!ENTITY");
            skip_ws();
            if (peek() == '%') fail("parameter entities are not supported");
            std::string name = read_name();
            skip_ws();
            std::string value = read_quoted(true);
            skip_ws();
            if (peek() != '>') fail("malformed entity declaration");
            advance();
            entities_.emplace(std::move(name), std::move(value));
        } else if (starts_with("<!--")) {
            consume("<!--");
            while (!at_end() && !starts_with("-->")) advance();
            consume("-->");
        } else if (starts_with("<!") || starts_with("<?")) {
            // other markup declarations (ELEMENT, ATTLIST, PIs): skip to '>'
            while (!at_end() && peek() != '>') advance();
            if (at_end()) fail("unterminated markup declaration");
            advance();
        } else {
            fail("unsupported content in DOCTYPE internal subset");
        }
    }
    skip_ws();
    if (at_end() || peek() != '>') fail("unterminated DOCTYPE");
    advance();
}

void Reader::skip_prolog_misc() {
    while (!at_end()) {
        if (is_ws(peek())) {
            advance();
        } else if (starts_with("<?")) {
            while (!at_end() && !starts_with("?>")) advance();
            consume("?>");
        } else if (starts_with("<!--")) {
            consume("<!--");
            while (!at_end() && !starts_with("-->")) advance();
            consume("-->");
        } else if (starts_with("<!DOCTYPE")) {
            parse_doctype();
        } else {
            break;
        }
    }
}

Event Reader::read_tag() {
    Event ev;
    ev.line = line_;
    ev.column = col_;
    advance(); // '<'
    if (peek() == '/') {
        advance();
        ev.kind = EventKind::EndElement;
        ev.name = read_name();
        skip_ws();
        if (peek() != '>') fail("malformed end tag");
        advance();
        if (open_.empty() || open_.back() != ev.name)
            fail("mismatched end tag '</" + ev.name + ">'");
        open_.pop_back();
        return ev;
    }
    ev.kind = EventKind::StartElement;
    ev.name = read_name();
    while (true) {
        bool had_ws = !at_end() && is_ws(peek());
        skip_ws();
        if (at_end()) fail("unterminated start tag");
        if (peek() == '>') {
            advance();
            open_.push_back(ev.name);
            return ev;
        }
        if (peek() == '/' ) {
            advance();
            if (peek() != '>') fail("malformed empty-element tag");
            advance();
            ev.self_closing = true;
            return ev;
        }
        if (!had_ws) fail("expected whitespace before attribute");
        Attribute attr;
        attr.name = read_name();
        skip_ws();
        if (peek() != '=') fail("expected '=' after attribute name");
        advance();
        skip_ws();
        attr.value = read_quoted(true);
        for (const auto& existing : ev.attributes)
            if (existing.name == attr.name) fail("duplicate attribute '" + attr.name + "'");
        ev.attributes.push_back(std::move(attr));
    }
}

Event Reader::read_text() {
    Event ev;
    ev.kind = EventKind::Text;
    ev.line = line_;
    ev.column = col_;
    while (!at_end()) {
        if (peek() == '<') {
            if (starts_with("<![CDATA[")) {
                consume("<![CDATA[");
                while (!at_end() && !starts_with("]]>")) ev.text += advance();
                consume("]]>");
                continue;
            }
            if (starts_with("<!--")) {
                consume("<!--");
                while (!at_end() && !starts_with("-->")) advance();
                consume("-->");
                continue;
            }
            if (starts_with("<?")) {
                while (!at_end() && !starts_with("?>")) advance();
                consume("?>");
                continue;
            }
            break;
        }
        if (peek() == '&') {
            advance();
            expand_reference(ev.text);
            continue;
        }
        ev.text += advance();
    }
    return ev;
}

Event Reader::next() {
    if (!seen_root_) {
        skip_prolog_misc();
        seen_root_ = true;
        if (at_end()) return Event{};
        if (peek() != '<') fail("expected root element");
        return read_tag();
    }
    if (open_.empty()) {
        // after the root element only misc content is allowed
        skip_prolog_misc();
        if (at_end()) return Event{};
        fail("content after root element");
    }
    if (at_end()) fail("unexpected end of document inside element");
    if (peek() == '<' && !starts_with("<![CDATA[") && !starts_with("<!--") && !starts_with("<?"))
        return read_tag();
    return read_text();
}

std::pair<std::string, std::string> split_qname(const std::string& name) {
    auto colon = name.find(':');
    if (colon == std::string::npos) return {"", name};
    return {name.substr(0, colon), name.substr(colon + 1)};
}

std::string escape(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) {
        switch (c) {
            case '&': out += "&amp;"; break;
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    }
    return out;
}

} // namespace ontoalign::xml
