#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ontoalign/parse_error.hpp"

namespace ontoalign::xml {

struct Attribute {
    std::string name; // as written, possibly prefixed
    std::string value;
};

enum class EventKind { StartElement, EndElement, Text, Eof };

struct Event {
    EventKind kind = EventKind::Eof;
    std::string name;                  // element name for Start/End
    std::vector<Attribute> attributes; // Start only
    bool self_closing = false;         // Start only
    std::string text;                  // Text only
    std::size_t line = 0;
    std::size_t column = 0;
};

/// Minimal non-validating XML pull parser. Handles elements, attributes,
/// character data, CDATA, comments, processing instructions, character
/// references, the five predefined entities, and general entities declared in
/// an internal DTD subset (the form OAEI ontology headers use). Raises
/// ParseError for malformed input and for constructs outside this subset.
class Reader {
public:
    explicit Reader(std::string_view text) : text_(text) {}

    /// Next event. Coalesces consecutive character data; whitespace-only text
    /// between elements is still reported (callers decide significance).
    Event next();

    std::size_t line() const { return line_; }
    std::size_t column() const { return col_; }

private:
    bool at_end() const { return pos_ >= text_.size(); }
    char peek(std::size_t ahead = 0) const {
        return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0';
    }
    char advance();
    bool starts_with(std::string_view s) const;
    void consume(std::string_view s);
    void skip_ws();
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, col_); }

    void skip_prolog_misc();
    void parse_doctype();
    std::string read_name();
    std::string read_quoted(bool expand_entities);
    void expand_reference(std::string& out);
    Event read_tag();
    Event read_text();

    std::string_view text_;
    std::size_t pos_ = 0;
    std::size_t line_ = 1;
    std::size_t col_ = 1;
    bool seen_root_ = false;
    std::vector<std::string> open_;
    std::map<std::string, std::string> entities_;
};

/// Splits "prefix:local" into its parts; prefix is empty when none.
std::pair<std::string, std::string> split_qname(const std::string& name);

/// Escapes &, <, >, " for use in XML text and attribute values.
std::string escape(std::string_view s);

} // namespace ontoalign::xml
