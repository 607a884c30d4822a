#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ontoalign {

/// Located syntax error raised by the Turtle, XML/RDF-XML, alignment, config
/// and rule parsers. Line and column are 1-based.
class ParseError : public std::runtime_error {
public:
    ParseError(std::string message, std::size_t line, std::size_t column)
        : std::runtime_error(format(message, line, column)),
          message_(std::move(message)),
          line_(line),
          column_(column) {}

    const std::string& message() const { return message_; }
    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& message, std::size_t line, std::size_t column) {
        return std::to_string(line) + ":" + std::to_string(column) + ": " + message;
    }

    std::string message_;
    std::size_t line_;
    std::size_t column_;
};

/// Invalid configuration (weights not summing to 1, values out of range,
/// unknown keys). Distinct from ParseError so the CLI can map it to its own
/// exit status.
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& message) : std::runtime_error(message) {}
};

} // namespace ontoalign
