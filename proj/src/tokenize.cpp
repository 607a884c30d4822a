#include "ontoalign/tokenize.hpp"

namespace ontoalign {

namespace {
bool is_lower(char c) { return c >= 'a' && c <= 'z'; }
bool is_upper(char c) { return c >= 'A' && c <= 'Z'; }
bool is_alnum(char c) { return is_lower(c) || is_upper(c) || (c >= '0' && c <= '9'); }
char to_lower(char c) { return is_upper(c) ? static_cast<char>(c - 'A' + 'a') : c; }
} // namespace

std::vector<std::string> normalize_label(std::string_view raw) {
    std::vector<std::string> tokens;
    std::string current;
    char prev = '\0';
    for (char c : raw) {
        if (!is_alnum(c)) {
            if (!current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
        } else {
            if (is_lower(prev) && is_upper(c) && !current.empty()) {
                tokens.push_back(current);
                current.clear();
            }
            current += to_lower(c);
        }
        prev = c;
    }
    if (!current.empty()) tokens.push_back(current);
    return tokens;
}

std::string join_tokens(const std::vector<std::string>& tokens) {
    std::string out;
    for (const auto& t : tokens) {
        if (!out.empty()) out += ' ';
        out += t;
    }
    return out;
}

} // namespace ontoalign
