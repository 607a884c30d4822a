#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ontoalign {

/// Lowercases and splits a raw label into tokens. Split points are any
/// non-alphanumeric character and lower-to-upper camelCase boundaries;
/// empty tokens are dropped and token order is preserved. No stop-word
/// removal. "hasValue_of-Thing" -> {has, value, of, thing}.
std::vector<std::string> normalize_label(std::string_view raw);

/// Tokens joined with single spaces.
std::string join_tokens(const std::vector<std::string>& tokens);

} // namespace ontoalign
