#include <random>

#include "doctest.h"
#include "ontoalign/tokenize.hpp"

using namespace ontoalign;

TEST_CASE("normalize_label basic splits") {
    CHECK(normalize_label("Heart Valve") == std::vector<std::string>{"heart", "valve"});
    CHECK(normalize_label("hasValue_of-Thing") ==
          std::vector<std::string>{"has", "value", "of", "thing"});
    CHECK(normalize_label("") == std::vector<std::string>{});
    CHECK(normalize_label("...---...") == std::vector<std::string>{});
    CHECK(normalize_label("camelCaseWord") == std::vector<std::string>{"camel", "case", "word"});
    CHECK(normalize_label("ALLCAPS") == std::vector<std::string>{"allcaps"});
    CHECK(normalize_label("x2Y") == std::vector<std::string>{"x2", "y"});
    CHECK(normalize_label("mitral valve") == std::vector<std::string>{"mitral", "valve"});
}

TEST_CASE("normalize_label preserves order and drops empties") {
    CHECK(normalize_label("  b   a ") == std::vector<std::string>{"b", "a"});
    CHECK(normalize_label("a__b") == std::vector<std::string>{"a", "b"});
}

TEST_CASE("normalize_label idempotent on rejoined output") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> len(0, 24);
    const std::string alphabet = "abXY09 _-#/zQ";
    std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
    for (int trial = 0; trial < 2000; ++trial) {
        std::string raw;
        int n = len(rng);
        for (int i = 0; i < n; ++i) raw += alphabet[pick(rng)];
        auto once = normalize_label(raw);
        auto twice = normalize_label(join_tokens(once));
        CHECK(once == twice);
    }
}
