#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "ontoalign/term.hpp"

namespace ontoalign {

using TermId = std::uint32_t;

struct TripleIds {
    TermId s, p, o;
    bool operator==(const TripleIds&) const = default;
};

struct Triple {
    Term subject;
    Term predicate; // always an IRI
    Term object;
    bool operator==(const Triple&) const = default;
    auto operator<=>(const Triple&) const = default;
};

/// In-memory triple store with set semantics and subject/predicate/object indexes.
/// Terms are interned; triples are kept in insertion order. Immutable data may be
/// read from many threads; mutation is single-threaded.
class TripleGraph {
public:
    TermId intern(const Term& t);
    const Term& term(TermId id) const { return terms_[id]; }
    std::optional<TermId> find_term(const Term& t) const;
    std::size_t term_count() const { return terms_.size(); }

    /// Inserts a triple; returns false (no-op) when already present.
    bool insert(TripleIds t);
    bool insert(const Term& s, const Term& p, const Term& o);

    std::size_t size() const { return triples_.size(); }
    const std::vector<TripleIds>& triples() const { return triples_; }
    Triple triple_at(std::size_t idx) const;
    bool contains(const TripleIds& t) const { return present_.count(t) != 0; }

    /// Triple indexes matching the pattern; std::nullopt positions are wildcards.
    /// Uses the most selective available index, falling back to a full scan when
    /// every position is a wildcard.
    std::vector<std::uint32_t> match(std::optional<TermId> s, std::optional<TermId> p,
                                     std::optional<TermId> o) const;

    const std::vector<std::uint32_t>& by_subject(TermId s) const;
    const std::vector<std::uint32_t>& by_predicate(TermId p) const;
    const std::vector<std::uint32_t>& by_object(TermId o) const;

    /// Objects of (s, p, *) in insertion order.
    std::vector<TermId> objects(TermId s, TermId p) const;
    /// Subjects of (*, p, o) in insertion order.
    std::vector<TermId> subjects(TermId p, TermId o) const;

    bool operator==(const TripleGraph& other) const;

private:
    struct TermHash {
        std::size_t operator()(const Term& t) const;
    };
    struct TripleHash {
        std::size_t operator()(const TripleIds& t) const;
    };

    std::vector<Term> terms_;
    std::unordered_map<Term, TermId, TermHash> term_ids_;
    std::vector<TripleIds> triples_;
    std::unordered_set<TripleIds, TripleHash> present_;
    std::unordered_map<TermId, std::vector<std::uint32_t>> by_s_, by_p_, by_o_;
};

/// Sorted N-Triples-style lines, independent of insertion order. The canonical
/// form for graph comparison in tests and for byte-stable serialization.
std::vector<std::string> canonical_lines(const TripleGraph& g);

/// Serializes the graph as line-per-triple Turtle (N-Triples compatible subset),
/// sorted for byte-stable output.
std::string write_turtle(const TripleGraph& g);

} // namespace ontoalign
