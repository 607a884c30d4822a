#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "ontoalign/parse_error.hpp"
#include "ontoalign/term.hpp"

namespace ontoalign {

struct CandidateMapping;

/// One <Cell> of an Alignment-format document.
struct AlignmentCell {
    Iri entity1;
    Iri entity2;
    std::string relation = "=";
    double measure = 1.0;

    auto operator<=>(const AlignmentCell&) const = default;
};

/// Cells parsed from an Alignment-format reference file or emitted by the
/// matcher. Set semantics on (entity1, entity2, relation); cells whose
/// relation is not "=" are retained but excluded from equivalence evaluation.
struct ReferenceAlignment {
    std::string onto1;
    std::string onto2;
    std::vector<AlignmentCell> cells; // sorted by (entity1, entity2, relation)

    std::size_t size() const { return cells.size(); }
    std::vector<AlignmentCell> equivalence_cells() const;
};

using AlignmentDocument = ReferenceAlignment;

/// Parses Alignment-format XML (<Alignment> with <map><Cell> children).
/// Cells are deduplicated on (entity1, entity2, relation) and sorted.
ReferenceAlignment parse_alignment(std::string_view text);

/// Serializes mappings as Alignment-format XML: UTF-8, LF line endings,
/// measures with 6 decimal places, relation "=", cells sorted by
/// (entity1, entity2). Output is byte-stable for equal inputs.
std::string write_alignment(const std::vector<CandidateMapping>& mappings,
                            const Iri& onto1, const Iri& onto2);

/// Same writer over bare cells (used by tests and format round-trips).
std::string write_alignment_cells(std::vector<AlignmentCell> cells,
                                  const std::string& onto1, const std::string& onto2);

} // namespace ontoalign
