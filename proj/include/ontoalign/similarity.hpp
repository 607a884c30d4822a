#pragma once

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "ontoalign/model.hpp"

namespace ontoalign {

/// The six per-pair component similarities, each in [0,1].
struct SignalVector {
    double s1_label = 0.0;
    double s2_property = 0.0;
    double s3_parent = 0.0;
    double s4_instance = 0.0;
    double s5_restriction = 0.0;
    double s6_neighbourhood = 0.0;

    std::array<double, 6> as_array() const {
        return {s1_label, s2_property, s3_parent, s4_instance, s5_restriction, s6_neighbourhood};
    }
    bool structural_all_zero() const {
        return s2_property == 0.0 && s3_parent == 0.0 && s4_instance == 0.0 &&
               s5_restriction == 0.0 && s6_neighbourhood == 0.0;
    }
    bool operator==(const SignalVector&) const = default;
};

/// Jaro similarity with the Winkler common-prefix boost (prefix length <= 4,
/// scaling 0.1). Symmetric, in [0,1]. Two empty strings compare as 1.0,
/// one empty as 0.0.
double jaro_winkler(std::string_view a, std::string_view b);

/// |set(a) n set(b)| / |set(a) u set(b)| over token lists; both empty -> 1.0.
double token_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

enum class LabelCombine { Mean, Max };

/// How one normalized label enters the label signal: ordered tokens, their
/// joined form for the character metric, and the deduplicated token set.
struct LabelFeature {
    std::vector<std::string> tokens;
    std::string joined;
    std::vector<std::string> token_set; // sorted unique
};

/// Precomputed per-class inputs to signals 1-6. Parent and neighbour classes
/// enter by primary-label string (cross-ontology IRIs never coincide);
/// properties and instances by their IRI local-name token strings.
struct ClassFeatures {
    Iri iri;
    std::vector<LabelFeature> labels;
    std::vector<std::string> property_keys;    // sorted unique
    std::vector<std::string> parent_labels;    // sorted unique
    std::vector<std::string> instance_keys;    // sorted unique
    std::vector<std::string> restriction_keys; // sorted unique
    std::vector<std::string> neighbour_labels; // sorted unique
};

ClassFeatures make_features(const ClassEntity& entity, const OntologyModel& owner);

/// Maximum over all (source label, target label) pairs of the combination of
/// jaro_winkler on joined strings and token_jaccard on token sets; 0.0 when
/// either label set is empty. `skip_below` is a pruning hint: pairs whose
/// value provably falls below it may be skipped, so the result is exact
/// whenever it is >= skip_below (pass 0 for an always-exact value).
double label_similarity(const ClassFeatures& src, const ClassFeatures& tgt,
                        LabelCombine combine = LabelCombine::Mean, double skip_below = 0.0);

double label_similarity(const ClassEntity& src, const ClassEntity& tgt,
                        LabelCombine combine = LabelCombine::Mean);

/// Signals 2-6: Jaccard over property keys, parent labels, instance keys,
/// restriction keys, neighbour labels. A signal whose underlying sets are
/// both empty scores 0, not 1 -- absent structure must not fabricate
/// similarity. s1 is left at 0 in the result.
SignalVector structural_signals(const ClassFeatures& src, const ClassFeatures& tgt);

SignalVector structural_signals(const ClassEntity& src, const ClassEntity& tgt,
                                const OntologyModel& src_owner, const OntologyModel& tgt_owner);

/// Jaccard over sorted-unique string sets with the structural empty-empty -> 0
/// convention.
double set_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

} // namespace ontoalign
