#pragma once

#include <array>
#include <string>
#include <vector>

#include "ontoalign/parse_error.hpp"
#include "ontoalign/similarity.hpp"

namespace ontoalign {

enum class PipelineOrder { MatchThenThreshold, ThresholdThenMatch };

/// Signal weights and pipeline knobs. validate() enforces non-negative
/// weights summing to 1 within 1e-9 and [0,1] ranges on the fractions.
struct WeightConfig {
    std::array<double, 6> weights{0.25, 0.20, 0.15, 0.15, 0.15, 0.10};
    double pre_filter = 0.75;
    double min_confidence = 0.80;
    bool stable_matching = true;
    double fallback_penalty = 0.85;
    LabelCombine label_combine = LabelCombine::Mean;
    bool synonyms_enabled = true;
    PipelineOrder order = PipelineOrder::MatchThenThreshold;

    void validate() const; // throws ConfigError
};

/// Applies "key = value" lines from a config file on top of `base`.
/// Keys: weights, pre_filter, min_confidence, stable_matching,
/// fallback_penalty, label_combine, synonyms_enabled, order.
/// Unknown keys and malformed values raise ConfigError.
WeightConfig apply_config_text(std::string_view text, WeightConfig base = {});
WeightConfig load_config_file(const std::string& path, WeightConfig base = {});

/// One scored (source, target) pair. fallback_applied is set exactly when
/// signals 2..6 are all zero, in which case confidence is
/// fallback_penalty * s1 instead of the weighted sum.
struct CandidateMapping {
    Iri source;
    Iri target;
    SignalVector signals;
    double confidence = 0.0;
    bool fallback_applied = false;

    bool operator==(const CandidateMapping&) const = default;
};

/// A pre-filtered pair: label similarity already computed and >= pre_filter.
struct CandidatePair {
    Iri source;
    Iri target;
    double label_sim = 0.0;
};

/// Per-model feature table, computed once per align/ablation run.
struct FeatureTable {
    std::vector<ClassFeatures> features; // in model IRI order

    static FeatureTable build(const OntologyModel& model);
};

/// Cross-product pairs whose label similarity passes cfg.pre_filter
/// (inclusive), ordered by (source IRI, target IRI). `threads` = 0 picks the
/// hardware concurrency; the result is identical for any thread count.
std::vector<CandidatePair> generate_candidates(const FeatureTable& src, const FeatureTable& tgt,
                                               const WeightConfig& cfg, unsigned threads = 0);

std::vector<CandidatePair> generate_candidates(const OntologyModel& src_model,
                                               const OntologyModel& tgt_model,
                                               const WeightConfig& cfg, unsigned threads = 0);

/// Scores one candidate: confidence = sum(w_i * s_i), or
/// fallback_penalty * s1 when s2..s6 are all zero.
CandidateMapping score_candidate(const CandidatePair& pair, const ClassFeatures& src,
                                 const ClassFeatures& tgt, const WeightConfig& cfg);

/// Scores every candidate, in candidate order. Parallel over pairs; output
/// is independent of the thread count.
std::vector<CandidateMapping> score_candidates(const std::vector<CandidatePair>& pairs,
                                               const FeatureTable& src, const FeatureTable& tgt,
                                               const WeightConfig& cfg, unsigned threads = 0);

/// Greedy stable 1-to-1 selection: sort by (confidence desc, source asc,
/// target asc), keep a candidate iff neither endpoint was kept before.
/// Output preserves the sorted order.
std::vector<CandidateMapping> stable_match(std::vector<CandidateMapping> candidates);

/// Keeps candidates with confidence >= cfg.min_confidence (inclusive).
std::vector<CandidateMapping> filter_threshold(const std::vector<CandidateMapping>& candidates,
                                               const WeightConfig& cfg);

/// Full pipeline: pre-filter -> score -> stable match (iff cfg.stable_matching)
/// -> threshold, with the match/threshold order given by cfg.order.
std::vector<CandidateMapping> align(const OntologyModel& src_model,
                                    const OntologyModel& tgt_model, const WeightConfig& cfg,
                                    unsigned threads = 0);

} // namespace ontoalign
