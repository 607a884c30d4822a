#pragma once

#include <string>
#include <vector>

#include "ontoalign/alignment_io.hpp"
#include "ontoalign/matcher.hpp"

namespace ontoalign {

/// Precision/recall/F1 against a reference, with the 0/0 -> 0 convention.
/// For micro-averaged reports, per_pair holds the per-input breakdown.
struct EvaluationReport {
    std::size_t true_positives = 0;
    std::size_t false_positives = 0;
    std::size_t false_negatives = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
    std::size_t candidate_count = 0;
    std::vector<std::pair<std::string, EvaluationReport>> per_pair;

    void compute_metrics();
};

/// Scores `output` against the "=" cells of `reference`. A mapping counts as
/// a true positive iff its unordered {source, target} pair appears in the
/// reference -- reference direction must not matter.
EvaluationReport evaluate(const std::vector<CandidateMapping>& output,
                          const ReferenceAlignment& reference);

/// Sums TP/FP/FN across reports and recomputes the metrics from the sums
/// (not the mean of per-report F1s). Input reports land in per_pair.
EvaluationReport micro_average(const std::vector<std::pair<std::string, EvaluationReport>>& reports);

/// One weight configuration of the ablation grid.
struct AblationConfig {
    std::string name;
    std::array<double, 6> weights;
    bool stable = true;
};

/// The shipped grid: five weight configurations with stable matching on,
/// then full / label-only / structural-only with stable matching off.
std::vector<AblationConfig> builtin_ablation_configs();

struct AblationRow {
    bool stable = true;
    std::string weight_label;
    std::array<double, 6> weights{};
    std::size_t candidate_count = 0;
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

/// Runs every config over a single shared candidate generation (pre-filter
/// and signals computed once from base_cfg) and evaluates each output.
/// Throws ConfigError when a weight vector does not sum to 1.
std::vector<AblationRow> run_ablation(const OntologyModel& src_model,
                                      const OntologyModel& tgt_model,
                                      const ReferenceAlignment& reference,
                                      const std::vector<AblationConfig>& configs,
                                      const WeightConfig& base_cfg, unsigned threads = 0);

/// Scores and stable-matches once, then applies each threshold to the matched
/// list. Thresholds must be sorted ascending; candidate counts are
/// non-increasing along the sweep.
std::vector<std::pair<double, EvaluationReport>> threshold_sweep(
    const OntologyModel& src_model, const OntologyModel& tgt_model,
    const ReferenceAlignment& reference, const std::vector<double>& thresholds,
    const WeightConfig& cfg, unsigned threads = 0);

} // namespace ontoalign
