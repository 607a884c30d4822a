#include "ontoalign/evaluation.hpp"

#include <algorithm>
#include <set>

namespace ontoalign {

namespace {

using UnorderedPair = std::pair<std::string, std::string>;

UnorderedPair unordered(const Iri& a, const Iri& b) {
    return a.value <= b.value ? UnorderedPair{a.value, b.value} : UnorderedPair{b.value, a.value};
}

} // namespace

void EvaluationReport::compute_metrics() {
    candidate_count = true_positives + false_positives;
    std::size_t tp_fp = true_positives + false_positives;
    std::size_t tp_fn = true_positives + false_negatives;
    precision = tp_fp == 0 ? 0.0 : static_cast<double>(true_positives) / tp_fp;
    recall = tp_fn == 0 ? 0.0 : static_cast<double>(true_positives) / tp_fn;
    f1 = (precision + recall) == 0.0 ? 0.0 : 2.0 * precision * recall / (precision + recall);
}

EvaluationReport evaluate(const std::vector<CandidateMapping>& output,
                          const ReferenceAlignment& reference) {
    std::set<UnorderedPair> ref_pairs;
    for (const auto& cell : reference.cells)
        if (cell.relation == "=") ref_pairs.insert(unordered(cell.entity1, cell.entity2));

    std::set<UnorderedPair> out_pairs;
    for (const auto& m : output) out_pairs.insert(unordered(m.source, m.target));

    EvaluationReport report;
    for (const auto& p : out_pairs) {
        if (ref_pairs.count(p))
            ++report.true_positives;
        else
            ++report.false_positives;
    }
    report.false_negatives = ref_pairs.size() - report.true_positives;
    report.compute_metrics();
    return report;
}

EvaluationReport micro_average(
    const std::vector<std::pair<std::string, EvaluationReport>>& reports) {
    EvaluationReport total;
    for (const auto& [name, r] : reports) {
        total.true_positives += r.true_positives;
        total.false_positives += r.false_positives;
        total.false_negatives += r.false_negatives;
    }
    total.compute_metrics();
    total.per_pair = reports;
    return total;
}

std::vector<AblationConfig> builtin_ablation_configs() {
    const std::array<double, 6> full{0.25, 0.20, 0.15, 0.15, 0.15, 0.10};
    const std::array<double, 6> label_only{1, 0, 0, 0, 0, 0};
    const std::array<double, 6> structural_only{0, 0.25, 0.25, 0.20, 0.20, 0.10};
    const double sixth = 1.0 / 6.0;
    const std::array<double, 6> equal{sixth, sixth, sixth, sixth, sixth, sixth};
    const std::array<double, 6> label_parent{0.4, 0, 0.4, 0, 0, 0.2};
    return {
        {"Full", full, true},
        {"Label only", label_only, true},
        {"Structural only", structural_only, true},
        {"Equal", equal, true},
        {"Label+parent", label_parent, true},
        {"Full", full, false},
        {"Label only", label_only, false},
        {"Structural only", structural_only, false},
    };
}

std::vector<AblationRow> run_ablation(const OntologyModel& src_model,
                                      const OntologyModel& tgt_model,
                                      const ReferenceAlignment& reference,
                                      const std::vector<AblationConfig>& configs,
                                      const WeightConfig& base_cfg, unsigned threads) {
    base_cfg.validate();
    for (const auto& config : configs) {
        WeightConfig probe = base_cfg;
        probe.weights = config.weights;
        probe.validate();
    }

    // Candidate generation and signal computation are weight-independent:
    // compute them once and reuse across every row.
    FeatureTable src = FeatureTable::build(src_model);
    FeatureTable tgt = FeatureTable::build(tgt_model);
    auto pairs = generate_candidates(src, tgt, base_cfg, threads);
    auto scored = score_candidates(pairs, src, tgt, base_cfg, threads);

    std::vector<AblationRow> rows;
    rows.reserve(configs.size());
    for (const auto& config : configs) {
        WeightConfig cfg = base_cfg;
        cfg.weights = config.weights;
        cfg.stable_matching = config.stable;

        std::vector<CandidateMapping> rescored = scored;
        for (auto& m : rescored) {
            if (m.fallback_applied) continue; // fallback confidence is weight-free
            auto s = m.signals.as_array();
            double sum = 0.0;
            for (std::size_t i = 0; i < 6; ++i) sum += cfg.weights[i] * s[i];
            m.confidence = sum;
        }

        std::vector<CandidateMapping> result;
        if (!cfg.stable_matching)
            result = filter_threshold(rescored, cfg);
        else if (cfg.order == PipelineOrder::MatchThenThreshold)
            result = filter_threshold(stable_match(std::move(rescored)), cfg);
        else
            result = stable_match(filter_threshold(rescored, cfg));

        EvaluationReport report = evaluate(result, reference);
        AblationRow row;
        row.stable = config.stable;
        row.weight_label = config.name;
        row.weights = config.weights;
        row.candidate_count = result.size();
        row.precision = report.precision;
        row.recall = report.recall;
        row.f1 = report.f1;
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<std::pair<double, EvaluationReport>> threshold_sweep(
    const OntologyModel& src_model, const OntologyModel& tgt_model,
    const ReferenceAlignment& reference, const std::vector<double>& thresholds,
    const WeightConfig& cfg, unsigned threads) {
    cfg.validate();
    if (!std::is_sorted(thresholds.begin(), thresholds.end()))
        throw ConfigError("sweep thresholds must be sorted ascending");

    FeatureTable src = FeatureTable::build(src_model);
    FeatureTable tgt = FeatureTable::build(tgt_model);
    auto pairs = generate_candidates(src, tgt, cfg, threads);
    auto scored = score_candidates(pairs, src, tgt, cfg, threads);
    std::vector<CandidateMapping> matched =
        cfg.stable_matching ? stable_match(std::move(scored)) : std::move(scored);

    std::vector<std::pair<double, EvaluationReport>> out;
    out.reserve(thresholds.size());
    for (double threshold : thresholds) {
        WeightConfig at = cfg;
        at.min_confidence = threshold;
        auto kept = filter_threshold(matched, at);
        out.emplace_back(threshold, evaluate(kept, reference));
    }
    return out;
}

} // namespace ontoalign
