#include "ontoalign/matcher.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace ontoalign {

void WeightConfig::validate() const {
    double sum = 0.0;
    for (double w : weights) {
        if (w < 0.0) throw ConfigError("weights must be non-negative");
        sum += w;
    }
    if (std::abs(sum - 1.0) > 1e-9)
        throw ConfigError("weights must sum to 1 (got " + std::to_string(sum) + ")");
    auto fraction = [](double v, const char* name) {
        if (v < 0.0 || v > 1.0) throw ConfigError(std::string(name) + " must be in [0,1]");
    };
    fraction(pre_filter, "pre_filter");
    fraction(min_confidence, "min_confidence");
    fraction(fallback_penalty, "fallback_penalty");
}

FeatureTable FeatureTable::build(const OntologyModel& model) {
    FeatureTable table;
    table.features.reserve(model.class_count());
    for (const auto& [iri, entity] : model.classes)
        table.features.push_back(make_features(entity, model));
    return table;
}

namespace {

unsigned resolve_threads(unsigned threads, std::size_t work_items) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    if (work_items < 2048) threads = 1; // not worth the fan-out
    return std::max(1u, threads);
}

} // namespace

std::vector<CandidatePair> generate_candidates(const FeatureTable& src, const FeatureTable& tgt,
                                               const WeightConfig& cfg, unsigned threads) {
    const auto& sf = src.features;
    const auto& tf = tgt.features;
    threads = resolve_threads(threads, sf.size() * tf.size());

    auto scan_sources = [&](std::size_t begin, std::size_t end) {
        std::vector<CandidatePair> hits;
        for (std::size_t i = begin; i < end; ++i) {
            for (const auto& target : tf) {
                double sim = label_similarity(sf[i], target, cfg.label_combine, cfg.pre_filter);
                if (sim >= cfg.pre_filter)
                    hits.push_back(CandidatePair{sf[i].iri, target.iri, sim});
            }
        }
        return hits;
    };

    if (threads == 1) return scan_sources(0, sf.size());

    std::vector<std::future<std::vector<CandidatePair>>> futures;
    std::size_t chunk = (sf.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t begin = std::min<std::size_t>(t * chunk, sf.size());
        std::size_t end = std::min<std::size_t>(begin + chunk, sf.size());
        if (begin == end) break;
        futures.push_back(std::async(std::launch::async, scan_sources, begin, end));
    }
    std::vector<CandidatePair> out;
    for (auto& f : futures) {
        auto part = f.get();
        out.insert(out.end(), std::make_move_iterator(part.begin()),
                   std::make_move_iterator(part.end()));
    }
    return out;
}

std::vector<CandidatePair> generate_candidates(const OntologyModel& src_model,
                                               const OntologyModel& tgt_model,
                                               const WeightConfig& cfg, unsigned threads) {
    return generate_candidates(FeatureTable::build(src_model), FeatureTable::build(tgt_model),
                               cfg, threads);
}

namespace {

const ClassFeatures* find_features(const FeatureTable& table, const Iri& iri) {
    auto it = std::lower_bound(table.features.begin(), table.features.end(), iri,
                               [](const ClassFeatures& f, const Iri& key) { return f.iri < key; });
    if (it == table.features.end() || !(it->iri == iri)) return nullptr;
    return &*it;
}

} // namespace

CandidateMapping score_candidate(const CandidatePair& pair, const ClassFeatures& src,
                                 const ClassFeatures& tgt, const WeightConfig& cfg) {
    CandidateMapping m;
    m.source = pair.source;
    m.target = pair.target;
    m.signals = structural_signals(src, tgt);
    m.signals.s1_label = pair.label_sim;
    if (m.signals.structural_all_zero()) {
        m.fallback_applied = true;
        m.confidence = cfg.fallback_penalty * m.signals.s1_label;
    } else {
        auto s = m.signals.as_array();
        double sum = 0.0;
        for (std::size_t i = 0; i < 6; ++i) sum += cfg.weights[i] * s[i];
        m.confidence = sum;
    }
    return m;
}

std::vector<CandidateMapping> score_candidates(const std::vector<CandidatePair>& pairs,
                                               const FeatureTable& src, const FeatureTable& tgt,
                                               const WeightConfig& cfg, unsigned threads) {
    std::vector<CandidateMapping> out(pairs.size());
    threads = resolve_threads(threads, pairs.size());

    auto score_range = [&](std::size_t begin, std::size_t end) {
        for (std::size_t i = begin; i < end; ++i) {
            const ClassFeatures* sf = find_features(src, pairs[i].source);
            const ClassFeatures* tf = find_features(tgt, pairs[i].target);
            if (!sf || !tf) throw std::logic_error("candidate references unknown class");
            out[i] = score_candidate(pairs[i], *sf, *tf, cfg);
        }
    };

    if (threads == 1) {
        score_range(0, pairs.size());
        return out;
    }
    std::vector<std::future<void>> futures;
    std::size_t chunk = (pairs.size() + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
        std::size_t begin = std::min<std::size_t>(t * chunk, pairs.size());
        std::size_t end = std::min<std::size_t>(begin + chunk, pairs.size());
        if (begin == end) break;
        futures.push_back(std::async(std::launch::async, score_range, begin, end));
    }
    for (auto& f : futures) f.get();
    return out;
}

namespace {

bool confidence_order(const CandidateMapping& a, const CandidateMapping& b) {
    if (a.confidence != b.confidence) return a.confidence > b.confidence;
    if (a.source != b.source) return a.source < b.source;
    return a.target < b.target;
}

} // namespace

std::vector<CandidateMapping> stable_match(std::vector<CandidateMapping> candidates) {
    std::sort(candidates.begin(), candidates.end(), confidence_order);
    std::vector<CandidateMapping> kept;
    std::set<Iri> used_sources, used_targets;
    for (auto& c : candidates) {
        if (used_sources.count(c.source) || used_targets.count(c.target)) continue;
        used_sources.insert(c.source);
        used_targets.insert(c.target);
        kept.push_back(std::move(c));
    }
    return kept;
}

std::vector<CandidateMapping> filter_threshold(const std::vector<CandidateMapping>& candidates,
                                               const WeightConfig& cfg) {
    std::vector<CandidateMapping> kept;
    for (const auto& c : candidates)
        if (c.confidence >= cfg.min_confidence) kept.push_back(c);
    return kept;
}

std::vector<CandidateMapping> align(const OntologyModel& src_model,
                                    const OntologyModel& tgt_model, const WeightConfig& cfg,
                                    unsigned threads) {
    cfg.validate();
    FeatureTable src = FeatureTable::build(src_model);
    FeatureTable tgt = FeatureTable::build(tgt_model);
    auto pairs = generate_candidates(src, tgt, cfg, threads);
    auto scored = score_candidates(pairs, src, tgt, cfg, threads);
    if (!cfg.stable_matching) return filter_threshold(scored, cfg);
    if (cfg.order == PipelineOrder::MatchThenThreshold)
        return filter_threshold(stable_match(std::move(scored)), cfg);
    return stable_match(filter_threshold(scored, cfg));
}

} // namespace ontoalign
