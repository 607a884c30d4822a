#include "ontoalign/similarity.hpp"

#include <algorithm>

namespace ontoalign {

double jaro_winkler(std::string_view a, std::string_view b) {
    if (a.empty() && b.empty()) return 1.0;
    if (a.empty() || b.empty()) return 0.0;
    const std::size_t la = a.size(), lb = b.size();
    const std::size_t window = std::max(la, lb) / 2 == 0 ? 0 : std::max(la, lb) / 2 - 1;

    std::vector<char> matched_a(la, 0), matched_b(lb, 0);
    std::size_t matches = 0;
    for (std::size_t i = 0; i < la; ++i) {
        std::size_t lo = i > window ? i - window : 0;
        std::size_t hi = std::min(lb, i + window + 1);
        for (std::size_t j = lo; j < hi; ++j) {
            if (!matched_b[j] && a[i] == b[j]) {
                matched_a[i] = matched_b[j] = 1;
                ++matches;
                break;
            }
        }
    }
    if (matches == 0) return 0.0;

    std::size_t transposed = 0;
    std::size_t j = 0;
    for (std::size_t i = 0; i < la; ++i) {
        if (!matched_a[i]) continue;
        while (!matched_b[j]) ++j;
        if (a[i] != b[j]) ++transposed;
        ++j;
    }
    const double m = static_cast<double>(matches);
    const double t = static_cast<double>(transposed) / 2.0;
    const double jaro = (m / la + m / lb + (m - t) / m) / 3.0;

    std::size_t prefix = 0;
    for (std::size_t i = 0; i < std::min({la, lb, std::size_t{4}}); ++i) {
        if (a[i] != b[i]) break;
        ++prefix;
    }
    return jaro + static_cast<double>(prefix) * 0.1 * (1.0 - jaro);
}

namespace {

std::vector<std::string> to_set(std::vector<std::string> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

std::size_t intersection_size(const std::vector<std::string>& a,
                              const std::vector<std::string>& b) {
    std::size_t i = 0, j = 0, n = 0;
    while (i < a.size() && j < b.size()) {
        int cmp = a[i].compare(b[j]);
        if (cmp == 0) {
            ++n;
            ++i;
            ++j;
        } else if (cmp < 0) {
            ++i;
        } else {
            ++j;
        }
    }
    return n;
}

double set_jaccard_sorted(const std::vector<std::string>& a, const std::vector<std::string>& b,
                          double empty_both) {
    if (a.empty() && b.empty()) return empty_both;
    std::size_t inter = intersection_size(a, b);
    std::size_t uni = a.size() + b.size() - inter;
    return static_cast<double>(inter) / static_cast<double>(uni);
}

double combine(LabelCombine mode, double jw, double jac) {
    return mode == LabelCombine::Mean ? 0.5 * jw + 0.5 * jac : std::max(jw, jac);
}

std::string local_key(const Iri& iri) { return join_tokens(normalize_label(iri_local_name(iri.value))); }

const char* restriction_tag(RestrictionType t) {
    switch (t) {
        case RestrictionType::SomeValuesFrom: return "some";
        case RestrictionType::AllValuesFrom: return "all";
        case RestrictionType::HasValue: return "value";
        case RestrictionType::Cardinality: return "card";
    }
    return "?";
}

} // namespace

double token_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return set_jaccard_sorted(to_set(a), to_set(b), 1.0);
}

double set_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return set_jaccard_sorted(to_set(a), to_set(b), 0.0);
}

ClassFeatures make_features(const ClassEntity& entity, const OntologyModel& owner) {
    ClassFeatures f;
    f.iri = entity.iri;
    f.labels.reserve(entity.labels.size());
    for (const auto& label : entity.labels) {
        LabelFeature lf;
        lf.tokens = label.tokens;
        lf.joined = label.joined;
        lf.token_set = to_set(label.tokens);
        f.labels.push_back(std::move(lf));
    }
    for (const Iri& p : entity.properties) f.property_keys.push_back(local_key(p));
    for (const Iri& i : entity.instances) f.instance_keys.push_back(local_key(i));
    for (const auto& r : entity.restrictions) {
        std::string filler_key = r.filler_is_literal
                                     ? join_tokens(normalize_label(r.filler))
                                     : join_tokens(normalize_label(iri_local_name(r.filler)));
        f.restriction_keys.push_back(local_key(r.property) + "|" + restriction_tag(r.type) + "|" +
                                     filler_key);
    }
    auto label_of = [&](const Iri& iri) -> std::string {
        const ClassEntity* c = owner.find(iri);
        return c ? c->primary_label : std::string();
    };
    for (const Iri& p : entity.parents) {
        std::string l = label_of(p);
        if (!l.empty()) f.parent_labels.push_back(std::move(l));
    }
    for (const Iri& n : entity.neighbours) {
        std::string l = label_of(n);
        if (!l.empty()) f.neighbour_labels.push_back(std::move(l));
    }
    f.property_keys = to_set(std::move(f.property_keys));
    f.instance_keys = to_set(std::move(f.instance_keys));
    f.restriction_keys = to_set(std::move(f.restriction_keys));
    f.parent_labels = to_set(std::move(f.parent_labels));
    f.neighbour_labels = to_set(std::move(f.neighbour_labels));
    return f;
}

double label_similarity(const ClassFeatures& src, const ClassFeatures& tgt, LabelCombine mode,
                        double skip_below) {
    if (src.labels.empty() || tgt.labels.empty()) return 0.0;
    double best = 0.0;
    for (const auto& a : src.labels) {
        for (const auto& b : tgt.labels) {
            double jac = set_jaccard_sorted(a.token_set, b.token_set, 1.0);
            if (mode == LabelCombine::Mean) {
                // jaro_winkler <= 1, so 0.5 + 0.5*jac bounds the pair from above:
                // skip pairs that can neither reach skip_below nor beat the max so far
                double upper = 0.5 + 0.5 * jac;
                if (upper < skip_below || upper <= best) continue;
            }
            double value = combine(mode, jaro_winkler(a.joined, b.joined), jac);
            if (value > best) best = value;
        }
    }
    return best;
}

double label_similarity(const ClassEntity& src, const ClassEntity& tgt, LabelCombine mode) {
    OntologyModel empty;
    return label_similarity(make_features(src, empty), make_features(tgt, empty), mode, 0.0);
}

SignalVector structural_signals(const ClassFeatures& src, const ClassFeatures& tgt) {
    SignalVector s;
    s.s2_property = set_jaccard_sorted(src.property_keys, tgt.property_keys, 0.0);
    s.s3_parent = set_jaccard_sorted(src.parent_labels, tgt.parent_labels, 0.0);
    s.s4_instance = set_jaccard_sorted(src.instance_keys, tgt.instance_keys, 0.0);
    s.s5_restriction = set_jaccard_sorted(src.restriction_keys, tgt.restriction_keys, 0.0);
    s.s6_neighbourhood = set_jaccard_sorted(src.neighbour_labels, tgt.neighbour_labels, 0.0);
    return s;
}

SignalVector structural_signals(const ClassEntity& src, const ClassEntity& tgt,
                                const OntologyModel& src_owner, const OntologyModel& tgt_owner) {
    return structural_signals(make_features(src, src_owner), make_features(tgt, tgt_owner));
}

} // namespace ontoalign
