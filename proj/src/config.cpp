#include <cctype>
#include <fstream>
#include <sstream>

#include "ontoalign/matcher.hpp"

namespace ontoalign {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string_view::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return std::string(s.substr(b, e - b + 1));
}

double parse_fraction(const std::string& value, const std::string& key) {
    try {
        std::size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("invalid numeric value for '" + key + "': " + value);
    }
}

bool parse_bool(const std::string& value, const std::string& key) {
    if (value == "true" || value == "on" || value == "yes" || value == "1") return true;
    if (value == "false" || value == "off" || value == "no" || value == "0") return false;
    throw ConfigError("invalid boolean value for '" + key + "': " + value);
}

std::array<double, 6> parse_weights(const std::string& value) {
    std::array<double, 6> weights{};
    std::stringstream ss(value);
    std::string item;
    std::size_t i = 0;
    while (std::getline(ss, item, ',')) {
        if (i >= 6) throw ConfigError("weights must have exactly 6 components");
        weights[i++] = parse_fraction(trim(item), "weights");
    }
    if (i != 6) throw ConfigError("weights must have exactly 6 components");
    return weights;
}

} // namespace

WeightConfig apply_config_text(std::string_view text, WeightConfig base) {
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        auto nl = text.find('\n', pos);
        std::string line = trim(text.substr(pos, nl == std::string_view::npos ? nl : nl - pos));
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        ++line_no;
        if (line.empty() || line[0] == '#') continue;
        auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError("line " + std::to_string(line_no) + ": expected 'key = value'");
        std::string key = trim(std::string_view(line).substr(0, eq));
        std::string value = trim(std::string_view(line).substr(eq + 1));
        if (key == "weights") {
            base.weights = parse_weights(value);
        } else if (key == "pre_filter") {
            base.pre_filter = parse_fraction(value, key);
        } else if (key == "min_confidence") {
            base.min_confidence = parse_fraction(value, key);
        } else if (key == "fallback_penalty") {
            base.fallback_penalty = parse_fraction(value, key);
        } else if (key == "stable_matching") {
            base.stable_matching = parse_bool(value, key);
        } else if (key == "synonyms_enabled") {
            base.synonyms_enabled = parse_bool(value, key);
        } else if (key == "label_combine") {
            if (value == "mean")
                base.label_combine = LabelCombine::Mean;
            else if (value == "max")
                base.label_combine = LabelCombine::Max;
            else
                throw ConfigError("label_combine must be 'mean' or 'max', got '" + value + "'");
        } else if (key == "order") {
            if (value == "match-then-threshold")
                base.order = PipelineOrder::MatchThenThreshold;
            else if (value == "threshold-then-match")
                base.order = PipelineOrder::ThresholdThenMatch;
            else
                throw ConfigError(
                    "order must be 'match-then-threshold' or 'threshold-then-match', got '" +
                    value + "'");
        } else {
            throw ConfigError("unknown config key '" + key + "'");
        }
    }
    base.validate();
    return base;
}

WeightConfig load_config_file(const std::string& path, WeightConfig base) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ConfigError("cannot read config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return apply_config_text(buffer.str(), base);
}

} // namespace ontoalign
