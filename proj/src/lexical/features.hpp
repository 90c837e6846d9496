#pragma once

#include "common/error.hpp"

#include <string>
#include <utility>
#include <vector>

namespace dca::lexical {

enum class FeatureSet { PM, CM, DT, QoA, IC, ST };

std::string to_string(FeatureSet set);
FeatureSet feature_set_from_string(const std::string& text);

// Named feature values for one utterance, in registry order.
struct UtteranceFeatureVector {
    FeatureSet set_tag = FeatureSet::PM;
    std::vector<std::pair<std::string, double>> values;

    void add(std::string name, double value) {
        values.emplace_back(std::move(name), value);
    }

    double get(const std::string& name) const {
        for (const auto& [key, value] : values) {
            if (key == name) return value;
        }
        throw ValidationError("feature '" + name + "' not present in vector");
    }
};

} // namespace dca::lexical
