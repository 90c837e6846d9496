#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

namespace dca::annotation {

enum class TemplateId { dispute_tactics, qoa, info_style };

std::string to_string(TemplateId id);

struct PromptRequest {
    TemplateId template_id = TemplateId::dispute_tactics;
    std::string rendered_text;
    std::string dialogue_id;
    std::optional<std::size_t> utterance_index; // present iff utterance-level template
    std::string model_name;
    double temperature = 0.0;
};

// The nine rebuttal levels (two distinct level-4 tactics) in prompt order.
enum class RebuttalFlag {
    L0_name_calling,
    L1_ad_hominem,
    L2_off_topic,
    L3_policing,
    L4_stance,
    L4_repeat,
    L5_counterargument,
    L6_refutation,
    L7_central_point,
};

// The nine coordination labels A..I in prompt order.
enum class CoordinationFlag { A, B, C, D, E, F, G, H, I };

constexpr std::size_t kRebuttalCount = 9;
constexpr std::size_t kCoordinationCount = 9;

struct DisputeTacticsAnnotation {
    std::array<int, kRebuttalCount> levels{};  // each 0/1
    std::array<int, kCoordinationCount> labels{}; // each 0/1

    int level(RebuttalFlag f) const { return levels[static_cast<std::size_t>(f)]; }
    int label(CoordinationFlag f) const { return labels[static_cast<std::size_t>(f)]; }
};

struct QoAAnnotation {
    double score = 0.0; // in [0, 10]
    std::string raw_response;
};

struct LowHighPair {
    int low = 0;
    int high = 0;
};

struct InfoStyleAnnotation {
    LowHighPair frazier;  // parsed and stored; excluded from the default registry
    LowHighPair yngve;
    LowHighPair p_density;
    LowHighPair c_density;
    LowHighPair formality;
    LowHighPair politeness;
    int sentiment_negative = 0;
    int sentiment_neutral = 0;
    int sentiment_positive = 0;
    int unc_epistemic = 0;
    int unc_doxastic = 0;
    int unc_investigative = 0;
    int unc_conditional = 0;
    int unc_none = 0;
    bool repaired = false;
};

// Feature-name <-> flag lookups used when projecting annotations into the
// registry's column space.
double dispute_feature_value(const DisputeTacticsAnnotation& a, const std::string& feature_name);
double info_style_feature_value(const InfoStyleAnnotation& a, const std::string& feature_name);

} // namespace dca::annotation
