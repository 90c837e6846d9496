#include "annotation/parsers.hpp"

#include "common/error.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <optional>
#include <sstream>
#include <vector>

namespace dca::annotation {

namespace {

std::string lowered(const std::string& text) {
    std::string out = text;
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string line;
    std::istringstream in(text);
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        lines.push_back(line);
    }
    return lines;
}

// Reads a trailing 0/1 after the last ':' of a line, tolerating brackets,
// asterisks and trailing punctuation. Placeholders like "[1/0]" do not count.
std::optional<int> trailing_flag_value(const std::string& line) {
    const auto colon = line.rfind(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string tail = line.substr(colon + 1);
    std::string cleaned;
    for (char c : tail) {
        switch (c) {
        case ' ': case '\t': case '[': case ']': case '(': case ')':
        case '*': case '.': case ',': case ';':
            break;
        default:
            cleaned += c;
        }
    }
    if (cleaned == "0") return 0;
    if (cleaned == "1") return 1;
    return std::nullopt;
}

bool looks_like_flag_line(const std::string& lower_line, const std::string& key) {
    const auto pos = lower_line.find(key);
    if (pos == std::string::npos) return false;
    // Only leading bullet/space decoration may precede the key.
    for (std::size_t i = 0; i < pos; ++i) {
        const char c = lower_line[i];
        if (c != ' ' && c != '\t' && c != '-' && c != '*' && c != '+' && c != '>' &&
            !(c >= '0' && c <= '9') && c != '.' && c != ')') {
            return false;
        }
    }
    return true;
}

} // namespace

DisputeTacticsAnnotation parse_dispute_tactics(const std::string& response) {
    DisputeTacticsAnnotation annotation;
    std::array<bool, kRebuttalCount> level_seen{};
    std::array<bool, kCoordinationCount> label_seen{};

    const std::vector<std::string> lines = split_lines(response);
    for (const auto& raw_line : lines) {
        const std::string line = lowered(raw_line);
        const auto value = trailing_flag_value(line);
        if (!value) continue;

        for (int digit = 0; digit <= 7; ++digit) {
            const std::string key = "level " + std::to_string(digit);
            if (!looks_like_flag_line(line, key)) continue;
            std::size_t slot;
            if (digit < 4) {
                slot = static_cast<std::size_t>(digit);
            } else if (digit == 4) {
                // Two distinct level-4 tactics. Disambiguate by wording, then
                // by listing order (stance is listed first in the scheme).
                const bool mentions_stance = line.find("stance") != std::string::npos ||
                                             line.find("stating") != std::string::npos;
                const bool mentions_repeat = line.find("repeat") != std::string::npos;
                if (mentions_stance && !mentions_repeat) {
                    slot = static_cast<std::size_t>(RebuttalFlag::L4_stance);
                } else if (mentions_repeat && !mentions_stance) {
                    slot = static_cast<std::size_t>(RebuttalFlag::L4_repeat);
                } else if (!level_seen[static_cast<std::size_t>(RebuttalFlag::L4_stance)]) {
                    slot = static_cast<std::size_t>(RebuttalFlag::L4_stance);
                } else {
                    slot = static_cast<std::size_t>(RebuttalFlag::L4_repeat);
                }
            } else {
                slot = static_cast<std::size_t>(digit) + 1; // shifted by the extra level 4
            }
            annotation.levels[slot] = *value;
            level_seen[slot] = true;
            break;
        }

        for (char letter = 'a'; letter <= 'i'; ++letter) {
            const std::string key = std::string("label ") + letter;
            if (!looks_like_flag_line(line, key)) continue;
            const auto slot = static_cast<std::size_t>(letter - 'a');
            annotation.labels[slot] = *value;
            label_seen[slot] = true;
            break;
        }
    }

    static const char* level_names[kRebuttalCount] = {
        "Level 0", "Level 1", "Level 2", "Level 3", "Level 4 (stating your stance)",
        "Level 4 (repeated argument)", "Level 5", "Level 6", "Level 7"};
    for (std::size_t i = 0; i < kRebuttalCount; ++i) {
        if (!level_seen[i]) {
            throw ParseError(std::string("dispute tactics response missing flag '") +
                                 level_names[i] + "'",
                             response);
        }
    }
    for (std::size_t i = 0; i < kCoordinationCount; ++i) {
        if (!label_seen[i]) {
            throw ParseError(std::string("dispute tactics response missing flag 'Label ") +
                                 static_cast<char>('A' + i) + "'",
                             response);
        }
    }
    return annotation;
}

QoAAnnotation parse_qoa(const std::string& response) {
    const std::string lower = lowered(response);
    static const std::string phrase = "the quality score of the discussion is";

    std::size_t last = std::string::npos;
    for (std::size_t pos = lower.find(phrase); pos != std::string::npos;
         pos = lower.find(phrase, pos + 1)) {
        last = pos;
    }
    if (last == std::string::npos) {
        throw ParseError("QoA response lacks the concluding score phrase", response);
    }

    // First real number after the last occurrence (skips punctuation like ':').
    std::size_t pos = last + phrase.size();
    while (pos < lower.size() &&
           !(std::isdigit(static_cast<unsigned char>(lower[pos])) ||
             (lower[pos] == '.' && pos + 1 < lower.size() &&
              std::isdigit(static_cast<unsigned char>(lower[pos + 1]))))) {
        // A '-' directly before a digit would indicate a negative score.
        if (lower[pos] == '-' && pos + 1 < lower.size() &&
            std::isdigit(static_cast<unsigned char>(lower[pos + 1]))) {
            throw ParseError("QoA score out of [0,10]", response);
        }
        ++pos;
    }
    if (pos >= lower.size()) {
        throw ParseError("QoA concluding phrase has no numeric score", response);
    }
    std::size_t end = pos;
    bool dot_seen = false;
    while (end < lower.size() &&
           (std::isdigit(static_cast<unsigned char>(lower[end])) ||
            (lower[end] == '.' && !dot_seen &&
             end + 1 < lower.size() && std::isdigit(static_cast<unsigned char>(lower[end + 1]))))) {
        if (lower[end] == '.') dot_seen = true;
        ++end;
    }
    const double score = std::stod(lower.substr(pos, end - pos));
    if (!(score >= 0.0 && score <= 10.0)) {
        throw ParseError("QoA score out of [0,10]", response);
    }
    QoAAnnotation annotation;
    annotation.score = score;
    annotation.raw_response = response;
    return annotation;
}

namespace {

struct FlagReading {
    int value = 0;
    std::size_t position = 0; // line index, for the "asserted last" tiebreak
};

FlagReading find_flag(const std::vector<std::string>& lower_lines,
                      const std::string& key, const std::string& response) {
    std::optional<FlagReading> reading;
    for (std::size_t i = 0; i < lower_lines.size(); ++i) {
        if (!looks_like_flag_line(lower_lines[i], key)) continue;
        const auto value = trailing_flag_value(lower_lines[i]);
        if (!value) continue;
        reading = FlagReading{*value, i}; // later lines win
    }
    if (!reading) {
        throw ParseError("info/style response missing flag line '" + key + "'", response);
    }
    return *reading;
}

// Resolves a low/high pair to one-hot. Prefers the flag asserted last; an
// all-zero pair falls back to low per the documented tiebreak.
void repair_pair(LowHighPair& pair, std::size_t low_pos, std::size_t high_pos, bool& repaired) {
    const int sum = pair.low + pair.high;
    if (sum == 1) return;
    repaired = true;
    if (sum == 2) {
        if (high_pos > low_pos) pair.low = 0;
        else pair.high = 0;
    } else {
        pair.low = 1;
        pair.high = 0;
    }
}

} // namespace

InfoStyleAnnotation repair_info_style(const InfoStyleAnnotation& annotation) {
    InfoStyleAnnotation fixed = annotation;
    bool repaired = false;

    // Positions are gone after parsing; within repair, "later" defaults to the
    // prompt's listing order (high after low, positive listed last).
    auto fix_pair = [&](LowHighPair& pair) { repair_pair(pair, 0, 1, repaired); };
    fix_pair(fixed.frazier);
    fix_pair(fixed.yngve);
    fix_pair(fixed.p_density);
    fix_pair(fixed.c_density);
    fix_pair(fixed.formality);
    fix_pair(fixed.politeness);

    int* sentiment[3] = {&fixed.sentiment_negative, &fixed.sentiment_neutral,
                         &fixed.sentiment_positive};
    int sum = *sentiment[0] + *sentiment[1] + *sentiment[2];
    if (sum != 1) {
        repaired = true;
        if (sum == 0) {
            fixed.sentiment_neutral = 1;
        } else {
            // keep the last asserted flag in listing order
            int keep = 2;
            while (keep >= 0 && *sentiment[keep] == 0) --keep;
            for (int i = 0; i < 3; ++i) *sentiment[i] = (i == keep) ? 1 : 0;
        }
    }

    const int type_sum = fixed.unc_epistemic + fixed.unc_doxastic + fixed.unc_investigative +
                         fixed.unc_conditional;
    if (fixed.unc_none == 1 && type_sum > 0) {
        fixed.unc_none = 0;
        repaired = true;
    } else if (fixed.unc_none == 0 && type_sum == 0) {
        fixed.unc_none = 1;
        repaired = true;
    }

    fixed.repaired = annotation.repaired || repaired;
    return fixed;
}

InfoStyleAnnotation parse_info_style(const std::string& response) {
    std::vector<std::string> lines = split_lines(response);
    for (auto& line : lines) line = lowered(line);

    auto flag = [&](const char* key) { return find_flag(lines, key, response); };

    const FlagReading frazier_low = flag("low frazier score");
    const FlagReading frazier_high = flag("high frazier score");
    const FlagReading yngve_low = flag("low yngve score");
    const FlagReading yngve_high = flag("high yngve score");
    const FlagReading pd_low = flag("low propositional density");
    const FlagReading pd_high = flag("high propositional density");
    const FlagReading cd_low = flag("low content density");
    const FlagReading cd_high = flag("high content density");
    const FlagReading fo_low = flag("low formality");
    const FlagReading fo_high = flag("high formality");
    const FlagReading po_low = flag("low politeness");
    const FlagReading po_high = flag("high politeness");

    InfoStyleAnnotation annotation;
    annotation.frazier = {frazier_low.value, frazier_high.value};
    annotation.yngve = {yngve_low.value, yngve_high.value};
    annotation.p_density = {pd_low.value, pd_high.value};
    annotation.c_density = {cd_low.value, cd_high.value};
    annotation.formality = {fo_low.value, fo_high.value};
    annotation.politeness = {po_low.value, po_high.value};
    annotation.sentiment_negative = flag("negative sentiment").value;
    annotation.sentiment_neutral = flag("neutral sentiment").value;
    annotation.sentiment_positive = flag("positive sentiment").value;
    annotation.unc_epistemic = flag("epistemic uncertainty").value;
    annotation.unc_doxastic = flag("doxastic uncertainty").value;
    annotation.unc_investigative = flag("investigative uncertainty").value;
    annotation.unc_conditional = flag("conditional uncertainty").value;
    annotation.unc_none = flag("no uncertainty").value;

    bool repaired = false;
    repair_pair(annotation.frazier, frazier_low.position, frazier_high.position, repaired);
    repair_pair(annotation.yngve, yngve_low.position, yngve_high.position, repaired);
    repair_pair(annotation.p_density, pd_low.position, pd_high.position, repaired);
    repair_pair(annotation.c_density, cd_low.position, cd_high.position, repaired);
    repair_pair(annotation.formality, fo_low.position, fo_high.position, repaired);
    repair_pair(annotation.politeness, po_low.position, po_high.position, repaired);
    annotation.repaired = repaired;

    return repair_info_style(annotation);
}

double dispute_feature_value(const DisputeTacticsAnnotation& a, const std::string& name) {
    if (name == "Name calling/hostility") return a.level(RebuttalFlag::L0_name_calling);
    if (name == "Ad hominem/ad argument") return a.level(RebuttalFlag::L1_ad_hominem);
    if (name == "Attempted derailing/off-topic") return a.level(RebuttalFlag::L2_off_topic);
    if (name == "Policing the discussion") return a.level(RebuttalFlag::L3_policing);
    if (name == "Stating your stance/repeated argument") {
        // The two level-4 tactics are merged into one presence feature.
        return std::max(a.level(RebuttalFlag::L4_stance), a.level(RebuttalFlag::L4_repeat));
    }
    if (name == "Counterargument") return a.level(RebuttalFlag::L5_counterargument);
    if (name == "Refutation") return a.level(RebuttalFlag::L6_refutation);
    if (name == "Refuting the central point") return a.level(RebuttalFlag::L7_central_point);
    if (name == "Bailing out") return a.label(CoordinationFlag::A);
    if (name == "Contextualisation") return a.label(CoordinationFlag::B);
    if (name == "Asking questions") return a.label(CoordinationFlag::C);
    if (name == "Providing clarification") return a.label(CoordinationFlag::D);
    if (name == "Suggesting a compromise") return a.label(CoordinationFlag::E);
    if (name == "Coordinating") return a.label(CoordinationFlag::F);
    if (name == "Conceding / recanting") return a.label(CoordinationFlag::G);
    if (name == "I don't know") return a.label(CoordinationFlag::H);
    if (name == "Other") return a.label(CoordinationFlag::I);
    throw ValidationError("unknown dispute-tactics feature: " + name);
}

double info_style_feature_value(const InfoStyleAnnotation& a, const std::string& name) {
    if (name == "Low propositional density") return a.p_density.low;
    if (name == "High propositional density") return a.p_density.high;
    if (name == "Low content density") return a.c_density.low;
    if (name == "High content density") return a.c_density.high;
    if (name == "Low Frazier score") return a.frazier.low;
    if (name == "High Frazier score") return a.frazier.high;
    if (name == "Low Yngve score") return a.yngve.low;
    if (name == "High Yngve score") return a.yngve.high;
    if (name == "Low formality") return a.formality.low;
    if (name == "High formality") return a.formality.high;
    if (name == "Low politeness") return a.politeness.low;
    if (name == "High politeness") return a.politeness.high;
    if (name == "Negative sentiment") return a.sentiment_negative;
    if (name == "Neutral sentiment") return a.sentiment_neutral;
    if (name == "Positive sentiment") return a.sentiment_positive;
    if (name == "Epistemic uncertainty") return a.unc_epistemic;
    if (name == "Doxastic uncertainty") return a.unc_doxastic;
    if (name == "Investigative uncertainty") return a.unc_investigative;
    if (name == "Conditional uncertainty") return a.unc_conditional;
    if (name == "No uncertainty") return a.unc_none;
    throw ValidationError("unknown info/style feature: " + name);
}

} // namespace dca::annotation
