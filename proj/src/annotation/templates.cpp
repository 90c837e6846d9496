#include "annotation/templates.hpp"

#include "common/error.hpp"
#include "common/fsio.hpp"
#include "common/hashing.hpp"

#include <sstream>

namespace dca::annotation {

std::string to_string(TemplateId id) {
    switch (id) {
    case TemplateId::dispute_tactics: return "dispute_tactics";
    case TemplateId::qoa: return "qoa";
    case TemplateId::info_style: return "info_style";
    }
    throw InternalError("unreachable template id");
}

namespace {

std::string replace_slot(const std::string& text, const std::string& slot,
                         const std::string& value) {
    const auto pos = text.find(slot);
    if (pos == std::string::npos) {
        throw InternalError("template is missing slot " + slot);
    }
    std::string out = text;
    out.replace(pos, slot.size(), value);
    return out;
}

} // namespace

TemplateStore::TemplateStore(const std::filesystem::path& template_dir) : dir_(template_dir) {
    auto load = [&](const std::string& name) {
        const auto path = dir_ / (name + ".txt");
        std::string content = read_text_file(path);
        hashes_[name] = sha256_hex(content);
        return content;
    };
    dispute_template_ = load("dispute_tactics");
    info_style_template_ = load("info_style");
    for (const auto& entry : std::filesystem::directory_iterator(dir_)) {
        const std::string stem = entry.path().stem().string();
        if (stem.rfind("qoa_", 0) == 0) {
            qoa_templates_[stem.substr(4)] = load(stem);
        } else if (stem.rfind("nshot_", 0) == 0) {
            nshot_templates_[stem.substr(6)] = load(stem);
        }
    }
    if (qoa_templates_.empty()) {
        throw ValidationError("no qoa_<dataset>.txt templates found in " + dir_.string());
    }
}

std::string TemplateStore::format_utterance(const corpus::Utterance& utterance) {
    return "<user_id=" + utterance.speaker_id + "> " + utterance.text;
}

std::string TemplateStore::format_dialogue(const corpus::Dialogue& dialogue) {
    std::ostringstream out;
    for (std::size_t i = 0; i < dialogue.utterances.size(); ++i) {
        if (i) out << '\n';
        out << format_utterance(dialogue.utterances[i]);
    }
    return out.str();
}

PromptRequest TemplateStore::render_dispute_prompt(const corpus::Dialogue& dialogue,
                                                   std::size_t utterance_index,
                                                   const std::string& model_name,
                                                   double temperature,
                                                   std::size_t history_char_budget) const {
    if (utterance_index >= dialogue.utterances.size()) {
        throw ValidationError("utterance index " + std::to_string(utterance_index) +
                              " out of range for dialogue '" + dialogue.id + "'");
    }
    std::vector<std::string> history_lines;
    for (std::size_t i = 0; i < utterance_index; ++i) {
        history_lines.push_back(format_utterance(dialogue.utterances[i]));
    }
    // Optional budget: drop oldest history first until the joined text fits.
    std::size_t start = 0;
    if (history_char_budget > 0) {
        auto joined_size = [&](std::size_t from) {
            std::size_t total = 0;
            for (std::size_t i = from; i < history_lines.size(); ++i) {
                total += history_lines[i].size() + (i > from ? 1 : 0);
            }
            return total;
        };
        while (start < history_lines.size() && joined_size(start) > history_char_budget) {
            ++start;
        }
    }
    std::string history;
    for (std::size_t i = start; i < history_lines.size(); ++i) {
        if (i > start) history += '\n';
        history += history_lines[i];
    }

    PromptRequest req;
    req.template_id = TemplateId::dispute_tactics;
    req.dialogue_id = dialogue.id;
    req.utterance_index = utterance_index;
    req.model_name = model_name;
    req.temperature = temperature;
    req.rendered_text = replace_slot(
        replace_slot(dispute_template_, "{CONVERSATION_HISTORY}", history),
        "{UTTERANCE}", format_utterance(dialogue.utterances[utterance_index]));
    return req;
}

const std::string& TemplateStore::qoa_template_for(const std::string& dataset_tag) const {
    auto it = qoa_templates_.find(dataset_tag);
    if (it == qoa_templates_.end()) {
        throw ValidationError("no QoA contextualisation registered for dataset '" +
                              dataset_tag + "' (expected " +
                              (dir_ / ("qoa_" + dataset_tag + ".txt")).string() + ")");
    }
    return it->second;
}

PromptRequest TemplateStore::render_qoa_prompt(const corpus::Dialogue& dialogue,
                                               const std::string& model_name,
                                               double temperature) const {
    if (dialogue.utterances.empty()) {
        throw ValidationError("cannot render QoA prompt for empty dialogue '" + dialogue.id + "'");
    }
    PromptRequest req;
    req.template_id = TemplateId::qoa;
    req.dialogue_id = dialogue.id;
    req.model_name = model_name;
    req.temperature = temperature;
    req.rendered_text = replace_slot(qoa_template_for(dialogue.dataset_tag),
                                     "{INPUT_DIALOGUE}", format_dialogue(dialogue));
    return req;
}

PromptRequest TemplateStore::render_info_style_prompt(const corpus::Dialogue& dialogue,
                                                      std::size_t utterance_index,
                                                      const std::string& model_name,
                                                      double temperature) const {
    if (utterance_index >= dialogue.utterances.size()) {
        throw ValidationError("utterance index " + std::to_string(utterance_index) +
                              " out of range for dialogue '" + dialogue.id + "'");
    }
    PromptRequest req;
    req.template_id = TemplateId::info_style;
    req.dialogue_id = dialogue.id;
    req.utterance_index = utterance_index;
    req.model_name = model_name;
    req.temperature = temperature;
    req.rendered_text = replace_slot(info_style_template_, "{UTTERANCE}",
                                     dialogue.utterances[utterance_index].text);
    return req;
}

std::string TemplateStore::render_nshot_prompt(
    const corpus::Dialogue& dialogue,
    const std::vector<std::pair<const corpus::Dialogue*, double>>& examples) const {
    auto it = nshot_templates_.find(dialogue.dataset_tag);
    if (it == nshot_templates_.end()) {
        throw ValidationError("no N-shot baseline prompt registered for dataset '" +
                              dialogue.dataset_tag + "'");
    }
    std::string prompt =
        replace_slot(it->second, "{INPUT_DIALOGUE}", format_dialogue(dialogue));
    // Few-shot variants append the worked examples after the base prompt.
    std::ostringstream out;
    out << prompt;
    for (const auto& [example, target] : examples) {
        out << "\n\nEXAMPLE DIALOGUE: \"" << format_dialogue(*example) << "\"\n\nEXAMPLE ANSWER: "
            << target;
    }
    return out.str();
}

} // namespace dca::annotation
