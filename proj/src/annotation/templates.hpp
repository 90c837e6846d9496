#pragma once

#include "annotation/annotation.hpp"
#include "corpus/corpus.hpp"

#include <filesystem>
#include <map>
#include <string>

namespace dca::annotation {

// Loads template files once and renders prompts by slot substitution.
// Outside the slots the rendered text is byte-identical to the files.
class TemplateStore {
public:
    explicit TemplateStore(const std::filesystem::path& template_dir);

    // History = utterances [0, index); empty string when index == 0.
    PromptRequest render_dispute_prompt(const corpus::Dialogue& dialogue,
                                        std::size_t utterance_index,
                                        const std::string& model_name,
                                        double temperature,
                                        std::size_t history_char_budget = 0) const;

    PromptRequest render_qoa_prompt(const corpus::Dialogue& dialogue,
                                    const std::string& model_name,
                                    double temperature) const;

    PromptRequest render_info_style_prompt(const corpus::Dialogue& dialogue,
                                           std::size_t utterance_index,
                                           const std::string& model_name,
                                           double temperature) const;

    // Dataset-specific constructiveness-prediction prompt with N worked
    // examples appended after the base prompt.
    std::string render_nshot_prompt(
        const corpus::Dialogue& dialogue,
        const std::vector<std::pair<const corpus::Dialogue*, double>>& examples) const;

    std::map<std::string, std::string> template_hashes() const { return hashes_; }

    static std::string format_dialogue(const corpus::Dialogue& dialogue);
    static std::string format_utterance(const corpus::Utterance& utterance);

private:
    std::filesystem::path dir_;
    std::string dispute_template_;
    std::string info_style_template_;
    std::map<std::string, std::string> qoa_templates_;   // dataset tag -> template
    std::map<std::string, std::string> nshot_templates_; // dataset tag -> template
    std::map<std::string, std::string> hashes_;

    const std::string& qoa_template_for(const std::string& dataset_tag) const;
};

} // namespace dca::annotation
