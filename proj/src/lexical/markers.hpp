#pragma once

#include "corpus/corpus.hpp"
#include "lexical/features.hpp"
#include "lexical/lexicon.hpp"
#include "lexical/tokenizer.hpp"

#include <set>
#include <string>
#include <vector>

namespace dca::lexical {

// Content words already observed in earlier utterances of one dialogue.
// Confined to a single dialogue's sequential pass.
struct DialogueLexicalState {
    std::string dialogue_id;
    std::set<std::string> seen_content_words;

    explicit DialogueLexicalState(std::string id) : dialogue_id(std::move(id)) {}
};

extern const std::vector<std::string> kPolitenessFeatureNames; // 21 binary features
extern const std::vector<std::string> kCollaborationFeatureNames; // 12 count features

// PM: binary presence flags, one rule per feature; "Start with X" rules only
// look at sentence-initial tokens.
UtteranceFeatureVector politeness_markers(const TokenizedUtterance& utt,
                                          const LexiconSet& lexicons);

// CM: per-utterance counts; the state threads "seen content words" through a
// dialogue in utterance order and must not be shared across dialogues.
UtteranceFeatureVector collaboration_markers(const TokenizedUtterance& utt,
                                             DialogueLexicalState& state,
                                             const LexiconSet& lexicons,
                                             const std::string& dialogue_id);

struct DiscreteVectors {
    std::vector<UtteranceFeatureVector> politeness;    // one per utterance
    std::vector<UtteranceFeatureVector> collaboration; // one per utterance
};

DiscreteVectors extract_discrete(const corpus::Dialogue& dialogue,
                                 const LexiconSet& lexicons);

} // namespace dca::lexical
