#include "lexical/markers.hpp"

#include <algorithm>

namespace dca::lexical {

std::string to_string(FeatureSet set) {
    switch (set) {
    case FeatureSet::PM: return "PM";
    case FeatureSet::CM: return "CM";
    case FeatureSet::DT: return "DT";
    case FeatureSet::QoA: return "QoA";
    case FeatureSet::IC: return "IC";
    case FeatureSet::ST: return "ST";
    }
    throw InternalError("unreachable feature set");
}

FeatureSet feature_set_from_string(const std::string& text) {
    if (text == "PM") return FeatureSet::PM;
    if (text == "CM") return FeatureSet::CM;
    if (text == "DT") return FeatureSet::DT;
    if (text == "QoA") return FeatureSet::QoA;
    if (text == "IC") return FeatureSet::IC;
    if (text == "ST") return FeatureSet::ST;
    throw ValidationError("unknown feature set: " + text);
}

const std::vector<std::string> kPolitenessFeatureNames = {
    "Please",
    "Start with 'Please'",
    "Has subject hedge",
    "Use of 'by the way'",
    "Hedge words",
    "Assert factuality",
    "Start with deference",
    "Gratitude",
    "Apologising",
    "1st person plural",
    "1st person pronouns",
    "Start with 1st person",
    "2nd person pronouns",
    "Start with 2nd person",
    "Start with greeting",
    "Starts with question",
    "Starts with conjunction",
    "Positive sentiment words",
    "Negative sentiment words",
    "Subjunctive words",
    "Indicative words",
};

const std::vector<std::string> kCollaborationFeatureNames = {
    "# words",
    "# me pronoun",
    "# we pronoun",
    "# you pronoun",
    "# 3rd person pronouns",
    "# Geography terms",
    "# Meta terms",
    "# Certainty terms",
    "# Hedging terms",
    "# New content words",
    "# New content words * # Certainty terms",
    "# New content words * # Hedging terms",
};

namespace {

// Literal rule vocabularies from the politeness scheme itself; word-class
// lists with churn potential live in the lexicon files instead.
const Lexicon& factuality_markers() {
    static const Lexicon lex = Lexicon::from_entries(
        "factuality", {"in fact", "actually", "really", "truly", "in reality", "the truth is"});
    return lex;
}

bool starts_with_any(const std::vector<std::string>& tokens, std::size_t begin,
                     std::initializer_list<const char*> words) {
    for (const char* word : words) {
        if (tokens[begin] == word) return true;
    }
    return false;
}

bool modal_preceded_by_you(const std::vector<std::string>& tokens, std::size_t begin,
                           std::size_t end, std::initializer_list<const char*> modals) {
    for (std::size_t i = begin + 1; i < end; ++i) {
        if (tokens[i - 1] != "you") continue;
        for (const char* modal : modals) {
            if (tokens[i] == modal) return true;
        }
    }
    return false;
}

std::size_t count_words(const std::vector<std::string>& tokens, const Lexicon& lexicon) {
    std::size_t count = 0;
    for (const auto& token : tokens) {
        if (lexicon.contains_word(token)) ++count;
    }
    return count;
}

} // namespace

UtteranceFeatureVector politeness_markers(const TokenizedUtterance& utt,
                                          const LexiconSet& lex) {
    std::vector<double> flags(kPolitenessFeatureNames.size(), 0.0);
    auto fire = [&](std::size_t i) { flags[i] = 1.0; };

    const auto& tokens = utt.tokens;
    for (const auto& [begin, end] : utt.sentences) {
        if (tokens[begin] == "please") fire(1);
        if (lex.hedges.any_match(tokens, begin, std::min(end, begin + 4))) fire(2);
        if (lex.deference.match_at(tokens, begin) > 0) fire(6);
        if (lex.pron_1sg.contains_word(tokens[begin])) fire(11);
        if (lex.pron_2nd.contains_word(tokens[begin])) fire(13);
        if (lex.greetings.match_at(tokens, begin) > 0) fire(14);
        if (starts_with_any(tokens, begin, {"what", "why", "who", "how", "when", "where", "which"}))
            fire(15);
        if (starts_with_any(tokens, begin, {"so", "then", "and", "but", "or"})) fire(16);

        for (std::size_t i = begin; i < end; ++i) {
            if (tokens[i] == "please") fire(0);
            if (lex.hedges.contains_word(tokens[i])) fire(4);
            if (lex.pron_1pl.contains_word(tokens[i])) fire(9);
            if (lex.pron_1sg.contains_word(tokens[i])) fire(10);
            if (lex.pron_2nd.contains_word(tokens[i])) fire(12);
            if (lex.positive.contains_word(tokens[i])) fire(17);
            if (lex.negative.contains_word(tokens[i])) fire(18);
            if (i + 2 < end && tokens[i] == "by" && tokens[i + 1] == "the" &&
                tokens[i + 2] == "way")
                fire(3);
        }
        if (factuality_markers().any_match(tokens, begin, end)) fire(5);
        if (lex.gratitude.any_match(tokens, begin, end)) fire(7);
        if (lex.apology.any_match(tokens, begin, end)) fire(8);
        if (modal_preceded_by_you(tokens, begin, end, {"could", "would"})) fire(19);
        if (modal_preceded_by_you(tokens, begin, end, {"can", "will"})) fire(20);
    }

    UtteranceFeatureVector vec;
    vec.set_tag = FeatureSet::PM;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        vec.add(kPolitenessFeatureNames[i], flags[i]);
    }
    return vec;
}

UtteranceFeatureVector collaboration_markers(const TokenizedUtterance& utt,
                                             DialogueLexicalState& state,
                                             const LexiconSet& lex,
                                             const std::string& dialogue_id) {
    if (state.dialogue_id != dialogue_id) {
        throw ValidationError("lexical state for dialogue '" + state.dialogue_id +
                              "' reused on dialogue '" + dialogue_id + "'");
    }
    const auto& tokens = utt.tokens;

    const double n_words = static_cast<double>(tokens.size());
    const double n_me = static_cast<double>(count_words(tokens, lex.pron_1sg));
    const double n_we = static_cast<double>(count_words(tokens, lex.pron_1pl));
    const double n_you = static_cast<double>(count_words(tokens, lex.pron_2nd));
    const double n_3rd = static_cast<double>(count_words(tokens, lex.pron_3rd));
    const double n_geo = static_cast<double>(lex.geography.count_matches(tokens));
    const double n_meta = static_cast<double>(lex.meta.count_matches(tokens));
    const double n_cert = static_cast<double>(lex.certainty.count_matches(tokens));
    const double n_hedge = static_cast<double>(lex.hedging_terms.count_matches(tokens));

    // Content word = alphabetic token outside the stopword list. New = its
    // first occurrence anywhere in this dialogue so far; counted once per
    // utterance even when repeated within it.
    std::set<std::string> utterance_content;
    for (const auto& token : tokens) {
        if (is_alphabetic_token(token) && !lex.stopwords.contains_word(token)) {
            utterance_content.insert(token);
        }
    }
    double n_new = 0.0;
    for (const auto& word : utterance_content) {
        if (!state.seen_content_words.count(word)) n_new += 1.0;
    }
    state.seen_content_words.insert(utterance_content.begin(), utterance_content.end());

    UtteranceFeatureVector vec;
    vec.set_tag = FeatureSet::CM;
    vec.add(kCollaborationFeatureNames[0], n_words);
    vec.add(kCollaborationFeatureNames[1], n_me);
    vec.add(kCollaborationFeatureNames[2], n_we);
    vec.add(kCollaborationFeatureNames[3], n_you);
    vec.add(kCollaborationFeatureNames[4], n_3rd);
    vec.add(kCollaborationFeatureNames[5], n_geo);
    vec.add(kCollaborationFeatureNames[6], n_meta);
    vec.add(kCollaborationFeatureNames[7], n_cert);
    vec.add(kCollaborationFeatureNames[8], n_hedge);
    vec.add(kCollaborationFeatureNames[9], n_new);
    vec.add(kCollaborationFeatureNames[10], n_new * n_cert);
    vec.add(kCollaborationFeatureNames[11], n_new * n_hedge);
    return vec;
}

DiscreteVectors extract_discrete(const corpus::Dialogue& dialogue,
                                 const LexiconSet& lexicons) {
    DiscreteVectors out;
    out.politeness.reserve(dialogue.utterances.size());
    out.collaboration.reserve(dialogue.utterances.size());
    DialogueLexicalState state(dialogue.id);
    for (const auto& utterance : dialogue.utterances) {
        const TokenizedUtterance tokenized = tokenize(utterance.text);
        out.politeness.push_back(politeness_markers(tokenized, lexicons));
        out.collaboration.push_back(
            collaboration_markers(tokenized, state, lexicons, dialogue.id));
    }
    return out;
}

} // namespace dca::lexical
