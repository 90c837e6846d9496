#pragma once

#include <cstddef>
#include <filesystem>
#include <map>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

namespace dca::lexical {

// A word/phrase list loaded from a data file. Entries are tokenized with the
// project tokenizer so phrase matching agrees with utterance tokenization.
class Lexicon {
public:
    static Lexicon load(const std::filesystem::path& path, const std::string& name);
    static Lexicon from_entries(const std::string& name,
                                const std::vector<std::string>& entries,
                                const std::string& version = "inline");

    const std::string& name() const { return name_; }
    const std::string& version() const { return version_; }
    const std::string& content_hash() const { return content_hash_; }
    std::size_t size() const { return entry_count_; }

    bool contains_word(const std::string& token) const { return singles_.count(token) > 0; }

    // Longest match starting at tokens[pos]; returns matched length (0 = none).
    std::size_t match_at(const std::vector<std::string>& tokens, std::size_t pos) const;

    // Left-to-right scan; a match consumes its tokens, so each starting
    // position contributes at most one count.
    std::size_t count_matches(const std::vector<std::string>& tokens,
                              std::size_t begin, std::size_t end) const;
    std::size_t count_matches(const std::vector<std::string>& tokens) const {
        return count_matches(tokens, 0, tokens.size());
    }

    bool any_match(const std::vector<std::string>& tokens,
                   std::size_t begin, std::size_t end) const;
    bool any_match(const std::vector<std::string>& tokens) const {
        return any_match(tokens, 0, tokens.size());
    }

private:
    std::string name_;
    std::string version_ = "1";
    std::string content_hash_;
    std::size_t entry_count_ = 0;
    std::unordered_set<std::string> singles_;
    // first token -> phrase tails sorted longest-first
    std::unordered_map<std::string, std::vector<std::vector<std::string>>> phrases_;

    void add_entry(const std::string& raw);
};

// The lexicon inventory behind the discrete feature sets. Loaded once from a
// data directory; file revisions change features without code changes.
struct LexiconSet {
    Lexicon hedges;          // politeness-style hedge words
    Lexicon hedging_terms;   // collaboration-style hedges (incl. phrases)
    Lexicon certainty;
    Lexicon gratitude;
    Lexicon apology;
    Lexicon deference;
    Lexicon greetings;
    Lexicon positive;
    Lexicon negative;
    Lexicon stopwords;
    Lexicon geography;
    Lexicon meta;
    Lexicon pron_1sg;
    Lexicon pron_1pl;
    Lexicon pron_2nd;
    Lexicon pron_3rd;

    static LexiconSet load(const std::filesystem::path& lexicon_dir);

    std::map<std::string, std::string> versions() const;
};

} // namespace dca::lexical
