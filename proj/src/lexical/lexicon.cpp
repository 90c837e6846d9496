#include "lexical/lexicon.hpp"

#include "common/error.hpp"
#include "common/fsio.hpp"
#include "common/hashing.hpp"
#include "lexical/tokenizer.hpp"

#include <algorithm>
#include <sstream>

namespace dca::lexical {

void Lexicon::add_entry(const std::string& raw) {
    if (raw.empty()) return;
    const TokenizedUtterance tokenized = tokenize(raw);
    if (tokenized.tokens.empty()) return;
    ++entry_count_;
    if (tokenized.tokens.size() == 1) {
        singles_.insert(tokenized.tokens.front());
        return;
    }
    std::vector<std::string> tail(tokenized.tokens.begin() + 1, tokenized.tokens.end());
    auto& bucket = phrases_[tokenized.tokens.front()];
    bucket.push_back(std::move(tail));
    std::sort(bucket.begin(), bucket.end(), [](const auto& a, const auto& b) {
        return a.size() > b.size();
    });
}

Lexicon Lexicon::load(const std::filesystem::path& path, const std::string& name) {
    Lexicon lexicon;
    lexicon.name_ = name;
    const std::string content = read_text_file(path);
    lexicon.content_hash_ = sha256_hex(content);
    std::istringstream in(content);
    std::string line;
    while (std::getline(in, line)) {
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto marker = line.find("version:");
            if (marker != std::string::npos) {
                std::string version = line.substr(marker + 8);
                version.erase(0, version.find_first_not_of(' '));
                if (!version.empty()) lexicon.version_ = version;
            }
            continue;
        }
        lexicon.add_entry(line);
    }
    if (lexicon.entry_count_ == 0) {
        throw ValidationError("lexicon '" + name + "' is empty: " + path.string());
    }
    return lexicon;
}

Lexicon Lexicon::from_entries(const std::string& name,
                              const std::vector<std::string>& entries,
                              const std::string& version) {
    Lexicon lexicon;
    lexicon.name_ = name;
    lexicon.version_ = version;
    for (const auto& entry : entries) lexicon.add_entry(entry);
    if (lexicon.entry_count_ == 0) {
        throw ValidationError("lexicon '" + name + "' is empty");
    }
    return lexicon;
}

std::size_t Lexicon::match_at(const std::vector<std::string>& tokens, std::size_t pos) const {
    auto bucket = phrases_.find(tokens[pos]);
    if (bucket != phrases_.end()) {
        for (const auto& tail : bucket->second) {
            if (pos + 1 + tail.size() > tokens.size()) continue;
            bool matched = true;
            for (std::size_t i = 0; i < tail.size(); ++i) {
                if (tokens[pos + 1 + i] != tail[i]) { matched = false; break; }
            }
            if (matched) return tail.size() + 1;
        }
    }
    return singles_.count(tokens[pos]) ? 1 : 0;
}

std::size_t Lexicon::count_matches(const std::vector<std::string>& tokens,
                                   std::size_t begin, std::size_t end) const {
    std::size_t count = 0;
    std::size_t pos = begin;
    while (pos < end) {
        const std::size_t len = match_at(tokens, pos);
        if (len > 0 && pos + len <= end) {
            ++count;
            pos += len;
        } else {
            ++pos;
        }
    }
    return count;
}

bool Lexicon::any_match(const std::vector<std::string>& tokens,
                        std::size_t begin, std::size_t end) const {
    for (std::size_t pos = begin; pos < end; ++pos) {
        const std::size_t len = match_at(tokens, pos);
        if (len > 0 && pos + len <= end) return true;
    }
    return false;
}

LexiconSet LexiconSet::load(const std::filesystem::path& dir) {
    auto file = [&](const char* stem) { return dir / (std::string(stem) + ".txt"); };
    LexiconSet set{
        Lexicon::load(file("hedges"), "hedges"),
        Lexicon::load(file("hedging_terms"), "hedging_terms"),
        Lexicon::load(file("certainty"), "certainty"),
        Lexicon::load(file("gratitude"), "gratitude"),
        Lexicon::load(file("apology"), "apology"),
        Lexicon::load(file("deference"), "deference"),
        Lexicon::load(file("greetings"), "greetings"),
        Lexicon::load(file("positive_words"), "positive_words"),
        Lexicon::load(file("negative_words"), "negative_words"),
        Lexicon::load(file("stopwords"), "stopwords"),
        Lexicon::load(file("geography"), "geography"),
        Lexicon::load(file("meta"), "meta"),
        Lexicon::load(file("pronouns_1sg"), "pronouns_1sg"),
        Lexicon::load(file("pronouns_1pl"), "pronouns_1pl"),
        Lexicon::load(file("pronouns_2nd"), "pronouns_2nd"),
        Lexicon::load(file("pronouns_3rd"), "pronouns_3rd"),
    };
    return set;
}

std::map<std::string, std::string> LexiconSet::versions() const {
    std::map<std::string, std::string> out;
    for (const Lexicon* lex : {&hedges, &hedging_terms, &certainty, &gratitude, &apology,
                               &deference, &greetings, &positive, &negative, &stopwords,
                               &geography, &meta, &pron_1sg, &pron_1pl, &pron_2nd, &pron_3rd}) {
        out[lex->name()] = lex->version();
    }
    return out;
}

} // namespace dca::lexical
