#pragma once

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace dca::corpus {

enum class TaskKind { regression, binary };

std::string to_string(TaskKind kind);
TaskKind task_kind_from_string(const std::string& text);

struct Utterance {
    std::string speaker_id;
    std::size_t index = 0; // 0-based position within the dialogue
    std::string text;
};

struct Target {
    TaskKind kind = TaskKind::regression;
    double value = 0.0; // regression: in [1,7]; binary: exactly 0 or 1
};

struct Dialogue {
    std::string id;
    std::string dataset_tag;
    std::optional<std::string> topic;
    std::vector<Utterance> utterances;
    Target target;
};

struct Corpus {
    std::vector<Dialogue> dialogues;
    TaskKind task_kind = TaskKind::regression;
};

struct FoldAssignment {
    int k = 0;
    std::uint64_t seed = 0;
    std::map<std::string, int> assignment; // dialogue id -> fold in [0, k)

    std::vector<int> fold_of_rows(const Corpus& corpus) const;
};

// Reads one JSON record per line. The whole stream is rejected on the first
// invalid record; errors carry the 1-based line number.
Corpus parse_corpus(std::istream& in, TaskKind task_kind);
Corpus parse_corpus_file(const std::string& path, TaskKind task_kind);

std::string serialize_corpus(const Corpus& corpus);

// Shuffled k-fold split; binary corpora are stratified so per-fold class
// proportions track the corpus within one dialogue.
FoldAssignment split_folds(const Corpus& corpus, int k, std::uint64_t seed);

// Disjoint, exhaustive partition by topic. Every dialogue must carry one.
std::map<std::string, Corpus> split_by_topic(const Corpus& corpus);

} // namespace dca::corpus
