#include "corpus/corpus.hpp"

#include "common/error.hpp"
#include "common/rng.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace dca::corpus {

using nlohmann::json;

std::string to_string(TaskKind kind) {
    return kind == TaskKind::regression ? "regression" : "binary";
}

TaskKind task_kind_from_string(const std::string& text) {
    if (text == "regression") return TaskKind::regression;
    if (text == "binary") return TaskKind::binary;
    throw ValidationError("unknown task kind: " + text);
}

std::vector<int> FoldAssignment::fold_of_rows(const Corpus& corpus) const {
    std::vector<int> folds;
    folds.reserve(corpus.dialogues.size());
    for (const auto& dialogue : corpus.dialogues) {
        auto it = assignment.find(dialogue.id);
        if (it == assignment.end()) {
            throw ValidationError("fold assignment missing dialogue: " + dialogue.id);
        }
        folds.push_back(it->second);
    }
    return folds;
}

namespace {

bool is_blank(const std::string& text) {
    return std::all_of(text.begin(), text.end(), [](unsigned char c) {
        return std::isspace(c) != 0;
    });
}

[[noreturn]] void fail_line(std::size_t line_no, const std::string& message) {
    throw ValidationError("corpus line " + std::to_string(line_no) + ": " + message);
}

Target parse_target(const json& node, TaskKind task_kind, std::size_t line_no) {
    if (!node.is_object()) fail_line(line_no, "target must be an object");
    for (const auto& item : node.items()) {
        if (item.key() != "kind" && item.key() != "value") {
            fail_line(line_no, "unknown target field '" + item.key() + "'");
        }
    }
    if (!node.contains("kind") || !node["kind"].is_string()) {
        fail_line(line_no, "target.kind missing or not a string");
    }
    if (!node.contains("value") || !node["value"].is_number()) {
        fail_line(line_no, "target.value missing or not a number");
    }
    Target target;
    const std::string kind = node["kind"].get<std::string>();
    try {
        target.kind = task_kind_from_string(kind);
    } catch (const ValidationError&) {
        fail_line(line_no, "target.kind must be 'regression' or 'binary'");
    }
    target.value = node["value"].get<double>();
    if (target.kind != task_kind) {
        fail_line(line_no, "target kind '" + kind + "' does not match corpus task kind '" +
                              to_string(task_kind) + "'");
    }
    if (target.kind == TaskKind::regression) {
        if (!(target.value >= 1.0 && target.value <= 7.0)) {
            fail_line(line_no, "target out of [1,7]");
        }
    } else {
        if (target.value != 0.0 && target.value != 1.0) {
            fail_line(line_no, "binary target must be exactly 0 or 1");
        }
    }
    return target;
}

Dialogue parse_record(const json& record, TaskKind task_kind, std::size_t line_no) {
    if (!record.is_object()) fail_line(line_no, "record must be a JSON object");
    static const std::unordered_set<std::string> known{
        "id", "dataset", "topic", "target", "utterances"};
    for (const auto& item : record.items()) {
        if (!known.count(item.key())) {
            fail_line(line_no, "unknown field '" + item.key() + "'");
        }
    }

    Dialogue dialogue;
    if (!record.contains("id") || !record["id"].is_string()) {
        fail_line(line_no, "id missing or not a string");
    }
    dialogue.id = record["id"].get<std::string>();
    if (dialogue.id.empty()) fail_line(line_no, "id must be non-empty");

    if (!record.contains("dataset") || !record["dataset"].is_string()) {
        fail_line(line_no, "dataset missing or not a string");
    }
    dialogue.dataset_tag = record["dataset"].get<std::string>();

    if (record.contains("topic") && !record["topic"].is_null()) {
        if (!record["topic"].is_string()) fail_line(line_no, "topic must be a string or null");
        dialogue.topic = record["topic"].get<std::string>();
    }

    if (!record.contains("target")) fail_line(line_no, "target missing");
    dialogue.target = parse_target(record["target"], task_kind, line_no);

    if (!record.contains("utterances") || !record["utterances"].is_array()) {
        fail_line(line_no, "utterances missing or not an array");
    }
    const auto& utterances = record["utterances"];
    if (utterances.empty()) fail_line(line_no, "empty dialogue");
    dialogue.utterances.reserve(utterances.size());
    for (std::size_t i = 0; i < utterances.size(); ++i) {
        const auto& node = utterances[i];
        if (!node.is_object()) fail_line(line_no, "utterance must be an object");
        for (const auto& item : node.items()) {
            if (item.key() != "speaker" && item.key() != "text") {
                fail_line(line_no, "unknown utterance field '" + item.key() + "'");
            }
        }
        if (!node.contains("speaker") || !node["speaker"].is_string()) {
            fail_line(line_no, "utterance.speaker missing or not a string");
        }
        if (!node.contains("text") || !node["text"].is_string()) {
            fail_line(line_no, "utterance.text missing or not a string");
        }
        Utterance utt;
        utt.speaker_id = node["speaker"].get<std::string>();
        utt.text = node["text"].get<std::string>();
        utt.index = i;
        if (utt.speaker_id.empty()) fail_line(line_no, "utterance.speaker must be non-empty");
        if (utt.text.empty() || is_blank(utt.text)) {
            fail_line(line_no, "utterance.text empty after trimming");
        }
        dialogue.utterances.push_back(std::move(utt));
    }
    return dialogue;
}

} // namespace

Corpus parse_corpus(std::istream& in, TaskKind task_kind) {
    Corpus corpus;
    corpus.task_kind = task_kind;
    std::unordered_set<std::string> seen_ids;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty() || is_blank(line)) continue;
        json record;
        try {
            record = json::parse(line);
        } catch (const json::exception& e) {
            fail_line(line_no, std::string("malformed record: ") + e.what());
        }
        Dialogue dialogue = parse_record(record, task_kind, line_no);
        if (!seen_ids.insert(dialogue.id).second) {
            fail_line(line_no, "duplicate id '" + dialogue.id + "'");
        }
        corpus.dialogues.push_back(std::move(dialogue));
    }
    if (corpus.dialogues.empty()) {
        throw ValidationError("corpus contains no dialogues");
    }
    return corpus;
}

Corpus parse_corpus_file(const std::string& path, TaskKind task_kind) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot open corpus file: " + path);
    return parse_corpus(in, task_kind);
}

std::string serialize_corpus(const Corpus& corpus) {
    std::ostringstream out;
    for (const auto& dialogue : corpus.dialogues) {
        json record;
        record["id"] = dialogue.id;
        record["dataset"] = dialogue.dataset_tag;
        if (dialogue.topic) record["topic"] = *dialogue.topic;
        else record["topic"] = nullptr;
        record["target"] = {{"kind", to_string(dialogue.target.kind)},
                            {"value", dialogue.target.value}};
        json utterances = json::array();
        for (const auto& utt : dialogue.utterances) {
            utterances.push_back({{"speaker", utt.speaker_id}, {"text", utt.text}});
        }
        record["utterances"] = std::move(utterances);
        out << record.dump() << '\n';
    }
    return out.str();
}

FoldAssignment split_folds(const Corpus& corpus, int k, std::uint64_t seed) {
    const std::size_t n = corpus.dialogues.size();
    if (k < 2) throw ValidationError("fold count must be at least 2");
    if (static_cast<std::size_t>(k) > n) {
        throw ValidationError("fold count " + std::to_string(k) + " exceeds corpus size " +
                              std::to_string(n));
    }

    FoldAssignment folds;
    folds.k = k;
    folds.seed = seed;
    Rng rng(Rng::derive(seed, 0x666f6c64)); // fold-splitting stream

    auto deal = [&](const std::vector<std::size_t>& order, std::size_t& pointer) {
        for (std::size_t idx : order) {
            folds.assignment[corpus.dialogues[idx].id] = static_cast<int>(pointer % k);
            ++pointer;
        }
    };

    if (corpus.task_kind == TaskKind::binary) {
        std::vector<std::size_t> negatives;
        std::vector<std::size_t> positives;
        for (std::size_t i = 0; i < n; ++i) {
            (corpus.dialogues[i].target.value == 1.0 ? positives : negatives).push_back(i);
        }
        if (negatives.size() < static_cast<std::size_t>(k) ||
            positives.size() < static_cast<std::size_t>(k)) {
            throw ValidationError("a binary class is too small to stratify into " +
                                  std::to_string(k) + " folds");
        }
        rng.shuffle(negatives);
        rng.shuffle(positives);
        // One continuous round-robin across both classes keeps overall fold
        // sizes within 1 while each class stays balanced across folds.
        std::size_t pointer = 0;
        deal(negatives, pointer);
        deal(positives, pointer);
    } else {
        std::vector<std::size_t> order(n);
        for (std::size_t i = 0; i < n; ++i) order[i] = i;
        rng.shuffle(order);
        std::size_t pointer = 0;
        deal(order, pointer);
    }
    return folds;
}

std::map<std::string, Corpus> split_by_topic(const Corpus& corpus) {
    std::map<std::string, Corpus> by_topic;
    for (const auto& dialogue : corpus.dialogues) {
        if (!dialogue.topic) {
            throw ValidationError("dialogue '" + dialogue.id + "' has no topic");
        }
        auto& subset = by_topic[*dialogue.topic];
        subset.task_kind = corpus.task_kind;
        subset.dialogues.push_back(dialogue);
    }
    return by_topic;
}

} // namespace dca::corpus
