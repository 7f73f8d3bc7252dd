#include "ragprobe/corpus.hpp"

#include <algorithm>
#include <fstream>
#include <unordered_set>

#include <nlohmann/json.hpp>

namespace ragprobe {

using json = nlohmann::json;

const Topic* Corpus::find_topic(const std::string& id) const {
    for (const auto& t : topics) {
        if (t.id == id) {
            return &t;
        }
    }
    return nullptr;
}

const Document* Corpus::find_document(const std::string& id) const {
    for (const auto& d : documents) {
        if (d.id == id) {
            return &d;
        }
    }
    return nullptr;
}

std::vector<const Document*> Corpus::topic_documents(const std::string& topic_id) const {
    std::vector<const Document*> out;
    for (const auto& d : documents) {
        if (d.topic_id == topic_id) {
            out.push_back(&d);
        }
    }
    std::sort(out.begin(), out.end(),
              [](const Document* a, const Document* b) { return a->id < b->id; });
    return out;
}

namespace {

void reject_unknown_keys(const json& obj, const std::unordered_set<std::string>& allowed,
                         std::size_t line_no) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (allowed.count(it.key()) == 0) {
            throw CorpusError("line " + std::to_string(line_no) + ": unknown key \"" + it.key() + "\"");
        }
    }
}

std::string require_string(const json& obj, const char* key, std::size_t line_no) {
    if (!obj.contains(key) || !obj[key].is_string() || obj[key].get<std::string>().empty()) {
        throw CorpusError("line " + std::to_string(line_no) + ": missing or empty \"" + key + "\"");
    }
    return obj[key].get<std::string>();
}

}  // namespace

Corpus load_corpus(const std::string& path) {
    std::ifstream in(path);
    if (!in.good()) {
        throw CorpusError("corpus file not found: " + path);
    }

    Corpus corpus;
    corpus.provenance = path;
    std::unordered_set<std::string> topic_ids;
    std::unordered_set<std::string> doc_ids;

    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        json row;
        try {
            row = json::parse(line);
        } catch (const json::exception& e) {
            throw CorpusError("line " + std::to_string(line_no) + ": invalid record: " + e.what());
        }
        if (!row.is_object()) {
            throw CorpusError("line " + std::to_string(line_no) + ": record is not an object");
        }
        const std::string kind = row.value("kind", "");
        if (kind == "topic") {
            reject_unknown_keys(row, {"kind", "id", "text", "expected_stance"}, line_no);
            Topic t;
            t.id = require_string(row, "id", line_no);
            t.text = require_string(row, "text", line_no);
            if (row.contains("expected_stance") && !row["expected_stance"].is_null()) {
                const int v = row["expected_stance"].get<int>();
                if (v != 0 && v != 2) {
                    throw CorpusError("line " + std::to_string(line_no) +
                                      ": expected_stance must be 0 or 2, got " + std::to_string(v));
                }
                t.expected_stance = stance_from_int(v);
            }
            if (!topic_ids.insert(t.id).second) {
                throw CorpusError("line " + std::to_string(line_no) + ": duplicate topic id \"" + t.id + "\"");
            }
            corpus.topics.push_back(std::move(t));
        } else if (kind == "doc") {
            reject_unknown_keys(row, {"kind", "id", "topic_id", "text", "stance", "trigger"}, line_no);
            Document d;
            d.id = require_string(row, "id", line_no);
            d.topic_id = require_string(row, "topic_id", line_no);
            d.text = require_string(row, "text", line_no);
            if (!row.contains("stance") || !row["stance"].is_number_integer()) {
                throw CorpusError("line " + std::to_string(line_no) + ": missing stance");
            }
            d.stance = stance_from_int(row["stance"].get<int>());
            if (row.contains("trigger")) {
                const std::string trig = row["trigger"].get<std::string>();
                const std::string prefix = trig + " ";
                if (trig.empty() || d.text.rfind(prefix, 0) != 0) {
                    throw CorpusError("line " + std::to_string(line_no) +
                                      ": trigger is not a prefix of text for doc \"" + d.id + "\"");
                }
                d.trigger = trig;
                d.original_text = d.text.substr(prefix.size());
            } else {
                d.original_text = d.text;
            }
            if (!doc_ids.insert(d.id).second) {
                throw CorpusError("line " + std::to_string(line_no) + ": duplicate doc id \"" + d.id + "\"");
            }
            corpus.documents.push_back(std::move(d));
        } else {
            throw CorpusError("line " + std::to_string(line_no) + ": unknown record kind \"" + kind + "\"");
        }
    }

    for (const auto& d : corpus.documents) {
        if (topic_ids.count(d.topic_id) == 0) {
            throw CorpusError("doc \"" + d.id + "\" references unknown topic \"" + d.topic_id + "\"");
        }
    }
    return corpus;
}

void save_corpus(const Corpus& corpus, const std::string& path) {
    std::ofstream out(path, std::ios::trunc);
    if (!out.good()) {
        throw CorpusError("cannot write corpus file: " + path);
    }
    for (const auto& t : corpus.topics) {
        json row{{"kind", "topic"}, {"id", t.id}, {"text", t.text}};
        if (t.expected_stance) {
            row["expected_stance"] = stance_value(*t.expected_stance);
        } else {
            row["expected_stance"] = nullptr;
        }
        out << row.dump() << '\n';
    }
    for (const auto& d : corpus.documents) {
        json row{{"kind", "doc"},
                 {"id", d.id},
                 {"topic_id", d.topic_id},
                 {"text", d.text},
                 {"stance", stance_value(d.stance)}};
        if (d.trigger) {
            row["trigger"] = *d.trigger;
        }
        out << row.dump() << '\n';
    }
}

Document inject_trigger(const Document& doc, const std::string& trigger_text, bool replace_mode) {
    if (trigger_text.empty()) {
        throw CorpusError("empty trigger for doc \"" + doc.id + "\"");
    }
    if (doc.poisoned() && !replace_mode) {
        throw CorpusError("doc \"" + doc.id + "\" is already poisoned");
    }
    Document out = doc;
    out.trigger = trigger_text;
    out.text = trigger_text + " " + doc.original_text;
    return out;
}

Document strip_trigger(const Document& doc) {
    Document out = doc;
    out.trigger.reset();
    out.text = doc.original_text;
    return out;
}

std::vector<Document> filter_by_stance(const Corpus& corpus, const Topic& topic, Stance stance) {
    if (corpus.find_topic(topic.id) == nullptr) {
        throw CorpusError("unknown topic \"" + topic.id + "\"");
    }
    std::vector<Document> out;
    for (const Document* d : corpus.topic_documents(topic.id)) {
        if (d->stance == stance) {
            out.push_back(*d);
        }
    }
    return out;
}

}  // namespace ragprobe
