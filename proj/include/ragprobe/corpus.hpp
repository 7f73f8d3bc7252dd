#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ragprobe/stance.hpp"

namespace ragprobe {

// A controversial query. expected_stance is the manipulation direction and,
// when set, is always Oppose or Support — neutrality is not a target.
struct Topic {
    std::string id;
    std::string text;
    std::optional<Stance> expected_stance;
};

// A stance-labeled passage. When a trigger is present the visible text is
// trigger + " " + original_text and stripping the trigger recovers the
// original byte-for-byte.
struct Document {
    std::string id;
    std::string topic_id;
    std::string text;
    Stance stance = Stance::Neutral;
    std::optional<std::string> trigger;
    std::string original_text;

    bool poisoned() const { return trigger.has_value(); }
};

struct Corpus {
    std::vector<Topic> topics;
    std::vector<Document> documents;
    std::string provenance;

    const Topic* find_topic(const std::string& id) const;
    const Document* find_document(const std::string& id) const;

    // Topic's documents in ascending id order.
    std::vector<const Document*> topic_documents(const std::string& topic_id) const;
};

// Line-delimited JSON corpus files. One object per line:
//   {"kind":"topic","id":str,"text":str,"expected_stance":0|2|null}
//   {"kind":"doc","id":str,"topic_id":str,"text":str,"stance":0|1|2}
// Poisoned documents additionally carry "trigger". Unknown keys are rejected.
Corpus load_corpus(const std::string& path);
void save_corpus(const Corpus& corpus, const std::string& path);

// Prepends trigger_text + " " to the document's original text. Re-poisoning
// requires replace_mode; stance and original text never change.
Document inject_trigger(const Document& doc, const std::string& trigger_text, bool replace_mode = false);

// Inverse of inject_trigger.
Document strip_trigger(const Document& doc);

// Topic's documents with the given stance, ascending id order. Unknown topic
// is an error; an empty result is not.
std::vector<Document> filter_by_stance(const Corpus& corpus, const Topic& topic, Stance stance);

}  // namespace ragprobe
