#pragma once

#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ragprobe {

// Lowercase whitespace/punctuation tokenizer shared by every scoring path.
// Tokens are maximal runs of alphanumeric characters; bytes >= 0x80 are kept
// so UTF-8 text survives untouched. No subword handling.
std::vector<std::string> tokenize(std::string_view text);

// Lowercase, strip punctuation, collapse whitespace: the canonical form used
// for passage matching.
std::string normalize_for_match(std::string_view text);

// Consecutive token triples of the normalized text. Falls back to unigrams
// when fewer than three tokens exist, so short passages still compare.
std::unordered_set<std::string> token_trigrams(std::string_view text);

double jaccard(const std::unordered_set<std::string>& a, const std::unordered_set<std::string>& b);

// Text up to and excluding the first '.', '!' or '?'; the whole text when no
// terminator exists.
std::string first_sentence(std::string_view text);

std::string join(const std::vector<std::string>& parts, std::string_view sep);

// Replaces "{name}" in a template. Throws ConfigError unless the slot occurs
// exactly once.
std::string fill_slot(std::string_view tmpl, std::string_view name, std::string_view value);

std::size_t count_occurrences(std::string_view haystack, std::string_view needle);

}  // namespace ragprobe
