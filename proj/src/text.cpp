#include "ragprobe/text.hpp"

#include <cctype>

#include "ragprobe/error.hpp"

namespace ragprobe {

namespace {

bool is_token_char(unsigned char c) {
    return std::isalnum(c) != 0 || c >= 0x80;
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : text) {
        if (is_token_char(c)) {
            cur.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) {
        out.push_back(std::move(cur));
    }
    return out;
}

std::string normalize_for_match(std::string_view text) {
    return join(tokenize(text), " ");
}

std::unordered_set<std::string> token_trigrams(std::string_view text) {
    const auto toks = tokenize(text);
    std::unordered_set<std::string> grams;
    if (toks.size() < 3) {
        grams.insert(toks.begin(), toks.end());
        return grams;
    }
    for (std::size_t i = 0; i + 2 < toks.size(); ++i) {
        grams.insert(toks[i] + '\x1f' + toks[i + 1] + '\x1f' + toks[i + 2]);
    }
    return grams;
}

double jaccard(const std::unordered_set<std::string>& a, const std::unordered_set<std::string>& b) {
    if (a.empty() && b.empty()) {
        return 0.0;
    }
    const auto& small = a.size() <= b.size() ? a : b;
    const auto& large = a.size() <= b.size() ? b : a;
    std::size_t inter = 0;
    for (const auto& g : small) {
        if (large.count(g) != 0) {
            ++inter;
        }
    }
    return static_cast<double>(inter) / static_cast<double>(a.size() + b.size() - inter);
}

std::string first_sentence(std::string_view text) {
    const auto pos = text.find_first_of(".!?");
    if (pos == std::string_view::npos) {
        return std::string(text);
    }
    return std::string(text.substr(0, pos));
}

std::string join(const std::vector<std::string>& parts, std::string_view sep) {
    std::string out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i != 0) {
            out.append(sep);
        }
        out.append(parts[i]);
    }
    return out;
}

std::size_t count_occurrences(std::string_view haystack, std::string_view needle) {
    if (needle.empty()) {
        return 0;
    }
    std::size_t count = 0;
    std::size_t pos = 0;
    while ((pos = haystack.find(needle, pos)) != std::string_view::npos) {
        ++count;
        pos += needle.size();
    }
    return count;
}

std::string fill_slot(std::string_view tmpl, std::string_view name, std::string_view value) {
    const std::string slot = "{" + std::string(name) + "}";
    if (count_occurrences(tmpl, slot) != 1) {
        throw ConfigError("template must contain slot " + slot + " exactly once");
    }
    std::string out(tmpl);
    out.replace(out.find(slot), slot.size(), value);
    return out;
}

}  // namespace ragprobe
