#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "qss/corpus.hpp"
#include "qss/hal.hpp"

namespace testsupport {

inline constexpr const char* kReaganSentence = "President Reagan ignorant of the arms scandal";

inline qss::Corpus make_corpus(const std::vector<std::string>& texts, qss::Stoplist stop = {}) {
    std::vector<qss::RawDocument> raw;
    raw.reserve(texts.size());
    for (std::size_t i = 0; i < texts.size(); ++i)
        raw.push_back({"doc-" + std::to_string(i), texts[i]});
    return qss::ingest(raw, stop);
}

// Known directed weights for the seven-word sentence at window 5, keyed by
// (row word, column word); absent pairs are zero.
inline const std::map<std::pair<std::string, std::string>, long long>& reagan_hal_cells() {
    static const std::map<std::pair<std::string, std::string>, long long> cells = {
        {{"arms", "ignorant"}, 3},    {{"arms", "of"}, 4},        {{"arms", "president"}, 1},
        {{"arms", "reagan"}, 2},      {{"arms", "the"}, 5},       {{"ignorant", "president"}, 4},
        {{"ignorant", "reagan"}, 5},  {{"of", "ignorant"}, 5},    {{"of", "president"}, 3},
        {{"of", "reagan"}, 4},        {{"reagan", "president"}, 5}, {{"scandal", "arms"}, 5},
        {{"scandal", "ignorant"}, 2}, {{"scandal", "of"}, 3},     {{"scandal", "reagan"}, 1},
        {{"scandal", "the"}, 4},      {{"the", "ignorant"}, 4},   {{"the", "of"}, 5},
        {{"the", "president"}, 2},    {{"the", "reagan"}, 3},
    };
    return cells;
}

inline const std::vector<std::string>& reagan_vocab() {
    static const std::vector<std::string> words = {"president", "reagan", "ignorant", "of",
                                                   "the",       "arms",   "scandal"};
    return words;
}

// Three-sense fixture: two iran-flavoured parts plus one that shares no
// vocabulary with the iran contexts, so the iran cue activates exactly two.
inline const std::vector<std::string>& iran_corpus() {
    static const std::vector<std::string> docs = {
        "reagan iran contra arms scandal",
        "iran contra reagan arms deal",
        "reagan iran hostage embassy teheran",
        "reagan kemp stock tax veto",
        "kemp urges reagan tax cut",
    };
    return docs;
}

}  // namespace testsupport
