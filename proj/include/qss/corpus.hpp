#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "qss/errors.hpp"

namespace qss {

using WordId = std::int32_t;

// Word <-> index map. Indices are assigned in first-occurrence order, so a
// vocabulary is a pure function of the token stream that built it.
class Vocabulary {
public:
    WordId add(const std::string& word);  // returns the existing index if known
    std::optional<WordId> find(std::string_view word) const;
    WordId require(std::string_view word) const;  // throws UnknownWordError
    const std::string& word(WordId id) const;
    const std::vector<std::string>& words() const noexcept { return words_; }
    std::size_t size() const noexcept { return words_.size(); }

private:
    std::vector<std::string> words_;
    std::unordered_map<std::string, WordId> index_;
};

using VocabPtr = std::shared_ptr<const Vocabulary>;

struct RawDocument {
    std::string id;
    std::string text;
};

struct Document {
    std::string id;
    std::vector<WordId> tokens;  // source order after filtering
};

// Window of tokens centred on one occurrence of a target word.
struct Trace {
    WordId center_word = -1;
    std::vector<WordId> tokens;  // contiguous slice of one document

    bool contains(WordId w) const;
};

using Stoplist = std::unordered_set<std::string>;

struct Corpus {
    VocabPtr vocab;
    std::vector<Document> documents;
};

// Lowercased maximal alphanumeric runs, stoplist members removed; punctuation
// discarded. Bytes >= 0x80 count as word characters so UTF-8 text passes
// through intact.
std::vector<std::string> tokenize(std::string_view text, const Stoplist& stoplist);

bool utf8_valid(std::string_view text);

// Builds the vocabulary in first-occurrence order across the document
// sequence and maps every document to index form. Rejects documents that are
// not valid UTF-8, naming the offender.
Corpus ingest(const std::vector<RawDocument>& documents, const Stoplist& stoplist);

// One trace per occurrence of w: floor(l/2) tokens before the occurrence,
// l-1-floor(l/2) after (symmetric for odd l), truncated at document
// boundaries. Traces never cross documents.
std::vector<Trace> extract_traces(const Corpus& corpus, WordId w, int window_length);

// Corpus input: a regular file holds one document per line; a directory
// holds one document per .txt file, ordered by filename byte order.
std::vector<RawDocument> load_corpus_path(const std::string& path);

// One word per line, lowercased, surrounding whitespace trimmed.
Stoplist load_stoplist(const std::string& path);

}  // namespace qss
