#include "qss/corpus.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace fs = std::filesystem;

namespace qss {

WordId Vocabulary::add(const std::string& word) {
    auto it = index_.find(word);
    if (it != index_.end()) return it->second;
    const WordId id = static_cast<WordId>(words_.size());
    words_.push_back(word);
    index_.emplace(word, id);
    return id;
}

std::optional<WordId> Vocabulary::find(std::string_view word) const {
    auto it = index_.find(std::string(word));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

WordId Vocabulary::require(std::string_view word) const {
    auto id = find(word);
    if (!id) throw UnknownWordError("unknown word '" + std::string(word) + "'");
    return *id;
}

const std::string& Vocabulary::word(WordId id) const {
    if (id < 0 || static_cast<std::size_t>(id) >= words_.size())
        throw UnknownWordError("word index " + std::to_string(id) + " out of range");
    return words_[static_cast<std::size_t>(id)];
}

bool Trace::contains(WordId w) const {
    return std::find(tokens.begin(), tokens.end(), w) != tokens.end();
}

namespace {

bool is_word_byte(unsigned char c) {
    if (c >= 'a' && c <= 'z') return true;
    if (c >= 'A' && c <= 'Z') return true;
    if (c >= '0' && c <= '9') return true;
    return c >= 0x80;  // UTF-8 continuation or lead byte
}

char lower_ascii(unsigned char c) {
    if (c >= 'A' && c <= 'Z') return static_cast<char>(c - 'A' + 'a');
    return static_cast<char>(c);
}

}  // namespace

std::vector<std::string> tokenize(std::string_view text, const Stoplist& stoplist) {
    std::vector<std::string> out;
    std::string cur;
    auto flush = [&] {
        if (!cur.empty()) {
            if (!stoplist.count(cur)) out.push_back(cur);
            cur.clear();
        }
    };
    for (unsigned char c : text) {
        if (is_word_byte(c))
            cur.push_back(lower_ascii(c));
        else
            flush();
    }
    flush();
    return out;
}

bool utf8_valid(std::string_view text) {
    const auto* s = reinterpret_cast<const unsigned char*>(text.data());
    std::size_t i = 0, n = text.size();
    while (i < n) {
        unsigned char c = s[i];
        if (c < 0x80) {
            ++i;
            continue;
        }
        int len;
        unsigned char lo = 0x80, hi = 0xBF;
        if (c >= 0xC2 && c <= 0xDF) {
            len = 2;
        } else if (c == 0xE0) {
            len = 3;
            lo = 0xA0;  // no overlong 3-byte forms
        } else if (c >= 0xE1 && c <= 0xEC) {
            len = 3;
        } else if (c == 0xED) {
            len = 3;
            hi = 0x9F;  // no surrogates
        } else if (c >= 0xEE && c <= 0xEF) {
            len = 3;
        } else if (c == 0xF0) {
            len = 4;
            lo = 0x90;  // no overlong 4-byte forms
        } else if (c >= 0xF1 && c <= 0xF3) {
            len = 4;
        } else if (c == 0xF4) {
            len = 4;
            hi = 0x8F;  // <= U+10FFFF
        } else {
            return false;  // 0x80..0xC1, 0xF5..0xFF
        }
        if (i + static_cast<std::size_t>(len) > n) return false;
        if (s[i + 1] < lo || s[i + 1] > hi) return false;
        for (int k = 2; k < len; ++k)
            if (s[i + k] < 0x80 || s[i + k] > 0xBF) return false;
        i += static_cast<std::size_t>(len);
    }
    return true;
}

Corpus ingest(const std::vector<RawDocument>& documents, const Stoplist& stoplist) {
    auto vocab = std::make_shared<Vocabulary>();
    Corpus corpus;
    corpus.documents.reserve(documents.size());
    for (const auto& raw : documents) {
        if (!utf8_valid(raw.text))
            throw IoError("document '" + raw.id + "': invalid UTF-8");
        Document doc;
        doc.id = raw.id;
        for (const auto& word : tokenize(raw.text, stoplist))
            doc.tokens.push_back(vocab->add(word));
        corpus.documents.push_back(std::move(doc));
    }
    corpus.vocab = vocab;
    return corpus;
}

std::vector<Trace> extract_traces(const Corpus& corpus, WordId w, int window_length) {
    if (window_length < 1) throw UsageError("window length must be >= 1");
    if (w < 0 || static_cast<std::size_t>(w) >= corpus.vocab->size())
        throw UnknownWordError("word index " + std::to_string(w) + " out of range");

    const int before = window_length / 2;
    const int after = window_length - 1 - before;
    std::vector<Trace> traces;
    for (const auto& doc : corpus.documents) {
        const int len = static_cast<int>(doc.tokens.size());
        for (int pos = 0; pos < len; ++pos) {
            if (doc.tokens[static_cast<std::size_t>(pos)] != w) continue;
            const int lo = std::max(0, pos - before);
            const int hi = std::min(len, pos + after + 1);
            Trace trace;
            trace.center_word = w;
            trace.tokens.assign(doc.tokens.begin() + lo, doc.tokens.begin() + hi);
            traces.push_back(std::move(trace));
        }
    }
    return traces;
}

namespace {

std::string read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    if (in.bad()) throw IoError("read failure on '" + path.string() + "'");
    return std::move(buf).str();
}

std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

}  // namespace

std::vector<RawDocument> load_corpus_path(const std::string& path) {
    std::error_code ec;
    const auto status = fs::status(path, ec);
    if (ec || !fs::exists(status)) throw IoError("corpus path '" + path + "' does not exist");

    std::vector<RawDocument> docs;
    if (fs::is_directory(status)) {
        std::vector<fs::path> files;
        for (const auto& entry : fs::directory_iterator(path)) {
            if (entry.is_regular_file() && entry.path().extension() == ".txt")
                files.push_back(entry.path());
        }
        std::sort(files.begin(), files.end(), [](const fs::path& a, const fs::path& b) {
            return a.filename().string() < b.filename().string();
        });
        for (const auto& file : files)
            docs.push_back({file.filename().string(), read_file(file)});
        return docs;
    }

    const std::string text = read_file(path);
    const std::string name = fs::path(path).filename().string();
    std::size_t start = 0, lineno = 1;
    while (start <= text.size()) {
        const std::size_t end = text.find('\n', start);
        std::string line =
            text.substr(start, end == std::string::npos ? std::string::npos : end - start);
        const bool last = end == std::string::npos;
        if (!(last && line.empty()))  // no trailing empty document after a final newline
            docs.push_back({name + ":" + std::to_string(lineno), strip_cr(std::move(line))});
        if (last) break;
        start = end + 1;
        ++lineno;
    }
    return docs;
}

Stoplist load_stoplist(const std::string& path) {
    const std::string text = read_file(path);
    Stoplist stop;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        line = strip_cr(std::move(line));
        std::size_t b = line.find_first_not_of(" \t");
        if (b == std::string::npos) continue;
        std::size_t e = line.find_last_not_of(" \t");
        std::string word = line.substr(b, e - b + 1);
        for (auto& c : word) c = lower_ascii(static_cast<unsigned char>(c));
        stop.insert(std::move(word));
    }
    return stop;
}

}  // namespace qss
