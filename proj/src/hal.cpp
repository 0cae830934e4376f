#include "qss/hal.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <thread>

namespace qss {

namespace {

void check_index(std::size_t n, WordId i) {
    if (i < 0 || static_cast<std::size_t>(i) >= n)
        throw UsageError("index " + std::to_string(i) + " out of range for dimension " +
                         std::to_string(n));
}

VocabPtr require_vocab(VocabPtr vocab) {
    if (!vocab) throw UsageError("null vocabulary");
    return vocab;
}

}  // namespace

HalMatrix::HalMatrix(std::size_t n, VocabPtr vocab) : n_(n), vocab_(require_vocab(std::move(vocab))) {}

HalMatrix::HalMatrix(std::size_t n, VocabPtr vocab, std::map<Cell, std::int64_t> entries)
    : n_(n), vocab_(require_vocab(std::move(vocab))), entries_(std::move(entries)) {}

std::int64_t HalMatrix::at(WordId i, WordId j) const {
    check_index(n_, i);
    check_index(n_, j);
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0 : it->second;
}

void HalMatrix::add(WordId i, WordId j, std::int64_t w) {
    check_index(n_, i);
    check_index(n_, j);
    if (w == 0) return;
    auto [it, inserted] = entries_.emplace(Cell{i, j}, w);
    if (!inserted) it->second += w;
}

void HalMatrix::merge(const HalMatrix& other) {
    if (other.n_ != n_) throw UsageError("dimension mismatch in merge");
    for (const auto& [cell, w] : other.entries_) {
        auto [it, inserted] = entries_.emplace(cell, w);
        if (!inserted) it->second += w;
    }
}

SemanticSpace::SemanticSpace(std::size_t n, VocabPtr vocab)
    : n_(n), vocab_(require_vocab(std::move(vocab))) {}

SemanticSpace::SemanticSpace(std::size_t n, VocabPtr vocab, std::map<Cell, double> entries)
    : n_(n), vocab_(require_vocab(std::move(vocab))), entries_(std::move(entries)) {}

double SemanticSpace::at(WordId i, WordId j) const {
    check_index(n_, i);
    check_index(n_, j);
    auto it = entries_.find({i, j});
    return it == entries_.end() ? 0.0 : it->second;
}

void SemanticSpace::add(WordId i, WordId j, double v) {
    check_index(n_, i);
    check_index(n_, j);
    if (v == 0.0) return;
    auto [it, inserted] = entries_.emplace(Cell{i, j}, v);
    if (!inserted) {
        it->second += v;
        if (it->second == 0.0) entries_.erase(it);
    }
}

SemanticSpace& SemanticSpace::operator+=(const SemanticSpace& other) {
    if (other.n_ != n_) throw UsageError("dimension mismatch in space sum");
    for (const auto& [cell, v] : other.entries_) add(cell.first, cell.second, v);
    return *this;
}

Vec SemanticSpace::column(WordId w) const {
    check_index(n_, w);
    Vec col = Vec::Zero(static_cast<Eigen::Index>(n_));
    // symmetric, so column w equals row w; rows are contiguous in the map
    auto it = entries_.lower_bound({w, 0});
    const auto end = entries_.lower_bound({w + 1, 0});
    for (; it != end; ++it) col[it->first.second] = it->second;
    return col;
}

Mat SemanticSpace::dense() const {
    Mat m = Mat::Zero(static_cast<Eigen::Index>(n_), static_cast<Eigen::Index>(n_));
    for (const auto& [cell, v] : entries_) m(cell.first, cell.second) = v;
    return m;
}

HalMatrix build_hal(std::span<const Document> documents, int window, VocabPtr vocab) {
    if (window < 1) throw UsageError("window must be >= 1");
    const std::size_t n = vocab->size();

    // hash accumulation first, one sorted bulk load at the end
    std::unordered_map<std::uint64_t, std::int64_t> acc;
    for (const auto& doc : documents) {
        const auto& t = doc.tokens;
        for (WordId id : t)
            if (id < 0 || static_cast<std::size_t>(id) >= n)
                throw UsageError("document '" + doc.id + "' carries token index " +
                                 std::to_string(id) + " outside the vocabulary");
        const int len = static_cast<int>(t.size());
        for (int i = 0; i < len; ++i) {
            const int lo = std::max(0, i - window);
            const auto row = static_cast<std::uint64_t>(t[static_cast<std::size_t>(i)]) << 32;
            for (int j = lo; j < i; ++j)
                acc[row | static_cast<std::uint32_t>(t[static_cast<std::size_t>(j)])] +=
                    static_cast<std::int64_t>(window) + 1 - (i - j);
        }
    }

    std::vector<std::pair<Cell, std::int64_t>> cells;
    cells.reserve(acc.size());
    for (const auto& [key, w] : acc)
        cells.emplace_back(Cell{static_cast<WordId>(key >> 32),
                                static_cast<WordId>(key & 0xffffffffu)},
                           w);
    std::sort(cells.begin(), cells.end());
    return HalMatrix(n, vocab, std::map<Cell, std::int64_t>(cells.begin(), cells.end()));
}

HalMatrix build_hal_parallel(std::span<const Document> documents, int window, VocabPtr vocab,
                             unsigned threads) {
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(
        std::min<std::size_t>(threads, std::max<std::size_t>(1, documents.size())));
    if (threads <= 1 || documents.size() <= 1) return build_hal(documents, window, vocab);

    const std::size_t chunk = (documents.size() + threads - 1) / threads;
    std::vector<std::future<HalMatrix>> parts;
    for (std::size_t begin = 0; begin < documents.size(); begin += chunk) {
        const std::size_t count = std::min(chunk, documents.size() - begin);
        parts.push_back(std::async(std::launch::async, [=, &documents] {
            return build_hal(documents.subspan(begin, count), window, vocab);
        }));
    }
    HalMatrix hal(vocab->size(), vocab);
    for (auto& part : parts) hal.merge(part.get());
    return hal;
}

SemanticSpace symmetrize(const HalMatrix& hal) {
    // mirror every cell, then collapse duplicates in one sorted pass
    std::vector<std::pair<Cell, double>> cells;
    cells.reserve(2 * hal.entries().size());
    for (const auto& [cell, w] : hal.entries()) {
        cells.emplace_back(cell, static_cast<double>(w));
        cells.emplace_back(Cell{cell.second, cell.first}, static_cast<double>(w));
    }
    std::sort(cells.begin(), cells.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<std::pair<Cell, double>> merged;
    merged.reserve(cells.size());
    for (const auto& [cell, w] : cells) {
        if (!merged.empty() && merged.back().first == cell)
            merged.back().second += w;
        else
            merged.emplace_back(cell, w);
    }
    return SemanticSpace(hal.dim(), hal.vocab(),
                         std::map<Cell, double>(merged.begin(), merged.end()));
}

WordVector word_vector(const SemanticSpace& space, WordId w, bool normalize) {
    Vec col = space.column(w);
    if (normalize) {
        const double norm = col.norm();
        if (norm == 0.0)
            throw DegenerateError("word '" + space.vocab()->word(w) +
                                  "' has no co-occurrence data");
        col /= norm;
    }
    return {w, std::move(col)};
}

SemanticSpace trace_space(const Trace& trace, int window, VocabPtr vocab) {
    Document doc{"trace", trace.tokens};
    return symmetrize(build_hal({&doc, 1}, window, std::move(vocab)));
}

SemanticSpace sum_spaces(std::span<const SemanticSpace> spaces) {
    if (spaces.empty()) throw UsageError("cannot sum an empty sequence of spaces");
    SemanticSpace total(spaces.front().dim(), spaces.front().vocab());
    for (const auto& space : spaces) total += space;
    return total;
}

std::vector<Neighbor> nearest_neighbors(const SemanticSpace& space, WordId w, int k) {
    if (k < 1) throw UsageError("k must be >= 1");
    const std::size_t n = space.dim();
    check_index(n, w);

    std::vector<double> norm2(n, 0.0);
    for (const auto& [cell, v] : space.entries()) norm2[static_cast<std::size_t>(cell.second)] += v * v;
    if (norm2[static_cast<std::size_t>(w)] == 0.0)
        throw DegenerateError("word '" + space.vocab()->word(w) + "' has no co-occurrence data");

    // dot(col_w, col_u) = sum_j S[w,j] * S[j,u]; walk the rows named by row w
    std::vector<double> dot(n, 0.0);
    const auto& entries = space.entries();
    auto row_w = entries.lower_bound({w, 0});
    const auto row_w_end = entries.lower_bound({w + 1, 0});
    for (; row_w != row_w_end; ++row_w) {
        const WordId j = row_w->first.second;
        const double s_wj = row_w->second;
        auto it = entries.lower_bound({j, 0});
        const auto end = entries.lower_bound({j + 1, 0});
        for (; it != end; ++it) dot[static_cast<std::size_t>(it->first.second)] += s_wj * it->second;
    }

    std::vector<Neighbor> ranked;
    ranked.reserve(n - 1);
    const double wnorm = std::sqrt(norm2[static_cast<std::size_t>(w)]);
    for (std::size_t u = 0; u < n; ++u) {
        if (static_cast<WordId>(u) == w) continue;
        const double sim = norm2[u] > 0.0 ? dot[u] / (wnorm * std::sqrt(norm2[u])) : 0.0;
        ranked.push_back({static_cast<WordId>(u), sim});
    }
    std::sort(ranked.begin(), ranked.end(), [](const Neighbor& a, const Neighbor& b) {
        if (a.similarity != b.similarity) return a.similarity > b.similarity;
        return a.word < b.word;
    });
    if (ranked.size() > static_cast<std::size_t>(k)) ranked.resize(static_cast<std::size_t>(k));
    return ranked;
}

}  // namespace qss
