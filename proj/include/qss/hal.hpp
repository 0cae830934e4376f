#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "qss/corpus.hpp"
#include "qss/types.hpp"

namespace qss {

using Cell = std::pair<WordId, WordId>;

// Directed co-occurrence accumulator: entries[(i,j)] is the accumulated
// weight of word j seen before word i in a window. Zero cells are absent and
// weights stay integral.
class HalMatrix {
public:
    HalMatrix(std::size_t n, VocabPtr vocab);
    HalMatrix(std::size_t n, VocabPtr vocab, std::map<Cell, std::int64_t> entries);

    std::size_t dim() const noexcept { return n_; }
    const VocabPtr& vocab() const noexcept { return vocab_; }
    std::int64_t at(WordId i, WordId j) const;
    void add(WordId i, WordId j, std::int64_t w);
    void merge(const HalMatrix& other);  // additive, exact
    std::size_t nonzero_count() const noexcept { return entries_.size(); }
    const std::map<Cell, std::int64_t>& entries() const noexcept { return entries_; }

private:
    std::size_t n_;
    VocabPtr vocab_;
    std::map<Cell, std::int64_t> entries_;
};

// Symmetric association space S = H + H^T. Both (i,j) and (j,i) are stored;
// values are integral until a caller normalizes a vector.
class SemanticSpace {
public:
    SemanticSpace(std::size_t n, VocabPtr vocab);
    SemanticSpace(std::size_t n, VocabPtr vocab, std::map<Cell, double> entries);

    std::size_t dim() const noexcept { return n_; }
    const VocabPtr& vocab() const noexcept { return vocab_; }
    double at(WordId i, WordId j) const;
    void add(WordId i, WordId j, double v);
    SemanticSpace& operator+=(const SemanticSpace& other);
    Vec column(WordId w) const;
    Mat dense() const;
    std::size_t nonzero_count() const noexcept { return entries_.size(); }
    const std::map<Cell, double>& entries() const noexcept { return entries_; }

private:
    std::size_t n_;
    VocabPtr vocab_;
    std::map<Cell, double> entries_;
};

struct WordVector {
    WordId word = -1;
    Vec components;
};

struct Neighbor {
    WordId word;
    double similarity;
};

// Sliding-window accumulation: within each document, position i receives
// weight window+1-(i-j) from every position j in [i-window, i-1]. Windows do
// not cross document boundaries.
HalMatrix build_hal(std::span<const Document> documents, int window, VocabPtr vocab);

// Chunked per-thread accumulation with additive merge; the result is
// identical to the sequential build (integer addition commutes).
HalMatrix build_hal_parallel(std::span<const Document> documents, int window, VocabPtr vocab,
                             unsigned threads = 0);

SemanticSpace symmetrize(const HalMatrix& hal);

// Column w of S, optionally scaled to unit length. Normalizing an all-zero
// column is an error: the word has no co-occurrence data.
WordVector word_vector(const SemanticSpace& space, WordId w, bool normalize);

// The trace treated as a one-document corpus, built and symmetrized.
SemanticSpace trace_space(const Trace& trace, int window, VocabPtr vocab);

// Entrywise sum; order-independent.
SemanticSpace sum_spaces(std::span<const SemanticSpace> spaces);

// Top-k by cosine of normalized columns, self excluded, ties broken by
// ascending index. Words whose column is all zero rank with similarity 0.
std::vector<Neighbor> nearest_neighbors(const SemanticSpace& space, WordId w, int k);

}  // namespace qss
