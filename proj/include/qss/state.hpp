#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "qss/hal.hpp"

namespace qss {

// One basis state of a word's meaning. probability is 0 until the sense is
// placed in a mixture.
struct Sense {
    std::string label;
    double probability = 0.0;
    Vec state_vector;  // unit length
    std::size_t trace_count = 0;
};

// Probability mixture rho = sum_i p_i |e_i><e_i| over named senses; trace-1,
// PSD, symmetric. The sense kets need not be orthogonal. target is the
// word's own unit ket (normalized w-column of the summed trace space), kept
// so probes can be formed from the state alone.
class DensityState {
public:
    static DensityState from_senses(WordId word, std::vector<Sense> senses, Vec target);

    WordId word() const noexcept { return word_; }
    const std::vector<Sense>& senses() const noexcept { return senses_; }
    const Mat& rho() const noexcept { return rho_; }
    const Vec& target() const noexcept { return target_; }
    std::size_t dim() const noexcept { return static_cast<std::size_t>(target_.size()); }

    struct Validity {
        double probability_sum_error;  // |sum p_i - 1|
        double trace_error;            // |tr(rho) - 1|
        double asymmetry;              // max |rho - rho^T|
        double min_eigenvalue;
        double reconstruction_error;   // max |rho - sum p_i e_i e_i^T|
        bool ok() const;
    };
    Validity validate() const;

private:
    DensityState() = default;

    WordId word_ = -1;
    std::vector<Sense> senses_;
    Mat rho_;
    Vec target_;
};

struct LabelledTraces {
    std::string label;
    std::vector<Trace> traces;
};

// S_i = sum of the trace spaces; the sense ket is the normalized w-column of
// S_i. probability is left unset for the caller to fill.
std::pair<Sense, SemanticSpace> sense_from_traces(std::span<const Trace> traces, WordId w,
                                                  int window, std::string label, VocabPtr vocab);

// p_i = |part i| / total traces; rho assembled from the per-part sense kets.
DensityState build_density_state(WordId w, std::span<const LabelledTraces> partition, int window,
                                 VocabPtr vocab);

// Each trace joins the part of the first cue it contains, the remainder goes
// to "other"; empty parts are dropped.
std::vector<LabelledTraces> partition_by_cues(std::span<const Trace> traces,
                                              std::span<const WordId> cues, VocabPtr vocab);

// Spherical k-means over the normalized trace center columns. Seeded
// farthest-point initialization, ties broken by index; deterministic for
// fixed inputs and seed. Rejects k larger than the number of distinct
// vectors.
std::vector<LabelledTraces> partition_kmeans(std::span<const Trace> traces, int k,
                                             std::uint64_t seed, int window, VocabPtr vocab);

// Top-k eigenpairs by descending eigenvalue; eigenvectors orthonormal with
// the first nonzero component positive.
std::vector<std::pair<double, Vec>> spectral_decompose(const SemanticSpace& space, int k);

}  // namespace qss
