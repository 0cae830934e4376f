#include "qss/state.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace qss {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kProbTol = 1e-9;

Mat mixture_matrix(const std::vector<Sense>& senses, Eigen::Index n) {
    Mat rho = Mat::Zero(n, n);
    for (const auto& s : senses) rho += s.probability * (s.state_vector * s.state_vector.transpose());
    return rho;
}

}  // namespace

DensityState DensityState::from_senses(WordId word, std::vector<Sense> senses, Vec target) {
    if (senses.empty()) throw UsageError("density state needs at least one sense");
    const Eigen::Index n = senses.front().state_vector.size();
    if (n == 0) throw UsageError("sense vectors must be non-empty");
    double sum = 0.0;
    for (const auto& s : senses) {
        if (s.state_vector.size() != n) throw UsageError("sense vector dimension mismatch");
        if (!(s.probability > 0.0))
            throw UsageError("sense '" + s.label + "' has non-positive probability");
        if (std::abs(s.state_vector.norm() - 1.0) > kUnitTol)
            throw UsageError("sense '" + s.label + "' state vector is not unit length");
        sum += s.probability;
    }
    if (std::abs(sum - 1.0) > kProbTol)
        throw UsageError("sense probabilities sum to " + std::to_string(sum) + ", expected 1");
    if (target.size() != n) throw UsageError("target ket dimension mismatch");
    if (std::abs(target.norm() - 1.0) > kUnitTol)
        throw UsageError("target ket is not unit length");

    DensityState state;
    state.word_ = word;
    state.rho_ = mixture_matrix(senses, n);
    state.senses_ = std::move(senses);
    state.target_ = std::move(target);
    return state;
}

bool DensityState::Validity::ok() const {
    return probability_sum_error <= 1e-9 && trace_error <= 1e-9 && asymmetry <= 1e-9 &&
           min_eigenvalue >= -1e-9 && reconstruction_error <= 1e-9;
}

DensityState::Validity DensityState::validate() const {
    Validity v{};
    double sum = 0.0;
    for (const auto& s : senses_) sum += s.probability;
    v.probability_sum_error = std::abs(sum - 1.0);
    v.trace_error = std::abs(rho_.trace() - 1.0);
    v.asymmetry = (rho_ - rho_.transpose()).cwiseAbs().maxCoeff();
    Eigen::SelfAdjointEigenSolver<Mat> es(rho_, Eigen::EigenvaluesOnly);
    v.min_eigenvalue = es.eigenvalues().minCoeff();
    v.reconstruction_error = (rho_ - mixture_matrix(senses_, rho_.rows())).cwiseAbs().maxCoeff();
    return v;
}

std::pair<Sense, SemanticSpace> sense_from_traces(std::span<const Trace> traces, WordId w,
                                                  int window, std::string label, VocabPtr vocab) {
    if (traces.empty()) throw UsageError("sense '" + label + "' has no traces");
    SemanticSpace acc(vocab->size(), vocab);
    for (const auto& trace : traces) {
        if (trace.center_word != w)
            throw UsageError("sense '" + label + "' contains a trace not centred on '" +
                             vocab->word(w) + "'");
        acc += trace_space(trace, window, vocab);
    }
    Vec col = acc.column(w);
    const double norm = col.norm();
    if (norm == 0.0)
        throw DegenerateError("sense '" + label + "': word '" + vocab->word(w) +
                              "' has no co-occurrences in its traces");
    Sense sense;
    sense.label = std::move(label);
    sense.state_vector = col / norm;
    sense.trace_count = traces.size();
    return {std::move(sense), std::move(acc)};
}

DensityState build_density_state(WordId w, std::span<const LabelledTraces> partition, int window,
                                 VocabPtr vocab) {
    std::size_t total = 0;
    for (const auto& part : partition) {
        if (part.traces.empty()) throw UsageError("empty part '" + part.label + "'");
        total += part.traces.size();
    }
    if (total == 0) throw UsageError("no traces to build a density state from");

    std::vector<Sense> senses;
    senses.reserve(partition.size());
    SemanticSpace summed(vocab->size(), vocab);
    for (const auto& part : partition) {
        auto [sense, space] = sense_from_traces(part.traces, w, window, part.label, vocab);
        sense.probability = static_cast<double>(part.traces.size()) / static_cast<double>(total);
        senses.push_back(std::move(sense));
        summed += space;
    }
    Vec target = summed.column(w);
    target /= target.norm();  // nonzero: every part contributed a nonzero column
    return DensityState::from_senses(w, std::move(senses), std::move(target));
}

std::vector<LabelledTraces> partition_by_cues(std::span<const Trace> traces,
                                              std::span<const WordId> cues, VocabPtr vocab) {
    std::vector<LabelledTraces> parts;
    parts.reserve(cues.size() + 1);
    for (WordId cue : cues) parts.push_back({vocab->word(cue), {}});
    parts.push_back({"other", {}});

    for (const auto& trace : traces) {
        std::size_t slot = cues.size();  // "other"
        for (std::size_t c = 0; c < cues.size(); ++c) {
            if (trace.contains(cues[c])) {
                slot = c;
                break;
            }
        }
        parts[slot].traces.push_back(trace);
    }
    std::erase_if(parts, [](const LabelledTraces& p) { return p.traces.empty(); });
    return parts;
}

std::vector<LabelledTraces> partition_kmeans(std::span<const Trace> traces, int k,
                                             std::uint64_t seed, int window, VocabPtr vocab) {
    if (k < 1) throw UsageError("k must be >= 1");
    if (traces.empty()) throw UsageError("no traces to cluster");
    const std::size_t count = traces.size();

    std::vector<Vec> points;
    points.reserve(count);
    for (const auto& trace : traces) {
        Vec col = trace_space(trace, window, vocab).column(trace.center_word);
        const double norm = col.norm();
        if (norm > 0.0) col /= norm;
        points.push_back(std::move(col));
    }

    // distinct vectors, exact comparison
    std::vector<std::size_t> order(count);
    std::iota(order.begin(), order.end(), 0);
    auto less = [&](std::size_t a, std::size_t b) {
        return std::lexicographical_compare(points[a].data(), points[a].data() + points[a].size(),
                                            points[b].data(), points[b].data() + points[b].size());
    };
    auto equal = [&](std::size_t a, std::size_t b) { return points[a] == points[b]; };
    std::sort(order.begin(), order.end(), less);
    std::size_t distinct = count == 0 ? 0 : 1;
    for (std::size_t i = 1; i < count; ++i)
        if (!equal(order[i - 1], order[i])) ++distinct;
    if (static_cast<std::size_t>(k) > distinct)
        throw DegenerateError("k=" + std::to_string(k) + " exceeds the " +
                              std::to_string(distinct) + " distinct trace vectors");

    // farthest-point initialization, first pick seeded
    std::mt19937_64 rng(seed);
    std::vector<Vec> centers;
    centers.reserve(static_cast<std::size_t>(k));
    centers.push_back(points[static_cast<std::size_t>(rng() % count)]);
    while (centers.size() < static_cast<std::size_t>(k)) {
        std::size_t best = 0;
        double best_sim = 2.0;
        for (std::size_t t = 0; t < count; ++t) {
            double sim = -2.0;
            for (const auto& c : centers) sim = std::max(sim, points[t].dot(c));
            if (sim < best_sim) {
                best_sim = sim;
                best = t;
            }
        }
        centers.push_back(points[best]);
    }

    std::vector<int> assign(count, 0);
    for (int iter = 0; iter < 100; ++iter) {
        std::vector<int> next(count, 0);
        for (std::size_t t = 0; t < count; ++t) {
            double best_sim = -2.0;
            int best_c = 0;
            for (int c = 0; c < k; ++c) {
                const double sim = points[t].dot(centers[static_cast<std::size_t>(c)]);
                if (sim > best_sim) {
                    best_sim = sim;
                    best_c = c;
                }
            }
            next[t] = best_c;
        }
        std::vector<std::size_t> sizes(static_cast<std::size_t>(k), 0);
        for (int c : next) ++sizes[static_cast<std::size_t>(c)];
        // refill emptied clusters with the point farthest from its own center
        for (int c = 0; c < k; ++c) {
            if (sizes[static_cast<std::size_t>(c)] > 0) continue;
            std::size_t worst = count;
            double worst_sim = 2.0;
            for (std::size_t t = 0; t < count; ++t) {
                if (sizes[static_cast<std::size_t>(next[t])] <= 1) continue;
                const double sim = points[t].dot(centers[static_cast<std::size_t>(next[t])]);
                if (sim < worst_sim) {
                    worst_sim = sim;
                    worst = t;
                }
            }
            if (worst == count) continue;
            --sizes[static_cast<std::size_t>(next[worst])];
            next[worst] = c;
            ++sizes[static_cast<std::size_t>(c)];
        }
        const bool stable = next == assign && iter > 0;
        assign = std::move(next);
        for (int c = 0; c < k; ++c) {
            Vec sum = Vec::Zero(points.front().size());
            for (std::size_t t = 0; t < count; ++t)
                if (assign[t] == c) sum += points[t];
            const double norm = sum.norm();
            if (norm > 0.0) centers[static_cast<std::size_t>(c)] = sum / norm;
        }
        if (stable) break;
    }

    std::vector<LabelledTraces> parts(static_cast<std::size_t>(k));
    for (int c = 0; c < k; ++c) parts[static_cast<std::size_t>(c)].label = "cluster-" + std::to_string(c);
    for (std::size_t t = 0; t < count; ++t)
        parts[static_cast<std::size_t>(assign[t])].traces.push_back(traces[t]);
    return parts;
}

std::vector<std::pair<double, Vec>> spectral_decompose(const SemanticSpace& space, int k) {
    const Eigen::Index n = static_cast<Eigen::Index>(space.dim());
    if (k < 1 || static_cast<Eigen::Index>(k) > n)
        throw UsageError("k must be in [1, " + std::to_string(n) + "]");

    Eigen::SelfAdjointEigenSolver<Mat> es(space.dense());
    if (es.info() != Eigen::Success)
        throw DegenerateError("eigendecomposition failed to converge");

    std::vector<std::pair<double, Vec>> pairs;
    pairs.reserve(static_cast<std::size_t>(k));
    for (int r = 0; r < k; ++r) {
        const Eigen::Index idx = n - 1 - r;  // solver returns ascending order
        Vec v = es.eigenvectors().col(idx);
        const double scale = v.cwiseAbs().maxCoeff();
        for (Eigen::Index i = 0; i < n; ++i) {
            if (std::abs(v[i]) > 1e-12 * std::max(1.0, scale)) {
                if (v[i] < 0.0) v = -v;
                break;
            }
        }
        pairs.emplace_back(es.eigenvalues()[idx], std::move(v));
    }
    return pairs;
}

}  // namespace qss
