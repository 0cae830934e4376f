#include "qss/collapse.hpp"

#include <algorithm>
#include <cmath>

namespace qss {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kRankTol = 1e-10;

void check_unit(const Vec& v, const char* name) {
    if (v.size() == 0) throw UsageError(std::string(name) + " ket is empty");
    if (std::abs(v.norm() - 1.0) > kUnitTol)
        throw UsageError(std::string(name) + " ket is not unit length");
}

}  // namespace

Probe::Probe(Vec target_ket, Vec cue_ket) : target(std::move(target_ket)), cue(std::move(cue_ket)) {
    check_unit(target, "target");
    check_unit(cue, "cue");
    if (target.size() != cue.size()) throw UsageError("probe ket dimension mismatch");
}

double match_score(const Probe& probe, const DensityState& state) {
    if (static_cast<std::size_t>(probe.cue.size()) != state.dim())
        throw UsageError("probe dimension does not match the density state");
    double score = 0.0;
    for (const auto& s : state.senses())
        score += s.probability * probe.cue.dot(s.state_vector) * s.state_vector.dot(probe.target);
    return score;
}

double collapse_probability(double score) {
    if (std::abs(score) > 1.0 + 1e-9)
        throw DegenerateError("match score " + std::to_string(score) + " out of range [-1, 1]");
    return std::min(score * score, 1.0);
}

ContextBasis select_context_basis(const DensityState& state, const Vec& cue, double epsilon) {
    if (epsilon < 0.0) throw UsageError("epsilon must be >= 0");
    check_unit(cue, "cue");
    if (static_cast<std::size_t>(cue.size()) != state.dim())
        throw UsageError("cue dimension does not match the density state");

    ContextBasis basis;
    basis.activations.reserve(state.senses().size());
    for (int i = 0; i < static_cast<int>(state.senses().size()); ++i) {
        const double cos_theta = cue.dot(state.senses()[static_cast<std::size_t>(i)].state_vector);
        const double a = cos_theta * cos_theta;
        basis.activations.push_back(a);
        if (a > epsilon)
            basis.retained.push_back(i);
        else
            basis.complement.push_back(i);
    }
    if (basis.retained.empty())
        throw DegenerateError("context outside word space: cue activates no sense above epsilon");
    return basis;
}

ObliqueProjector ObliqueProjector::build(const std::vector<Vec>& senses,
                                         const std::vector<int>& retained) {
    const int m = static_cast<int>(senses.size());
    if (m == 0) throw UsageError("projector needs at least one sense");
    const Eigen::Index n = senses.front().size();
    for (const auto& s : senses)
        if (s.size() != n) throw UsageError("sense vector dimension mismatch");
    if (retained.empty()) throw UsageError("projector needs a non-empty retained set");

    std::vector<int> sorted = retained;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
        throw UsageError("duplicate retained sense index");
    if (sorted.front() < 0 || sorted.back() >= m)
        throw UsageError("retained sense index out of range");
    if (static_cast<Eigen::Index>(m) > n)
        throw DegenerateError("more senses than dimensions; senses cannot be linearly independent");

    // rank check in original order so the reported offender is stable
    {
        Mat q(n, m);
        Eigen::Index cols = 0;
        for (int i = 0; i < m; ++i) {
            Vec u = senses[static_cast<std::size_t>(i)];
            u -= q.leftCols(cols) * (q.leftCols(cols).transpose() * u);
            if (u.norm() < kRankTol)
                throw DegenerateError("sense " + std::to_string(i) +
                                      " is linearly dependent on the preceding senses");
            u -= q.leftCols(cols) * (q.leftCols(cols).transpose() * u);
            q.col(cols++) = u / u.norm();
        }
    }

    std::vector<int> complement;
    for (int i = 0; i < m; ++i)
        if (!std::binary_search(sorted.begin(), sorted.end(), i)) complement.push_back(i);

    const int r = static_cast<int>(sorted.size());
    Mat basis(n, m);
    for (int c = 0; c < r; ++c) basis.col(c) = senses[static_cast<std::size_t>(sorted[static_cast<std::size_t>(c)])];
    for (int c = 0; c < m - r; ++c)
        basis.col(r + c) = senses[static_cast<std::size_t>(complement[static_cast<std::size_t>(c)])];

    Mat inverse;
    if (static_cast<Eigen::Index>(m) == n)
        inverse = basis.partialPivLu().inverse();
    else
        inverse = basis.completeOrthogonalDecomposition().pseudoInverse();

    ObliqueProjector p;
    p.matrix_ = basis.leftCols(r) * inverse.topRows(r);
    p.basis_ = std::move(basis);
    p.retained_ = r;
    return p;
}

std::vector<double> rescale_weights(std::span<const double> priors,
                                    std::span<const double> activations) {
    if (priors.size() != activations.size() || priors.empty())
        throw UsageError("priors and activations must be non-empty and equally sized");
    double denom = 0.0;
    for (std::size_t i = 0; i < priors.size(); ++i) denom += priors[i] * activations[i];
    if (!(denom > 0.0)) throw DegenerateError("no sense carries positive weight");
    std::vector<double> weights(priors.size());
    for (std::size_t i = 0; i < priors.size(); ++i) weights[i] = priors[i] * activations[i] / denom;
    return weights;
}

CollapseOutcome collapse(const DensityState& state, const Vec& cue, double epsilon) {
    ContextBasis basis = select_context_basis(state, cue, epsilon);

    std::vector<double> priors, activations;
    priors.reserve(basis.retained.size());
    activations.reserve(basis.retained.size());
    for (int i : basis.retained) {
        priors.push_back(state.senses()[static_cast<std::size_t>(i)].probability);
        activations.push_back(basis.activations[static_cast<std::size_t>(i)]);
    }
    std::vector<double> weights = rescale_weights(priors, activations);

    std::vector<Sense> posterior_senses;
    posterior_senses.reserve(basis.retained.size());
    for (std::size_t r = 0; r < basis.retained.size(); ++r) {
        Sense s = state.senses()[static_cast<std::size_t>(basis.retained[r])];
        s.probability = weights[r];
        posterior_senses.push_back(std::move(s));
    }

    const double match = match_score(Probe(state.target(), cue), state);
    const double probability = collapse_probability(match);
    DensityState posterior =
        DensityState::from_senses(state.word(), std::move(posterior_senses), state.target());
    return CollapseOutcome{match,
                           probability,
                           std::move(posterior),
                           std::move(basis.retained),
                           std::move(activations),
                           std::move(weights)};
}

}  // namespace qss
