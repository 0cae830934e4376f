#pragma once

#include <span>
#include <vector>

#include "qss/state.hpp"

namespace qss {

// Cued-recall probe |target><cue|. Both kets unit length.
struct Probe {
    Vec target;
    Vec cue;

    Probe(Vec target_ket, Vec cue_ket);
};

// <cue| rho |target> = sum_i p_i <cue|e_i><e_i|target>. Magnitude <= 1 for
// unit inputs.
double match_score(const Probe& probe, const DensityState& state);

// Squared match score, the amplitude-to-probability map. Result in [0, 1].
double collapse_probability(double score);

struct ContextBasis {
    std::vector<int> retained;        // ascending sense indices with a_i > epsilon
    std::vector<int> complement;      // the rest, ascending
    std::vector<double> activations;  // a_i = <cue|e_i>^2 for every sense
};

// Empty retained set is an error: the cue lies outside the word's space.
ContextBasis select_context_basis(const DensityState& state, const Vec& cue, double epsilon);

// P = B diag(I_r, 0) B^-1 with B = [X|Y] (pseudo-inverse when m < n). Fixes
// the retained kets, annihilates the complementary ones and everything
// orthogonal to span(B). Idempotent but generally not self-adjoint.
class ObliqueProjector {
public:
    static ObliqueProjector build(const std::vector<Vec>& senses,
                                  const std::vector<int>& retained);

    const Mat& matrix() const noexcept { return matrix_; }
    const Mat& basis() const noexcept { return basis_; }  // retained columns first
    int retained_count() const noexcept { return retained_; }
    Vec apply(const Vec& v) const { return matrix_ * v; }

private:
    ObliqueProjector() = default;

    Mat basis_;
    int retained_ = 0;
    Mat matrix_;
};

// Posterior weights p_i' = p_i a_i / sum_j p_j a_j.
std::vector<double> rescale_weights(std::span<const double> priors,
                                    std::span<const double> activations);

struct CollapseOutcome {
    double match = 0.0;        // <cue|rho|target>
    double probability = 0.0;  // collapse_probability(match)
    DensityState posterior;
    std::vector<int> retained;        // indices into the prior state's senses
    std::vector<double> activations;  // a_i for the retained senses
    std::vector<double> weights;      // p_i' for the retained senses
};

// Selects the context basis, reweights the retained senses into a fresh
// density state and scores the probe formed from the state's own target ket.
//
// The posterior is the reweighted mixture over the retained senses, which is
// a density state by construction. An alternative would apply the raw probe
// |target><cue| to rho and rescale by f(<cue|rho|target>); that form is not
// guaranteed to stay positive semidefinite, so it is not used here.
CollapseOutcome collapse(const DensityState& state, const Vec& cue, double epsilon);

}  // namespace qss
