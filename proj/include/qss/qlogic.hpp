#pragma once

#include <vector>

#include "qss/errors.hpp"
#include "qss/types.hpp"

namespace qss {

// Orthonormalized linear span: the lattice element behind disjunction.
class Subspace {
public:
    explicit Subspace(Mat basis);  // columns must already be orthonormal

    std::size_t ambient() const noexcept { return static_cast<std::size_t>(basis_.rows()); }
    int dim() const noexcept { return static_cast<int>(basis_.cols()); }
    const Mat& basis() const noexcept { return basis_; }
    bool contains(const Vec& v, double tol = 1e-9) const;

private:
    Mat basis_;
};

// Modified Gram-Schmidt with one re-orthogonalization pass; inputs whose
// residual norm falls below 1e-10 (after normalization) are discarded as
// dependent. At least one nonzero input required.
Subspace span(const std::vector<Vec>& vectors);

// Orthogonal projection B(B^T v); idempotent and self-adjoint.
Vec project(const Vec& v, const Subspace& s);

// Query minus its projection onto span(unwanted), renormalized. The result
// has inner product <= 1e-10 with every unwanted vector. Fails when nothing
// is left after negation.
Vec negate(const Vec& query, const std::vector<Vec>& unwanted);

struct DerivationResult {
    bool derivable = false;
    double residual = 0.0;
};

// residual = ||b - project(b, span(generators))||; derivable iff residual <= tau.
DerivationResult approx_derivable(const Vec& b, const std::vector<Vec>& generators, double tau);

// Lattice conjunction: the nullspace of the stacked complement projectors.
// v lies in the result iff it lies in both inputs at tolerance 1e-9. An
// empty intersection yields a 0-dimensional subspace.
Subspace meet(const Subspace& a, const Subspace& b);

}  // namespace qss
