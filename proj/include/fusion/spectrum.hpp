#pragma once

#include "fusion/numeric.hpp"
#include "fusion/partition.hpp"
#include "fusion/plactic.hpp"
#include "fusion/tolerances.hpp"

namespace fusion {

// Explicit solution of the Bethe equations attached to a partition sigma
// in the (n-1) x k box, at z = 1. Roots are unimodular.
struct BetheRoots {
    Partition sigma;
    std::vector<cplx> roots;
};

BetheRoots bethe_roots(const Partition& sigma, const FusionContext& ctx);

// max_i |x_i^{n+k} - (-1)^{k-1} prod_j x_j|
double bae_residual(const std::vector<cplx>& roots, const FusionContext& ctx);

enum class BetheVectorMethod { b_operator, s_matrix };

// Bethe vector over the level-k basis. The b_operator method applies
// B(u) = u A(u) phi_1^* at the conjugated roots to the level-0 vacuum;
// the s_matrix method expands through the modular S-matrix. The two agree
// after the B-route vector is rescaled to a real positive vacuum component.
ComplexVector bethe_vector(const Partition& sigma, const FusionContext& ctx,
                           BetheVectorMethod method);

// Idempotent of the fusion algebra: the Bethe vector normalized by its
// squared norm.
ComplexVector bethe_idempotent(const Partition& sigma, const FusionContext& ctx);

// Relative residual of the eigenvalue equation for the degree-r affine
// plactic polynomial on the Bethe vector of sigma.
double eigen_check(const Partition& sigma, int r, PolyKind kind, const FusionContext& ctx);

// S-matrix assembled from B-operator Bethe vectors; agrees with the
// Kac-Peterson matrix within tol.smatrix_cross.
ComplexMatrix s_matrix_from_bethe(const FusionContext& ctx);

}  // namespace fusion
