#pragma once

namespace fusion {

// Central numeric tolerance record. Integer identities use none of these.
struct Tolerances {
    double unitarity = 1e-9;       // S S^dagger = 1, symmetry of S
    double verlinde_round = 1e-6;  // Verlinde sums to nearest integer
    double spectral = 1e-8;        // eigenvalue / idempotency / vector residuals
    double bae = 1e-9;             // Bethe equation residual
    double smatrix_cross = 1e-7;   // S from Bethe vectors vs Kac-Peterson
    double qdim = 1e-9;            // quantum dimension cross-checks
    double completeness = 1e-8;    // smallest singular value bound
};

inline const Tolerances& default_tolerances() {
    static const Tolerances t;
    return t;
}

}  // namespace fusion
