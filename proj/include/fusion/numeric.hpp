#pragma once

#include <complex>
#include <functional>
#include <thread>
#include <vector>

namespace fusion {

using cplx = std::complex<double>;
using ComplexVector = std::vector<cplx>;

// Dense square complex matrix indexed by a fusion-context basis order.
struct ComplexMatrix {
    int n = 0;
    std::vector<cplx> a;

    ComplexMatrix() = default;
    explicit ComplexMatrix(int size) : n(size), a(static_cast<size_t>(size) * size, 0.0) {}

    cplx& at(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    const cplx& at(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }

    ComplexVector apply(const ComplexVector& v) const;
    ComplexMatrix times(const ComplexMatrix& o) const;
    ComplexMatrix conj_transpose() const;

    double max_abs() const;
    // max |(A A^dagger - I)_{ij}|
    double unitarity_residual() const;
    // max |A_{ij} - A_{ji}|
    double symmetry_residual() const;
};

double norm2(const ComplexVector& v);

// Eigenvalues of a Hermitian matrix by cyclic complex Jacobi rotations,
// ascending order.
std::vector<double> hermitian_eigenvalues(ComplexMatrix h);

// Smallest singular value of a general square complex matrix.
double smallest_singular_value(const ComplexMatrix& m);

// Calls fn(perm, sign) for every permutation of {0,...,m-1} (Heap's
// algorithm; each transposition flips the sign).
void for_each_permutation(int m, const std::function<void(const std::vector<int>&, int)>& fn);

// Chunked parallel loop; fn(i) must only write to slot i of its outputs.
void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn);

}  // namespace fusion
