#include "fusion/numeric.hpp"

#include <algorithm>
#include <cmath>

namespace fusion {

ComplexVector ComplexMatrix::apply(const ComplexVector& v) const {
    ComplexVector out(n, 0.0);
    for (int i = 0; i < n; ++i) {
        cplx acc = 0.0;
        for (int j = 0; j < n; ++j) acc += at(i, j) * v[j];
        out[i] = acc;
    }
    return out;
}

ComplexMatrix ComplexMatrix::times(const ComplexMatrix& o) const {
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int l = 0; l < n; ++l) {
            cplx f = at(i, l);
            if (f == cplx(0.0)) continue;
            for (int j = 0; j < n; ++j) r.at(i, j) += f * o.at(l, j);
        }
    return r;
}

ComplexMatrix ComplexMatrix::conj_transpose() const {
    ComplexMatrix r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r.at(j, i) = std::conj(at(i, j));
    return r;
}

double ComplexMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& x : a) m = std::max(m, std::abs(x));
    return m;
}

double ComplexMatrix::unitarity_residual() const {
    ComplexMatrix p = times(conj_transpose());
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            cplx expect = (i == j) ? 1.0 : 0.0;
            worst = std::max(worst, std::abs(p.at(i, j) - expect));
        }
    return worst;
}

double ComplexMatrix::symmetry_residual() const {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
    return worst;
}

double norm2(const ComplexVector& v) {
    double s = 0.0;
    for (const auto& x : v) s += std::norm(x);
    return std::sqrt(s);
}

std::vector<double> hermitian_eigenvalues(ComplexMatrix h) {
    const int n = h.n;
    auto off_norm = [&]() {
        double s = 0.0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) s += std::norm(h.at(i, j));
        return std::sqrt(s);
    };
    for (int sweep = 0; sweep < 100 && off_norm() > 1e-14; ++sweep) {
        for (int p = 0; p < n; ++p)
            for (int q = p + 1; q < n; ++q) {
                cplx apq = h.at(p, q);
                double mod = std::abs(apq);
                if (mod < 1e-300) continue;
                double app = h.at(p, p).real();
                double aqq = h.at(q, q).real();
                double tau = (aqq - app) / (2.0 * mod);
                double t = (tau >= 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;
                cplx phase = apq / mod;
                // columns: J_pp = c, J_pq = s*phase, J_qp = -s*conj(phase), J_qq = c
                for (int r = 0; r < n; ++r) {
                    cplx hrp = h.at(r, p);
                    cplx hrq = h.at(r, q);
                    h.at(r, p) = c * hrp - s * std::conj(phase) * hrq;
                    h.at(r, q) = s * phase * hrp + c * hrq;
                }
                for (int r = 0; r < n; ++r) {
                    cplx hpr = h.at(p, r);
                    cplx hqr = h.at(q, r);
                    h.at(p, r) = c * hpr - s * phase * hqr;
                    h.at(q, r) = s * std::conj(phase) * hpr + c * hqr;
                }
            }
    }
    std::vector<double> eig(n);
    for (int i = 0; i < n; ++i) eig[i] = h.at(i, i).real();
    std::sort(eig.begin(), eig.end());
    return eig;
}

double smallest_singular_value(const ComplexMatrix& m) {
    ComplexMatrix h = m.conj_transpose().times(m);
    auto eig = hermitian_eigenvalues(h);
    double low = eig.empty() ? 0.0 : eig.front();
    return low > 0 ? std::sqrt(low) : 0.0;
}

namespace {

void heap_rec(int m, std::vector<int>& perm, int& sign,
              const std::function<void(const std::vector<int>&, int)>& fn) {
    if (m == 1) {
        fn(perm, sign);
        return;
    }
    for (int i = 0; i < m; ++i) {
        heap_rec(m - 1, perm, sign, fn);
        if (i < m - 1) {
            if (m % 2 == 0) std::swap(perm[i], perm[m - 1]);
            else std::swap(perm[0], perm[m - 1]);
            sign = -sign;
        }
    }
}

}  // namespace

void for_each_permutation(int m, const std::function<void(const std::vector<int>&, int)>& fn) {
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = i;
    if (m == 0) {
        fn(perm, 1);
        return;
    }
    int sign = 1;
    heap_rec(m, perm, sign, fn);
}

void parallel_for(std::size_t count, unsigned jobs, const std::function<void(std::size_t)>& fn) {
    if (jobs <= 1 || count < 2) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    unsigned workers = std::min<std::size_t>(jobs, count);
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
        pool.emplace_back([&, w]() {
            for (std::size_t i = w; i < count; i += workers) fn(i);
        });
    }
    for (auto& t : pool) t.join();
}

}  // namespace fusion
