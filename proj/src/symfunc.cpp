#include "fusion/symfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace fusion {

namespace {

// Adds the boxes of mu to lambda letter by letter. Letter i is placed as a
// horizontal strip; the lattice-word condition becomes the prefix-count
// constraint: after placing letter i in rows <= r, its count must not
// exceed the count of letter i-1 in rows <= r-1.
struct LrEnumerator {
    std::vector<int> shape;       // current shape, padded with zeros
    std::vector<std::vector<int>> placed;  // placed[letter][row] = boxes of this letter in row
    const std::vector<int>& mu;
    SchurExpansion out;

    explicit LrEnumerator(const Partition& lambda, const Partition& muArg,
                          const std::vector<int>& muParts)
        : mu(muParts) {
        int rows = lambda.length() + muArg.length();
        shape.assign(rows, 0);
        for (int i = 1; i <= lambda.length(); ++i) shape[i - 1] = lambda.part(i);
        placed.assign(mu.size() + 1, std::vector<int>(rows, 0));
    }

    void run() { place_letter(1); }

    void place_letter(int letter) {
        if (letter > static_cast<int>(mu.size())) {
            std::vector<int> final_shape = shape;
            out.add(Partition(std::move(final_shape)), BigInt(1));
            return;
        }
        // snapshot of the shape before this letter; rows of the strip are
        // bounded against it
        std::vector<int> base = shape;
        // letter i cannot sit above row `letter` (rows are 1-based)
        place_in_row(letter, letter, mu[letter - 1], 0, base);
    }

    // cum_i = letter boxes already placed in rows < row
    void place_in_row(int letter, int row, int remaining, int cum_i,
                      const std::vector<int>& base) {
        if (remaining == 0) {
            place_letter(letter + 1);
            return;
        }
        if (row > static_cast<int>(shape.size())) return;
        // horizontal strip bound: new shape[row] <= base[row-1] (previous shape)
        int lo = 0;
        int hi = (row == 1) ? remaining : std::min(remaining, base[row - 2] - base[row - 1]);
        // lattice condition: cum_i + add <= (letter-1 boxes in rows <= row-1)
        if (letter >= 2) {
            int above = 0;
            for (int r = 0; r < row - 1; ++r) above += placed[letter - 1][r];
            hi = std::min(hi, above - cum_i);
        }
        for (int add = lo; add <= hi; ++add) {
            shape[row - 1] = base[row - 1] + add;
            placed[letter][row - 1] = add;
            place_in_row(letter, row + 1, remaining - add, cum_i + add, base);
            placed[letter][row - 1] = 0;
            shape[row - 1] = base[row - 1];
        }
    }
};

}  // namespace

SchurExpansion lr_expand(const Partition& lambda, const Partition& mu) {
    if (mu.empty()) {
        SchurExpansion e;
        e.add(lambda, BigInt(1));
        return e;
    }
    std::vector<int> muParts = mu.parts();
    LrEnumerator en(lambda, mu, muParts);
    en.run();
    return std::move(en.out);
}

SignedPartition straighten(const std::vector<int>& alpha) {
    for (int a : alpha)
        if (a < 0) throw std::invalid_argument("straighten: entries must be nonnegative");
    const int len = static_cast<int>(alpha.size());
    std::vector<int> beta(len);
    for (int i = 0; i < len; ++i) beta[i] = alpha[i] + (len - 1 - i);

    // selection sort into descending order, tracking the permutation sign
    int sign = 1;
    std::vector<int> b = beta;
    for (int i = 0; i < len; ++i) {
        int best = i;
        for (int j = i + 1; j < len; ++j)
            if (b[j] > b[best]) best = j;
        if (best != i) {
            std::swap(b[i], b[best]);
            sign = -sign;
        }
    }
    for (int i = 0; i + 1 < len; ++i)
        if (b[i] == b[i + 1]) return SignedPartition{0, Partition{}};

    std::vector<int> nu(len);
    for (int i = 0; i < len; ++i) nu[i] = b[i] - (len - 1 - i);
    return SignedPartition{sign, Partition(std::move(nu))};
}

namespace {

// complete homogeneous evaluations h_0..h_max at the given points
std::vector<std::complex<double>> complete_evals(const std::vector<std::complex<double>>& x,
                                                 int max_degree) {
    std::vector<std::complex<double>> h(max_degree + 1, 0.0);
    h[0] = 1.0;
    for (const auto& xi : x)
        for (int r = 1; r <= max_degree; ++r) h[r] += xi * h[r - 1];
    return h;
}

}  // namespace

std::complex<double> schur_evaluate(const Partition& lambda,
                                    const std::vector<std::complex<double>>& points) {
    const int ell = lambda.length();
    const int m = static_cast<int>(points.size());
    if (ell > m) return 0.0;
    if (ell == 0) return 1.0;
    auto h = complete_evals(points, lambda.part(1) + ell);

    // det(h_{lambda_i - i + j}) by Gaussian elimination with partial pivoting
    std::vector<std::vector<std::complex<double>>> a(ell, std::vector<std::complex<double>>(ell));
    for (int i = 0; i < ell; ++i)
        for (int j = 0; j < ell; ++j) {
            int d = lambda.part(i + 1) - (i + 1) + (j + 1);
            a[i][j] = (d < 0) ? 0.0 : h[d];
        }
    std::complex<double> det = 1.0;
    for (int col = 0; col < ell; ++col) {
        int piv = col;
        for (int r = col + 1; r < ell; ++r)
            if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
        if (std::abs(a[piv][col]) == 0.0) return 0.0;
        if (piv != col) {
            std::swap(a[piv], a[col]);
            det = -det;
        }
        det *= a[col][col];
        for (int r = col + 1; r < ell; ++r) {
            std::complex<double> f = a[r][col] / a[col][col];
            for (int c = col; c < ell; ++c) a[r][c] -= f * a[col][c];
        }
    }
    return det;
}

std::map<std::vector<int>, BigInt> schur_monomials(const Partition& lambda, int nvars) {
    std::map<std::vector<int>, BigInt> out;
    if (lambda.length() > nvars) return out;
    if (lambda.empty()) {
        out[std::vector<int>(nvars, 0)] = BigInt(1);
        return out;
    }
    // fill row by row with weakly increasing entries, strictly increasing
    // down columns; record content vectors
    int rows = lambda.length();
    std::vector<std::vector<int>> fill(rows);
    for (int i = 0; i < rows; ++i) fill[i].assign(lambda.part(i + 1), 0);
    std::vector<int> content(nvars, 0);

    auto rec = [&](auto&& self, int r, int c) -> void {
        if (r == rows) {
            out[content] += BigInt(1);
            if (out[content].is_zero()) out.erase(content);
            return;
        }
        int nr = r, nc = c + 1;
        if (nc >= static_cast<int>(fill[r].size())) { nr = r + 1; nc = 0; }
        int lo = 1;
        if (c > 0) lo = std::max(lo, fill[r][c - 1]);
        if (r > 0 && c < static_cast<int>(fill[r - 1].size())) lo = std::max(lo, fill[r - 1][c] + 1);
        for (int v = lo; v <= nvars; ++v) {
            fill[r][c] = v;
            ++content[v - 1];
            self(self, nr, nc);
            --content[v - 1];
        }
    };
    rec(rec, 0, 0);
    return out;
}

}  // namespace fusion
