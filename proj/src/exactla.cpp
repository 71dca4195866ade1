#include "planarlab/exactla.hpp"

#include <cassert>
#include <utility>

namespace planarlab {

namespace {

std::size_t int_bit_length(const BigInt& v) {
    if (v == 0) return 0;
    BigInt a = abs(v);
    return static_cast<std::size_t>(msb(a)) + 1;
}

}  // namespace

RrefResult rref(const ExactMatrix& m) {
    const int rows = m.rows(), cols = m.cols();

    // Clear denominators row by row; echelon structure is unaffected.
    std::vector<std::vector<BigInt>> a(rows, std::vector<BigInt>(cols));
    for (int r = 0; r < rows; ++r) {
        BigInt l = 1;
        for (int c = 0; c < cols; ++c) l = lcm(l, rat_den(m.at(r, c)));
        for (int c = 0; c < cols; ++c) {
            const Rat& v = m.at(r, c);
            a[r][c] = rat_num(v) * (l / rat_den(v));
        }
    }

    // One-step Bareiss forward elimination.
    std::vector<int> pivots;
    BigInt prev = 1;
    int rk = 0;
    for (int c = 0; c < cols && rk < rows; ++c) {
        int best = -1;
        std::size_t best_bits = 0;
        for (int r = rk; r < rows; ++r) {
            if (a[r][c] == 0) continue;
            const std::size_t bits = int_bit_length(a[r][c]);
            if (best < 0 || bits < best_bits) {
                best = r;
                best_bits = bits;
            }
        }
        if (best < 0) continue;
        std::swap(a[rk], a[best]);
        for (int r = rk + 1; r < rows; ++r) {
            for (int j = c + 1; j < cols; ++j) {
                BigInt t = a[rk][c] * a[r][j] - a[r][c] * a[rk][j];
                BigInt quo, rem;
                divide_qr(t, prev, quo, rem);
                assert(rem == 0);
                a[r][j] = std::move(quo);
            }
            a[r][c] = 0;
        }
        prev = a[rk][c];
        pivots.push_back(c);
        ++rk;
    }

    // Rational back-substitution to the reduced form.
    ExactMatrix red(rows, cols);
    for (int r = 0; r < rk; ++r)
        for (int c = 0; c < cols; ++c) red.at(r, c) = Rat(a[r][c]);
    for (int i = rk - 1; i >= 0; --i) {
        const int pc = pivots[i];
        const Rat piv = red.at(i, pc);
        for (int c = pc; c < cols; ++c) red.at(i, c) /= piv;
        for (int r = 0; r < i; ++r) {
            const Rat f = red.at(r, pc);
            if (f == 0) continue;
            for (int c = pc; c < cols; ++c) red.at(r, c) -= f * red.at(i, c);
        }
    }
    return {std::move(red), std::move(pivots)};
}

int rank(const ExactMatrix& m) { return static_cast<int>(rref(m).pivots.size()); }

SubspaceBasis nullspace(const ExactMatrix& m) {
    const int cols = m.cols();
    RrefResult rr = rref(m);
    const int rk = static_cast<int>(rr.pivots.size());

    std::vector<bool> is_pivot(cols, false);
    for (int pc : rr.pivots) is_pivot[pc] = true;

    SubspaceBasis out;
    out.ambient = cols;
    for (int f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[f] = 1;
        for (int i = 0; i < rk; ++i) v[rr.pivots[i]] = -rr.reduced.at(i, f);
        out.basis.push_back(std::move(v));
    }
    return out;
}

std::optional<std::vector<Rat>> solve_in_span(const std::vector<std::vector<Rat>>& vectors,
                                              const std::vector<Rat>& target) {
    const int d = static_cast<int>(vectors.size());
    const int n = static_cast<int>(target.size());
    ExactMatrix aug(n, d + 1);
    for (int j = 0; j < d; ++j) {
        assert(static_cast<int>(vectors[j].size()) == n);
        for (int i = 0; i < n; ++i) aug.at(i, j) = vectors[j][i];
    }
    for (int i = 0; i < n; ++i) aug.at(i, d) = target[i];

    RrefResult rr = rref(aug);
    std::vector<Rat> x(d, Rat(0));
    for (std::size_t i = 0; i < rr.pivots.size(); ++i) {
        if (rr.pivots[i] == d) return std::nullopt;  // inconsistent
        x[rr.pivots[i]] = rr.reduced.at(static_cast<int>(i), d);
    }
    return x;
}

}  // namespace planarlab
