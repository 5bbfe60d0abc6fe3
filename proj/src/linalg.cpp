#include "torsec/linalg.hpp"

#include <stdexcept>

namespace torsec {

LinearSolveResult solve_linear_system(QMatrix a, std::vector<Rat> b) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows)
        throw std::invalid_argument("solve_linear_system: size mismatch");

    std::vector<std::size_t> pivot_col;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        Rat inv = 1 / a[r][c];
        for (std::size_t j = c; j < cols; ++j) a[r][j] *= inv;
        b[r] *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0) continue;
            Rat f = a[i][c];
            for (std::size_t j = c; j < cols; ++j) a[i][j] -= f * a[r][j];
            b[i] -= f * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }

    LinearSolveResult res;
    res.rank = r;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0) {
            res.consistent = false;
            return res;
        }

    res.particular.assign(cols, Rat(0));
    for (std::size_t i = 0; i < r; ++i) res.particular[pivot_col[i]] = b[i];

    std::vector<bool> is_pivot(cols, false);
    for (std::size_t c : pivot_col) is_pivot[c] = true;
    for (std::size_t c = 0; c < cols; ++c) {
        if (is_pivot[c]) continue;
        std::vector<Rat> v(cols, Rat(0));
        v[c] = 1;
        for (std::size_t i = 0; i < r; ++i) v[pivot_col[i]] = -a[i][c];
        res.nullspace.push_back(std::move(v));
    }
    res.unique = res.nullspace.empty();
    return res;
}

Rat determinant(const QMatrix& a) {
    const std::size_t n = a.size();
    if (n == 0) return Rat(1);
    for (const auto& row : a)
        if (row.size() != n)
            throw std::invalid_argument("determinant: matrix not square");

    // Clear denominators per row; remember the combined scale.
    std::vector<std::vector<Int>> m(n, std::vector<Int>(n));
    Int scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Int l = 1;
        for (std::size_t j = 0; j < n; ++j)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a[i][j].get_den_mpz_t());
        for (std::size_t j = 0; j < n; ++j) {
            Rat scaled = a[i][j] * Rat(l);
            m[i][j] = scaled.get_num();  // exact: den divides l
        }
        scale *= l;
    }

    // Bareiss: every division below is exact.
    int sign = 1;
    Int prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k] == 0) {
            std::size_t p = k + 1;
            while (p < n && m[p][k] == 0) ++p;
            if (p == n) return Rat(0);
            std::swap(m[p], m[k]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                Int t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][k] = 0;
        }
        prev = m[k][k];
    }
    return rat(sign * m[n - 1][n - 1], scale);
}

}  // namespace torsec
