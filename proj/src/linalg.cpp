#include "voaforge/linalg.hpp"

namespace voaforge {

size_t bareiss_rank(IntMat m) {
    const size_t rows = m.size();
    if (rows == 0) return 0;
    const size_t cols = m[0].size();
    mpz_class prev = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && m[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(m[piv], m[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j) {
                mpz_class t = m[r][c] * m[i][j] - m[i][c] * m[r][j];
                mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return r;
}

IntMat to_integer_rows(const QMat& m) {
    IntMat out;
    out.reserve(m.size());
    for (const auto& row : m) {
        mpz_class l = 1;
        for (const auto& x : row) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.den().get_mpz_t());
        std::vector<mpz_class> ir;
        ir.reserve(row.size());
        for (const auto& x : row) ir.push_back(x.num() * (l / x.den()));
        out.push_back(std::move(ir));
    }
    return out;
}

size_t rank(const QMat& m) { return bareiss_rank(to_integer_rows(m)); }

QMat nullspace(const QMat& m, size_t ncols) {
    QMat a = m;
    std::vector<size_t> pivots;
    size_t r = 0;
    for (size_t c = 0; c < ncols && r < a.size(); ++c) {
        size_t piv = r;
        while (piv < a.size() && a[piv][c].is_zero()) ++piv;
        if (piv == a.size()) continue;
        std::swap(a[piv], a[r]);
        Rat f = Rat(1) / a[r][c];
        for (size_t j = c; j < ncols; ++j) a[r][j] *= f;
        for (size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            Rat g = a[i][c];
            for (size_t j = c; j < ncols; ++j)
                if (!a[r][j].is_zero()) a[i][j] -= g * a[r][j];
        }
        pivots.push_back(c);
        ++r;
    }
    std::vector<bool> is_pivot(ncols, false);
    for (size_t c : pivots) is_pivot[c] = true;
    QMat basis;
    for (size_t fcol = 0; fcol < ncols; ++fcol) {
        if (is_pivot[fcol]) continue;
        std::vector<Rat> v(ncols, Rat(0));
        v[fcol] = Rat(1);
        for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][fcol];
        basis.push_back(std::move(v));
    }
    return basis;
}

} // namespace voaforge
