#pragma once

#include <cstddef>
#include <utility>
#include <vector>

// Exact Gaussian elimination over any field type with +, -, *, inverse(),
// is_zero(). The field's zero is passed explicitly because cyclotomic
// scalars carry their order.

namespace qsolv::linalg {

template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
struct Echelon {
    Matrix<F> rows;            // reduced row echelon form, zero rows dropped
    std::vector<int> pivots;   // pivot column of each row
};

template <class F>
Echelon<F> rref(Matrix<F> a, std::size_t ncols) {
    Echelon<F> out;
    std::size_t r = 0;
    for (std::size_t c = 0; c < ncols && r < a.size(); ++c) {
        std::size_t p = r;
        while (p < a.size() && a[p][c].is_zero()) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[r]);
        F inv = a[r][c].inverse();
        for (std::size_t j = c; j < ncols; ++j) a[r][j] = a[r][j] * inv;
        for (std::size_t i = 0; i < a.size(); ++i) {
            if (i == r || a[i][c].is_zero()) continue;
            F f = a[i][c];
            for (std::size_t j = c; j < ncols; ++j)
                if (!a[r][j].is_zero()) a[i][j] = a[i][j] - f * a[r][j];
        }
        out.pivots.push_back(static_cast<int>(c));
        ++r;
    }
    a.resize(r);
    out.rows = std::move(a);
    return out;
}

template <class F>
std::size_t rank(const Matrix<F>& a, std::size_t ncols) {
    return rref(a, ncols).pivots.size();
}

// Basis of {x : A x = 0}.
template <class F>
Matrix<F> nullspace(const Matrix<F>& a, std::size_t ncols, const F& zero, const F& one) {
    Echelon<F> e = rref(a, ncols);
    std::vector<bool> is_pivot(ncols, false);
    for (int p : e.pivots) is_pivot[p] = true;
    Matrix<F> basis;
    for (std::size_t free = 0; free < ncols; ++free) {
        if (is_pivot[free]) continue;
        std::vector<F> v(ncols, zero);
        v[free] = one;
        for (std::size_t i = 0; i < e.pivots.size(); ++i) v[e.pivots[i]] = zero - e.rows[i][free];
        basis.push_back(std::move(v));
    }
    return basis;
}

// Solve A x = b; returns false when inconsistent. Free variables are zero.
template <class F>
bool solve(const Matrix<F>& a, const std::vector<F>& b, std::size_t ncols, const F& zero, std::vector<F>& x) {
    Matrix<F> aug = a;
    for (std::size_t i = 0; i < aug.size(); ++i) aug[i].push_back(b[i]);
    Echelon<F> e = rref(aug, ncols + 1);
    x.assign(ncols, zero);
    for (std::size_t i = 0; i < e.pivots.size(); ++i) {
        if (e.pivots[i] == static_cast<int>(ncols)) return false;
        x[e.pivots[i]] = e.rows[i][ncols];
    }
    return true;
}

}  // namespace qsolv::linalg
