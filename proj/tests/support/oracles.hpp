#pragma once

// Test-side oracles. Nothing here calls into the PBW engine, the pivot
// inversion or the lattice code; they are written from first principles so
// the library can be checked against them.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "qsolv/algebra.hpp"
#include "qsolv/lattice.hpp"
#include "qsolv/scalars.hpp"

namespace oracle {

using qsolv::Integer;
using qsolv::IntMatrix;
using qsolv::RF;

// Cauchon diagrams on an m x n grid, oriented for ascending processing:
// a deleted box forces every box to its right in the row, or every box
// below it in the column, to be deleted too. Returned as the sets of kept
// boxes (row-major, 0-based), i.e. the pivot sets.
inline std::set<std::vector<int>> cauchon_pivot_sets(int m, int n) {
    std::set<std::vector<int>> out;
    const int cells = m * n;
    for (long mask = 0; mask < (1L << cells); ++mask) {
        auto deleted = [&](int i, int j) { return (mask >> (i * n + j)) & 1L; };
        bool ok = true;
        for (int i = 0; i < m && ok; ++i)
            for (int j = 0; j < n && ok; ++j) {
                if (!deleted(i, j)) continue;
                bool row = true, col = true;
                for (int k = j + 1; k < n; ++k) row = row && deleted(i, k);
                for (int k = i + 1; k < m; ++k) col = col && deleted(k, j);
                ok = row || col;
            }
        if (!ok) continue;
        std::vector<int> kept;
        for (int c = 0; c < cells; ++c)
            if (!((mask >> c) & 1L)) kept.push_back(c);
        out.insert(kept);
    }
    return out;
}

// Polynomials in commuting variables t_1..t_k with coefficients in Q(q),
// used as carrier spaces for explicit representations.
using Poly = std::map<std::vector<int>, RF>;

inline void add_to(Poly& p, const std::vector<int>& m, const RF& c) {
    if (c.is_zero()) return;
    auto [it, ins] = p.try_emplace(m, c);
    if (!ins) {
        it->second += c;
        if (it->second.is_zero()) p.erase(it);
    }
}

inline Poly single(std::vector<int> m, const RF& c) {
    Poly p;
    p.emplace(std::move(m), c);
    return p;
}

// A linear operator given by its action on monomials.
using Operator = std::function<Poly(const std::vector<int>&)>;

inline Poly apply_op(const Operator& op, const Poly& f) {
    Poly out;
    for (const auto& [m, c] : f)
        for (const auto& [m2, c2] : op(m)) add_to(out, m2, c * c2);
    return out;
}

// (q^{s n} - 1) / (q^s - 1) written out as a sum, no library q-integers.
inline RF q_number(int n, int s) {
    RF out(0);
    for (int k = 0; k < n; ++k) out += RF::q_pow(s * k);
    return out;
}

// Quantum Weyl algebra x1 x2 = q^s x2 x1 + 1 on Q(q)[t]: x2 multiplies by
// t, x1 is the q^s-derivative.
inline std::vector<Operator> weyl_representation(int s) {
    Operator x1 = [s](const std::vector<int>& m) {
        Poly out;
        if (m[0] > 0) add_to(out, {m[0] - 1}, q_number(m[0], s));
        return out;
    };
    Operator x2 = [](const std::vector<int>& m) { return single({m[0] + 1}, RF(1)); };
    return {x1, x2};
}

// Quantum plane x1 x2 = q^s x2 x1 on Q(q)[t1, t2]: x1 = t1 composed with
// t2 -> q^s t2, x2 = t2.
inline std::vector<Operator> plane_representation(int s) {
    Operator x1 = [s](const std::vector<int>& m) { return single({m[0] + 1, m[1]}, RF::q_pow(s * m[1])); };
    Operator x2 = [](const std::vector<int>& m) { return single({m[0], m[1] + 1}, RF(1)); };
    return {x1, x2};
}

// Image of a PBW element: each monomial x_1^{a_1} ... x_M^{a_M} acts as the
// ordered operator product.
inline Poly act(const qsolv::Element& e, const std::vector<Operator>& gens, const Poly& f) {
    Poly out;
    for (const auto& [m, c] : e.terms()) {
        Poly v = f;
        for (int i = static_cast<int>(m.size()) - 1; i >= 0; --i)
            for (int k = 0; k < m[i]; ++k) v = apply_op(gens[i], v);
        for (const auto& [mm, cc] : v) add_to(out, mm, c * cc);
    }
    return out;
}

inline IntMatrix random_matrix(std::mt19937_64& rng, int rows, int cols, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix a(static_cast<size_t>(rows), std::vector<Integer>(static_cast<size_t>(cols)));
    for (auto& row : a)
        for (auto& x : row) x = d(rng);
    return a;
}

inline IntMatrix random_skew(std::mt19937_64& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> d(lo, hi);
    IntMatrix a(static_cast<size_t>(n), std::vector<Integer>(static_cast<size_t>(n), 0));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            a[i][j] = d(rng);
            a[j][i] = -a[i][j];
        }
    return a;
}

// Naive integer matrix product and determinant (cofactor expansion).
inline IntMatrix mul(const IntMatrix& a, const IntMatrix& b) {
    IntMatrix c(a.size(), std::vector<Integer>(b.empty() ? 0 : b[0].size(), 0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t k = 0; k < b.size(); ++k)
            for (size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    return c;
}

inline Integer det(const IntMatrix& a) {
    const size_t n = a.size();
    if (n == 0) return 1;
    if (n == 1) return a[0][0];
    Integer out = 0;
    for (size_t c = 0; c < n; ++c) {
        IntMatrix minor;
        for (size_t i = 1; i < n; ++i) {
            std::vector<Integer> row;
            for (size_t j = 0; j < n; ++j)
                if (j != c) row.push_back(a[i][j]);
            minor.push_back(row);
        }
        Integer term = a[0][c] * det(minor);
        out += (c % 2 == 0) ? term : Integer(-term);
    }
    return out;
}

// Determinantal divisors: gcd of all k x k minors, for small matrices.
inline std::vector<Integer> determinantal_divisors(const IntMatrix& a) {
    const size_t m = a.size(), n = a.empty() ? 0 : a[0].size();
    std::vector<Integer> out;
    for (size_t k = 1; k <= std::min(m, n); ++k) {
        Integer g = 0;
        std::vector<size_t> rows(k), cols(k);
        std::function<void(size_t, size_t)> pick_rows, pick_cols;
        pick_cols = [&](size_t start, size_t depth) {
            if (depth == k) {
                IntMatrix sub(k, std::vector<Integer>(k));
                for (size_t i = 0; i < k; ++i)
                    for (size_t j = 0; j < k; ++j) sub[i][j] = a[rows[i]][cols[j]];
                Integer d = det(sub);
                mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), d.get_mpz_t());
                return;
            }
            for (size_t c = start; c < n; ++c) {
                cols[depth] = c;
                pick_cols(c + 1, depth + 1);
            }
        };
        pick_rows = [&](size_t start, size_t depth) {
            if (depth == k) {
                pick_cols(0, 0);
                return;
            }
            for (size_t r = start; r < m; ++r) {
                rows[depth] = r;
                pick_rows(r + 1, depth + 1);
            }
        };
        pick_rows(0, 0);
        if (g == 0) break;
        out.push_back(g);
    }
    return out;
}

}  // namespace oracle
