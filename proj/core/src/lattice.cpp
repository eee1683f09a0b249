#include "qsolv/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qsolv/algebra.hpp"
#include "qsolv/cauchon.hpp"
#include "qsolv/errors.hpp"

namespace qsolv {

IntMatrix to_int_matrix(const std::vector<std::vector<int>>& a) {
    IntMatrix m(a.size());
    for (size_t i = 0; i < a.size(); ++i)
        for (int x : a[i]) m[i].emplace_back(x);
    return m;
}

IntMatrix identity_matrix(std::size_t n) {
    IntMatrix m(n, std::vector<Integer>(n, 0));
    for (size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix matmul(const IntMatrix& a, const IntMatrix& b) {
    size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
    IntMatrix c(n, std::vector<Integer>(m, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t t = 0; t < k; ++t) {
            if (sgn(a[i][t]) == 0) continue;
            for (size_t j = 0; j < m; ++j) c[i][j] += a[i][t] * b[t][j];
        }
    return c;
}

IntMatrix transpose(const IntMatrix& a) {
    if (a.empty()) return {};
    IntMatrix t(a[0].size(), std::vector<Integer>(a.size()));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
    return t;
}

Integer determinant(const IntMatrix& a0) {
    size_t n = a0.size();
    if (n == 0) return 1;
    IntMatrix a = a0;
    Integer prev = 1;
    int sign = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (sgn(a[k][k]) == 0) {
            size_t p = k + 1;
            while (p < n && sgn(a[p][k]) == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i)
            for (size_t j = k + 1; j < n; ++j) {
                Integer v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = v;
            }
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

bool is_skew(const IntMatrix& a) {
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != a.size()) return false;
        for (size_t j = 0; j < a.size(); ++j)
            if (a[i][j] != -a[j][i]) return false;
    }
    return true;
}

namespace {

// Quotient rounded toward zero keeps |remainder| < |divisor|.
Integer tquot(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

void add_row(IntMatrix& m, size_t dst, size_t src, const Integer& k) {
    for (size_t j = 0; j < m[dst].size(); ++j) m[dst][j] += k * m[src][j];
}

void add_col(IntMatrix& m, size_t dst, size_t src, const Integer& k) {
    for (auto& row : m) row[dst] += k * row[src];
}

void swap_cols(IntMatrix& m, size_t a, size_t b) {
    for (auto& row : m) std::swap(row[a], row[b]);
}

}  // namespace

SmithResult smith(const IntMatrix& a) {
    SmithResult res;
    size_t m = a.size(), n = m ? a[0].size() : 0;
    IntMatrix d = a, u = identity_matrix(m), v = identity_matrix(n);
    size_t t = 0;
    while (t < std::min(m, n)) {
        // Minimal-absolute-value pivot over the remaining block.
        size_t pi = m, pj = n;
        for (size_t i = t; i < m; ++i)
            for (size_t j = t; j < n; ++j)
                if (sgn(d[i][j]) != 0 && (pi == m || abs(d[i][j]) < abs(d[pi][pj]))) pi = i, pj = j;
        if (pi == m) break;
        std::swap(d[t], d[pi]);
        std::swap(u[t], u[pi]);
        swap_cols(d, t, pj);
        swap_cols(v, t, pj);
        for (;;) {
            bool dirty = false;
            for (size_t i = t + 1; i < m; ++i) {
                if (sgn(d[i][t]) == 0) continue;
                Integer q = tquot(d[i][t], d[t][t]);
                add_row(d, i, t, -q);
                add_row(u, i, t, -q);
                if (sgn(d[i][t]) != 0) dirty = true;
            }
            for (size_t j = t + 1; j < n; ++j) {
                if (sgn(d[t][j]) == 0) continue;
                Integer q = tquot(d[t][j], d[t][t]);
                add_col(d, j, t, -q);
                add_col(v, j, t, -q);
                if (sgn(d[t][j]) != 0) dirty = true;
            }
            if (dirty) {
                // Bring the smallest leftover in row/column t to the pivot.
                size_t bi = t, bj = t;
                for (size_t i = t + 1; i < m; ++i)
                    if (sgn(d[i][t]) != 0 && abs(d[i][t]) < abs(d[bi][bj])) bi = i, bj = t;
                for (size_t j = t + 1; j < n; ++j)
                    if (sgn(d[t][j]) != 0 && abs(d[t][j]) < abs(d[bi][bj])) bi = t, bj = j;
                std::swap(d[t], d[bi]);
                std::swap(u[t], u[bi]);
                swap_cols(d, t, bj);
                swap_cols(v, t, bj);
                continue;
            }
            // Divisibility chain: fold an offending row into the pivot row.
            size_t bad = m;
            for (size_t i = t + 1; i < m && bad == m; ++i)
                for (size_t j = t + 1; j < n; ++j)
                    if (!mpz_divisible_p(d[i][j].get_mpz_t(), d[t][t].get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == m) break;
            add_row(d, t, bad, 1);
            add_row(u, t, bad, 1);
        }
        if (sgn(d[t][t]) < 0) {
            for (auto& x : d[t]) x = -x;
            for (auto& x : u[t]) x = -x;
        }
        res.divisors.push_back(d[t][t]);
        ++t;
    }
    res.U = std::move(u);
    res.V = std::move(v);
    res.D = std::move(d);
    return res;
}

namespace {

// Simultaneous row/column operations keep U T U^T in step.
void cong_swap(IntMatrix& t, IntMatrix& u, size_t a, size_t b) {
    if (a == b) return;
    std::swap(t[a], t[b]);
    swap_cols(t, a, b);
    std::swap(u[a], u[b]);
}

void cong_add(IntMatrix& t, IntMatrix& u, size_t dst, size_t src, const Integer& k) {
    add_row(t, dst, src, k);
    add_col(t, dst, src, k);
    add_row(u, dst, src, k);
}

}  // namespace

IntMatrix SkewNormalForm::kernel_basis() const {
    return IntMatrix(U.begin() + 2 * r, U.end());
}

SkewNormalForm skew_normal_form(const IntMatrix& t0) {
    if (!is_skew(t0)) throw NotSkew("matrix is not skew-symmetric");
    size_t k = t0.size();
    IntMatrix t = t0, u = identity_matrix(k);
    SkewNormalForm out;
    size_t p = 0;
    while (p + 1 < k) {
        size_t bi = k, bj = k;
        for (size_t i = p; i < k; ++i)
            for (size_t j = i + 1; j < k; ++j)
                if (sgn(t[i][j]) != 0 && (bi == k || abs(t[i][j]) < abs(t[bi][bj]))) bi = i, bj = j;
        if (bi == k) break;
        cong_swap(t, u, p, bi);
        if (bj == p) bj = bi;
        cong_swap(t, u, p + 1, bj);
        for (;;) {
            bool moved = false;
            const Integer m = t[p][p + 1];
            for (size_t j = p + 2; j < k && !moved; ++j) {
                if (sgn(t[p][j]) != 0) {
                    Integer q = tquot(t[p][j], m);
                    cong_add(t, u, j, p + 1, -q);
                    if (sgn(t[p][j]) != 0) {
                        cong_swap(t, u, p + 1, j);
                        moved = true;
                        break;
                    }
                }
                if (sgn(t[p + 1][j]) != 0) {
                    Integer q = tquot(t[p + 1][j], t[p + 1][p]);
                    cong_add(t, u, j, p, -q);
                    if (sgn(t[p + 1][j]) != 0) {
                        cong_swap(t, u, p, j);
                        moved = true;
                        break;
                    }
                }
            }
            if (moved) continue;
            size_t bad = k;
            for (size_t i = p + 2; i < k && bad == k; ++i)
                for (size_t j = p + 2; j < k; ++j)
                    if (!mpz_divisible_p(t[i][j].get_mpz_t(), m.get_mpz_t())) {
                        bad = i;
                        break;
                    }
            if (bad == k) break;
            cong_add(t, u, p, bad, 1);
        }
        if (sgn(t[p][p + 1]) < 0) cong_swap(t, u, p, p + 1);
        out.pairs.push_back(t[p][p + 1]);
        p += 2;
    }
    out.r = static_cast<int>(out.pairs.size());
    out.kernel_rank = static_cast<int>(k) - 2 * out.r;
    out.U = std::move(u);
    out.form = std::move(t);
    return out;
}

std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : 0;
    SmithResult s = smith(a);
    // U A V = D, so A x = b iff D y = U b with x = V y.
    std::vector<Integer> ub(m, 0);
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) ub[i] += s.U[i][j] * b[j];
    std::vector<Integer> y(n, 0);
    for (size_t i = 0; i < m; ++i) {
        if (i < s.divisors.size()) {
            if (!mpz_divisible_p(ub[i].get_mpz_t(), s.divisors[i].get_mpz_t())) return std::nullopt;
            y[i] = ub[i] / s.divisors[i];
        } else if (sgn(ub[i]) != 0) {
            return std::nullopt;
        }
    }
    std::vector<Integer> x(n, 0);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) x[i] += s.V[i][j] * y[j];
    return x;
}

AdmissibilityReport admissible_l(const Presentation& p, const NilpotencyProfile& profile, int l, int max_m) {
    AdmissibilityReport rep;
    rep.l = l;
    if (l < 1) throw InvalidArgument("l must be positive");
    const int M = p.M();
    std::vector<int> free_idx;
    for (int i = 0; i < M; ++i)
        if (!p.is_distinguished(i)) free_idx.push_back(i);

    if (M > max_m) {
        rep.notes.push_back("condition 1 undetermined: M = " + std::to_string(M) + " exceeds the subset-enumeration limit " +
                            std::to_string(max_m));
    } else {
        bool ok = true;
        const size_t count = size_t{1} << free_idx.size();
        for (size_t mask = 0; mask < count; ++mask) {
            std::vector<int> mu;
            for (int i = 0; i < M; ++i) {
                if (p.is_distinguished(i)) {
                    mu.push_back(i);
                    continue;
                }
                size_t pos = std::find(free_idx.begin(), free_idx.end(), i) - free_idx.begin();
                if (mask >> pos & 1) mu.push_back(i);
            }
            IntMatrix sub(mu.size(), std::vector<Integer>(mu.size()));
            for (size_t a = 0; a < mu.size(); ++a)
                for (size_t b = 0; b < mu.size(); ++b) sub[a][b] = p.S[mu[a]][mu[b]];
            ++rep.subsets_checked;
            for (const auto& d : smith(sub).divisors) {
                Integer g;
                mpz_gcd_ui(g.get_mpz_t(), d.get_mpz_t(), static_cast<unsigned long>(l));
                if (g != 1) {
                    ok = false;
                    std::ostringstream os;
                    os << "gcd(" << l << ", elementary divisor " << d.get_str() << " of S_mu, mu={";
                    for (size_t a = 0; a < mu.size(); ++a) os << (a ? "," : "") << mu[a] + 1;
                    os << "}) = " << g.get_str();
                    rep.witnesses.push_back(os.str());
                    break;
                }
            }
        }
        rep.coprime_divisors = ok;
    }

    rep.coprime_exponents = true;
    auto check_exp = [&](const std::optional<int>& s, const std::string& label, int i) {
        if (!s || *s == 0) return;
        if (std::gcd(std::abs(*s), l) != 1) {
            rep.coprime_exponents = false;
            rep.witnesses.push_back("gcd(" + std::to_string(l) + ", " + label + "_" + std::to_string(i + 1) + "=" +
                                    std::to_string(*s) + ") = " + std::to_string(std::gcd(std::abs(*s), l)) + " != 1");
        }
    };
    const CN1Exponents& ex = p.exponents();
    for (int i = 0; i < M; ++i) {
        check_exp(ex.right[i], "s", i);
        check_exp(ex.left[i], "s'", i);
    }

    rep.bound_ok = l >= profile.N;
    if (!rep.bound_ok)
        rep.witnesses.push_back("l = " + std::to_string(l) + " < N = " + std::to_string(profile.N));
    return rep;
}

}  // namespace qsolv
