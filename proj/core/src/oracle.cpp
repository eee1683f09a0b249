#include "qsolv/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <map>
#include <numbers>
#include <numeric>
#include <random>
#include <sstream>

#include "qsolv/errors.hpp"
#include "qsolv/quantum.hpp"

namespace qsolv {

// ---------------------------------------------------------------- vectors

Vec FiniteDimAlgebra::zero() const { return Vec(dim(), Cyclotomic::zero(l)); }

Vec FiniteDimAlgebra::unit() const { return basis_vector(static_cast<std::size_t>(unit_index)); }

Vec FiniteDimAlgebra::basis_vector(std::size_t i) const {
    Vec v = zero();
    v[i] = Cyclotomic::one(l);
    return v;
}

Vec FiniteDimAlgebra::multiply(const Vec& a, const Vec& b) const {
    Vec out = zero();
    for (std::size_t i = 0; i < dim(); ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < dim(); ++j) {
            if (b[j].is_zero()) continue;
            Cyclotomic ab = a[i] * b[j];
            for (const auto& [k, c] : table[i][j]) out[k] += ab * c;
        }
    }
    return out;
}

Vec FiniteDimAlgebra::add(const Vec& a, const Vec& b) const {
    Vec out = a;
    for (std::size_t i = 0; i < dim(); ++i) out[i] += b[i];
    return out;
}

Vec FiniteDimAlgebra::scale(const Cyclotomic& c, const Vec& a) const {
    Vec out = a;
    for (auto& x : out) x = c * x;
    return out;
}

bool FiniteDimAlgebra::check_associativity(int samples, std::uint64_t seed, std::size_t exhaustive_below) const {
    auto check = [&](std::size_t i, std::size_t j, std::size_t k) {
        Vec bi = basis_vector(i), bj = basis_vector(j), bk = basis_vector(k);
        return multiply(multiply(bi, bj), bk) == multiply(bi, multiply(bj, bk));
    };
    if (dim() < exhaustive_below) {
        for (std::size_t i = 0; i < dim(); ++i)
            for (std::size_t j = 0; j < dim(); ++j)
                for (std::size_t k = 0; k < dim(); ++k)
                    if (!check(i, j, k)) return false;
        return true;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, dim() - 1);
    for (int s = 0; s < samples; ++s)
        if (!check(pick(rng), pick(rng), pick(rng))) return false;
    return true;
}

std::string FiniteDimAlgebra::to_string(const Vec& v) const {
    SpecElement e(l);
    for (std::size_t i = 0; i < dim(); ++i) e.add_term(basis[i], v[i]);
    return e.to_string(names);
}

// ---------------------------------------------------------------- fibers

FiniteDimAlgebra fiber_algebra(const Presentation& p, int l, const std::vector<Cyclotomic>& chi, int cap) {
    const int M = p.M();
    if (static_cast<int>(chi.size()) != M) throw InvalidArgument("character needs one value per generator");
    double n_est = std::pow(static_cast<double>(l), M);
    if (n_est > cap) throw CapExceeded("fiber dimension " + std::to_string(static_cast<long>(n_est)) +
                                       " exceeds the cap " + std::to_string(cap));
    for (int i = 0; i < M; ++i)
        if (p.is_distinguished(i) && chi[i].is_zero())
            throw InvalidArgument("inverted generator " + p.names[i] + " needs a nonzero value");
    Algebra alg(p);
    for (int i = 0; i < M; ++i)
        if (!is_central_at(alg, alg.pow(alg.gen(i), l), l))
            throw NotCentral(p.names[i] + "^" + std::to_string(l) + " is not central at eps");

    FiniteDimAlgebra A;
    A.l = l;
    A.names = p.names;
    const std::size_t n = static_cast<std::size_t>(n_est);
    for (std::size_t idx = 0; idx < n; ++idx) {
        Monomial m(static_cast<size_t>(M), 0);
        std::size_t rest = idx;
        for (int k = M - 1; k >= 0; --k) {
            m[k] = static_cast<int>(rest % static_cast<std::size_t>(l));
            rest /= static_cast<std::size_t>(l);
        }
        A.basis.push_back(m);
    }
    auto index_of = [&](const Monomial& m) {
        std::size_t idx = 0;
        for (int k = 0; k < M; ++k) idx = idx * static_cast<std::size_t>(l) + static_cast<std::size_t>(m[k]);
        return static_cast<int>(idx);
    };
    // Powers chi_k^e, memoized per generator.
    std::vector<std::map<int, Cyclotomic>> powers(static_cast<size_t>(M));
    auto chi_pow = [&](int k, int e) -> Cyclotomic {
        auto it = powers[k].find(e);
        if (it != powers[k].end()) return it->second;
        Cyclotomic v = e >= 0 ? chi[k].pow(e) : chi[k].inverse().pow(-e);
        powers[k].emplace(e, v);
        return v;
    };
    A.table.assign(n, std::vector<std::vector<std::pair<int, Cyclotomic>>>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Element prod = alg.multiply_monomials(A.basis[i], A.basis[j]);
            std::map<int, Cyclotomic> acc;
            for (const auto& [m, c] : prod.terms()) {
                // x_k^{lq + r} = (x_k^l)^q x_k^r with x_k^l central at eps.
                Cyclotomic coef = specialize(c, l);
                Monomial red = m;
                for (int k = 0; k < M && !coef.is_zero(); ++k) {
                    int e = m[k];
                    int q = e >= 0 ? e / l : -((-e + l - 1) / l);
                    red[k] = e - q * l;
                    if (q != 0) coef *= chi_pow(k, q);
                }
                if (coef.is_zero()) continue;
                int idx = index_of(red);
                auto [it, inserted] = acc.try_emplace(idx, coef);
                if (!inserted) it->second += coef;
            }
            for (auto& [k, c] : acc)
                if (!c.is_zero()) A.table[i][j].emplace_back(k, c);
        }
    A.unit_index = 0;
    return A;
}

FiniteDimAlgebra stratum_fiber(const Stratum& st, int l, const std::vector<Cyclotomic>& y_values, int cap) {
    if (!st.error.empty()) throw InvalidArgument("stratum has no chain: " + st.error);
    if (y_values.size() != st.y_index.size()) throw InvalidArgument("need one value per pivot");
    std::vector<Cyclotomic> chi(static_cast<size_t>(st.chain.M()), Cyclotomic::zero(l));
    for (size_t a = 0; a < st.y_index.size(); ++a) {
        if (y_values[a].is_zero()) throw DegenerateChart("pivot values must be nonzero");
        chi[st.y_index[a]] = y_values[a];
    }
    return fiber_algebra(st.chain, l, chi, cap);
}

// ---------------------------------------------------------------- radical

namespace {

// Reduction modulo the span of a set of vectors kept in echelon form.
class Reducer {
public:
    Reducer(std::size_t n, int l) : n_(n), zero_(Cyclotomic::zero(l)) {}
    std::size_t rank() const { return rows_.size(); }
    Vec reduce(Vec v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const Cyclotomic c = v[pivots_[r]];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (!rows_[r][j].is_zero()) v[j] -= c * rows_[r][j];
        }
        return v;
    }
    static bool is_zero(const Vec& v) {
        for (const auto& x : v)
            if (!x.is_zero()) return false;
        return true;
    }
    // Adds v to the span; returns false if it was already there.
    bool insert(const Vec& v0) {
        Vec v = reduce(v0);
        std::size_t p = 0;
        while (p < n_ && v[p].is_zero()) ++p;
        if (p == n_) return false;
        Cyclotomic inv = v[p].inverse();
        for (auto& x : v) x = x * inv;
        // Keep rows fully reduced against the new pivot.
        for (auto& row : rows_) {
            Cyclotomic c = row[p];
            if (c.is_zero()) continue;
            for (std::size_t j = 0; j < n_; ++j)
                if (!v[j].is_zero()) row[j] -= c * v[j];
        }
        rows_.push_back(std::move(v));
        pivots_.push_back(p);
        return true;
    }
    const CMatrix& rows() const { return rows_; }

private:
    std::size_t n_;
    Cyclotomic zero_;
    CMatrix rows_;
    std::vector<std::size_t> pivots_;
};

Reducer reducer_for(const FiniteDimAlgebra& A, const CMatrix& J) {
    Reducer red(A.dim(), A.l);
    for (const auto& v : J) red.insert(v);
    return red;
}

Vec commutator(const FiniteDimAlgebra& A, const Vec& a, const Vec& b) {
    Vec ab = A.multiply(a, b), ba = A.multiply(b, a);
    for (std::size_t i = 0; i < ab.size(); ++i) ab[i] -= ba[i];
    return ab;
}

Vec random_vector(const FiniteDimAlgebra& A, const CMatrix& span, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-4, 4);
    Vec v = A.zero();
    for (const auto& b : span) {
        Cyclotomic c(A.l, Rational(coef(rng)));
        if (c.is_zero()) continue;
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += c * b[i];
    }
    return v;
}

// Representatives of a basis of Z(A/J).
CMatrix center_mod(const FiniteDimAlgebra& A, const Reducer& modJ) {
    const std::size_t n = A.dim();
    const Cyclotomic zero = Cyclotomic::zero(A.l);
    // Rows: linear conditions on x saying [x, b_i] lies in J.
    CMatrix constraints;
    for (std::size_t i = 0; i < n; ++i) {
        Vec bi = A.basis_vector(i);
        CMatrix block(n, Vec(n, zero));
        for (std::size_t k = 0; k < n; ++k) {
            Vec w = modJ.reduce(commutator(A, A.basis_vector(k), bi));
            for (std::size_t c = 0; c < n; ++c) block[c][k] = w[c];
        }
        for (auto& row : block) constraints.push_back(std::move(row));
        constraints = linalg::rref(std::move(constraints), n).rows;
    }
    CMatrix sols = linalg::nullspace(constraints, n, zero, Cyclotomic::one(A.l));
    Reducer center(n, A.l);
    CMatrix reps;
    for (auto& s : sols) {
        Vec r = modJ.reduce(s);
        if (center.insert(r)) reps.push_back(r);
    }
    return reps;
}

// Degree and coefficients of the minimal polynomial of x modulo J.
std::pair<int, Vec> min_poly_mod(const FiniteDimAlgebra& A, const CMatrix& J, const Vec& x) {
    std::vector<Vec> powers{A.unit()};
    Reducer red = reducer_for(A, J);
    const Cyclotomic zero = Cyclotomic::zero(A.l);
    for (;;) {
        if (!red.insert(powers.back())) break;
        powers.push_back(A.multiply(x, powers.back()));
    }
    int d = static_cast<int>(powers.size()) - 1;
    // Solve powers[d] = sum_i a_i powers[i] + (element of J).
    const std::size_t cols = static_cast<std::size_t>(d) + J.size();
    CMatrix M(A.dim(), Vec(cols, zero));
    for (std::size_t r = 0; r < A.dim(); ++r) {
        for (int i = 0; i < d; ++i) M[r][i] = powers[i][r];
        for (std::size_t j = 0; j < J.size(); ++j) M[r][d + j] = J[j][r];
    }
    Vec sol;
    linalg::solve(M, powers[d], cols, zero, sol);
    Vec monic;
    for (int i = 0; i < d; ++i) monic.push_back(-sol[i]);
    monic.push_back(Cyclotomic::one(A.l));
    return {d, monic};
}

Vec lift_idempotent(const FiniteDimAlgebra& A, Vec e) {
    for (int it = 0; it < 64; ++it) {
        Vec e2 = A.multiply(e, e);
        if (e2 == e) return e;
        Vec e3 = A.multiply(e2, e);
        Vec next = A.zero();
        const Cyclotomic three(A.l, Rational(3)), two(A.l, Rational(2));
        for (std::size_t i = 0; i < next.size(); ++i) next[i] = three * e2[i] - two * e3[i];
        e = std::move(next);
    }
    throw LiftingFailed("idempotent lifting did not stabilize");
}

}  // namespace

CMatrix radical(const FiniteDimAlgebra& A) {
    const std::size_t n = A.dim();
    const Cyclotomic zero = Cyclotomic::zero(A.l);
    // t_k = trace of left multiplication by b_k.
    Vec t(n, zero);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t m = 0; m < n; ++m)
            for (const auto& [idx, c] : A.table[k][m])
                if (static_cast<std::size_t>(idx) == m) t[k] += c;
    CMatrix B(n, Vec(n, zero));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (const auto& [idx, c] : A.table[i][j]) B[i][j] += c * t[idx];
    return linalg::nullspace(B, n, zero, Cyclotomic::one(A.l));
}

bool is_nilpotent(const FiniteDimAlgebra& A, const CMatrix& J) {
    // J^{k+1} sits inside J^k; a stalled chain that is not zero never reaches zero.
    CMatrix power = J;
    while (!power.empty()) {
        Reducer next(A.dim(), A.l);
        CMatrix rows;
        for (const auto& a : power)
            for (const auto& b : J) {
                Vec ab = A.multiply(a, b);
                if (next.insert(ab)) rows.push_back(ab);
            }
        if (rows.size() >= power.size()) return false;
        power = std::move(rows);
    }
    return true;
}

std::vector<Cyclotomic> roots_in_field(const std::vector<Cyclotomic>& monic, int l) {
    using C = std::complex<double>;
    const int deg = static_cast<int>(monic.size()) - 1;
    std::vector<Cyclotomic> found;
    if (deg < 1) return found;
    const int phi = euler_phi(std::max(l, 1));
    std::vector<int> embed;
    if (l <= 2) {
        embed.push_back(1);
    } else {
        for (int k = 1; 2 * k < l; ++k)
            if (std::gcd(k, l) == 1) embed.push_back(k);
    }
    // Numeric roots of each conjugate polynomial (Durand-Kerner).
    std::vector<std::vector<C>> roots;
    for (int k : embed) {
        std::vector<C> a;
        for (const auto& c : monic) {
            auto [re, im] = c.numeric(k);
            a.emplace_back(re, im);
        }
        auto eval = [&](C z) {
            C v = 0;
            for (int i = deg; i >= 0; --i) v = v * z + a[i];
            return v;
        };
        std::vector<C> z(static_cast<size_t>(deg));
        for (int i = 0; i < deg; ++i) z[i] = std::pow(C(0.4, 0.9), i);
        for (int it = 0; it < 2000; ++it) {
            double moved = 0;
            for (int i = 0; i < deg; ++i) {
                C den = 1;
                for (int j = 0; j < deg; ++j)
                    if (j != i) den *= z[i] - z[j];
                if (std::abs(den) < 1e-300) den = 1e-12;
                C step = eval(z[i]) / den;
                z[i] -= step;
                moved = std::max(moved, std::abs(step));
            }
            if (moved < 1e-14) break;
        }
        roots.push_back(z);
    }
    auto rationalize = [](double x) -> std::optional<Rational> {
        // Continued fraction with bounded denominator.
        double r = x;
        long h0 = 0, h1 = 1, k0 = 1, k1 = 0;
        for (int it = 0; it < 40; ++it) {
            double a = std::floor(r);
            if (std::abs(a) > 1e12) return std::nullopt;
            long ai = static_cast<long>(a);
            long h2 = ai * h1 + h0, k2 = ai * k1 + k0;
            if (k2 > 10000000) break;
            h0 = h1, h1 = h2, k0 = k1, k1 = k2;
            if (std::abs(x - static_cast<double>(h1) / static_cast<double>(k1)) < 1e-9 * std::max(1.0, std::abs(x)))
                return Rational(h1, k1);
            double frac = r - a;
            if (std::abs(frac) < 1e-15) break;
            r = 1.0 / frac;
        }
        if (k1 == 0) return std::nullopt;
        Rational q(h1, k1);
        q.canonicalize();
        if (std::abs(x - q.get_d()) < 1e-9 * std::max(1.0, std::abs(x))) return q;
        return std::nullopt;
    };
    auto exact_value = [&](const Cyclotomic& root) {
        Cyclotomic v = Cyclotomic::zero(l), pw = Cyclotomic::one(l);
        for (int i = 0; i <= deg; ++i) {
            v += monic[i] * pw;
            pw *= root;
        }
        return v;
    };
    // Try every choice of one numeric root per embedding.
    std::vector<int> choice(embed.size(), 0);
    long combos = 0;
    for (;;) {
        if (++combos > 200000) break;
        // Real linear system for the power-basis coordinates.
        std::vector<std::vector<double>> sys;
        std::vector<double> rhs;
        for (size_t e = 0; e < embed.size(); ++e) {
            C v = roots[e][choice[e]];
            std::vector<double> re(static_cast<size_t>(phi)), im(static_cast<size_t>(phi));
            for (int i = 0; i < phi; ++i) {
                double ang = 2.0 * std::numbers::pi * embed[e] * i / std::max(l, 1);
                re[i] = std::cos(ang);
                im[i] = std::sin(ang);
            }
            sys.push_back(re);
            rhs.push_back(v.real());
            if (l > 2) {
                sys.push_back(im);
                rhs.push_back(v.imag());
            }
        }
        // Gaussian elimination with partial pivoting.
        const int n = phi;
        bool ok = static_cast<int>(sys.size()) == n;
        for (int c = 0; c < n && ok; ++c) {
            int p = c;
            for (int r = c + 1; r < n; ++r)
                if (std::abs(sys[r][c]) > std::abs(sys[p][c])) p = r;
            if (std::abs(sys[p][c]) < 1e-12) {
                ok = false;
                break;
            }
            std::swap(sys[p], sys[c]);
            std::swap(rhs[p], rhs[c]);
            for (int r = 0; r < n; ++r) {
                if (r == c) continue;
                double f = sys[r][c] / sys[c][c];
                for (int j = c; j < n; ++j) sys[r][j] -= f * sys[c][j];
                rhs[r] -= f * rhs[c];
            }
        }
        if (ok) {
            std::vector<Rational> coords;
            for (int i = 0; i < n && ok; ++i) {
                auto q = rationalize(rhs[i] / sys[i][i]);
                if (!q) ok = false;
                else coords.push_back(*q);
            }
            if (ok) {
                Cyclotomic cand(l, coords);
                if (exact_value(cand).is_zero() && std::find(found.begin(), found.end(), cand) == found.end())
                    found.push_back(cand);
                if (static_cast<int>(found.size()) == deg) break;
            }
        }
        size_t e = 0;
        while (e < choice.size() && ++choice[e] == deg) choice[e++] = 0;
        if (e == choice.size()) break;
    }
    return found;
}

std::optional<Cyclotomic> lth_root(const Cyclotomic& v, int l) {
    if (v.is_zero()) return v;
    if (auto r = v.as_rational()) {
        // Exact rational root first; it is also the cheapest.
        Rational q = *r;
        bool neg = sgn(q) < 0;
        if (!neg || l % 2 == 1) {
            mpz_class num = abs(q.get_num()), den = q.get_den(), rn, rd;
            if (mpz_root(rn.get_mpz_t(), num.get_mpz_t(), static_cast<unsigned long>(l)) &&
                mpz_root(rd.get_mpz_t(), den.get_mpz_t(), static_cast<unsigned long>(l))) {
                Rational root(neg ? -rn : rn, rd);
                root.canonicalize();
                return Cyclotomic(l, root);
            }
        }
    }
    std::vector<Cyclotomic> poly(static_cast<size_t>(l) + 1, Cyclotomic::zero(l));
    poly[0] = -v;
    poly[l] = Cyclotomic::one(l);
    auto roots = roots_in_field(poly, l);
    if (roots.empty()) return std::nullopt;
    return roots.front();
}

// ---------------------------------------------------------------- blocks

std::vector<Vec> block_idempotents(const FiniteDimAlgebra& A, const CMatrix& J, std::uint64_t seed) {
    Reducer modJ = reducer_for(A, J);
    CMatrix Z = center_mod(A, modJ);
    const int c = static_cast<int>(Z.size());
    if (c == 1) return {A.unit()};
    std::mt19937_64 rng(seed);
    for (int attempt = 0; attempt < 8; ++attempt) {
        Vec z = random_vector(A, Z, rng);
        auto [d, monic] = min_poly_mod(A, J, z);
        if (d != c) continue;
        auto roots = roots_in_field(monic, A.l);
        if (static_cast<int>(roots.size()) != c)
            throw FieldExtensionRequired("central element's minimal polynomial does not split over Q(eps)");
        // Lagrange interpolation idempotents in A/J.
        std::vector<Vec> ebar;
        for (int i = 0; i < c; ++i) {
            Vec e = A.unit();
            for (int j = 0; j < c; ++j) {
                if (j == i) continue;
                Vec f = z;
                f[A.unit_index] -= roots[j];
                e = A.scale((roots[i] - roots[j]).inverse(), A.multiply(e, f));
            }
            ebar.push_back(e);
        }
        // Lift one at a time inside the complement of those already lifted.
        std::vector<Vec> out;
        Vec rest = A.unit();
        for (int i = 0; i + 1 < c; ++i) {
            Vec x = A.multiply(rest, A.multiply(ebar[i], rest));
            Vec e = lift_idempotent(A, x);
            out.push_back(e);
            for (std::size_t k = 0; k < rest.size(); ++k) rest[k] -= e[k];
        }
        out.push_back(rest);
        return out;
    }
    throw FieldExtensionRequired("no central element separating the blocks was found");
}

BlockData blocks(const FiniteDimAlgebra& A, const CMatrix& J, std::uint64_t seed) {
    BlockData out;
    out.radical_dim = static_cast<int>(J.size());
    out.semisimple_dim = static_cast<int>(A.dim() - J.size());
    Reducer modJ = reducer_for(A, J);
    out.count = static_cast<int>(center_mod(A, modJ).size());
    // Generic elements have minimal polynomial degree sum of d_i; equality in
    // Cauchy-Schwarz (sum d_i)^2 <= count * sum d_i^2 forces equal d_i.
    std::mt19937_64 rng(seed);
    CMatrix all;
    for (std::size_t i = 0; i < A.dim(); ++i) all.push_back(A.basis_vector(i));
    int s = 0;
    for (int attempt = 0; attempt < 3; ++attempt)
        s = std::max(s, min_poly_mod(A, J, random_vector(A, all, rng)).first);
    if (out.count > 0 && s % out.count == 0 &&
        static_cast<long>(s) * s == static_cast<long>(out.count) * out.semisimple_dim)
        out.uniform_simple_dim = s / out.count;
    try {
        auto idem = block_idempotents(A, J, seed);
        for (const auto& e : idem) {
            Reducer span(A.dim(), A.l);
            for (const auto& j : J) span.insert(j);
            int d2 = 0;
            for (std::size_t k = 0; k < A.dim(); ++k)
                if (span.insert(A.multiply(e, A.multiply(A.basis_vector(k), e)))) ++d2;
            int d = static_cast<int>(std::lround(std::sqrt(static_cast<double>(d2))));
            if (d * d != d2) out.notes.push_back("block of dimension " + std::to_string(d2) + " is not split");
            out.simple_dims.push_back(d);
        }
    } catch (const Error& e) {
        out.notes.push_back(e.what());
    }
    return out;
}

Quiver quiver(const FiniteDimAlgebra& A, const CMatrix& J, const std::vector<Vec>& idem) {
    Quiver q;
    q.vertices = static_cast<int>(idem.size());
    Reducer j2(A.dim(), A.l);
    for (const auto& a : J)
        for (const auto& b : J) j2.insert(A.multiply(a, b));
    for (int i = 0; i < q.vertices; ++i)
        for (int j = 0; j < q.vertices; ++j) {
            bool edge = false, edge2 = false;
            for (const auto& v : J) {
                Vec w = A.multiply(idem[i], A.multiply(v, idem[j]));
                if (Reducer::is_zero(w)) continue;
                edge = true;
                if (!Reducer::is_zero(j2.reduce(w))) {
                    edge2 = true;
                    break;
                }
            }
            if (edge) q.edges.emplace_back(i, j);
            if (edge2) q.edges_j2.emplace_back(i, j);
        }
    return q;
}

// ---------------------------------------------------------------- clock and shift

namespace {

CMatrix identity_c(std::size_t n, int l) {
    CMatrix m(n, Vec(n, Cyclotomic::zero(l)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = Cyclotomic::one(l);
    return m;
}

CMatrix kron(const CMatrix& a, const CMatrix& b, int l) {
    std::size_t n = a.size(), m = b.size();
    CMatrix out(n * m, Vec(n * m, Cyclotomic::zero(l)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (a[i][j].is_zero()) continue;
            for (std::size_t k = 0; k < m; ++k)
                for (std::size_t t = 0; t < m; ++t) out[i * m + k][j * m + t] = a[i][j] * b[k][t];
        }
    return out;
}

CMatrix matmul_c(const CMatrix& a, const CMatrix& b, int l) {
    std::size_t n = a.size();
    CMatrix out(n, Vec(n, Cyclotomic::zero(l)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k) {
            if (a[i][k].is_zero()) continue;
            for (std::size_t j = 0; j < n; ++j)
                if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
        }
    return out;
}

CMatrix scale_c(const Cyclotomic& c, CMatrix m) {
    for (auto& row : m)
        for (auto& x : row) x = c * x;
    return m;
}

}  // namespace

ClockShift clock_shift(const std::vector<int>& pairs, const std::vector<Cyclotomic>& nu, int l) {
    const std::size_t r = pairs.size();
    if (nu.size() != 2 * r) throw InvalidArgument("need two character values per pair");
    for (int m : pairs)
        if (std::gcd(m, l) != 1) throw InadmissibleL("pair invariant shares a factor with l");
    ClockShift out;
    std::size_t dim = 1;
    for (std::size_t i = 0; i < r; ++i) dim *= static_cast<std::size_t>(l);
    out.dim = static_cast<int>(dim);
    const std::size_t L = static_cast<std::size_t>(l);
    for (std::size_t i = 0; i < r; ++i) {
        CMatrix clock(L, Vec(L, Cyclotomic::zero(l))), shift(L, Vec(L, Cyclotomic::zero(l)));
        for (std::size_t k = 0; k < L; ++k) {
            clock[k][k] = Cyclotomic::epsilon(l, static_cast<int>((static_cast<long>(pairs[i]) * k) % l));
            shift[(k + 1) % L][k] = Cyclotomic::one(l);
        }
        auto a = lth_root(nu[2 * i], l), b = lth_root(nu[2 * i + 1], l);
        if (!a || !b) throw RootExtractionFailed("character value has no l-th root in Q(eps)");
        CMatrix left = identity_c(1, l), right = identity_c(1, l);
        for (std::size_t j = 0; j < i; ++j) left = kron(left, identity_c(L, l), l);
        for (std::size_t j = i + 1; j < r; ++j) right = kron(right, identity_c(L, l), l);
        out.images.push_back(scale_c(*a, kron(kron(left, clock, l), right, l)));
        out.images.push_back(scale_c(*b, kron(kron(left, shift, l), right, l)));
    }
    // h_a h_b = eps^{form_ab} h_b h_a with the block-diagonal normal form.
    out.relations_ok = true;
    for (std::size_t a = 0; a < out.images.size(); ++a)
        for (std::size_t b = a + 1; b < out.images.size(); ++b) {
            int form = (a % 2 == 0 && b == a + 1) ? pairs[a / 2] : 0;
            CMatrix lhs = matmul_c(out.images[a], out.images[b], l);
            CMatrix rhs = scale_c(Cyclotomic::epsilon(l, ((form % l) + l) % l),
                                  matmul_c(out.images[b], out.images[a], l));
            if (lhs != rhs) out.relations_ok = false;
        }
    out.character_ok = true;
    for (std::size_t a = 0; a < out.images.size(); ++a) {
        CMatrix pw = identity_c(dim, l);
        for (int k = 0; k < l; ++k) pw = matmul_c(pw, out.images[a], l);
        if (pw != scale_c(nu[a], identity_c(dim, l))) out.character_ok = false;
    }
    return out;
}

Vec e_lambda(const FiniteDimAlgebra& A, const std::vector<Vec>& u, const std::vector<Cyclotomic>& lambda) {
    if (u.size() != lambda.size()) throw InvalidArgument("one lambda per u generator");
    const Cyclotomic inv_l = Cyclotomic(A.l, Rational(1, A.l));
    Vec e = A.unit();
    for (std::size_t i = 0; i < u.size(); ++i) {
        Vec step = A.scale(lambda[i].inverse(), u[i]);
        Vec sum = A.zero(), pw = A.unit();
        for (int k = 0; k < A.l; ++k) {
            sum = A.add(sum, pw);
            pw = A.multiply(pw, step);
        }
        e = A.scale(inv_l, A.multiply(e, sum));
    }
    return e;
}

}  // namespace qsolv
