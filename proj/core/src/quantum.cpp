#include "qsolv/quantum.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "qsolv/cauchon.hpp"
#include "qsolv/errors.hpp"
#include "qsolv/linalg.hpp"

namespace qsolv {

// ---------------------------------------------------------------- SpecElement

Cyclotomic SpecElement::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Cyclotomic::zero(l_) : it->second;
}

void SpecElement::add_term(const Monomial& m, const Cyclotomic& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SpecElement SpecElement::operator-() const {
    SpecElement r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

SpecElement operator+(const SpecElement& a, const SpecElement& b) {
    SpecElement r = a;
    if (r.l_ == 0) r.l_ = b.l_;
    for (const auto& [m, c] : b.terms_) r.add_term(m, c);
    return r;
}

SpecElement operator*(const Cyclotomic& c, const SpecElement& a) {
    SpecElement r(a.l_);
    for (const auto& [m, v] : a.terms_) r.add_term(m, c * v);
    return r;
}

std::string SpecElement::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string mono = monomial_string(m, names);
        if (c.is_one()) {
            os << mono;
        } else {
            os << "(" << c.to_string() << ")";
            if (mono != "1") os << "*" << mono;
        }
    }
    return os.str();
}

SpecElement specialize(const Element& a, int l) {
    SpecElement out(l);
    for (const auto& [m, c] : a.terms()) out.add_term(m, specialize(c, l));
    return out;
}

// ---------------------------------------------------------------- specialization

bool is_central_at(const Algebra& alg, const Element& u, int l) {
    for (int j = 0; j < alg.M(); ++j) {
        Element x = alg.gen(j);
        if (!specialize(alg.multiply(u, x) - alg.multiply(x, u), l).is_zero()) return false;
    }
    return true;
}

SpecializedAlgebra specialize_algebra(const Presentation& p, int l) {
    SpecializedAlgebra out;
    out.presentation = p;
    out.l = l;
    NilpotencyProfile prof = nilpotency_profile(p);
    out.admissibility = admissible_l(p, prof, l);
    const auto& rep = out.admissibility;
    if (!rep.coprime_exponents || !rep.bound_ok || rep.coprime_divisors == false) {
        std::string why = rep.witnesses.empty() ? "l fails the admissibility conditions" : rep.witnesses.front();
        throw InadmissibleL(why);
    }
    Algebra alg(p);
    for (int i = 0; i < p.M(); ++i) {
        Element power = alg.pow(alg.gen(i), l);
        if (!is_central_at(alg, power, l))
            throw NotCentral(p.names[i] + "^" + std::to_string(l) + " is not central at eps");
        out.central_powers.push_back(p.names[i] + "^" + std::to_string(l));
    }
    return out;
}

SpecElement quantum_adjoint(const Algebra& alg, const Element& u, const Element& a, int l) {
    if (!is_central_at(alg, u, l)) throw NotCentral("the acting element is not central at eps");
    Element comm = alg.multiply(u, a) - alg.multiply(a, u);
    SpecElement out(l);
    for (const auto& [m, c] : comm.terms()) out.add_term(m, divide_by_q_minus_eps(c, l));
    return out;
}

SpecElement poisson_bracket(const Algebra& alg, const Element& a, const Element& b, int l) {
    if (!is_central_at(alg, b, l)) throw NotCentral("second bracket argument is not central at eps");
    return quantum_adjoint(alg, a, b, l);
}

SpecElement theta_derivation(const std::vector<int>& weights, int l, const Element& a) {
    SpecElement out(l);
    for (const auto& [m, c] : a.terms()) {
        long w = 0;
        for (size_t k = 0; k < m.size() && k < weights.size(); ++k) w += static_cast<long>(weights[k]) * m[k];
        if (w == 0) continue;
        Cyclotomic factor = divide_by_q_minus_eps(RF::q_pow(static_cast<int>(w * l)) - RF(1), l);
        out.add_term(m, factor * specialize(c, l));
    }
    return out;
}

// ---------------------------------------------------------------- invariants

namespace {

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

}  // namespace

StratumInvariants stratum_invariants(const Stratum& st, int l) {
    if (!st.error.empty()) throw InadmissibleL("stratum " + mu_string(st.mu) + " has no chain: " + st.error);
    std::vector<Element> residues;
    for (const auto& r : st.residues) residues.push_back(r.value);
    Verdict v = st.l == l && st.eps_admissible ? *st.eps_admissible : residue_verdict_at(residues, l);
    if (v == Verdict::No) throw InadmissibleL("stratum " + mu_string(st.mu) + " is not admissible at eps");
    for (const auto& m : st.normal_form.pairs)
        if (std::gcd(static_cast<long>(m.get_si()), static_cast<long>(l)) != 1)
            throw InadmissibleL("l = " + std::to_string(l) + " shares a factor with the pair invariant " +
                                m.get_str());
    StratumInvariants out;
    out.dim = ipow(l, st.r);
    out.count = ipow(l, st.t);
    out.leaf_dim = 2 * st.r;
    out.caveats.push_back("assumes eps is outside the exceptional set E");
    out.caveats.push_back("count scoped to localized center");
    out.notes.push_back("dimension printed as l^r; the displayed l^{2r} variant disagrees with brute force");
    if (v == Verdict::Undetermined) out.notes.push_back("eps-admissibility undetermined for this stratum");
    return out;
}

// ---------------------------------------------------------------- center chart

std::string to_string(ChartGenerator::Kind k) {
    switch (k) {
        case ChartGenerator::Kind::H: return "h";
        case ChartGenerator::Kind::U: return "u";
        case ChartGenerator::Kind::Z: return "z";
        default: return "deleted";
    }
}

CenterChart center_chart(const Stratum& st, const Presentation& original, int l) {
    if (!st.error.empty()) throw DegenerateChart("stratum has no chain: " + st.error);
    CenterChart chart;
    chart.l = l;
    chart.names = st.chain.names;
    const int M = original.M();
    auto add_rows = [&](const IntMatrix& rows, int scale, ChartGenerator::Kind kind) {
        for (const auto& row : rows) {
            Monomial m(static_cast<size_t>(M), 0);
            for (size_t a = 0; a < row.size(); ++a) m[st.y_index[a]] = scale * static_cast<int>(row[a].get_si());
            chart.gens.push_back({kind, monomial_string(m, chart.names), m});
        }
    };
    add_rows(st.h_basis, l, ChartGenerator::Kind::H);
    add_rows(st.u_basis, l, ChartGenerator::Kind::U);
    add_rows(st.z_basis, 1, ChartGenerator::Kind::Z);
    for (int d : st.deleted) {
        Monomial m(static_cast<size_t>(M), 0);
        m[d] = l;
        chart.gens.push_back({ChartGenerator::Kind::Deleted, monomial_string(m, chart.names), m});
    }

    const size_t n = chart.gens.size();
    IntMatrix E(static_cast<size_t>(M), std::vector<Integer>(n, 0));
    for (size_t g = 0; g < n; ++g)
        for (int k = 0; k < M; ++k) E[k][g] = chart.gens[g].exponents[k];

    Algebra alg(st.chain);
    chart.bracket.assign(n, std::vector<std::vector<ChartTerm>>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = a + 1; b < n; ++b) {
            Element ga = Element::monomial(chart.gens[a].exponents);
            Element gb = Element::monomial(chart.gens[b].exponents);
            SpecElement br = poisson_bracket(alg, ga, gb, l);
            for (const auto& [m, c] : br.terms()) {
                std::vector<Integer> rhs(m.begin(), m.end());
                auto sol = solve_integer(E, rhs);
                if (!sol)
                    throw DegenerateChart("bracket {" + chart.gens[a].label + ", " + chart.gens[b].label +
                                          "} leaves the chart");
                ChartTerm t{c, {}};
                for (const auto& x : *sol) t.powers.push_back(static_cast<int>(x.get_si()));
                chart.bracket[a][b].push_back(t);
                chart.bracket[b][a].push_back({-c, t.powers});
            }
        }
    return chart;
}

// ---------------------------------------------------------------- stabilizer

namespace {

using CMat = linalg::Matrix<Cyclotomic>;

Cyclotomic power_value(const Cyclotomic& v, int n, const std::string& what) {
    if (n >= 0) return v.pow(n);
    if (v.is_zero()) throw DegenerateChart("character vanishes on the inverted chart generator " + what);
    return v.inverse().pow(-n);
}

}  // namespace

StabilizerAlgebra stabilizer(const CenterChart& chart, const std::vector<Cyclotomic>& chi, std::uint64_t seed,
                             int samples) {
    const int l = chart.l;
    const size_t n = chart.gens.size();
    if (chi.size() != n)
        throw InvalidArgument("character has " + std::to_string(chi.size()) + " values, chart has " +
                              std::to_string(n) + " generators");
    for (size_t g = 0; g < n; ++g) {
        auto kind = chart.gens[g].kind;
        if ((kind == ChartGenerator::Kind::H || kind == ChartGenerator::Kind::U || kind == ChartGenerator::Kind::Z) &&
            chi[g].is_zero())
            throw DegenerateChart("character vanishes on " + chart.gens[g].label +
                                  ", which is invertible on this stratum");
    }
    const Cyclotomic zero = Cyclotomic::zero(l), one = Cyclotomic::one(l);

    // Bivector at chi and the differentials of each bracket.
    CMat P(n, std::vector<Cyclotomic>(n, zero));
    std::vector<std::vector<std::vector<Cyclotomic>>> dB(n, std::vector<std::vector<Cyclotomic>>(n));
    for (size_t a = 0; a < n; ++a)
        for (size_t b = 0; b < n; ++b) {
            dB[a][b].assign(n, zero);
            for (const auto& t : chart.bracket[a][b]) {
                Cyclotomic val = t.coeff;
                for (size_t g = 0; g < n; ++g) val *= power_value(chi[g], t.powers[g], chart.gens[g].label);
                P[a][b] += val;
                for (size_t c = 0; c < n; ++c) {
                    if (t.powers[c] == 0) continue;
                    Cyclotomic d = t.coeff * Cyclotomic(l, Rational(t.powers[c]));
                    for (size_t g = 0; g < n; ++g)
                        d *= power_value(chi[g], g == c ? t.powers[g] - 1 : t.powers[g], chart.gens[g].label);
                    dB[a][b][c] += d;
                }
            }
        }

    StabilizerAlgebra out;
    out.chart_dim = static_cast<int>(n);
    out.bivector_rank = static_cast<int>(linalg::rank(P, n));
    out.basis = linalg::nullspace(P, n, zero, one);
    out.dim = static_cast<int>(out.basis.size());

    auto restricted_dim = [&](ChartGenerator::Kind keep) {
        CMat stack = P;
        for (size_t g = 0; g < n; ++g) {
            if (chart.gens[g].kind == keep) continue;
            std::vector<Cyclotomic> row(n, zero);
            row[g] = one;
            stack.push_back(row);
        }
        return static_cast<int>(n - linalg::rank(stack, n));
    };
    out.ideal_dim = restricted_dim(ChartGenerator::Kind::Deleted);
    out.toric_dim = restricted_dim(ChartGenerator::Kind::U);

    const size_t d = out.basis.size();
    // Coordinates in the kernel basis: solve basis^T x = v.
    CMat BT(n, std::vector<Cyclotomic>(d, zero));
    for (size_t i = 0; i < d; ++i)
        for (size_t g = 0; g < n; ++g) BT[g][i] = out.basis[i][g];
    out.structure.assign(d, std::vector<std::vector<Cyclotomic>>(d, std::vector<Cyclotomic>(d, zero)));
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j) {
            std::vector<Cyclotomic> v(n, zero);
            for (size_t a = 0; a < n; ++a)
                for (size_t b = 0; b < n; ++b) {
                    Cyclotomic w = out.basis[i][a] * out.basis[j][b];
                    if (w.is_zero()) continue;
                    for (size_t c = 0; c < n; ++c) v[c] += w * dB[a][b][c];
                }
            std::vector<Cyclotomic> x;
            if (!linalg::solve(BT, v, d, zero, x)) {
                out.notes.push_back("linearized bracket leaves the stabilizer for basis pair (" +
                                    std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
                continue;
            }
            out.structure[i][j] = x;
            for (const auto& c : x)
                if (!c.is_zero()) out.abelian = false;
        }
    for (size_t i = 0; i < d; ++i)
        for (size_t j = 0; j < d; ++j)
            for (size_t k = 0; k < d; ++k)
                if (out.structure[i][j][k] != -out.structure[j][i][k]) out.antisymmetric = false;
    // Jacobi: sum over cyclic (i,j,k) of [[b_i,b_j],b_k] = 0.
    auto bracket_vec = [&](const std::vector<Cyclotomic>& u, size_t k) {
        std::vector<Cyclotomic> r(d, zero);
        for (size_t m = 0; m < d; ++m)
            if (!u[m].is_zero())
                for (size_t t = 0; t < d; ++t) r[t] += u[m] * out.structure[m][k][t];
        return r;
    };
    for (size_t i = 0; i < d && out.jacobi; ++i)
        for (size_t j = 0; j < d && out.jacobi; ++j)
            for (size_t k = 0; k < d && out.jacobi; ++k) {
                auto a = bracket_vec(out.structure[i][j], k);
                auto b = bracket_vec(out.structure[j][k], i);
                auto c = bracket_vec(out.structure[k][i], j);
                for (size_t t = 0; t < d; ++t)
                    if (!(a[t] + b[t] + c[t]).is_zero()) out.jacobi = false;
            }

    // Exploratory rank: smallest centralizer over seeded random elements.
    out.rank_estimate = static_cast<int>(d);
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> coef(-5, 5);
    for (int s = 0; s < samples && d > 0; ++s) {
        std::vector<Cyclotomic> x(d, zero);
        for (auto& c : x) c = Cyclotomic(l, Rational(coef(rng)));
        CMat ad(d, std::vector<Cyclotomic>(d, zero));
        for (size_t j = 0; j < d; ++j)
            for (size_t i = 0; i < d; ++i)
                if (!x[i].is_zero())
                    for (size_t t = 0; t < d; ++t) ad[t][j] += x[i] * out.structure[i][j][t];
        int cdim = static_cast<int>(d - linalg::rank(ad, d));
        out.rank_estimate = std::min(out.rank_estimate, cdim);
    }
    out.notes.push_back("rank estimate is exploratory (minimal centralizer over random elements)");
    return out;
}

}  // namespace qsolv
