#include "qsolv/cauchon.hpp"

#include <algorithm>
#include <cstdlib>

#include "qsolv/errors.hpp"
#include "qsolv/linalg.hpp"

namespace qsolv {

namespace {

bool acts_on(int alpha, int j, Side side) { return side == Side::Right ? j > alpha : j < alpha; }

std::string side_name(Side side) { return side == Side::Right ? "delta_" : "delta'_"; }

}  // namespace

int nilpotency_order_on(const Algebra& alg, int alpha, int j, Side side, int cap) {
    if (cap < 1) throw InvalidArgument("cap must be at least 1");
    Element v = alg.gen(j);
    for (int n = 1; n <= cap; ++n) {
        v = delta_apply(alg, alpha, v, side);
        if (v.is_zero()) return n;
    }
    throw CapExceeded(side_name(side) + std::to_string(alpha + 1) + " is not nilpotent on " +
                      alg.presentation().names[j] + " within " + std::to_string(cap) + " steps");
}

int nilpotency_order(const Algebra& alg, int alpha, Side side, int cap) {
    int N = 1;
    for (int j = 0; j < alg.M(); ++j)
        if (acts_on(alpha, j, side)) N = std::max(N, nilpotency_order_on(alg, alpha, j, side, cap));
    return N;
}

int nilpotency_order(const Presentation& p, int alpha, Side side, int cap) {
    Algebra alg(p);
    return nilpotency_order(alg, alpha, side, cap);
}

NilpotencyProfile nilpotency_profile(const Presentation& p, int cap) {
    Algebra alg(p);
    NilpotencyProfile prof;
    for (int a = 0; a < p.M(); ++a) {
        prof.N_right.push_back(nilpotency_order(alg, a, Side::Right, cap));
        prof.N_left.push_back(nilpotency_order(alg, a, Side::Left, cap));
        prof.N = std::max({prof.N, prof.N_right.back(), prof.N_left.back()});
    }
    return prof;
}

// ---------------------------------------------------------------- Ad polynomials

AdPolynomial ad_polynomial(const Algebra& alg, const Element& x, const Element& a, int bound) {
    Element xinv = alg.pow(x, -1);
    std::vector<Element> iterates{a};
    for (int N = 1; N <= bound; ++N) {
        iterates.push_back(alg.multiply(alg.multiply(x, iterates.back()), xinv));
        // Express iterates[N] in terms of iterates[0..N-1].
        std::map<Monomial, int> index;
        for (const auto& v : iterates)
            for (const auto& [m, c] : v.terms()) index.try_emplace(m, static_cast<int>(index.size()));
        linalg::Matrix<RF> A(index.size(), std::vector<RF>(static_cast<size_t>(N), RF(0)));
        std::vector<RF> b(index.size(), RF(0));
        for (int k = 0; k < N; ++k)
            for (const auto& [m, c] : iterates[k].terms()) A[index[m]][k] = c;
        for (const auto& [m, c] : iterates[N].terms()) b[index[m]] = c;
        std::vector<RF> coef;
        if (!linalg::solve(A, b, static_cast<size_t>(N), RF(0), coef)) continue;
        // t^N - sum_k coef_k t^k
        std::vector<RF> poly;
        for (const auto& c : coef) poly.push_back(-c);
        poly.push_back(RF(1));
        auto roots = gamma_root_exponents(poly);
        if (!roots) throw NotGammaSplit("annihilating polynomial of degree " + std::to_string(N) +
                                        " has roots outside the powers of q");
        return {x, a, *roots};
    }
    throw BoundExceeded("no linear dependence among the first " + std::to_string(bound + 1) + " Ad-iterates");
}

AdPolynomial ad_polynomial_closed_form(const Algebra& alg, int alpha, int j, int cap) {
    const Presentation& p = alg.presentation();
    if (j == alpha) throw InvalidArgument("pivot and target coincide");
    Side side = j > alpha ? Side::Right : Side::Left;
    int N = nilpotency_order_on(alg, alpha, j, side, cap);
    CN1Exponents ex = p.exponents();
    const auto& s = side == Side::Right ? ex.right[alpha] : ex.left[alpha];
    if (N > 1 && !s) throw InvalidArgument("derivation is nonzero but its q-skew exponent is undefined");
    AdPolynomial out{alg.gen(alpha), alg.gen(j), {}};
    for (int i = 0; i < N; ++i) out.gamma_exponents.push_back(p.S[alpha][j] + i * s.value_or(0));
    std::sort(out.gamma_exponents.rbegin(), out.gamma_exponents.rend());
    return out;
}

// ---------------------------------------------------------------- hat map

Element hat_element(const Algebra& loc, int alpha, const Element& a, Side side, int cap) {
    if (!loc.invertible(alpha)) throw InvalidArgument("pivot must be invertible in the ambient algebra");
    const Presentation& p = loc.presentation();
    Element result = a;
    std::optional<int> s;
    for (int n = 1; n <= cap + 1; ++n) {
        // delta^n tau^{-n}(a)
        Element tw = tau_apply(loc, alpha, a, side, -n);
        for (int k = 0; k < n; ++k) tw = delta_apply(loc, alpha, tw, side);
        if (tw.is_zero()) return result;
        if (!s) {
            CN1Exponents ex = p.exponents();
            s = side == Side::Right ? ex.right[alpha] : ex.left[alpha];
            if (!s || *s == 0)
                throw InvalidArgument("hat map needs a nonzero q-skew exponent at " + p.names[alpha]);
        }
        RF c = (RF(1) - RF::q_pow(*s)).pow(-n) / qfact(n, *s);
        result += c * loc.multiply(tw, loc.gen(alpha, -n));
    }
    throw CapExceeded("hat series at " + p.names[alpha] + " did not terminate");
}

Element hat_generator(const Algebra& loc, int alpha, int j, int cap) {
    if (j == alpha) return loc.gen(alpha);
    if (loc.presentation().is_distinguished(j)) return loc.gen(j);
    return hat_element(loc, alpha, loc.gen(j), j > alpha ? Side::Right : Side::Left, cap);
}

// ---------------------------------------------------------------- pivot inversion

Element PivotInversion::evaluate(const Monomial& m) const {
    Element out = source->one();
    for (int k = 0; k < source->M(); ++k) {
        if (m[k] == 0) continue;
        Element factor;
        if (result.is_distinguished(k))
            factor = source->gen(k, m[k]);
        else if (m[k] > 0)
            factor = source->pow(hats[k], m[k]);
        else
            throw SupportViolation("negative power of hatted generator " + result.names[k]);
        out = source->multiply(out, factor);
    }
    return out;
}

Element PivotInversion::phi(const Element& a) const {
    const int M = source->M();
    // Leading-term order: non-distinguished slots ranked by distance from
    // the pivot, farthest first. Hat corrections and reordering tails only
    // ever trade a letter for letters closer to the pivot.
    std::vector<int> order;
    for (int k = 0; k < M; ++k)
        if (!result.is_distinguished(k)) order.push_back(k);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        int dx = std::abs(x - alpha), dy = std::abs(y - alpha);
        return dx != dy ? dx > dy : x > y;
    });
    auto key_less = [&](const Monomial& u, const Monomial& v) {
        for (int k : order)
            if (u[k] != v[k]) return u[k] < v[k];
        return false;
    };
    Element rest = a, out;
    for (int guard = 0; !rest.is_zero(); ++guard) {
        if (guard > 100000) throw TailShapeViolation("rewriting in hatted generators did not terminate");
        auto lead = rest.terms().begin();
        for (auto it = rest.terms().begin(); it != rest.terms().end(); ++it)
            if (key_less(lead->first, it->first)) lead = it;
        Monomial m = lead->first;
        RF c = lead->second;
        for (int k : order)
            if (m[k] < 0) throw TailShapeViolation("element needs a negative power of " + result.names[k]);
        out.add_term(m, c);
        rest = rest - c * evaluate(m);
    }
    return out;
}

PivotInversion invert_pivot(const Presentation& p, int alpha, int cap) {
    const int M = p.M();
    if (alpha < 0 || alpha >= M) throw InvalidArgument("pivot index out of range");
    if (p.is_distinguished(alpha)) throw InvalidArgument(p.names[alpha] + " is already distinguished");

    PivotInversion inv;
    inv.alpha = alpha;
    auto loc = std::make_shared<Algebra>(p, std::vector<int>{alpha});
    inv.source = loc;

    CN1Exponents ex = p.exponents();
    for (Side side : {Side::Right, Side::Left}) {
        int N = nilpotency_order(*loc, alpha, side, cap);
        const auto& s = side == Side::Right ? ex.right[alpha] : ex.left[alpha];
        if (N > 1 && s)
            for (int t = 1; t < N; ++t) inv.denominators.push_back(RF::q_pow(*s * t) - RF(1));
    }
    for (int j = 0; j < M; ++j) inv.hats.push_back(hat_generator(*loc, alpha, j, cap));

    inv.result = p;
    inv.result.distinguished[alpha] = true;
    inv.result.tails.clear();
    inv.result.pivot_chain.push_back(alpha);
    for (const auto& d : inv.denominators) inv.result.denominators.push_back(d);

    for (int i = 0; i < M; ++i)
        for (int j = i + 1; j < M; ++j) {
            Element comm = loc->q_commutator(inv.hats[i], inv.hats[j], p.S[i][j]);
            if (comm.is_zero()) continue;
            std::string label = "(" + p.names[i] + "," + p.names[j] + ")";
            if (i == alpha || j == alpha)
                throw TailShapeViolation("hatted generator fails to q-commute with the pivot at " + label);
            Element tail = inv.phi(comm);
            for (const auto& [m, c] : tail.terms())
                for (int k = 0; k < M; ++k) {
                    if (m[k] == 0) continue;
                    if (k <= i || k >= j)
                        throw TailShapeViolation("new relation " + label + " involves " + p.names[k]);
                    if (m[k] < 0 && !inv.result.is_distinguished(k))
                        throw TailShapeViolation("new relation " + label + " inverts " + p.names[k]);
                }
            inv.result.tails[{i, j}] = tail;
        }
    return inv;
}

}  // namespace qsolv
