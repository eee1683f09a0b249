#include <doctest.h>

#include <random>

#include "../support/random_elements.hpp"
#include "qsolv/algebra.hpp"
#include "qsolv/cauchon.hpp"
#include "qsolv/errors.hpp"

using namespace qsolv;

namespace {

RF q(int k = 1) { return RF::q_pow(k); }

Element mono(int M, std::initializer_list<std::pair<int, int>> powers, const RF& c = RF(1)) {
    Monomial m(static_cast<size_t>(M), 0);
    for (auto [i, e] : powers) m[i] = e;
    return Element::monomial(m, c);
}

}  // namespace

TEST_CASE("nilpotency orders") {
    Presentation w = quantum_weyl();
    CHECK(nilpotency_order(w, 0, Side::Right) == 2);
    Presentation mq = quantum_matrices(2);
    CHECK(nilpotency_order(mq, 0, Side::Right) == 2);
    CHECK(nilpotency_order(mq, 1, Side::Right) == 1);
    CHECK(nilpotency_profile(quantum_plane()).N == 1);
}

TEST_CASE("ad polynomial roots") {
    Presentation mq = quantum_matrices(2);
    mq.distinguished[3] = true;
    Algebra loc(mq);
    // conjugation by a22 on a11: roots q^0 and q^{-2}
    auto ad = ad_polynomial(loc, loc.gen(3), loc.gen(0));
    CHECK(ad.gamma_exponents == std::vector<int>{0, -2});
    auto closed = ad_polynomial_closed_form(loc, 3, 0);
    CHECK(closed.gamma_exponents == ad.gamma_exponents);

    Presentation w = quantum_weyl();
    w.distinguished[0] = true;
    Algebra wl(w);
    CHECK(ad_polynomial(wl, wl.gen(0), wl.gen(1)).gamma_exponents == std::vector<int>{1, 0});
}

TEST_CASE("hat of a11 at the pivot a22") {
    auto inv = invert_pivot(quantum_matrices(2), 3);
    // a11 - q a12 a21 a22^{-1}
    Element expect = mono(4, {{0, 1}}) + mono(4, {{1, 1}, {2, 1}, {3, -1}}, -q(1));
    CHECK(inv.hats[0] == expect);
    CHECK(inv.hats[1] == mono(4, {{1, 1}}));
    CHECK(inv.hats[3] == mono(4, {{3, 1}}));
    CHECK(inv.result.S == quantum_matrices(2).S);
    CHECK(validate(inv.result).ok());
    CHECK(inv.result.is_distinguished(3));
}

TEST_CASE("hats q-commute with the pivot") {
    for (auto [name, alpha] : {std::pair{"quantum-matrices-2", 3}, {"quantum-matrices-2", 0}, {"quantum-weyl", 0},
                               {"quantum-weyl", 1}}) {
        CAPTURE(name);
        CAPTURE(alpha);
        Presentation p = preset(name);
        auto inv = invert_pivot(p, alpha);
        const Algebra& src = *inv.source;
        for (int j = 0; j < p.M(); ++j) {
            if (j == alpha) continue;
            // x_a hat_j = q^{s_aj} hat_j x_a
            CHECK(src.q_commutator(src.gen(alpha), inv.hats[j], p.S[alpha][j]).is_zero());
        }
        CHECK(validate(inv.result).ok());
    }
}

TEST_CASE("quantum Weyl hat of x2 at x1") {
    auto inv = invert_pivot(quantum_weyl(), 0);
    // x2 + 1/(q - 1) x1^{-1}
    Element expect = mono(2, {{1, 1}}) + mono(2, {{0, -1}}, RF(1) / (q(1) - RF(1)));
    CHECK(inv.hats[1] == expect);
    // in the new generators the algebra is a quantum torus-plane: no tails
    CHECK(inv.result.tails.empty());
}

TEST_CASE("property: phi inverts evaluate") {
    std::mt19937_64 rng(8);
    auto inv = invert_pivot(quantum_matrices(2), 3);
    Algebra target(inv.result);
    for (int trial = 0; trial < 20; ++trial) {
        Element a = testing_support::random_element(rng, target, 2, 2);
        Element value;
        for (const auto& [m, c] : a.terms()) value += c * inv.evaluate(m);
        CHECK(inv.phi(value) == a);
    }
}
