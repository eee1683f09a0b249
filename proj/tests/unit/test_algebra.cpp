#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "../support/random_elements.hpp"
#include "qsolv/algebra.hpp"
#include "qsolv/errors.hpp"

using namespace qsolv;
using testing_support::random_element;

namespace {

RF q(int k = 1) { return RF::q_pow(k); }

Element mono(int M, std::initializer_list<std::pair<int, int>> powers, const RF& c = RF(1)) {
    Monomial m(static_cast<size_t>(M), 0);
    for (auto [i, e] : powers) m[i] = e;
    return Element::monomial(m, c);
}

}  // namespace

TEST_CASE("every preset validates") {
    for (const auto& name : preset_names()) {
        CAPTURE(name);
        auto v = validate(preset(name));
        CHECK(v.ok());
    }
    CHECK_THROWS_AS(preset("no-such-algebra"), InvalidArgument);
}

TEST_CASE("quantum plane rewriting") {
    Algebra alg(quantum_plane());
    // x2 x1 = q^{-1} x1 x2
    CHECK(alg.multiply(alg.gen(1), alg.gen(0)) == mono(2, {{0, 1}, {1, 1}}, q(-1)));
    // x2^2 x1^3 = q^{-6} x1^3 x2^2
    CHECK(alg.multiply(alg.gen(1, 2), alg.gen(0, 3)) == mono(2, {{0, 3}, {1, 2}}, q(-6)));
}

TEST_CASE("quantum Weyl rewriting") {
    Algebra alg(quantum_weyl());
    // x1 x2 = q x2 x1 + 1, so x2 x1 = q^{-1} x1 x2 - q^{-1}
    Element expect = mono(2, {{0, 1}, {1, 1}}, q(-1)) + mono(2, {}, -q(-1));
    CHECK(alg.multiply(alg.gen(1), alg.gen(0)) == expect);
}

TEST_CASE("quantum matrices satisfy the textbook relations") {
    Algebra alg(quantum_matrices(2));
    auto a = [&](int i, int j) { return alg.gen(2 * (i - 1) + (j - 1)); };
    auto comm = [&](const Element& x, const Element& y, int k) { return alg.q_commutator(x, y, k); };
    CHECK(comm(a(1, 1), a(1, 2), 1).is_zero());
    CHECK(comm(a(1, 1), a(2, 1), 1).is_zero());
    CHECK(comm(a(1, 2), a(2, 2), 1).is_zero());
    CHECK(comm(a(2, 1), a(2, 2), 1).is_zero());
    CHECK(comm(a(1, 2), a(2, 1), 0).is_zero());
    CHECK(comm(a(1, 1), a(2, 2), 0) == (q(1) - q(-1)) * alg.multiply(a(1, 2), a(2, 1)));
    // The quantum determinant a11 a22 - q a12 a21 is central.
    Element det = alg.multiply(a(1, 1), a(2, 2)) - q(1) * alg.multiply(a(1, 2), a(2, 1));
    for (int g = 0; g < 4; ++g) CHECK(comm(det, alg.gen(g), 0).is_zero());
}

TEST_CASE("invalid presentations are rejected") {
    Presentation p = quantum_plane();
    p.S[1][0] = 2;  // not skew
    CHECK(!validate(p).ok());
    Presentation t = quantum_affine_space(2, {{0, 1}, {-1, 0}});
    t.tails[{0, 1}] = mono(2, {{0, 1}});  // tail must avoid x1 and x2
    CHECK(!validate(t).ok());
    // x1 x3 = q x3 x1 + x2 fails to be consistent with x2 q-commuting
    // with both ends at these exponents.
    Presentation d = quantum_affine_space(3, {{0, 1, 1}, {-1, 0, 1}, {-1, -1, 0}});
    d.tails[{0, 2}] = mono(3, {{1, 1}});
    CHECK(!validate(d).ok());
}

TEST_CASE("distinguished generators carry inverses") {
    Presentation p = quantum_plane();
    p.distinguished[0] = true;
    Algebra alg(p);
    Element inv = alg.gen(0, -1);
    CHECK(alg.multiply(inv, alg.gen(0)) == alg.one());
    // x2 x1^{-1} = q x1^{-1} x2
    CHECK(alg.multiply(alg.gen(1), inv) == mono(2, {{0, -1}, {1, 1}}, q(1)));
    CHECK_THROWS(alg.gen(1, -1));
}

TEST_CASE("tau and delta on the quantum Weyl algebra") {
    Algebra alg(quantum_weyl());
    // x1 a = tau(a) x1 + delta(a) with a = x2: tau(x2) = q x2, delta(x2) = 1
    Element tau = tau_apply(alg, 0, alg.gen(1), Side::Right);
    Element delta = delta_apply(alg, 0, alg.gen(1), Side::Right);
    CHECK(alg.multiply(alg.gen(0), alg.gen(1)) == alg.multiply(tau, alg.gen(0)) + delta);
    CHECK(delta == alg.one());
}

TEST_CASE("property: products agree with explicit representations") {
    std::mt19937_64 rng(5);
    struct Case {
        Presentation p;
        std::vector<oracle::Operator> rep;
        std::vector<int> start;
    };
    std::vector<Case> cases{{quantum_plane(), oracle::plane_representation(1), {1, 2}},
                            {quantum_weyl(), oracle::weyl_representation(1), {3}}};
    for (auto& c : cases) {
        Algebra alg(c.p);
        oracle::Poly f = oracle::single(c.start, RF(1));
        for (int trial = 0; trial < 25; ++trial) {
            Element a = random_element(rng, alg, 3), b = random_element(rng, alg, 3);
            CHECK(oracle::act(alg.multiply(a, b), c.rep, f) ==
                  oracle::act(a, c.rep, oracle::act(b, c.rep, f)));
        }
    }
}

TEST_CASE("property: associativity, unit and relations on random triples") {
    std::mt19937_64 rng(17);
    for (const char* name : {"quantum-plane", "quantum-weyl", "quantum-matrices-2", "quantum-affine-3"}) {
        CAPTURE(name);
        Algebra alg(preset(name));
        for (int trial = 0; trial < 30; ++trial) {
            Element a = random_element(rng, alg), b = random_element(rng, alg), c = random_element(rng, alg);
            CHECK(alg.multiply(alg.multiply(a, b), c) == alg.multiply(a, alg.multiply(b, c)));
            CHECK(alg.multiply(alg.one(), a) == a);
            CHECK(alg.multiply(a, alg.one()) == a);
        }
        for (int i = 0; i < alg.M(); ++i)
            for (int j = i + 1; j < alg.M(); ++j) CHECK(testing_support::relation(alg, i, j).is_zero());
    }
}
