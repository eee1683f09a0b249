#include <doctest.h>

#include "qsolv/errors.hpp"
#include "qsolv/oracle.hpp"
#include "qsolv/quantum.hpp"

using namespace qsolv;

namespace {

Cyclotomic c(int l, long v) { return Cyclotomic(l, Rational(v)); }

// Dual numbers Q(eps)[t]/(t^2) as a bare structure-constant fixture.
FiniteDimAlgebra dual_numbers(int l) {
    FiniteDimAlgebra A;
    A.l = l;
    A.names = {"t"};
    A.basis = {{0}, {1}};
    A.table.assign(2, std::vector<std::vector<std::pair<int, Cyclotomic>>>(2));
    A.table[0][0] = {{0, Cyclotomic::one(l)}};
    A.table[0][1] = {{1, Cyclotomic::one(l)}};
    A.table[1][0] = {{1, Cyclotomic::one(l)}};
    return A;
}

int sum_of_squares(const std::vector<int>& ds) {
    int s = 0;
    for (int d : ds) s += d * d;
    return s;
}

}  // namespace

TEST_CASE("quantum plane fibers at l = 3") {
    const int l = 3;
    auto full = fiber_algebra(quantum_plane(), l, {c(l, 1), c(l, 1)});
    CHECK(full.dim() == 9);
    CHECK(full.check_associativity());
    auto J = radical(full);
    CHECK(J.empty());
    auto b = blocks(full, J);
    CHECK(b.count == 1);
    CHECK(b.uniform_simple_dim == 3);

    auto half = fiber_algebra(quantum_plane(), l, {c(l, 1), c(l, 0)});
    auto Jh = radical(half);
    CHECK(Jh.size() == 6);
    CHECK(is_nilpotent(half, Jh));
    auto bh = blocks(half, Jh);
    CHECK(bh.count == 3);
    CHECK(bh.simple_dims == std::vector<int>{1, 1, 1});

    auto local = fiber_algebra(quantum_plane(), l, {c(l, 0), c(l, 0)});
    auto Jl = radical(local);
    CHECK(Jl.size() == 8);
    CHECK(blocks(local, Jl).count == 1);
}

TEST_CASE("quiver of the quantum plane fiber over (1, 0)") {
    const int l = 3;
    auto A = fiber_algebra(quantum_plane(), l, {c(l, 1), c(l, 0)});
    auto J = radical(A);
    auto e = block_idempotents(A, J);
    REQUIRE(e.size() == 3);
    Vec sum = A.zero();
    for (size_t i = 0; i < e.size(); ++i) {
        sum = A.add(sum, e[i]);
        CHECK(A.multiply(e[i], e[i]) == e[i]);
        for (size_t j = 0; j < e.size(); ++j)
            if (i != j) CHECK(A.multiply(e[i], e[j]) == A.zero());
    }
    CHECK(sum == A.unit());
    auto q = quiver(A, J, e);
    CHECK(q.vertices == 3);
    CHECK(q.edges.size() == 6);
    for (auto [i, j] : q.edges) CHECK(i != j);
    CHECK(q.edges_j2.size() == 3);
}

TEST_CASE("semisimple and local fibers have no wedges") {
    const int l = 3;
    auto A = fiber_algebra(quantum_plane(), l, {c(l, 1), c(l, 1)});
    auto J = radical(A);
    auto q = quiver(A, J, block_idempotents(A, J));
    CHECK(q.vertices == 1);
    CHECK(q.edges.empty());
    auto L = fiber_algebra(quantum_plane(), l, {c(l, 0), c(l, 0)});
    auto JL = radical(L);
    auto ql = quiver(L, JL, block_idempotents(L, JL));
    CHECK(ql.vertices == 1);
    CHECK(ql.edges.size() == 1);  // the radical itself is a loop at the only vertex
}

TEST_CASE("dual numbers") {
    auto A = dual_numbers(3);
    auto J = radical(A);
    REQUIRE(J.size() == 1);
    CHECK(J[0][0].is_zero());
    CHECK(is_nilpotent(A, J));
    CHECK(blocks(A, J).count == 1);
}

TEST_CASE("quantum Weyl localized fiber") {
    const int l = 3;
    auto st = build_stratum(quantum_weyl(), {0, 1});
    auto A = stratum_fiber(st, l, {c(l, 1), c(l, 1)});
    auto J = radical(A);
    auto b = blocks(A, J);
    CHECK(b.count == 1);
    CHECK(b.uniform_simple_dim == 3);
}

TEST_CASE("fiber preconditions") {
    const int l = 3;
    CHECK_THROWS_AS(fiber_algebra(quantum_matrices(3), l, std::vector<Cyclotomic>(9, c(l, 1)), 4096), CapExceeded);
    Presentation p = quantum_plane();
    p.distinguished[0] = true;
    CHECK_THROWS_AS(fiber_algebra(p, l, {c(l, 0), c(l, 1)}), InvalidArgument);
}

TEST_CASE("roots in cyclotomic fields") {
    const int l = 3;
    auto e = Cyclotomic::epsilon(l);
    // t^3 - 1 has the three cube roots of unity
    auto r = roots_in_field({c(l, -1), c(l, 0), c(l, 0), c(l, 1)}, l);
    CHECK(r.size() == 3);
    CHECK(lth_root(c(l, 8), l) == c(l, 2));
    CHECK(lth_root(c(l, -27), l) == c(l, -3));
    auto root_e = lth_root(e, l);
    CHECK(!root_e);  // a primitive ninth root is not in Q(e_3)
    auto fifth = lth_root(Cyclotomic::epsilon(5, 2), 5);
    CHECK(!fifth);
    // t^2 + 3 splits over Q(e_3): roots +-(1 + 2e)
    auto sq = roots_in_field({c(l, 3), c(l, 0), c(l, 1)}, l);
    CHECK(sq.size() == 2);
}

TEST_CASE("clock and shift models") {
    const int l = 3;
    auto one = clock_shift({1}, {c(l, 1), c(l, 1)}, l);
    CHECK(one.dim == 3);
    CHECK(one.relations_ok);
    CHECK(one.character_ok);
    auto two = clock_shift({2}, {c(l, 8), c(l, -1)}, l);
    CHECK(two.relations_ok);
    CHECK(two.character_ok);
    auto pair = clock_shift({1, 1}, {c(2, 1), c(2, 1), c(2, 1), c(2, 1)}, 2);
    CHECK(pair.dim == 4);
    CHECK(pair.relations_ok);
    CHECK(pair.character_ok);
    CHECK_THROWS_AS(clock_shift({1}, {Cyclotomic::epsilon(l), c(l, 1)}, l), RootExtractionFailed);
    CHECK_THROWS_AS(clock_shift({3}, {c(l, 1), c(l, 1)}, l), InadmissibleL);
}

TEST_CASE("e_lambda idempotents on the quantum plane fiber") {
    const int l = 3;
    auto A = fiber_algebra(quantum_plane(), l, {c(l, 1), c(l, 0)});
    Vec u = A.basis_vector(3);  // x1
    REQUIRE(A.basis[3] == Monomial{1, 0});
    Vec sum = A.zero();
    std::vector<Vec> es;
    for (int k = 0; k < l; ++k) {
        Vec e = e_lambda(A, {u}, {Cyclotomic::epsilon(l, k)});
        CHECK(A.multiply(e, e) == e);
        CHECK(e != A.zero());
        es.push_back(e);
        sum = A.add(sum, e);
    }
    CHECK(sum == A.unit());
    for (size_t i = 0; i < es.size(); ++i)
        for (size_t j = 0; j < es.size(); ++j)
            if (i != j) CHECK(A.multiply(es[i], es[j]) == A.zero());
    // lambda = 2 has lambda^3 != 1: the sum is neither zero nor idempotent
    Vec bad = e_lambda(A, {u}, {c(l, 2)});
    CHECK(bad != A.zero());
    CHECK(A.multiply(bad, bad) != bad);
}

TEST_CASE("property: Wedderburn dimensions add up") {
    const int l = 3;
    for (const char* name : {"quantum-plane", "quantum-weyl"})
        for (const auto& st : stratify(preset(name))) {
            auto A = stratum_fiber(st, l, std::vector<Cyclotomic>(st.y_index.size(), c(l, 1)));
            auto J = radical(A);
            CHECK(is_nilpotent(A, J));
            auto b = blocks(A, J);
            if (!b.simple_dims.empty()) CHECK(sum_of_squares(b.simple_dims) == b.semisimple_dim);
            CHECK(static_cast<int>(b.simple_dims.size()) == b.count);
        }
}
