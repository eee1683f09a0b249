#include <doctest.h>

#include <random>

#include "../support/oracles.hpp"
#include "qsolv/algebra.hpp"
#include "qsolv/cauchon.hpp"
#include "qsolv/lattice.hpp"

using namespace qsolv;

namespace {

bool unimodular(const IntMatrix& u) {
    Integer d = oracle::det(u);
    return d == 1 || d == -1;
}

}  // namespace

TEST_CASE("smith form of a fixed matrix") {
    IntMatrix a = to_int_matrix({{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}});
    auto s = smith(a);
    CHECK(s.divisors == std::vector<Integer>{2, 6, 12});
    CHECK(oracle::mul(oracle::mul(s.U, a), s.V) == s.D);
}

TEST_CASE("smith form of rank-deficient and empty shapes") {
    auto s = smith(to_int_matrix({{1, 2}, {2, 4}, {3, 6}}));
    CHECK(s.divisors == std::vector<Integer>{1});
    auto z = smith(to_int_matrix({{0, 0}, {0, 0}}));
    CHECK(z.divisors.empty());
}

TEST_CASE("skew normal form of the quantum plane and a degenerate form") {
    auto nf = skew_normal_form(to_int_matrix({{0, 1}, {-1, 0}}));
    CHECK(nf.r == 1);
    CHECK(nf.pairs == std::vector<Integer>{1});
    CHECK(nf.kernel_rank == 0);
    auto zero = skew_normal_form(to_int_matrix({{0, 0}, {0, 0}}));
    CHECK(zero.r == 0);
    CHECK(zero.kernel_rank == 2);
    CHECK_THROWS(skew_normal_form(to_int_matrix({{0, 1}, {1, 0}})));
}

TEST_CASE("integer solutions") {
    IntMatrix a = to_int_matrix({{2, 0}, {0, 3}});
    auto x = solve_integer(a, {4, 9});
    REQUIRE(x);
    CHECK(*x == std::vector<Integer>{2, 3});
    CHECK(!solve_integer(a, {1, 0}));
}

TEST_CASE("admissible orders for the presets") {
    Presentation mq = quantum_matrices(2);
    auto prof = nilpotency_profile(mq);
    CHECK(prof.N == 2);
    auto yes = admissible_l(mq, prof, 3);
    CHECK(yes.admissible());
    auto no = admissible_l(mq, prof, 2);
    CHECK(!no.admissible());
    REQUIRE(!no.witnesses.empty());
    CHECK(no.witnesses.front().find("gcd(2, s_1=2)") != std::string::npos);
    Presentation qp = quantum_plane();
    CHECK(admissible_l(qp, nilpotency_profile(qp), 2).admissible());
}

TEST_CASE("property: smith forms reconstruct and match determinantal divisors") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> dim(1, 5);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix a = oracle::random_matrix(rng, dim(rng), dim(rng), -6, 6);
        auto s = smith(a);
        CHECK(oracle::mul(oracle::mul(s.U, a), s.V) == s.D);
        CHECK(unimodular(s.U));
        CHECK(unimodular(s.V));
        for (size_t k = 1; k < s.divisors.size(); ++k) CHECK(s.divisors[k] % s.divisors[k - 1] == 0);
        // d_k = D_k / D_{k-1}
        auto dd = oracle::determinantal_divisors(a);
        REQUIRE(dd.size() == s.divisors.size());
        Integer prev = 1;
        for (size_t k = 0; k < dd.size(); ++k) {
            CHECK(s.divisors[k] == dd[k] / prev);
            prev = dd[k];
        }
    }
}

TEST_CASE("property: skew normal forms are congruences with paired divisors") {
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<int> dim(1, 6);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix t = oracle::random_skew(rng, dim(rng), -4, 4);
        auto nf = skew_normal_form(t);
        CHECK(oracle::mul(oracle::mul(nf.U, t), transpose(nf.U)) == nf.form);
        CHECK(unimodular(nf.U));
        CHECK(2 * nf.r + nf.kernel_rank == static_cast<int>(t.size()));
        auto s = smith(t);
        std::vector<Integer> doubled;
        for (const auto& m : nf.pairs) {
            doubled.push_back(m);
            doubled.push_back(m);
        }
        CHECK(s.divisors == doubled);
        for (const auto& row : nf.kernel_basis()) {
            auto prod = oracle::mul({row}, t);
            for (const auto& x : prod[0]) CHECK(x == 0);
        }
    }
}
