#include <doctest.h>

#include <set>

#include "../support/oracles.hpp"
#include "qsolv/algebra.hpp"
#include "qsolv/strata.hpp"

using namespace qsolv;

namespace {

std::set<std::vector<int>> admissible_sets(const std::vector<Stratum>& strata) {
    std::set<std::vector<int>> out;
    for (const auto& st : strata)
        if (st.C_admissible == Verdict::Yes) out.insert(st.mu);
    return out;
}

const Stratum& find(const std::vector<Stratum>& strata, std::vector<int> mu) {
    for (const auto& st : strata)
        if (st.mu == mu) return st;
    throw std::runtime_error("stratum not listed");
}

}  // namespace

TEST_CASE("quantum plane: every stratum is admissible") {
    auto strata = stratify(quantum_plane());
    REQUIRE(strata.size() == 4);
    for (const auto& st : strata) CHECK(st.C_admissible == Verdict::Yes);
    CHECK(find(strata, {0}).t == 1);
    CHECK(find(strata, {0, 1}).r == 1);
    CHECK(find(strata, {}).k() == 0);
}

TEST_CASE("quantum Weyl: exactly {1} and {1,2}") {
    auto strata = stratify(quantum_weyl());
    CHECK(admissible_sets(strata) == std::set<std::vector<int>>{{0}, {0, 1}});
    CHECK(find(strata, {}).C_admissible == Verdict::No);
    CHECK(find(strata, {1}).C_admissible == Verdict::No);
}

TEST_CASE("quantum 2x2 matrices against the diagram enumerator") {
    auto strata = stratify(quantum_matrices(2));
    CHECK(strata.size() == 16);
    auto sets = admissible_sets(strata);
    CHECK(sets.size() == 14);
    CHECK(sets == oracle::cauchon_pivot_sets(2, 2));
    const auto& full = find(strata, {0, 1, 2, 3});
    CHECK(full.r == 1);
    CHECK(full.t == 0);
    CHECK(full.p == 2);
}

TEST_CASE("quantum 3x3 matrices against the diagram enumerator") {
    auto sets = admissible_sets(stratify(quantum_matrices(3)));
    auto expect = oracle::cauchon_pivot_sets(3, 3);
    CHECK(expect.size() == 230);
    CHECK(sets == expect);
}

TEST_CASE("eps verdicts are recorded when l is given") {
    StratifyOptions o;
    o.l = 3;
    for (const auto& st : stratify(quantum_matrices(2), o)) {
        REQUIRE(st.eps_admissible);
        CHECK(*st.eps_admissible == st.C_admissible);
        CHECK(st.epsD_admissible == st.eps_admissible);
    }
}

TEST_CASE("residue verdicts") {
    Element zero;
    Element single = Element::monomial({1, 0}, RF(2));
    Element two = single + Element::monomial({0, 1}, RF(1));
    CHECK(residue_verdict({zero, zero}) == Verdict::Yes);
    CHECK(residue_verdict({zero, single}) == Verdict::No);
    CHECK(residue_verdict({two}) == Verdict::Undetermined);
    // q^3 - 1 vanishes at a cube root of unity
    Element vanishing = Element::monomial({1, 0}, RF::q_pow(3) - RF(1));
    CHECK(residue_verdict({vanishing}) == Verdict::No);
    CHECK(residue_verdict_at({vanishing}, 3) == Verdict::Yes);
}

TEST_CASE("build_stratum agrees with the enumeration") {
    auto all = stratify(quantum_matrices(2));
    for (const auto& st : all) {
        Stratum one = build_stratum(quantum_matrices(2), st.mu);
        CHECK(one.C_admissible == st.C_admissible);
        CHECK(one.r == st.r);
        CHECK(one.t == st.t);
        CHECK(one.p == st.p);
    }
}

TEST_CASE("property: y-split ranks add up") {
    for (const char* name : {"quantum-plane", "quantum-weyl", "quantum-matrices-2", "quantum-affine-3"})
        for (const auto& st : stratify(preset(name))) {
            CAPTURE(name);
            CAPTURE(mu_string(st.mu));
            CHECK(2 * st.r + st.t + st.p == st.k());
            CHECK(static_cast<int>(st.h_basis.size()) == 2 * st.r);
            CHECK(static_cast<int>(st.u_basis.size()) == st.t);
            CHECK(static_cast<int>(st.z_basis.size()) == st.p);
            // z rows commute with every y and have zero weight on the deleted generators
            const Presentation p = preset(name);
            for (const auto& z : st.z_basis)
                for (int g = 0; g < p.M(); ++g) {
                    Integer w = 0;
                    for (int a = 0; a < st.k(); ++a) w += z[a] * p.S[st.y_index[a]][g];
                    CHECK(w == 0);
                }
        }
}
