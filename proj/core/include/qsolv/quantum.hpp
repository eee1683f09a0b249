#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qsolv/algebra.hpp"
#include "qsolv/lattice.hpp"
#include "qsolv/strata.hpp"

namespace qsolv {

// An element of R_eps: PBW monomials with cyclotomic coefficients.
class SpecElement {
public:
    explicit SpecElement(int l = 0) : l_(l) {}
    int order() const { return l_; }
    const std::map<Monomial, Cyclotomic>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    Cyclotomic coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const Cyclotomic& c);

    SpecElement operator-() const;
    friend SpecElement operator+(const SpecElement& a, const SpecElement& b);
    friend SpecElement operator-(const SpecElement& a, const SpecElement& b) { return a + (-b); }
    friend SpecElement operator*(const Cyclotomic& c, const SpecElement& a);
    friend bool operator==(const SpecElement& a, const SpecElement& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const SpecElement& a, const SpecElement& b) { return !(a == b); }
    std::string to_string(const std::vector<std::string>& names) const;

private:
    int l_;
    std::map<Monomial, Cyclotomic> terms_;
};

SpecElement specialize(const Element& a, int l);

struct SpecializedAlgebra {
    Presentation presentation;
    int l = 0;
    AdmissibilityReport admissibility;
    std::vector<std::string> central_powers;  // generators whose l-th power was checked central
};

// Checks admissibility (conditions on exponents and the bound at least) and
// that every x_i^l is central at eps. Throws InadmissibleL or NotCentral.
SpecializedAlgebra specialize_algebra(const Presentation& p, int l);

// True if the image of u at eps commutes with every generator.
bool is_central_at(const Algebra& alg, const Element& u, int l);

// (u a - a u) / (q - eps) at q = eps. Throws NotCentral / NonDivisible.
SpecElement quantum_adjoint(const Algebra& alg, const Element& u, const Element& a, int l);
// {a, b} = D_a(b); both arguments must be central at eps.
SpecElement poisson_bracket(const Algebra& alg, const Element& a, const Element& b, int l);
// Diagonal derivation attached to a weight vector: a weight-m monomial is
// scaled by (q^{ml} - 1)/(q - eps) at q = eps.
SpecElement theta_derivation(const std::vector<int>& weights, int l, const Element& a);

struct StratumInvariants {
    long dim = 1;    // l^r
    long count = 1;  // l^t
    int leaf_dim = 0;  // 2r
    std::vector<std::string> caveats;
    std::vector<std::string> notes;
};

StratumInvariants stratum_invariants(const Stratum& st, int l);

// Finitely generated chart of the localized center of a stratum at eps.
struct ChartGenerator {
    enum class Kind { H, U, Z, Deleted };
    Kind kind;
    std::string label;
    Monomial exponents;  // in the chain presentation
};
std::string to_string(ChartGenerator::Kind k);

// A bracket value c * prod_g g^{n_g}.
struct ChartTerm {
    Cyclotomic coeff;
    std::vector<int> powers;
};

struct CenterChart {
    int l = 0;
    std::vector<std::string> names;  // chain generator names
    std::vector<ChartGenerator> gens;
    std::vector<std::vector<std::vector<ChartTerm>>> bracket;  // bracket[a][b]
};

CenterChart center_chart(const Stratum& st, const Presentation& original, int l);

struct StabilizerAlgebra {
    int chart_dim = 0;
    int bivector_rank = 0;
    int dim = 0;  // dim g(chi)
    // Basis of g(chi) as coefficient vectors over the chart differentials.
    std::vector<std::vector<Cyclotomic>> basis;
    // [b_i, b_j] = sum_k structure[i][j][k] b_k
    std::vector<std::vector<std::vector<Cyclotomic>>> structure;
    int ideal_dim = 0;   // dim of the part spanned by deleted-generator classes
    int toric_dim = 0;   // dim of the part spanned by u-classes
    bool antisymmetric = true;
    bool jacobi = true;
    bool abelian = true;
    int rank_estimate = 0;  // exploratory: minimal centralizer dimension
    std::vector<std::string> notes;
};

// chi lists values of the chart generators in chart order.
StabilizerAlgebra stabilizer(const CenterChart& chart, const std::vector<Cyclotomic>& chi, std::uint64_t seed = 1,
                             int samples = 50);

}  // namespace qsolv
