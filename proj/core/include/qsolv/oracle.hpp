#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qsolv/algebra.hpp"
#include "qsolv/linalg.hpp"
#include "qsolv/scalars.hpp"
#include "qsolv/strata.hpp"

namespace qsolv {

using Vec = std::vector<Cyclotomic>;
using CMatrix = linalg::Matrix<Cyclotomic>;

// A finite-dimensional algebra over Q(eps) given by structure constants on a
// monomial basis.
struct FiniteDimAlgebra {
    int l = 0;
    std::vector<std::string> names;
    std::vector<Monomial> basis;
    // table[i][j] = sparse product of basis elements i and j
    std::vector<std::vector<std::vector<std::pair<int, Cyclotomic>>>> table;
    int unit_index = 0;

    std::size_t dim() const { return basis.size(); }
    Vec zero() const;
    Vec unit() const;
    Vec basis_vector(std::size_t i) const;
    Vec multiply(const Vec& a, const Vec& b) const;
    Vec add(const Vec& a, const Vec& b) const;
    Vec scale(const Cyclotomic& c, const Vec& a) const;
    // Exhaustive below `exhaustive_below` basis size, else `samples` random triples.
    bool check_associativity(int samples = 200, std::uint64_t seed = 1, std::size_t exhaustive_below = 16) const;
    std::string to_string(const Vec& v) const;
};

// R_eps modulo x_i^l = chi_i. Zero values are allowed only on generators that
// are not inverted. Throws CapExceeded above `cap` basis elements and
// NotCentral when some x_i^l fails to be central at eps.
FiniteDimAlgebra fiber_algebra(const Presentation& p, int l, const std::vector<Cyclotomic>& chi, int cap = 4096);
// Fiber of a stratum's chain presentation over a localized character: the
// y's take the given nonzero values (one per y_index entry), the deleted
// generators' l-th powers vanish.
FiniteDimAlgebra stratum_fiber(const Stratum& st, int l, const std::vector<Cyclotomic>& y_values, int cap = 4096);

// Basis (rows) of the Jacobson radical, via the kernel of the trace form.
CMatrix radical(const FiniteDimAlgebra& A);
// True if the span of `J` is nilpotent (checked by powering).
bool is_nilpotent(const FiniteDimAlgebra& A, const CMatrix& J);

struct BlockData {
    int count = 0;            // number of simple blocks, dim Z(A/J)
    int semisimple_dim = 0;   // dim A - dim J
    int radical_dim = 0;
    std::optional<int> uniform_simple_dim;  // set when all simples share one dimension
    std::vector<int> simple_dims;           // per block, when idempotents were found
    std::vector<std::string> notes;
};

BlockData blocks(const FiniteDimAlgebra& A, const CMatrix& J, std::uint64_t seed = 1);

// Roots in Q(eps) of a monic polynomial (coefficients lowest first).
// Returns the distinct roots found; exact (each verified).
std::vector<Cyclotomic> roots_in_field(const std::vector<Cyclotomic>& monic, int l);

// Orthogonal idempotents lifting the primitive central idempotents of A/J,
// one per block. Throws FieldExtensionRequired or LiftingFailed.
std::vector<Vec> block_idempotents(const FiniteDimAlgebra& A, const CMatrix& J, std::uint64_t seed = 1);

struct Quiver {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;     // e_i J e_j != 0
    std::vector<std::pair<int, int>> edges_j2;  // e_i (J/J^2) e_j != 0
};

Quiver quiver(const FiniteDimAlgebra& A, const CMatrix& J, const std::vector<Vec>& idempotents);

struct ClockShift {
    int dim = 1;
    std::vector<CMatrix> images;  // one per h generator
    bool relations_ok = false;
    bool character_ok = false;
};

// Representation of the y-torus in normal form: pairs m_i and values nu for
// h_1^l, ..., h_{2r}^l.
ClockShift clock_shift(const std::vector<int>& pairs, const std::vector<Cyclotomic>& nu, int l);

// l^{-t} prod_i sum_k (lambda_i^{-1} u_i)^k inside A.
Vec e_lambda(const FiniteDimAlgebra& A, const std::vector<Vec>& u, const std::vector<Cyclotomic>& lambda);

// An l-th root in Q(eps), if one exists.
std::optional<Cyclotomic> lth_root(const Cyclotomic& v, int l);

}  // namespace qsolv
