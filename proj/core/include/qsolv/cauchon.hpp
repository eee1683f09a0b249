#pragma once

#include <memory>
#include <vector>

#include "qsolv/algebra.hpp"

namespace qsolv {

struct NilpotencyProfile {
    std::vector<int> N_right;  // least n with delta_a^n(x_j) = 0 for all j > a
    std::vector<int> N_left;   // same for delta'_a on j < a
    int N = 1;
};

// Order of the derivation on the whole range of generators it acts on.
int nilpotency_order(const Algebra& alg, int alpha, Side side, int cap = 32);
int nilpotency_order(const Presentation& p, int alpha, Side side, int cap = 32);
// Order on a single generator x_j.
int nilpotency_order_on(const Algebra& alg, int alpha, int j, Side side, int cap = 32);
NilpotencyProfile nilpotency_profile(const Presentation& p, int cap = 32);

struct AdPolynomial {
    Element base;
    Element target;
    std::vector<int> gamma_exponents;  // roots q^k, descending
};

// Minimal annihilating polynomial of `a` under v -> x v x^{-1}; x must be an
// invertible monomial of `alg`.
AdPolynomial ad_polynomial(const Algebra& alg, const Element& x, const Element& a, int bound = 16);
// Closed form for a generator pair: roots q^{s_aj} * q^{k s} for k = 0..N_j-1.
AdPolynomial ad_polynomial_closed_form(const Algebra& alg, int alpha, int j, int cap = 32);

// The series sum_n (1-q^s)^{-n} / (n)_{q^s}! delta^n tau^{-n}(a) x_alpha^{-n}.
// `loc` must have x_alpha invertible; `a` lies in the subalgebra on which
// the chosen side acts.
Element hat_element(const Algebra& loc, int alpha, const Element& a, Side side, int cap = 32);
// x_j hatted with respect to the pivot; side is chosen from j versus alpha.
Element hat_generator(const Algebra& loc, int alpha, int j, int cap = 32);

// Result of localizing at a pivot and passing to hatted generators.
struct PivotInversion {
    int alpha = -1;
    Presentation result;
    // Old presentation with x_alpha made invertible; hats live here.
    std::shared_ptr<const Algebra> source;
    std::vector<Element> hats;  // hats[alpha] = x_alpha
    std::vector<RF> denominators;  // q^{s t} - 1 needed to form the hats

    // Value in `source` of an ordered monomial in the new generators.
    Element evaluate(const Monomial& m) const;
    // Rewrite an element of `source` in the new generators. Throws
    // TailShapeViolation when the element is outside their span.
    Element phi(const Element& a) const;
};

PivotInversion invert_pivot(const Presentation& p, int alpha, int cap = 32);

}  // namespace qsolv
