#pragma once

#include <optional>
#include <string>
#include <vector>

#include "qsolv/scalars.hpp"

namespace qsolv {

using IntMatrix = std::vector<std::vector<Integer>>;

IntMatrix to_int_matrix(const std::vector<std::vector<int>>& a);
IntMatrix identity_matrix(std::size_t n);
IntMatrix matmul(const IntMatrix& a, const IntMatrix& b);
IntMatrix transpose(const IntMatrix& a);
Integer determinant(const IntMatrix& a);  // Bareiss, exact
bool is_skew(const IntMatrix& a);

struct SmithResult {
    std::vector<Integer> divisors;  // nonzero invariant factors, d_1 | d_2 | ...
    IntMatrix U, V, D;              // U * A * V == D, U and V unimodular
};

SmithResult smith(const IntMatrix& a);

struct SkewNormalForm {
    IntMatrix U;                 // unimodular, U * T * U^T == form
    std::vector<Integer> pairs;  // m_1 | m_2 | ... | m_r, all positive
    int r = 0;
    int kernel_rank = 0;
    IntMatrix form;
    // Rows 2r.. of U: a basis of the integer kernel of T.
    IntMatrix kernel_basis() const;
};

SkewNormalForm skew_normal_form(const IntMatrix& t);

// Integer solution of A x = b, if one exists.
std::optional<std::vector<Integer>> solve_integer(const IntMatrix& a, const std::vector<Integer>& b);

struct Presentation;
struct NilpotencyProfile;

struct AdmissibilityReport {
    int l = 0;
    // Conditions 1 to 3 of the admissibility definition; nullopt = undetermined.
    std::optional<bool> coprime_divisors;
    bool coprime_exponents = false;
    bool bound_ok = false;
    int subsets_checked = 0;
    std::vector<std::string> witnesses;
    std::vector<std::string> notes;
    bool admissible() const { return coprime_divisors.value_or(false) && coprime_exponents && bound_ok; }
    bool determined() const { return coprime_divisors.has_value(); }
};

AdmissibilityReport admissible_l(const Presentation& p, const NilpotencyProfile& profile, int l, int max_m = 12);

}  // namespace qsolv
