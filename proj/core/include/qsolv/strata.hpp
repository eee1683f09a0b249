#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qsolv/algebra.hpp"
#include "qsolv/cauchon.hpp"
#include "qsolv/lattice.hpp"

namespace qsolv {

enum class Verdict { No, Yes, Undetermined };
std::string to_string(Verdict v);

struct Residue {
    std::string source;  // e.g. "tail(a11,a22)" or "deleted a11"
    Element value;       // supported on Y-monomials of the chain presentation
};

struct Stratum {
    std::vector<int> mu;       // pivots, ascending, 0-based
    std::vector<int> y_index;  // mu plus original distinguished, ascending
    std::vector<int> deleted;  // everything else
    Presentation chain;        // presentation after all pivot inversions
    std::vector<std::shared_ptr<const PivotInversion>> steps;

    std::vector<Residue> residues;
    Verdict C_admissible = Verdict::Undetermined;
    std::optional<Verdict> eps_admissible, epsD_admissible;
    std::optional<int> l;

    IntMatrix T;           // commutation exponents among the y's
    IntMatrix congruence;  // T = congruence * S_mu * congruence^T
    SkewNormalForm normal_form;
    int r = 0, t = 0, p = 0;
    IntMatrix h_basis, u_basis, z_basis;  // exponent vectors over y_index

    std::vector<std::string> notes;
    std::string error;  // nonempty when the chain could not be built

    int k() const { return static_cast<int>(y_index.size()); }
};

struct StratifyOptions {
    std::optional<int> l;  // enables the eps and (eps, D) tests
    int cap = 32;
};

// Runs the pivot chain for a single subset mu (0-based, any order).
Stratum build_stratum(const Presentation& p, std::vector<int> mu, const StratifyOptions& opts = {});
// One stratum per subset of the non-distinguished generators; chains share
// prefixes, so each pivot inversion is computed once.
std::vector<Stratum> stratify(const Presentation& p, const StratifyOptions& opts = {});

// Admissibility verdict for a list of residues (exact for zero residues and
// single-term residues, which are units of Y).
Verdict residue_verdict(const std::vector<Element>& residues);
// Residues specialized at a primitive l-th root of unity.
Verdict residue_verdict_at(const std::vector<Element>& residues, int l);

// Fills T, the normal form and the h/u/z split from mu and the chain.
void y_split(Stratum& st, const Presentation& original);

std::string mu_string(const std::vector<int>& mu);  // 1-based, e.g. "{1,2}"

}  // namespace qsolv
