#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qsolv/scalars.hpp"

namespace qsolv {

// Exponent vector of a PBW monomial x_1^{t_1} ... x_M^{t_M} (0-based slots).
using Monomial = std::vector<int>;

// A finite combination of ordered monomials with coefficients in F.
class Element {
public:
    Element() = default;
    static Element monomial(const Monomial& m, const RF& c = RF(1));
    static Element scalar(int M, const RF& c);

    const std::map<Monomial, RF>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    // Coefficient of m (zero if absent).
    RF coeff(const Monomial& m) const;
    void add_term(const Monomial& m, const RF& c);

    Element operator-() const;
    friend Element operator+(const Element& a, const Element& b);
    friend Element operator-(const Element& a, const Element& b);
    friend Element operator*(const RF& c, const Element& a);
    Element& operator+=(const Element& b);
    friend bool operator==(const Element& a, const Element& b) { return a.terms_ == b.terms_; }
    friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::map<Monomial, RF> terms_;
};

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names);

// Exponent systems s_i (right) and s'_i (left); nullopt where the
// derivation vanishes and the exponent is vacuous.
struct CN1Exponents {
    std::vector<std::optional<int>> right, left;
    std::vector<std::string> problems;
};

struct Presentation {
    std::vector<std::string> names;
    std::vector<bool> distinguished;
    std::vector<std::vector<int>> S;
    // (i, j) with i < j, 0-based, mapped to r_ij.
    std::map<std::pair<int, int>, Element> tails;
    // Pivots inverted so far (0-based) and the denominators they required.
    std::vector<int> pivot_chain;
    std::vector<RF> denominators;

    int M() const { return static_cast<int>(names.size()); }
    bool is_distinguished(int i) const { return distinguished[i]; }
    const Element* tail(int i, int j) const;
    CN1Exponents exponents() const;
    int weight(int i, const Monomial& m) const;  // sum_j s_ij m_j
    friend bool operator==(const Presentation& a, const Presentation& b);
};

// PBW arithmetic over a presentation. Generators listed in `localized`
// may carry negative exponents in addition to the distinguished ones.
class Algebra {
public:
    explicit Algebra(Presentation p, std::vector<int> localized = {});
    Algebra(const Algebra&) = delete;
    Algebra& operator=(const Algebra&) = delete;

    const Presentation& presentation() const { return p_; }
    int M() const { return p_.M(); }
    bool invertible(int i) const { return invertible_[i]; }

    Element one() const;
    Element gen(int i, int power = 1) const;
    Element scalar(const RF& c) const;
    Element multiply(const Element& a, const Element& b) const;
    Element multiply_monomials(const Monomial& a, const Monomial& b) const;
    Element pow(const Element& a, int n) const;
    // a * b - q^k * b * a
    Element q_commutator(const Element& a, const Element& b, int k = 0) const;
    std::size_t cache_size() const;

private:
    struct Swap {
        RF coef;
        Element extra;
    };
    Element mul_letter(const Monomial& m, int b, int sign) const;
    const Swap& swap_rule(int c, int sc, int b, int sb) const;
    void check_monomial(const Monomial& m) const;

    struct VecHash {
        std::size_t operator()(const std::vector<int>& v) const noexcept;
    };

    Presentation p_;
    std::vector<bool> invertible_;
    mutable std::mutex mu_;
    mutable std::unordered_map<std::vector<int>, Element, VecHash> letter_cache_;
    mutable std::map<std::vector<int>, std::unique_ptr<Swap>> swap_cache_;
};

enum class Side { Left, Right };

// tau_i / delta_i (right, acting on indices > i) and tau'_i / delta'_i
// (left, acting on indices < i).
Element tau_apply(const Algebra& alg, int i, const Element& a, Side side, int power = 1);
Element delta_apply(const Algebra& alg, int i, const Element& a, Side side);
// Value of delta on a single generator x_j.
Element delta_generator(const Presentation& p, int i, int j, Side side);

struct Check {
    std::string name;
    bool ok = true;
    std::string witness;
};

struct ValidationReport {
    std::vector<Check> checks;
    CN1Exponents exponents;
    // One row per tau_i (right) and tau'_i (left): rescaling exponents of
    // all generators that extend it to a diagonal automorphism.
    std::vector<std::optional<std::vector<int>>> weights_right, weights_left;
    bool ok() const;
    std::vector<std::string> failures() const;
};

ValidationReport validate(const Presentation& p);

// Presets. All have an empty distinguished set.
Presentation quantum_plane();
Presentation quantum_affine_space(int n, const std::vector<std::vector<int>>& S);
Presentation quantum_weyl();
Presentation quantum_matrices(int n);
// Lookup by CLI name: quantum-plane, quantum-weyl, quantum-matrices-N,
// quantum-affine-N (standard S with s_ij = 1 for i < j).
Presentation preset(const std::string& name);
std::vector<std::string> preset_names();

}  // namespace qsolv
