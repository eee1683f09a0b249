#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace qsolv {

using Integer = mpz_class;
using Rational = mpq_class;

// Dense polynomial in q with integer coefficients, lowest degree first.
// The zero polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Integer> coeffs);
    static Poly constant(const Integer& c);
    static Poly monomial(const Integer& c, int degree);

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const std::vector<Integer>& coeffs() const { return c_; }
    const Integer& lead() const { return c_.back(); }
    Integer coeff(int k) const;
    // Smallest k with a nonzero coefficient (0 for the zero polynomial).
    int order() const;
    bool is_monomial() const;

    Integer content() const;
    Poly primitive() const;

    Poly operator-() const;
    friend Poly operator+(const Poly& a, const Poly& b);
    friend Poly operator-(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(const Poly& a, const Integer& k);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    Poly shift(int k) const;  // multiply by q^k (k >= 0) or drop low terms (k < 0)
    // Exact division by b; throws if b does not divide *this over Z[q].
    Poly divexact(const Poly& b) const;
    Poly divexact(const Integer& k) const;
    Poly derivative() const;

    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<Integer> c_;
};

Poly gcd(const Poly& a, const Poly& b);

// An element of F = Q(q). Stored as num/den over Z[q], with gcd(num, den) = 1,
// joint integer content 1 and positive leading coefficient of den.
class RationalFunction {
public:
    RationalFunction() : den_(Poly::constant(1)) {}
    RationalFunction(long v);  // NOLINT: implicit from integer literals is convenient
    RationalFunction(const Rational& v);  // NOLINT
    RationalFunction(Poly num, Poly den);

    static RationalFunction q_pow(int k);
    static RationalFunction from_laurent(const std::vector<std::pair<int, Rational>>& terms);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const;
    // Laurent polynomial with rational coefficients, i.e. den = c * q^k.
    bool is_laurent() const { return den_.is_monomial(); }
    // (exponent, coefficient) pairs; requires is_laurent().
    std::vector<std::pair<int, Rational>> laurent_terms() const;
    // Returns k if this equals q^k exactly (membership in the group Gamma).
    std::optional<int> gamma_exponent() const;
    std::optional<Rational> as_rational() const;

    RationalFunction inverse() const;
    RationalFunction pow(int n) const;

    RationalFunction operator-() const;
    friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
    friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
    RationalFunction& operator+=(const RationalFunction& b) { return *this = *this + b; }
    RationalFunction& operator-=(const RationalFunction& b) { return *this = *this - b; }
    RationalFunction& operator*=(const RationalFunction& b) { return *this = *this * b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    std::string to_string() const;

private:
    void normalize();
    Poly num_, den_;
};

using RF = RationalFunction;

// (n)_{q^s} = (q^{sn} - 1) / (q^s - 1)
RF qint(int n, int s);
RF qfact(int n, int s);
RF qbinom(int n, int k, int s);

// Element of the l-th cyclotomic field, coordinates in the power basis
// 1, e, ..., e^{phi(l)-1} where e is a primitive l-th root of unity.
class Cyclotomic {
public:
    Cyclotomic() = default;
    Cyclotomic(int l, const Rational& v);
    Cyclotomic(int l, std::vector<Rational> coords);

    static Cyclotomic zero(int l) { return Cyclotomic(l, Rational(0)); }
    static Cyclotomic one(int l) { return Cyclotomic(l, Rational(1)); }
    static Cyclotomic epsilon(int l, int power = 1);

    int order() const { return l_; }
    const std::vector<Rational>& coords() const { return c_; }
    bool is_zero() const;
    bool is_one() const;
    std::optional<Rational> as_rational() const;

    Cyclotomic inverse() const;
    Cyclotomic pow(long n) const;
    // Lift to a polynomial in q whose value at e is this element.
    std::vector<Rational> lift() const { return c_; }

    Cyclotomic operator-() const;
    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b);
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) { return a * b.inverse(); }
    Cyclotomic& operator+=(const Cyclotomic& b) { return *this = *this + b; }
    Cyclotomic& operator-=(const Cyclotomic& b) { return *this = *this - b; }
    Cyclotomic& operator*=(const Cyclotomic& b) { return *this = *this * b; }
    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) { return a.l_ == b.l_ && a.c_ == b.c_; }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }

    // Complex value under the embedding e -> exp(2 pi i k / l).
    std::pair<double, double> numeric(int k = 1) const;
    std::string to_string(const std::string& var = "e") const;

private:
    void reduce(std::vector<Rational> full);
    int l_ = 0;
    std::vector<Rational> c_;
};

int euler_phi(int n);
// The l-th cyclotomic polynomial, lowest degree first.
const Poly& cyclotomic_polynomial(int l);

// f(e) for a primitive l-th root of unity e; throws DenominatorVanishes.
Cyclotomic specialize(const RF& f, int l);
Cyclotomic eval_poly(const Poly& p, int l);

// Value at q = e of f / (q - e), computed by synthetic division of the
// numerator in Q(e)[q]; throws NonDivisible unless f(e) = 0.
Cyclotomic divide_by_q_minus_eps(const RF& f, int l);

// Roots q^k of a monic polynomial in t whose coefficients (lowest first) lie
// in F. Returns std::nullopt when the polynomial does not split over Gamma.
std::optional<std::vector<int>> gamma_root_exponents(const std::vector<RF>& coeffs);

}  // namespace qsolv
