#include "qsolv/scalars.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

#include "qsolv/errors.hpp"

namespace qsolv {

// ---------------------------------------------------------------- Poly

Poly::Poly(std::vector<Integer> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::constant(const Integer& c) { return Poly({c}); }

Poly Poly::monomial(const Integer& c, int degree) {
    std::vector<Integer> v(static_cast<size_t>(degree) + 1);
    v[degree] = c;
    return Poly(std::move(v));
}

void Poly::trim() {
    while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Integer Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

int Poly::order() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return static_cast<int>(i);
    return 0;
}

bool Poly::is_monomial() const {
    if (c_.empty()) return false;
    return order() == degree();
}

Integer Poly::content() const {
    Integer g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive() const {
    if (c_.empty()) return *this;
    Integer g = content();
    Poly p = divexact(g);
    if (sgn(p.lead()) < 0) p = -p;
    return p;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Integer> v(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < a.c_.size(); ++i) v[i] = a.c_[i];
    for (size_t i = 0; i < b.c_.size(); ++i) v[i] += b.c_[i];
    return Poly(std::move(v));
}

Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<Integer> v(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (sgn(a.c_[i]) == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) v[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(v));
}

Poly operator*(const Poly& a, const Integer& k) {
    Poly r = a;
    for (auto& x : r.c_) x *= k;
    r.trim();
    return r;
}

Poly Poly::shift(int k) const {
    if (c_.empty() || k == 0) return *this;
    if (k > 0) {
        std::vector<Integer> v(static_cast<size_t>(k), Integer(0));
        v.insert(v.end(), c_.begin(), c_.end());
        return Poly(std::move(v));
    }
    if (-k >= static_cast<int>(c_.size())) return Poly();
    return Poly(std::vector<Integer>(c_.begin() - k, c_.end()));
}

Poly Poly::divexact(const Integer& k) const {
    Poly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    return r;
}

Poly Poly::divexact(const Poly& b) const {
    if (b.is_zero()) throw InvalidArgument("polynomial division by zero");
    if (is_zero()) return Poly();
    std::vector<Integer> r = c_;
    int db = b.degree();
    int dq = degree() - db;
    if (dq < 0) throw InvalidArgument("inexact polynomial division");
    std::vector<Integer> q(static_cast<size_t>(dq) + 1);
    for (int i = dq; i >= 0; --i) {
        Integer top = r[i + db];
        if (sgn(top) == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), b.lead().get_mpz_t()))
            throw InvalidArgument("inexact polynomial division");
        Integer t = top / b.lead();
        q[i] = t;
        for (int j = 0; j <= db; ++j) r[i + j] -= t * b.c_[j];
    }
    for (const auto& x : r)
        if (sgn(x) != 0) throw InvalidArgument("inexact polynomial division");
    return Poly(std::move(q));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<Integer> v(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * static_cast<long>(i);
    return Poly(std::move(v));
}

std::string Poly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Integer& a = c_[i];
        if (sgn(a) == 0) continue;
        Integer mag = abs(a);
        if (first) {
            if (sgn(a) < 0) os << "-";
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

namespace {

// Pseudo-remainder of a by b over Z[q], made primitive.
Poly prem_primitive(Poly a, const Poly& b) {
    int db = b.degree();
    while (!a.is_zero() && a.degree() >= db) {
        int shift = a.degree() - db;
        Integer la = a.lead();
        a = a * b.lead() - (b * la).shift(shift);
    }
    return a.is_zero() ? a : a.primitive();
}

Integer igcd(const Integer& a, const Integer& b) {
    Integer g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.is_zero() ? Poly() : b.primitive() * b.content();
    if (b.is_zero()) return a.primitive() * a.content();
    Integer cg = igcd(a.content(), b.content());
    // Monomial fast path: almost every coefficient met in practice is a
    // Laurent polynomial, whose denominator is c*q^k.
    if (a.is_monomial() || b.is_monomial()) {
        int k = std::min(a.order(), b.order());
        return Poly::monomial(cg, k);
    }
    Poly x = a.primitive(), y = b.primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        Poly r = prem_primitive(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    return x.primitive() * cg;
}

// ---------------------------------------------------------------- RationalFunction

RationalFunction::RationalFunction(long v) : num_(Poly::constant(v)), den_(Poly::constant(1)) {}

RationalFunction::RationalFunction(const Rational& v)
    : num_(Poly::constant(v.get_num())), den_(Poly::constant(v.get_den())) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw InvalidArgument("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::q_pow(int k) {
    RationalFunction r;
    if (k >= 0) {
        r.num_ = Poly::monomial(1, k);
        r.den_ = Poly::constant(1);
    } else {
        r.num_ = Poly::constant(1);
        r.den_ = Poly::monomial(1, -k);
    }
    return r;
}

RationalFunction RationalFunction::from_laurent(const std::vector<std::pair<int, Rational>>& terms) {
    RationalFunction r;
    for (const auto& [e, c] : terms) r += RationalFunction(c) * q_pow(e);
    return r;
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly::constant(1);
        return;
    }
    if (!(den_.degree() == 0 && den_.lead() == 1)) {
        Poly g = gcd(num_, den_).primitive();
        if (g.degree() > 0) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
        Integer c = igcd(num_.content(), den_.content());
        if (c != 1) {
            num_ = num_.divexact(c);
            den_ = den_.divexact(c);
        }
        if (sgn(den_.lead()) < 0) {
            num_ = -num_;
            den_ = -den_;
        }
    }
}

bool RationalFunction::is_one() const {
    return num_.degree() == 0 && den_.degree() == 0 && num_.lead() == den_.lead();
}

std::vector<std::pair<int, Rational>> RationalFunction::laurent_terms() const {
    if (!is_laurent()) throw InvalidArgument("not a Laurent polynomial: " + to_string());
    std::vector<std::pair<int, Rational>> out;
    int k = den_.order();
    const Integer& d = den_.lead();
    const auto& c = num_.coeffs();
    for (size_t i = 0; i < c.size(); ++i) {
        if (sgn(c[i]) == 0) continue;
        Rational v(c[i], d);
        v.canonicalize();
        out.emplace_back(static_cast<int>(i) - k, v);
    }
    return out;
}

std::optional<int> RationalFunction::gamma_exponent() const {
    if (!num_.is_monomial() || !den_.is_monomial()) return std::nullopt;
    if (num_.lead() != den_.lead()) return std::nullopt;
    return num_.degree() - den_.degree();
}

std::optional<Rational> RationalFunction::as_rational() const {
    if (num_.degree() > 0 || den_.degree() > 0) return std::nullopt;
    if (num_.is_zero()) return Rational(0);
    Rational v(num_.lead(), den_.lead());
    v.canonicalize();
    return v;
}

RationalFunction RationalFunction::inverse() const {
    if (is_zero()) throw InvalidArgument("inverse of zero rational function");
    return RationalFunction(den_, num_);
}

RationalFunction RationalFunction::pow(int n) const {
    if (n < 0) return inverse().pow(-n);
    RationalFunction result(1), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_ == b.den_) return RationalFunction(a.num_ + b.num_, a.den_);
    return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.is_zero() || b.is_zero()) return RationalFunction();
    return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) { return a * b.inverse(); }

std::string RationalFunction::to_string() const {
    if (den_.degree() == 0 && den_.lead() == 1) return num_.to_string();
    std::string n = num_.to_string(), d = den_.to_string();
    bool nsimple = num_.degree() == 0 || num_.is_monomial();
    bool dsimple = den_.degree() == 0 || (den_.is_monomial() && den_.lead() == 1);
    return (nsimple ? n : "(" + n + ")") + "/" + (dsimple ? d : "(" + d + ")");
}

RF qint(int n, int s) {
    if (s == 0) throw InvalidArgument("qint requires s != 0");
    if (n < 0) throw InvalidArgument("qint requires n >= 0");
    RF r;
    for (int i = 0; i < n; ++i) r += RF::q_pow(s * i);
    return r;
}

RF qfact(int n, int s) {
    RF r(1);
    for (int i = 1; i <= n; ++i) r *= qint(i, s);
    return r;
}

RF qbinom(int n, int k, int s) {
    if (k < 0 || k > n) return RF();
    return qfact(n, s) / (qfact(k, s) * qfact(n - k, s));
}

// ---------------------------------------------------------------- cyclotomic

int euler_phi(int n) {
    int result = n;
    for (int p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            while (n % p == 0) n /= p;
            result -= result / p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

const Poly& cyclotomic_polynomial(int l) {
    static std::mutex mu;
    static std::map<int, Poly> cache;
    std::lock_guard<std::mutex> lock(mu);
    if (l < 1) throw InvalidArgument("cyclotomic order must be positive");
    auto it = cache.find(l);
    if (it != cache.end()) return it->second;
    // Divisors in ascending order, so every proper divisor is cached first.
    for (int d = 1; d <= l; ++d) {
        if (l % d != 0 || cache.count(d)) continue;
        Poly p = Poly::monomial(1, d) - Poly::constant(1);
        for (int e = 1; e < d; ++e)
            if (d % e == 0) p = p.divexact(cache.at(e));
        cache[d] = p;
    }
    return cache.at(l);
}

namespace {

using QVec = std::vector<Rational>;

void qtrim(QVec& v) {
    while (!v.empty() && sgn(v.back()) == 0) v.pop_back();
}

QVec qmul(const QVec& a, const QVec& b) {
    if (a.empty() || b.empty()) return {};
    QVec r(a.size() + b.size() - 1);
    for (size_t i = 0; i < a.size(); ++i) {
        if (sgn(a[i]) == 0) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    }
    qtrim(r);
    return r;
}

QVec qsub(const QVec& a, const QVec& b) {
    QVec r(std::max(a.size(), b.size()));
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    qtrim(r);
    return r;
}

// Division with remainder in Q[q].
void qdivmod(QVec a, const QVec& b, QVec& quo, QVec& rem) {
    qtrim(a);
    int db = static_cast<int>(b.size()) - 1;
    int da = static_cast<int>(a.size()) - 1;
    quo.assign(da >= db ? static_cast<size_t>(da - db + 1) : 0, Rational(0));
    for (int i = da - db; i >= 0; --i) {
        Rational t = a[i + db] / b[db];
        quo[i] = t;
        if (sgn(t) == 0) continue;
        for (int j = 0; j <= db; ++j) a[i + j] -= t * b[j];
    }
    a.resize(std::min(a.size(), static_cast<size_t>(std::max(db, 0))));
    qtrim(a);
    rem = std::move(a);
    qtrim(quo);
}

QVec to_qvec(const Poly& p) {
    QVec v;
    v.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) v.emplace_back(c);
    return v;
}

}  // namespace

Cyclotomic::Cyclotomic(int l, const Rational& v) : l_(l) {
    c_.assign(static_cast<size_t>(euler_phi(l)), Rational(0));
    c_[0] = v;
}

Cyclotomic::Cyclotomic(int l, std::vector<Rational> coords) : l_(l) { reduce(std::move(coords)); }

void Cyclotomic::reduce(std::vector<Rational> full) {
    int phi = euler_phi(l_);
    QVec modulus = to_qvec(cyclotomic_polynomial(l_));
    qtrim(full);
    if (static_cast<int>(full.size()) > phi) {
        QVec quo, rem;
        qdivmod(std::move(full), modulus, quo, rem);
        full = std::move(rem);
    }
    full.resize(static_cast<size_t>(phi), Rational(0));
    c_ = std::move(full);
}

Cyclotomic Cyclotomic::epsilon(int l, int power) {
    int p = ((power % l) + l) % l;
    std::vector<Rational> v(static_cast<size_t>(p) + 1, Rational(0));
    v[p] = 1;
    return Cyclotomic(l, std::move(v));
}

bool Cyclotomic::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

bool Cyclotomic::is_one() const {
    if (c_.empty() || c_[0] != 1) return false;
    return std::all_of(c_.begin() + 1, c_.end(), [](const Rational& x) { return sgn(x) == 0; });
}

std::optional<Rational> Cyclotomic::as_rational() const {
    if (c_.empty()) return Rational(0);
    for (size_t i = 1; i < c_.size(); ++i)
        if (sgn(c_[i]) != 0) return std::nullopt;
    return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
    Cyclotomic r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.l_ != b.l_) throw InvalidArgument("cyclotomic orders differ");
    Cyclotomic r = a;
    for (size_t i = 0; i < r.c_.size(); ++i) r.c_[i] += b.c_[i];
    return r;
}

Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) { return a + (-b); }

Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
    if (a.l_ != b.l_) throw InvalidArgument("cyclotomic orders differ");
    return Cyclotomic(a.l_, qmul(a.c_, b.c_));
}

Cyclotomic Cyclotomic::inverse() const {
    if (is_zero()) throw InvalidArgument("inverse of zero in cyclotomic field");
    // Extended Euclid: find u with u*a = 1 mod Phi_l.
    QVec r0 = to_qvec(cyclotomic_polynomial(l_)), r1 = c_;
    qtrim(r1);
    QVec s0, s1{Rational(1)};
    while (!(r1.size() == 1)) {
        QVec quo, rem;
        qdivmod(r0, r1, quo, rem);
        QVec s2 = qsub(s0, qmul(quo, s1));
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    Rational inv = 1 / r1[0];
    for (auto& x : s1) x *= inv;
    return Cyclotomic(l_, std::move(s1));
}

Cyclotomic Cyclotomic::pow(long n) const {
    if (n < 0) return inverse().pow(-n);
    Cyclotomic result = one(l_), base = *this;
    while (n > 0) {
        if (n & 1) result *= base;
        base *= base;
        n >>= 1;
    }
    return result;
}

std::pair<double, double> Cyclotomic::numeric(int k) const {
    double re = 0, im = 0;
    for (size_t j = 0; j < c_.size(); ++j) {
        double a = c_[j].get_d();
        double ang = 2.0 * std::numbers::pi * static_cast<double>(j) * k / l_;
        re += a * std::cos(ang);
        im += a * std::sin(ang);
    }
    return {re, im};
}

std::string Cyclotomic::to_string(const std::string& var) const {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < c_.size(); ++i) {
        const Rational& a = c_[i];
        if (sgn(a) == 0) continue;
        Rational mag = abs(a);
        if (first) {
            if (sgn(a) < 0) os << "-";
        } else {
            os << (sgn(a) < 0 ? " - " : " + ");
        }
        first = false;
        if (i == 0) {
            os << mag.get_str();
        } else {
            if (mag != 1) os << mag.get_str() << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return first ? "0" : os.str();
}

Cyclotomic eval_poly(const Poly& p, int l) { return Cyclotomic(l, to_qvec(p)); }

Cyclotomic specialize(const RF& f, int l) {
    Cyclotomic d = eval_poly(f.den(), l);
    if (d.is_zero())
        throw DenominatorVanishes(f.to_string() + " at a primitive " + std::to_string(l) + "-th root of unity");
    return eval_poly(f.num(), l) * d.inverse();
}

Cyclotomic divide_by_q_minus_eps(const RF& f, int l) {
    Cyclotomic d = eval_poly(f.den(), l);
    if (d.is_zero()) throw DenominatorVanishes(f.to_string() + " at order " + std::to_string(l));
    const auto& a = f.num().coeffs();
    if (a.empty()) return Cyclotomic::zero(l);
    Cyclotomic eps = Cyclotomic::epsilon(l);
    // Synthetic division of the numerator by (q - e) in Q(e)[q].
    int deg = static_cast<int>(a.size()) - 1;
    std::vector<Cyclotomic> b(static_cast<size_t>(std::max(deg, 1)), Cyclotomic::zero(l));
    Cyclotomic carry = Cyclotomic::zero(l);
    for (int k = deg; k >= 1; --k) {
        carry = Cyclotomic(l, Rational(a[k])) + eps * carry;
        b[k - 1] = carry;
    }
    Cyclotomic remainder = Cyclotomic(l, Rational(a[0])) + eps * carry;
    if (!remainder.is_zero())
        throw NonDivisible(f.to_string() + " is not divisible by (q - e) at order " + std::to_string(l));
    Cyclotomic value = Cyclotomic::zero(l);
    for (int k = deg - 1; k >= 0; --k) value = value * eps + b[k];
    return value * d.inverse();
}

std::optional<std::vector<int>> gamma_root_exponents(const std::vector<RF>& coeffs) {
    if (coeffs.empty() || !coeffs.back().is_one()) throw InvalidArgument("gamma_root_exponents needs a monic polynomial");
    std::vector<RF> f = coeffs;
    int bound = 1;
    for (const auto& c : f) bound = std::max(bound, c.num().degree() + c.den().degree() + 1);
    std::vector<int> roots;
    for (int k = -bound; k <= bound && f.size() > 1; ++k) {
        RF root = RF::q_pow(k);
        while (f.size() > 1) {
            RF value;
            for (size_t i = f.size(); i-- > 0;) value = value * root + f[i];
            if (!value.is_zero()) break;
            // Deflate by (t - q^k).
            std::vector<RF> g(f.size() - 1);
            RF carry;
            for (size_t i = f.size() - 1; i >= 1; --i) {
                carry = f[i] + carry * root;
                g[i - 1] = carry;
            }
            f = std::move(g);
            roots.push_back(k);
        }
    }
    if (f.size() > 1) return std::nullopt;
    std::sort(roots.rbegin(), roots.rend());
    return roots;
}

}  // namespace qsolv
