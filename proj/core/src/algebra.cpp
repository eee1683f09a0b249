#include "qsolv/algebra.hpp"

#include <cstdlib>
#include <sstream>

#include "qsolv/errors.hpp"
#include "qsolv/lattice.hpp"

namespace qsolv {

// ---------------------------------------------------------------- Element

Element Element::monomial(const Monomial& m, const RF& c) {
    Element e;
    e.add_term(m, c);
    return e;
}

Element Element::scalar(int M, const RF& c) { return monomial(Monomial(static_cast<size_t>(M), 0), c); }

RF Element::coeff(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? RF() : it->second;
}

void Element::add_term(const Monomial& m, const RF& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Element Element::operator-() const {
    Element r = *this;
    for (auto& [m, c] : r.terms_) c = -c;
    return r;
}

Element& Element::operator+=(const Element& b) {
    for (const auto& [m, c] : b.terms_) add_term(m, c);
    return *this;
}

Element operator+(const Element& a, const Element& b) {
    Element r = a;
    r += b;
    return r;
}

Element operator-(const Element& a, const Element& b) { return a + (-b); }

Element operator*(const RF& c, const Element& a) {
    if (c.is_zero()) return Element();
    Element r = a;
    for (auto& [m, v] : r.terms_) v *= c;
    return r;
}

std::string monomial_string(const Monomial& m, const std::vector<std::string>& names) {
    std::ostringstream os;
    bool any = false;
    for (size_t i = 0; i < m.size(); ++i) {
        if (m[i] == 0) continue;
        if (any) os << "*";
        any = true;
        os << (i < names.size() ? names[i] : "x" + std::to_string(i + 1));
        if (m[i] != 1) os << "^" << m[i];
    }
    return any ? os.str() : "1";
}

std::string Element::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        std::string mono = monomial_string(m, names);
        if (c.is_one()) {
            os << mono;
        } else {
            os << "(" << c.to_string() << ")";
            if (mono != "1") os << "*" << mono;
        }
    }
    return os.str();
}

// ---------------------------------------------------------------- Presentation

const Element* Presentation::tail(int i, int j) const {
    auto it = tails.find({i, j});
    return it == tails.end() || it->second.is_zero() ? nullptr : &it->second;
}

int Presentation::weight(int i, const Monomial& m) const {
    int w = 0;
    for (int k = 0; k < M(); ++k) w += S[i][k] * m[k];
    return w;
}

CN1Exponents Presentation::exponents() const {
    CN1Exponents ex;
    ex.right.assign(static_cast<size_t>(M()), std::nullopt);
    ex.left.assign(static_cast<size_t>(M()), std::nullopt);
    auto record = [&](std::optional<int>& slot, int value, const std::string& what) {
        if (slot && *slot != value)
            ex.problems.push_back(what + ": inconsistent exponents " + std::to_string(*slot) + " and " +
                                  std::to_string(value));
        else
            slot = value;
    };
    for (const auto& [key, r] : tails) {
        if (r.is_zero()) continue;
        auto [i, j] = key;
        std::string label = "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
        std::optional<int> wr, wl;
        bool homogeneous = true;
        for (const auto& [m, c] : r.terms()) {
            int a = weight(i, m), b = weight(j, m);
            if (wr && (*wr != a || *wl != b)) homogeneous = false;
            wr = a;
            wl = b;
        }
        if (!homogeneous) {
            ex.problems.push_back("tail " + label + " is not a weight vector for tau_" + std::to_string(i + 1) +
                                  " and tau'_" + std::to_string(j + 1));
            continue;
        }
        record(ex.right[i], *wr - S[i][j], "s_" + std::to_string(i + 1) + " from " + label);
        record(ex.left[j], *wl - S[j][i], "s'_" + std::to_string(j + 1) + " from " + label);
    }
    return ex;
}

bool operator==(const Presentation& a, const Presentation& b) {
    if (a.names != b.names || a.distinguished != b.distinguished || a.S != b.S) return false;
    auto nonzero = [](const Presentation& p) {
        std::map<std::pair<int, int>, Element> out;
        for (const auto& [k, v] : p.tails)
            if (!v.is_zero()) out.emplace(k, v);
        return out;
    };
    return nonzero(a) == nonzero(b);
}

// ---------------------------------------------------------------- Algebra

std::size_t Algebra::VecHash::operator()(const std::vector<int>& v) const noexcept {
    std::size_t h = v.size();
    for (int x : v) h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

Algebra::Algebra(Presentation p, std::vector<int> localized) : p_(std::move(p)) {
    invertible_ = p_.distinguished;
    for (int i : localized) invertible_.at(i) = true;
}

Element Algebra::one() const { return Element::scalar(M(), RF(1)); }

Element Algebra::scalar(const RF& c) const { return Element::scalar(M(), c); }

Element Algebra::gen(int i, int power) const {
    if (power < 0 && !invertible_[i])
        throw SupportViolation("generator " + p_.names[i] + " is not invertible here");
    Monomial m(static_cast<size_t>(M()), 0);
    m[i] = power;
    return Element::monomial(m);
}

void Algebra::check_monomial(const Monomial& m) const {
    if (static_cast<int>(m.size()) != M()) throw SupportViolation("monomial has wrong length");
    for (int i = 0; i < M(); ++i)
        if (m[i] < 0 && !invertible_[i])
            throw SupportViolation("negative power of non-invertible generator " + p_.names[i]);
}

const Algebra::Swap& Algebra::swap_rule(int c, int sc, int b, int sb) const {
    std::vector<int> key{c, sc, b, sb};
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = swap_cache_.find(key);
        if (it != swap_cache_.end()) return *it->second;
    }
    // Relation x_b x_c = q^s x_c x_b + r with b < c, solved for each
    // ordering of the letters x_c^{sc} x_b^{sb}.
    const int s = p_.S[b][c];
    const Element* r = p_.tail(b, c);
    auto rule = std::make_unique<Swap>();
    if (sc > 0 && sb > 0) {
        rule->coef = RF::q_pow(-s);
        if (r) rule->extra = -(RF::q_pow(-s) * *r);
    } else if (sc > 0 && sb < 0) {
        rule->coef = RF::q_pow(s);
        if (r) rule->extra = multiply(gen(b, -1), multiply(*r, gen(b, -1)));
    } else if (sc < 0 && sb > 0) {
        rule->coef = RF::q_pow(s);
        if (r) rule->extra = multiply(gen(c, -1), multiply(*r, gen(c, -1)));
    } else {
        if (r)
            throw SupportViolation("both " + p_.names[b] + " and " + p_.names[c] +
                                   " are inverted but their relation has a tail");
        rule->coef = RF::q_pow(-s);
    }
    std::lock_guard<std::mutex> lock(mu_);
    auto [it, inserted] = swap_cache_.try_emplace(key, std::move(rule));
    return *it->second;
}

Element Algebra::mul_letter(const Monomial& m, int b, int sign) const {
    std::vector<int> key = m;
    key.push_back(b);
    key.push_back(sign);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = letter_cache_.find(key);
        if (it != letter_cache_.end()) return it->second;
    }
    int c = -1;
    for (int i = M() - 1; i >= 0; --i)
        if (m[i] != 0) {
            c = i;
            break;
        }
    Element result;
    if (c <= b) {
        Monomial r = m;
        r[b] += sign;
        result = Element::monomial(r);
    } else {
        // m = rest * x_c^{sc}; move x_b^{sign} across that last letter.
        const int sc = m[c] > 0 ? 1 : -1;
        Monomial rest = m;
        rest[c] -= sc;
        const Swap& sw = swap_rule(c, sc, b, sign);
        Element left = mul_letter(rest, b, sign);
        for (const auto& [mono, coef] : left.terms()) {
            Monomial t = mono;
            t[c] += sc;
            result.add_term(t, coef * sw.coef);
        }
        if (!sw.extra.is_zero()) result += multiply(Element::monomial(rest), sw.extra);
    }
    std::lock_guard<std::mutex> lock(mu_);
    letter_cache_.try_emplace(std::move(key), result);
    return result;
}

Element Algebra::multiply_monomials(const Monomial& a, const Monomial& b) const {
    Element cur = Element::monomial(a);
    for (int i = 0; i < M(); ++i) {
        int e = b[i];
        int sign = e > 0 ? 1 : -1;
        for (int k = 0; k < std::abs(e); ++k) {
            Element next;
            for (const auto& [mono, coef] : cur.terms()) {
                Element part = mul_letter(mono, i, sign);
                for (const auto& [m2, c2] : part.terms()) next.add_term(m2, coef * c2);
            }
            cur = std::move(next);
        }
    }
    return cur;
}

Element Algebra::multiply(const Element& a, const Element& b) const {
    Element out;
    for (const auto& [ma, ca] : a.terms()) {
        check_monomial(ma);
        for (const auto& [mb, cb] : b.terms()) {
            check_monomial(mb);
            RF c = ca * cb;
            Element prod = multiply_monomials(ma, mb);
            for (const auto& [m, v] : prod.terms()) out.add_term(m, c * v);
        }
    }
    return out;
}

Element Algebra::pow(const Element& a, int n) const {
    if (n < 0) {
        if (a.size() != 1) throw InvalidArgument("only monomials can be inverted");
        const auto& [m, c] = *a.terms().begin();
        // (x_1^{t_1} ... x_M^{t_M})^{-1} = x_M^{-t_M} ... x_1^{-t_1}
        Element inv = scalar(c.inverse());
        for (int i = M() - 1; i >= 0; --i)
            if (m[i] != 0) inv = multiply(inv, gen(i, -m[i]));
        return pow(inv, -n);
    }
    Element result = one(), base = a;
    while (n > 0) {
        if (n & 1) result = multiply(result, base);
        n >>= 1;
        if (n) base = multiply(base, base);
    }
    return result;
}

Element Algebra::q_commutator(const Element& a, const Element& b, int k) const {
    return multiply(a, b) - RF::q_pow(k) * multiply(b, a);
}

std::size_t Algebra::cache_size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return letter_cache_.size() + swap_cache_.size();
}

// ---------------------------------------------------------------- tau / delta

namespace {

void check_support(const Presentation& p, int i, const Monomial& m, Side side) {
    for (int k = 0; k < p.M(); ++k) {
        if (m[k] == 0) continue;
        bool ok = side == Side::Right ? k > i : k < i;
        if (!ok)
            throw SupportViolation(std::string(side == Side::Right ? "tau/delta_" : "tau'/delta'_") +
                                   std::to_string(i + 1) + " applied to a monomial involving " + p.names[k]);
    }
}

}  // namespace

Element tau_apply(const Algebra& alg, int i, const Element& a, Side side, int power) {
    const Presentation& p = alg.presentation();
    Element out;
    for (const auto& [m, c] : a.terms()) {
        check_support(p, i, m, side);
        out.add_term(m, c * RF::q_pow(power * p.weight(i, m)));
    }
    return out;
}

Element delta_generator(const Presentation& p, int i, int j, Side side) {
    if (side == Side::Right) {
        if (j <= i) throw SupportViolation("delta_i acts on generators above i");
        const Element* r = p.tail(i, j);
        return r ? *r : Element();
    }
    if (j >= i) throw SupportViolation("delta'_i acts on generators below i");
    const Element* r = p.tail(j, i);
    // x_i x_j = q^{-s_ji} x_j x_i - q^{-s_ji} r_ji for j < i
    return r ? -(RF::q_pow(-p.S[j][i]) * *r) : Element();
}

Element delta_apply(const Algebra& alg, int i, const Element& a, Side side) {
    const Presentation& p = alg.presentation();
    const int M = p.M();
    Element out;
    for (const auto& [m, c] : a.terms()) {
        check_support(p, i, m, side);
        // Twisted Leibniz rule over the letters of m, left to right.
        std::vector<std::pair<int, int>> letters;
        for (int k = 0; k < M; ++k)
            for (int t = 0; t < std::abs(m[k]); ++t) letters.emplace_back(k, m[k] > 0 ? 1 : -1);
        Monomial prefix(static_cast<size_t>(M), 0);
        for (size_t n = 0; n < letters.size(); ++n) {
            auto [k, sign] = letters[n];
            Monomial suffix(static_cast<size_t>(M), 0);
            for (size_t t = n + 1; t < letters.size(); ++t) suffix[letters[t].first] += letters[t].second;
            Element d = delta_generator(p, i, k, side);
            if (sign < 0 && !d.is_zero()) {
                // delta(x^{-1}) = -tau(x^{-1}) delta(x) x^{-1}
                d = -(RF::q_pow(-p.S[i][k]) * alg.multiply(alg.gen(k, -1), alg.multiply(d, alg.gen(k, -1))));
            }
            if (!d.is_zero()) {
                Element pre = Element::monomial(prefix, c * RF::q_pow(p.weight(i, prefix)));
                out += alg.multiply(alg.multiply(pre, d), Element::monomial(suffix));
            }
            prefix[k] += sign;
        }
    }
    return out;
}

// ---------------------------------------------------------------- validate

bool ValidationReport::ok() const {
    for (const auto& c : checks)
        if (!c.ok) return false;
    return true;
}

std::vector<std::string> ValidationReport::failures() const {
    std::vector<std::string> out;
    for (const auto& c : checks)
        if (!c.ok) out.push_back(c.name + ": " + c.witness);
    return out;
}

namespace {

std::string pair_label(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

Check structural(const Presentation& p) {
    Check ch{"structure", true, ""};
    auto fail = [&](const std::string& w) {
        if (ch.ok) {
            ch.ok = false;
            ch.witness = w;
        }
    };
    const int M = p.M();
    if (static_cast<int>(p.distinguished.size()) != M || static_cast<int>(p.S.size()) != M) {
        fail("sizes of names, distinguished and S disagree");
        return ch;
    }
    for (int i = 0; i < M; ++i) {
        if (static_cast<int>(p.S[i].size()) != M) {
            fail("S is not square");
            return ch;
        }
        for (int j = 0; j < M; ++j)
            if (p.S[i][j] != -p.S[j][i]) fail("S is not skew-symmetric at " + pair_label(i, j));
    }
    for (const auto& [key, r] : p.tails) {
        auto [i, j] = key;
        if (i < 0 || j >= M || i >= j) {
            fail("tail key " + pair_label(i, j) + " is not an ordered pair i<j");
            continue;
        }
        if (r.is_zero()) continue;
        if (p.distinguished[i] || p.distinguished[j])
            fail(pair_label(i, j) + ": relation with a distinguished generator must be a pure q-commutation");
        for (const auto& [m, c] : r.terms()) {
            if (static_cast<int>(m.size()) != M) {
                fail(pair_label(i, j) + ": tail monomial has wrong length");
                continue;
            }
            for (int k = 0; k < M; ++k) {
                if (m[k] == 0) continue;
                if (k <= i || k >= j) fail(pair_label(i, j) + ": tail uses " + p.names[k]);
                if (m[k] < 0 && !p.distinguished[k])
                    fail(pair_label(i, j) + ": tail has a negative power of " + p.names[k]);
            }
        }
    }
    return ch;
}

}  // namespace

ValidationReport validate(const Presentation& p) {
    ValidationReport rep;
    Check st = structural(p);
    rep.checks.push_back(st);
    if (!st.ok) return rep;
    const int M = p.M();
    Algebra alg(p);

    // Diamond check on descending letter triples, both bracketings.
    Check diamond{"diamond", true, ""};
    std::vector<std::pair<int, int>> letters;
    for (int i = 0; i < M; ++i) {
        letters.emplace_back(i, 1);
        if (p.distinguished[i]) letters.emplace_back(i, -1);
    }
    for (const auto& [i, si] : letters)
        for (const auto& [j, sj] : letters)
            for (const auto& [k, sk] : letters) {
                if (!(i < j && j < k) || !diamond.ok) continue;
                Element xi = alg.gen(i, si), xj = alg.gen(j, sj), xk = alg.gen(k, sk);
                Element lhs = alg.multiply(alg.multiply(xk, xj), xi);
                Element rhs = alg.multiply(xk, alg.multiply(xj, xi));
                if (lhs != rhs) {
                    diamond.ok = false;
                    diamond.witness = "triple (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                      std::to_string(k + 1) + ")";
                }
            }
    rep.checks.push_back(diamond);

    // CN1
    rep.exponents = p.exponents();
    Check cn1{"CN1", rep.exponents.problems.empty(), ""};
    if (!cn1.ok) cn1.witness = rep.exponents.problems.front();
    for (int i = 0; i < M && cn1.ok; ++i) {
        for (Side side : {Side::Right, Side::Left}) {
            const auto& s = side == Side::Right ? rep.exponents.right[i] : rep.exponents.left[i];
            bool nonzero_delta = false;
            for (int j = 0; j < M; ++j) {
                if (side == Side::Right ? j <= i : j >= i) continue;
                Element xj = alg.gen(j);
                Element d = delta_generator(p, i, j, side);
                if (d.is_zero()) continue;
                nonzero_delta = true;
                Element lhs = tau_apply(alg, i, d, side);
                Element rhs = RF::q_pow(s.value_or(0)) * delta_apply(alg, i, tau_apply(alg, i, xj, side), side);
                if (lhs != rhs && cn1.ok) {
                    cn1.ok = false;
                    cn1.witness = std::string(side == Side::Right ? "tau_" : "tau'_") + std::to_string(i + 1) +
                                  " delta relation fails on " + p.names[j];
                }
            }
            if (nonzero_delta && s.value_or(0) == 0 && cn1.ok) {
                cn1.ok = false;
                cn1.witness = std::string(side == Side::Right ? "s_" : "s'_") + std::to_string(i + 1) +
                              " = 0 while the derivation is nonzero";
            }
        }
    }
    rep.checks.push_back(cn1);

    // CN2: integer rescaling exponents per tau_i / tau'_i.
    Check cn2{"CN2", true, ""};
    for (Side side : {Side::Right, Side::Left}) {
        auto& table = side == Side::Right ? rep.weights_right : rep.weights_left;
        table.assign(static_cast<size_t>(M), std::nullopt);
        for (int i = 0; i < M; ++i) {
            IntMatrix A;
            std::vector<Integer> b;
            for (int j = 0; j < M; ++j) {
                if (side == Side::Right ? j <= i : j >= i) continue;
                std::vector<Integer> row(static_cast<size_t>(M), 0);
                row[j] = 1;
                A.push_back(row);
                b.emplace_back(p.S[i][j]);
            }
            for (const auto& [key, r] : p.tails)
                for (const auto& [m, c] : r.terms()) {
                    std::vector<Integer> row(static_cast<size_t>(M), 0);
                    for (int k = 0; k < M; ++k) row[k] += m[k];
                    row[key.first] -= 1;
                    row[key.second] -= 1;
                    A.push_back(row);
                    b.emplace_back(0);
                }
            std::optional<std::vector<Integer>> w;
            if (A.empty())
                w = std::vector<Integer>(static_cast<size_t>(M), 0);
            else
                w = solve_integer(A, b);
            if (!w) {
                if (cn2.ok) {
                    cn2.ok = false;
                    cn2.witness = std::string(side == Side::Right ? "tau_" : "tau'_") + std::to_string(i + 1) +
                                  " has no diagonal extension";
                }
                continue;
            }
            std::vector<int> wi;
            for (const auto& x : *w) wi.push_back(static_cast<int>(x.get_si()));
            table[i] = wi;
        }
    }
    rep.checks.push_back(cn2);
    return rep;
}

}  // namespace qsolv
