#include "qsolv/strata.hpp"

#include <algorithm>
#include <functional>

#include "qsolv/errors.hpp"

namespace qsolv {

std::string to_string(Verdict v) {
    switch (v) {
        case Verdict::No: return "no";
        case Verdict::Yes: return "yes";
        default: return "undetermined";
    }
}

std::string mu_string(const std::vector<int>& mu) {
    std::string s = "{";
    for (size_t i = 0; i < mu.size(); ++i) s += (i ? "," : "") + std::to_string(mu[i] + 1);
    return s + "}";
}

Verdict residue_verdict(const std::vector<Element>& residues) {
    bool all_zero = true;
    for (const auto& r : residues) {
        if (r.is_zero()) continue;
        all_zero = false;
        // A single term is a scalar times a monomial in invertible y's.
        if (r.size() == 1) return Verdict::No;
    }
    return all_zero ? Verdict::Yes : Verdict::Undetermined;
}

Verdict residue_verdict_at(const std::vector<Element>& residues, int l) {
    bool all_zero = true;
    for (const auto& r : residues) {
        int nonzero = 0;
        for (const auto& [m, c] : r.terms())
            if (!specialize(c, l).is_zero()) ++nonzero;
        if (nonzero == 0) continue;
        all_zero = false;
        if (nonzero == 1) return Verdict::No;
    }
    return all_zero ? Verdict::Yes : Verdict::Undetermined;
}

namespace {

Element y_part(const Element& e, const std::vector<int>& deleted) {
    Element out;
    for (const auto& [m, c] : e.terms()) {
        bool pure = std::all_of(deleted.begin(), deleted.end(), [&](int d) { return m[d] == 0; });
        if (pure) out.add_term(m, c);
    }
    return out;
}

void classify(Stratum& st, const Presentation& p, const std::vector<int>& mu) {
    st.mu = mu;
    std::sort(st.mu.begin(), st.mu.end());
    for (int i = 0; i < p.M(); ++i) {
        bool in_y = p.is_distinguished(i) || std::binary_search(st.mu.begin(), st.mu.end(), i);
        (in_y ? st.y_index : st.deleted).push_back(i);
    }
}

void compute_residues(Stratum& st, const Presentation& p, const StratifyOptions& opts) {
    const Presentation& chain = st.chain;
    for (size_t a = 0; a < st.deleted.size(); ++a)
        for (size_t b = a + 1; b < st.deleted.size(); ++b) {
            int i = st.deleted[a], j = st.deleted[b];
            if (const Element* r = chain.tail(i, j))
                st.residues.push_back({"tail(" + p.names[i] + "," + p.names[j] + ")", y_part(*r, st.deleted)});
        }
    // Each deleted generator in the form it had when the chain passed it,
    // carried forward through the later pivot inversions.
    for (int j : st.deleted) {
        if (p.is_distinguished(j)) continue;
        size_t stage = static_cast<size_t>(std::count_if(st.mu.begin(), st.mu.end(), [&](int a) { return a < j; }));
        Monomial m(static_cast<size_t>(p.M()), 0);
        m[j] = 1;
        Element e = Element::monomial(m);
        for (size_t s = stage; s < st.steps.size(); ++s) e = st.steps[s]->phi(e);
        st.residues.push_back({"deleted " + p.names[j], y_part(e, st.deleted)});
    }
    std::vector<Element> values;
    for (const auto& r : st.residues) values.push_back(r.value);
    st.C_admissible = residue_verdict(values);
    if (opts.l) {
        st.l = opts.l;
        try {
            st.eps_admissible = residue_verdict_at(values, *opts.l);
        } catch (const DenominatorVanishes& e) {
            st.eps_admissible = Verdict::Undetermined;
            st.notes.push_back(std::string("residue coefficient not defined at eps: ") + e.what());
        }
        // Residues are sums of y-monomials; the derivations D_{y^l} rescale
        // each monomial, so the closure adds nothing beyond the eps test.
        st.epsD_admissible = st.eps_admissible;
    }
}

Stratum finish(const Presentation& p, const std::vector<int>& mu,
               std::vector<std::shared_ptr<const PivotInversion>> steps, const StratifyOptions& opts) {
    Stratum st;
    classify(st, p, mu);
    st.steps = std::move(steps);
    st.chain = st.steps.empty() ? p : st.steps.back()->result;
    try {
        compute_residues(st, p, opts);
    } catch (const Error& e) {
        st.error = e.what();
        st.C_admissible = Verdict::Undetermined;
    }
    y_split(st, p);
    if (!p.distinguished.empty() &&
        std::any_of(p.distinguished.begin(), p.distinguished.end(), [](bool b) { return b; }))
        st.notes.push_back("Y includes the originally distinguished generators");
    return st;
}

Stratum failed(const Presentation& p, const std::vector<int>& mu, const std::string& why) {
    Stratum st;
    classify(st, p, mu);
    st.chain = p;
    st.error = why;
    st.C_admissible = Verdict::Undetermined;
    y_split(st, p);
    return st;
}

}  // namespace

void y_split(Stratum& st, const Presentation& original) {
    const int k = st.k();
    st.T.assign(static_cast<size_t>(k), std::vector<Integer>(static_cast<size_t>(k), 0));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) st.T[a][b] = original.S[st.y_index[a]][st.y_index[b]];
    st.congruence = identity_matrix(static_cast<size_t>(k));
    st.h_basis.clear();
    st.u_basis.clear();
    st.z_basis.clear();
    if (k == 0) {
        st.r = st.t = st.p = 0;
        return;
    }
    st.normal_form = skew_normal_form(st.T);
    st.r = st.normal_form.r;
    st.h_basis.assign(st.normal_form.U.begin(), st.normal_form.U.begin() + 2 * st.r);
    IntMatrix B = st.normal_form.kernel_basis();
    if (B.empty()) {
        st.t = st.p = 0;
        return;
    }
    if (st.deleted.empty()) {
        st.t = 0;
        st.p = static_cast<int>(B.size());
        st.z_basis = B;
        return;
    }
    // Weights of the kernel monomials against the deleted generators.
    IntMatrix W(static_cast<size_t>(k), std::vector<Integer>(st.deleted.size(), 0));
    for (int a = 0; a < k; ++a)
        for (size_t d = 0; d < st.deleted.size(); ++d) W[a][d] = original.S[st.y_index[a]][st.deleted[d]];
    IntMatrix A = matmul(B, W);
    SmithResult sm = smith(A);
    IntMatrix rows = matmul(sm.U, B);
    const size_t rank = sm.divisors.size();
    st.t = static_cast<int>(rank);
    st.p = static_cast<int>(B.size() - rank);
    // Sign-normalize so each u/z row starts with a positive entry.
    for (auto& row : rows) {
        auto it = std::find_if(row.begin(), row.end(), [](const Integer& x) { return sgn(x) != 0; });
        if (it != row.end() && sgn(*it) < 0)
            for (auto& x : row) x = -x;
    }
    st.u_basis.assign(rows.begin(), rows.begin() + static_cast<long>(rank));
    st.z_basis.assign(rows.begin() + static_cast<long>(rank), rows.end());
}

Stratum build_stratum(const Presentation& p, std::vector<int> mu, const StratifyOptions& opts) {
    std::sort(mu.begin(), mu.end());
    mu.erase(std::unique(mu.begin(), mu.end()), mu.end());
    std::vector<std::shared_ptr<const PivotInversion>> steps;
    Presentation cur = p;
    for (int a : mu) {
        if (a < 0 || a >= p.M()) throw InvalidArgument("pivot index out of range");
        if (p.is_distinguished(a)) throw InvalidArgument(p.names[a] + " is already distinguished");
        try {
            steps.push_back(std::make_shared<PivotInversion>(invert_pivot(cur, a, opts.cap)));
        } catch (const Error& e) {
            return failed(p, mu, e.what());
        }
        cur = steps.back()->result;
    }
    return finish(p, mu, steps, opts);
}

std::vector<Stratum> stratify(const Presentation& p, const StratifyOptions& opts) {
    std::vector<int> free;
    for (int i = 0; i < p.M(); ++i)
        if (!p.is_distinguished(i)) free.push_back(i);
    if (free.size() > 20) throw SizeLimit("more than 20 candidate pivots");
    std::vector<Stratum> out;
    // Depth-first over subsets listed in ascending order, so each child
    // extends its parent's chain by one inversion.
    std::function<void(size_t, std::vector<int>&, std::vector<std::shared_ptr<const PivotInversion>>&,
                       const std::string&)>
        visit = [&](size_t start, std::vector<int>& mu, std::vector<std::shared_ptr<const PivotInversion>>& steps,
                    const std::string& err) {
            out.push_back(err.empty() ? finish(p, mu, steps, opts) : failed(p, mu, err));
            for (size_t n = start; n < free.size(); ++n) {
                int a = free[n];
                std::string child_err = err;
                if (child_err.empty()) {
                    try {
                        const Presentation& cur = steps.empty() ? p : steps.back()->result;
                        steps.push_back(std::make_shared<PivotInversion>(invert_pivot(cur, a, opts.cap)));
                    } catch (const Error& e) {
                        child_err = e.what();
                    }
                }
                mu.push_back(a);
                visit(n + 1, mu, steps, child_err);
                mu.pop_back();
                if (child_err.empty()) steps.pop_back();
            }
        };
    std::vector<int> mu;
    std::vector<std::shared_ptr<const PivotInversion>> steps;
    visit(0, mu, steps, "");
    std::sort(out.begin(), out.end(), [](const Stratum& a, const Stratum& b) {
        return a.mu.size() != b.mu.size() ? a.mu.size() < b.mu.size() : a.mu < b.mu;
    });
    return out;
}

}  // namespace qsolv
