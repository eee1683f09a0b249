// qsolv: command-line front end for the qsolv library.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <map>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qsolv/algebra.hpp"
#include "qsolv/cauchon.hpp"
#include "qsolv/errors.hpp"
#include "qsolv/io.hpp"
#include "qsolv/lattice.hpp"
#include "qsolv/oracle.hpp"
#include "qsolv/quantum.hpp"
#include "qsolv/strata.hpp"

namespace {

using nlohmann::json;
using namespace qsolv;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitValidation = 2;
constexpr int kExitUndetermined = 3;

struct Options {
    std::string preset;
    std::string file;
    std::optional<int> l;
    std::optional<int> stratum;
    std::optional<std::string> mu;
    std::string chi;
    bool strict = false;
    std::string json_path;
    std::uint64_t seed = 1;
    int cap = 4096;
};

// Raised when a loaded presentation fails validation.
struct InvalidPresentation : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Report {
    std::string command;
    json inputs = json::object();
    json results = json::object();
    std::vector<std::string> caveats;
    std::vector<std::string> notes;
    std::ostringstream text;

    void caveat(const std::string& c) {
        if (std::find(caveats.begin(), caveats.end(), c) == caveats.end()) caveats.push_back(c);
    }
    void note(const std::string& n) {
        if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
    }
    json to_json() const {
        return {{"command", command}, {"inputs", inputs}, {"results", results}, {"caveats", caveats}, {"notes", notes}};
    }
};

std::string hex_digest(const std::string& s) {
    // FNV-1a, stable across platforms and runs.
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << std::setw(16) << std::setfill('0') << h;
    return out.str();
}

Presentation load_input(const Options& o, Report& rep, bool check = true) {
    if (!o.preset.empty() && !o.file.empty()) throw InvalidArgument("give either --preset or --file, not both");
    Presentation p;
    if (!o.preset.empty()) {
        p = preset(o.preset);
        rep.inputs["preset"] = o.preset;
    } else if (!o.file.empty()) {
        p = load_presentation(o.file);
        rep.inputs["file"] = o.file;
    } else {
        throw InvalidArgument("an algebra is required: --preset NAME or --file PATH");
    }
    rep.inputs["digest"] = hex_digest(presentation_to_json(p, -1));
    if (o.l) rep.inputs["l"] = *o.l;
    if (check) {
        ValidationReport v = validate(p);
        if (!v.ok()) {
            std::string why;
            for (const auto& f : v.failures()) why += "\n  " + f;
            throw InvalidPresentation("presentation failed validation:" + why);
        }
    }
    return p;
}

int require_l(const Options& o) {
    if (!o.l) throw InvalidArgument("this command needs --l");
    if (*o.l < 2) throw InvalidArgument("--l must be at least 2");
    return *o.l;
}

// Root-of-unity invariants only make sense at an admissible order.
int require_admissible_l(const Presentation& p, const Options& o) {
    int l = require_l(o);
    auto report = admissible_l(p, nilpotency_profile(p), l);
    if (report.determined() && !report.admissible()) {
        std::string why;
        for (const auto& w : report.witnesses) why += "; " + w;
        throw InadmissibleL("l = " + std::to_string(l) + " is not admissible" + why);
    }
    return l;
}

std::vector<int> parse_mu(const std::string& text, int M) {
    std::vector<int> mu;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), ::isspace), item.end());
        if (item.empty() || item == "{}" ) continue;
        if (item.front() == '{') item.erase(0, 1);
        if (!item.empty() && item.back() == '}') item.pop_back();
        if (item.empty()) continue;
        int v = std::stoi(item);
        if (v < 1 || v > M) throw InvalidArgument("--mu index " + item + " out of range");
        mu.push_back(v - 1);
    }
    return mu;
}

// The stratum named by --stratum (position in the sorted list) or --mu.
Stratum select_stratum(const Presentation& p, const Options& o, Report& rep) {
    StratifyOptions so;
    so.l = o.l;
    if (o.stratum && o.mu) throw InvalidArgument("give either --stratum or --mu, not both");
    if (o.mu) {
        Stratum st = build_stratum(p, parse_mu(*o.mu, p.M()), so);
        rep.inputs["mu"] = mu_string(st.mu);
        return st;
    }
    if (!o.stratum) throw InvalidArgument("this command needs --stratum INDEX or --mu LIST");
    auto all = stratify(p, so);
    if (*o.stratum < 0 || *o.stratum >= static_cast<int>(all.size()))
        throw InvalidArgument("--stratum must lie in [0, " + std::to_string(all.size()) + ")");
    Stratum st = std::move(all[static_cast<size_t>(*o.stratum)]);
    rep.inputs["stratum"] = *o.stratum;
    rep.inputs["mu"] = mu_string(st.mu);
    return st;
}

std::string names_of(const std::vector<int>& idx, const Presentation& p) {
    std::string s;
    for (size_t i = 0; i < idx.size(); ++i) s += (i ? "," : "") + p.names[idx[i]];
    return s;
}

// ---------------------------------------------------------------- commands

int cmd_presets(const Options& o, Report& rep) {
    if (!o.preset.empty()) {
        Presentation p = preset(o.preset);
        rep.inputs["preset"] = o.preset;
        std::string def = presentation_to_json(p);
        rep.results["definition"] = json::parse(def);
        rep.text << def << "\n";
        return kExitOk;
    }
    json list = json::array();
    for (const auto& name : preset_names()) {
        Presentation p = preset(name);
        list.push_back({{"name", name}, {"generators", p.M()}});
        rep.text << std::left << std::setw(22) << name << p.M() << " generators\n";
    }
    rep.results["presets"] = list;
    return kExitOk;
}

int cmd_validate(const Options& o, Report& rep) {
    Presentation p = load_input(o, rep, false);
    ValidationReport v = validate(p);
    json checks = json::array();
    for (const auto& c : v.checks) {
        checks.push_back({{"name", c.name}, {"ok", c.ok}, {"witness", c.witness}});
        rep.text << std::left << std::setw(10) << c.name << (c.ok ? "ok" : "FAILED");
        if (!c.witness.empty()) rep.text << "  " << c.witness;
        rep.text << "\n";
    }
    rep.results["checks"] = checks;
    rep.results["valid"] = v.ok();
    auto exps = [](const std::vector<std::optional<int>>& xs) {
        json out = json::array();
        for (const auto& x : xs) out.push_back(x ? json(*x) : json(nullptr));
        return out;
    };
    rep.results["exponents_right"] = exps(v.exponents.right);
    rep.results["exponents_left"] = exps(v.exponents.left);
    if (v.ok()) {
        auto prof = nilpotency_profile(p);
        rep.results["nilpotency_bound"] = prof.N;
        rep.text << "nilpotency bound N = " << prof.N << "\n";
    }
    rep.text << "valid: " << (v.ok() ? "yes" : "no") << "\n";
    return v.ok() ? kExitOk : kExitValidation;
}

int cmd_admissible(const Options& o, Report& rep) {
    Presentation p = load_input(o, rep);
    int l = require_l(o);
    auto report = admissible_l(p, nilpotency_profile(p), l);
    std::string verdict = !report.determined() ? "undetermined" : (report.admissible() ? "yes" : "no");
    rep.results["admissible"] = verdict;
    rep.results["coprime_exponents"] = report.coprime_exponents;
    rep.results["bound_ok"] = report.bound_ok;
    rep.results["subsets_checked"] = report.subsets_checked;
    rep.results["witnesses"] = report.witnesses;
    for (const auto& n : report.notes) rep.note(n);
    rep.text << "admissible: " << verdict << "\n";
    for (const auto& w : report.witnesses) rep.text << "  witness: " << w << "\n";
    if (!report.determined() && o.strict) return kExitUndetermined;
    return kExitOk;
}

int cmd_stratify(const Options& o, Report& rep) {
    Presentation p = load_input(o, rep);
    StratifyOptions so;
    so.l = o.l;
    auto strata = stratify(p, so);
    int admissible = 0;
    bool undetermined = false;
    json rows = json::array();
    rep.text << std::left << std::setw(6) << "index" << std::setw(16) << "mu" << std::setw(14) << "C-admissible";
    if (o.l) rep.text << std::setw(16) << "eps-admissible";
    rep.text << "r  t  p\n";
    for (size_t i = 0; i < strata.size(); ++i) {
        const auto& st = strata[i];
        if (st.C_admissible == Verdict::Yes) ++admissible;
        if (st.C_admissible == Verdict::Undetermined) undetermined = true;
        if (st.eps_admissible && *st.eps_admissible == Verdict::Undetermined) undetermined = true;
        json row = {{"index", i},
                    {"mu", mu_string(st.mu)},
                    {"y", names_of(st.y_index, p)},
                    {"C_admissible", to_string(st.C_admissible)},
                    {"r", st.r},
                    {"t", st.t},
                    {"p", st.p}};
        if (st.eps_admissible) row["eps_admissible"] = to_string(*st.eps_admissible);
        if (st.epsD_admissible) row["epsD_admissible"] = to_string(*st.epsD_admissible);
        json residues = json::array();
        for (const auto& r : st.residues)
            if (!r.value.is_zero()) residues.push_back({{"source", r.source}, {"value", r.value.to_string(st.chain.names)}});
        row["residues"] = residues;
        if (!st.error.empty()) row["error"] = st.error;
        rows.push_back(row);
        rep.text << std::left << std::setw(6) << i << std::setw(16) << mu_string(st.mu) << std::setw(14)
                 << to_string(st.C_admissible);
        if (o.l) rep.text << std::setw(16) << (st.eps_admissible ? to_string(*st.eps_admissible) : "-");
        rep.text << st.r << "  " << st.t << "  " << st.p << "\n";
    }
    rep.results["strata"] = rows;
    rep.results["candidates"] = strata.size();
    rep.results["C_admissible"] = admissible;
    rep.text << strata.size() << " candidates, " << admissible << " admissible\n";
    return undetermined && o.strict ? kExitUndetermined : kExitOk;
}

void invariants_row(const Stratum& st, int l, Report& rep, json& out) {
    auto inv = stratum_invariants(st, l);
    out = {{"mu", mu_string(st.mu)}, {"dim", inv.dim}, {"count", inv.count}, {"leaf_dim", inv.leaf_dim},
           {"r", st.r}, {"t", st.t}, {"p", st.p}};
    for (const auto& c : inv.caveats) rep.caveat(c);
    for (const auto& n : inv.notes) rep.note(n);
}

int cmd_invariants(const Options& o, Report& rep) {
    Presentation p = load_input(o, rep);
    int l = require_admissible_l(p, o);
    bool undetermined = false;
    if (o.stratum || o.mu) {
        Stratum st = select_stratum(p, o, rep);
        json row;
        invariants_row(st, l, rep, row);
        rep.results = row;
        rep.text << "stratum " << mu_string(st.mu) << "\n";
        rep.text << "dim " << row["dim"].get<long>() << "\n";
        rep.text << "count " << row["count"].get<long>() << "\n";
        rep.text << "leaf dim " << row["leaf_dim"].get<int>() << "\n";
        undetermined = st.eps_admissible && *st.eps_admissible == Verdict::Undetermined;
    } else {
        StratifyOptions so;
        so.l = l;
        json rows = json::array();
        rep.text << std::left << std::setw(16) << "mu" << std::setw(8) << "dim" << "count\n";
        for (const auto& st : stratify(p, so)) {
            if (st.eps_admissible && *st.eps_admissible == Verdict::No) continue;
            json row;
            try {
                invariants_row(st, l, rep, row);
            } catch (const InadmissibleL& e) {
                rep.note(mu_string(st.mu) + ": " + e.what());
                continue;
            }
            if (st.eps_admissible && *st.eps_admissible == Verdict::Undetermined) undetermined = true;
            rows.push_back(row);
            rep.text << std::left << std::setw(16) << mu_string(st.mu) << std::setw(8) << row["dim"].get<long>()
                     << row["count"].get<long>() << "\n";
        }
        rep.results["strata"] = rows;
    }
    return undetermined && o.strict ? kExitUndetermined : kExitOk;
}

std::string chart_term_string(const ChartTerm& t, const CenterChart& chart) {
    std::string s = "(" + t.coeff.to_string() + ")";
    for (size_t g = 0; g < t.powers.size(); ++g) {
        if (t.powers[g] == 0) continue;
        s += "*[" + chart.gens[g].label + "]";
        if (t.powers[g] != 1) s += "^" + std::to_string(t.powers[g]);
    }
    return s;
}

int cmd_poisson(const Options& o, Report& rep) {
    Presentation p = load_input(o, rep);
    int l = require_admissible_l(p, o);
    Stratum st = select_stratum(p, o, rep);
    auto inv = stratum_invariants(st, l);
    for (const auto& c : inv.caveats) rep.caveat(c);
    CenterChart chart = center_chart(st, p, l);
    json gens = json::array();
    rep.text << "chart generators of " << mu_string(st.mu) << " at l = " << l << "\n";
    for (size_t g = 0; g < chart.gens.size(); ++g) {
        gens.push_back({{"kind", to_string(chart.gens[g].kind)}, {"label", chart.gens[g].label}});
        rep.text << "  g" << g << " " << to_string(chart.gens[g].kind) << "  " << chart.gens[g].label << "\n";
    }
    json brackets = json::array();
    rep.text << "brackets\n";
    for (size_t a = 0; a < chart.gens.size(); ++a)
        for (size_t b = a + 1; b < chart.gens.size(); ++b) {
            std::string value;
            for (const auto& t : chart.bracket[a][b]) value += (value.empty() ? "" : " + ") + chart_term_string(t, chart);
            if (value.empty()) value = "0";
            brackets.push_back({{"a", a}, {"b", b}, {"value", value}});
            rep.text << "  {g" << a << ", g" << b << "} = " << value << "\n";
        }
    rep.results["generators"] = gens;
    rep.results["brackets"] = brackets;
    return kExitOk;
}

std::vector<Cyclotomic> read_chi(const Options& o, int l) {
    if (o.chi.empty()) throw InvalidArgument("this command needs --chi PATH");
    return load_character(o.chi, l);
}

long ipow(long b, int e) {
    long r = 1;
    while (e-- > 0) r *= b;
    return r;
}

int cmd_stabilizer(const Options& o, Report& rep) {
    Presentation p = load_input(o, rep);
    int l = require_admissible_l(p, o);
    Stratum st = select_stratum(p, o, rep);
    auto inv = stratum_invariants(st, l);
    for (const auto& c : inv.caveats) rep.caveat(c);
    CenterChart chart = center_chart(st, p, l);
    auto chi = read_chi(o, l);
    rep.inputs["chi"] = o.chi;
    auto stab = stabilizer(chart, chi, o.seed);
    for (const auto& n : stab.notes) rep.note(n);
    long predicted = ipow(l, stab.rank_estimate);
    rep.results = {{"mu", mu_string(st.mu)},
                   {"chart_dim", stab.chart_dim},
                   {"bivector_rank", stab.bivector_rank},
                   {"dim", stab.dim},
                   {"ideal_dim", stab.ideal_dim},
                   {"toric_dim", stab.toric_dim},
                   {"t", st.t},
                   {"abelian", stab.abelian},
                   {"antisymmetric", stab.antisymmetric},
                   {"jacobi", stab.jacobi},
                   {"rank_estimate", stab.rank_estimate},
                   {"conjecture", {{"l_pow_rank", predicted}, {"count", inv.count}, {"match", predicted == inv.count}}}};
    rep.text << "stratum " << mu_string(st.mu) << "\n";
    rep.text << "dim g(chi) " << stab.dim << " (chart " << stab.chart_dim << ", bivector rank " << stab.bivector_rank
             << ")\n";
    rep.text << "ideal part " << stab.ideal_dim << ", toric part " << stab.toric_dim << " (t = " << st.t << ")\n";
    rep.text << (stab.abelian ? "abelian" : "nonabelian") << ", jacobi " << (stab.jacobi ? "ok" : "FAILED") << "\n";
    rep.text << "rank estimate (exploratory) " << stab.rank_estimate << "\n";
    rep.text << "conjecture check: l^rank = " << predicted << ", count = " << inv.count
             << (predicted == inv.count ? " (match)" : " (mismatch)") << "\n";
    return kExitOk;
}

struct FiberInput {
    FiniteDimAlgebra A;
    bool localized = false;
};

FiberInput build_fiber(const Presentation& p, const Options& o, int l, Report& rep) {
    if (o.stratum || o.mu) {
        Stratum st = select_stratum(p, o, rep);
        std::vector<Cyclotomic> y(st.y_index.size(), Cyclotomic::one(l));
        if (!o.chi.empty()) {
            y = read_chi(o, l);
            rep.inputs["chi"] = o.chi;
        }
        rep.caveat("count scoped to localized center");
        if (st.p > 0)
            rep.note("the fiber fixes l-th powers only; its block count aggregates l^p = " +
                     std::to_string(ipow(l, st.p)) + " characters of the z generators");
        return {stratum_fiber(st, l, y, o.cap), true};
    }
    auto chi = read_chi(o, l);
    rep.inputs["chi"] = o.chi;
    rep.note("global character: the count may aggregate several localized characters");
    return {fiber_algebra(p, l, chi, o.cap), false};
}

int cmd_fiber(const Options& o, Report& rep) {
    Presentation p = load_input(o, rep);
    int l = require_l(o);
    auto [A, localized] = build_fiber(p, o, l, rep);
    auto J = radical(A);
    bool nil = is_nilpotent(A, J);
    auto b = blocks(A, J, o.seed);
    for (const auto& n : b.notes) rep.note(n);
    rep.results = {{"dim", A.dim()},
                   {"radical_dim", b.radical_dim},
                   {"radical_nilpotent", nil},
                   {"semisimple_dim", b.semisimple_dim},
                   {"count", b.count},
                   {"simple_dims", b.simple_dims},
                   {"localized", localized}};
    if (b.uniform_simple_dim) rep.results["uniform_simple_dim"] = *b.uniform_simple_dim;
    rep.text << "fiber dim " << A.dim() << "\n";
    rep.text << "radical dim " << b.radical_dim << (nil ? " (nilpotent)" : " (NOT nilpotent)") << "\n";
    rep.text << "blocks " << b.count << "\n";
    if (b.uniform_simple_dim) rep.text << "simple dim " << *b.uniform_simple_dim << " (all blocks)\n";
    if (!b.simple_dims.empty()) {
        rep.text << "simple dims";
        for (int d : b.simple_dims) rep.text << " " << d;
        rep.text << "\n";
    }
    return kExitOk;
}

int cmd_quiver(const Options& o, Report& rep) {
    Presentation p = load_input(o, rep);
    int l = require_l(o);
    auto [A, localized] = build_fiber(p, o, l, rep);
    auto J = radical(A);
    auto idem = block_idempotents(A, J, o.seed);
    auto q = quiver(A, J, idem);
    auto edges = [](const std::vector<std::pair<int, int>>& es) {
        json out = json::array();
        for (auto [i, j] : es) out.push_back({i, j});
        return out;
    };
    rep.results = {{"vertices", q.vertices}, {"edges", edges(q.edges)}, {"edges_j2", edges(q.edges_j2)},
                   {"localized", localized}};
    rep.text << "vertices " << q.vertices << "\n";
    rep.text << "edges (e_i J e_j != 0):";
    for (auto [i, j] : q.edges) rep.text << " " << i << "->" << j;
    rep.text << "\nedges modulo J^2:";
    for (auto [i, j] : q.edges_j2) rep.text << " " << i << "->" << j;
    rep.text << "\n";
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"qsolv: stratification and root-of-unity invariants of nilpotent quantum solvable algebras"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* sub, bool need_l, bool stratum, bool chi) {
        sub->add_option("--preset", o.preset, "Built-in algebra (see `qsolv presets`)");
        sub->add_option("--file", o.file, "Algebra definition file (JSON)");
        auto* lopt = sub->add_option("--l", o.l, "Order of the root of unity eps");
        if (need_l) lopt->description("Order of the root of unity eps (required)");
        if (stratum) {
            sub->add_option("--stratum", o.stratum, "Stratum index in the sorted stratify listing (0-based)");
            sub->add_option("--mu", o.mu, "Pivot set as 1-based indices, e.g. 1,3");
        }
        if (chi) sub->add_option("--chi", o.chi, "Character file (JSON list of cyclotomic literals)");
        sub->add_flag("--strict", o.strict, "Exit with 3 when a result is undetermined");
        sub->add_option("--json", o.json_path, "Also write the report as JSON to PATH ('-' for stdout)");
        sub->add_option("--seed", o.seed, "Seed for randomized estimates (default 1)");
    };

    std::map<CLI::App*, std::function<int(const Options&, Report&)>> handlers;
    auto sub = [&](const std::string& name, const std::string& help, std::function<int(const Options&, Report&)> fn,
                   bool need_l, bool stratum, bool chi) {
        CLI::App* s = app.add_subcommand(name, help);
        add_common(s, need_l, stratum, chi);
        handlers[s] = std::move(fn);
        return s;
    };
    sub("presets", "List built-in algebras, or print one as a definition file with --preset", cmd_presets, false,
        false, false);
    sub("validate", "Check the presentation: structure, overlaps, exponent conditions", cmd_validate, false, false,
        false);
    sub("admissible", "Decide whether --l is admissible for the algebra", cmd_admissible, true, false, false);
    sub("stratify", "List candidate strata with admissibility verdicts", cmd_stratify, false, false, false);
    sub("invariants", "Simple-module dimension and count per admissible stratum", cmd_invariants, true, true, false);
    sub("poisson", "Poisson brackets on the center chart of a stratum", cmd_poisson, true, true, false);
    sub("stabilizer", "Stabilizer algebra of the bracket at a character (--chi: values on chart generators)",
        cmd_stabilizer, true, true, true);
    auto* fib = sub("fiber",
                    "Brute-force fiber algebra: radical and blocks (--chi: values on y's with a stratum, on all "
                    "generators without)",
                    cmd_fiber, true, true, true);
    auto* qv = sub("quiver", "Quiver of the fiber algebra (same inputs as fiber)", cmd_quiver, true, true, true);
    for (auto* s : {fib, qv}) s->add_option("--cap", o.cap, "Largest fiber dimension to build (default 4096)");

    CLI11_PARSE(app, argc, argv);

    CLI::App* chosen = app.get_subcommands().front();
    Report rep;
    rep.command = chosen->get_name();
    int code = kExitOk;
    try {
        code = handlers.at(chosen)(o, rep);
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const InvalidPresentation& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }

    std::cout << rep.text.str();
    for (const auto& c : rep.caveats) std::cout << "caveat: " << c << "\n";
    for (const auto& n : rep.notes) std::cout << "note: " << n << "\n";
    if (!o.json_path.empty()) {
        std::string dump = rep.to_json().dump(2);
        if (o.json_path == "-") {
            std::cout << dump << "\n";
        } else {
            std::ofstream out(o.json_path);
            if (!out) {
                std::cerr << "error: cannot write " << o.json_path << "\n";
                return kExitError;
            }
            out << dump << "\n";
        }
    }
    return code;
}
