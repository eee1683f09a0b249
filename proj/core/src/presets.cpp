#include <algorithm>
#include <string>

#include "qsolv/algebra.hpp"
#include "qsolv/errors.hpp"

namespace qsolv {

namespace {

Presentation skeleton(int M, const std::string& stem) {
    Presentation p;
    for (int i = 0; i < M; ++i) p.names.push_back(stem + std::to_string(i + 1));
    p.distinguished.assign(static_cast<size_t>(M), false);
    p.S.assign(static_cast<size_t>(M), std::vector<int>(static_cast<size_t>(M), 0));
    return p;
}

void set_exponent(Presentation& p, int i, int j, int s) {
    p.S[i][j] = s;
    p.S[j][i] = -s;
}

}  // namespace

Presentation quantum_affine_space(int n, const std::vector<std::vector<int>>& S) {
    if (n < 1) throw InvalidArgument("quantum affine space needs n >= 1");
    Presentation p = skeleton(n, "x");
    if (static_cast<int>(S.size()) != n) throw InvalidArgument("S must be n x n");
    p.S = S;
    return p;
}

Presentation quantum_plane() { return quantum_affine_space(2, {{0, 1}, {-1, 0}}); }

Presentation quantum_weyl() {
    Presentation p = quantum_plane();
    p.tails[{0, 1}] = Element::scalar(2, RF(1));
    return p;
}

Presentation quantum_matrices(int n) {
    if (n < 1) throw InvalidArgument("quantum matrices need n >= 1");
    const int M = n * n;
    Presentation p;
    p.distinguished.assign(static_cast<size_t>(M), false);
    p.S.assign(static_cast<size_t>(M), std::vector<int>(static_cast<size_t>(M), 0));
    auto idx = [n](int i, int j) { return i * n + j; };
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) p.names.push_back("a" + std::to_string(i + 1) + std::to_string(j + 1));
    const RF q_minus_qinv = RF::q_pow(1) - RF::q_pow(-1);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                for (int l = 0; l < n; ++l) {
                    int a = idx(i, j), b = idx(k, l);
                    if (a >= b) continue;
                    if (i == k || j == l) {
                        set_exponent(p, a, b, 1);
                    } else if (j < l) {
                        Monomial m(static_cast<size_t>(M), 0);
                        m[idx(i, l)] = 1;
                        m[idx(k, j)] = 1;
                        p.tails[{a, b}] = Element::monomial(m, q_minus_qinv);
                    }
                }
    return p;
}

Presentation preset(const std::string& raw) {
    std::string name = raw;
    std::replace(name.begin(), name.end(), '_', '-');
    if (name == "quantum-plane") return quantum_plane();
    if (name == "quantum-weyl") return quantum_weyl();
    auto suffix_int = [&](const std::string& stem) -> int {
        std::string rest = name.substr(stem.size());
        if (rest.empty() || !std::all_of(rest.begin(), rest.end(), ::isdigit))
            throw InvalidArgument("bad preset size in '" + raw + "'");
        return std::stoi(rest);
    };
    if (name.rfind("quantum-matrices-", 0) == 0) {
        int n = suffix_int("quantum-matrices-");
        if (n > 4) throw SizeLimit("quantum-matrices-" + std::to_string(n) + " exceeds the supported size 4");
        return quantum_matrices(n);
    }
    if (name.rfind("quantum-affine-", 0) == 0) {
        int n = suffix_int("quantum-affine-");
        if (n > 20) throw SizeLimit("quantum affine space limited to 20 generators");
        std::vector<std::vector<int>> S(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n), 0));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                S[i][j] = 1;
                S[j][i] = -1;
            }
        return quantum_affine_space(n, S);
    }
    throw InvalidArgument("unknown preset '" + raw + "'");
}

std::vector<std::string> preset_names() {
    return {"quantum-plane", "quantum-weyl", "quantum-matrices-2", "quantum-matrices-3", "quantum-affine-3"};
}

}  // namespace qsolv
