#include "qsolv/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "qsolv/errors.hpp"

namespace qsolv {

using nlohmann::json;

namespace {

json integer_json(const Integer& z) {
    if (z.fits_slong_p()) return z.get_si();
    return z.get_str();
}

Integer integer_from(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long>());
    if (j.is_string()) {
        Integer z;
        if (z.set_str(j.get<std::string>(), 10) != 0) throw ParseError("bad integer '" + j.get<std::string>() + "'");
        return z;
    }
    throw ParseError("expected an integer, got " + j.dump());
}

json coeff_json(const RF& c) {
    if (c.is_laurent()) {
        json out = json::array();
        for (const auto& [e, v] : c.laurent_terms())
            out.push_back({e, integer_json(v.get_num()), integer_json(v.get_den())});
        return out;
    }
    json num = json::array(), den = json::array();
    for (const auto& z : c.num().coeffs()) num.push_back(integer_json(z));
    for (const auto& z : c.den().coeffs()) den.push_back(integer_json(z));
    return {{"num", num}, {"den", den}};
}

RF coeff_from(const json& j) {
    if (j.is_number_integer() || j.is_string()) return RF(Rational(integer_from(j)));
    if (j.is_object()) {
        if (!j.contains("num") || !j.contains("den")) throw ParseError("coefficient object needs num and den");
        std::vector<Integer> num, den;
        for (const auto& z : j.at("num")) num.push_back(integer_from(z));
        for (const auto& z : j.at("den")) den.push_back(integer_from(z));
        Poly d(den);
        if (d.is_zero()) throw ParseError("zero denominator");
        return RF(Poly(num), d);
    }
    if (!j.is_array()) throw ParseError("bad coefficient " + j.dump());
    std::vector<std::pair<int, Rational>> terms;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3) throw ParseError("Laurent term must be [exp, num, den]: " + t.dump());
        Integer den = integer_from(t[2]);
        if (den == 0) throw ParseError("zero denominator in " + t.dump());
        Rational v(integer_from(t[1]), den);
        v.canonicalize();
        terms.emplace_back(t[0].get<int>(), v);
    }
    return RF::from_laurent(terms);
}

std::pair<int, int> parse_key(const std::string& key, int M) {
    auto comma = key.find(',');
    if (comma == std::string::npos) throw ParseError("tail key '" + key + "' is not 'i,j'");
    int i = 0, j = 0;
    try {
        i = std::stoi(key.substr(0, comma));
        j = std::stoi(key.substr(comma + 1));
    } catch (const std::exception&) {
        throw ParseError("tail key '" + key + "' is not 'i,j'");
    }
    if (i < 1 || j < 1 || i > M || j > M || i >= j) throw ParseError("tail key '" + key + "' out of range");
    return {i - 1, j - 1};
}

}  // namespace

std::string presentation_to_json(const Presentation& p, int indent) {
    json out;
    out["names"] = p.names;
    json dist = json::array();
    for (int i = 0; i < p.M(); ++i)
        if (p.is_distinguished(i)) dist.push_back(i + 1);
    out["distinguished"] = dist;
    out["S"] = p.S;
    json tails = json::object();
    for (const auto& [key, r] : p.tails) {
        if (r.is_zero()) continue;
        json terms = json::array();
        for (const auto& [m, c] : r.terms()) terms.push_back({coeff_json(c), m});
        tails[std::to_string(key.first + 1) + "," + std::to_string(key.second + 1)] = terms;
    }
    out["tails"] = tails;
    return out.dump(indent);
}

Presentation presentation_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    try {
        Presentation p;
        p.names = j.at("names").get<std::vector<std::string>>();
        const int M = p.M();
        if (M == 0) throw ParseError("no generators");
        p.distinguished.assign(static_cast<size_t>(M), false);
        if (j.contains("distinguished"))
            for (int d : j.at("distinguished").get<std::vector<int>>()) {
                if (d < 1 || d > M) throw ParseError("distinguished index " + std::to_string(d) + " out of range");
                p.distinguished[d - 1] = true;
            }
        p.S = j.at("S").get<std::vector<std::vector<int>>>();
        if (static_cast<int>(p.S.size()) != M) throw ParseError("S must be M x M");
        for (const auto& row : p.S)
            if (static_cast<int>(row.size()) != M) throw ParseError("S must be M x M");
        if (j.contains("tails"))
            for (const auto& [key, terms] : j.at("tails").items()) {
                auto ij = parse_key(key, M);
                Element r;
                for (const auto& t : terms) {
                    if (!t.is_array() || t.size() != 2) throw ParseError("tail term must be [coeff, exponents]");
                    auto m = t[1].get<Monomial>();
                    if (static_cast<int>(m.size()) != M) throw ParseError("exponent vector must have length M");
                    r.add_term(m, coeff_from(t[0]));
                }
                if (!r.is_zero()) p.tails[ij] = r;
            }
        return p;
    } catch (const json::exception& e) {
        throw ParseError(e.what());
    }
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Presentation load_presentation(const std::string& path) { return presentation_from_json(read_file(path)); }

void save_presentation(const Presentation& p, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write " + path);
    out << presentation_to_json(p) << "\n";
}

Cyclotomic parse_cyclotomic(const std::string& text, int l) {
    std::string s;
    for (char c : text)
        if (!std::isspace(static_cast<unsigned char>(c))) s += c;
    if (s.empty()) throw ParseError("empty cyclotomic literal");
    size_t pos = 0;
    auto fail = [&](const std::string& why) -> Cyclotomic {
        throw ParseError("cannot parse '" + text + "': " + why);
    };
    auto read_int = [&]() -> Integer {
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail("expected a number at position " + std::to_string(start));
        return Integer(s.substr(start, pos - start));
    };
    Cyclotomic total = Cyclotomic::zero(l);
    bool first = true;
    while (pos < s.size()) {
        int sign = 1;
        if (s[pos] == '+' || s[pos] == '-') {
            sign = s[pos] == '-' ? -1 : 1;
            ++pos;
        } else if (!first) {
            fail("expected + or -");
        }
        first = false;
        Cyclotomic term = Cyclotomic(l, Rational(sign));
        for (;;) {
            if (pos < s.size() && s[pos] == 'e') {
                ++pos;
                long k = 1;
                if (pos < s.size() && s[pos] == '^') {
                    ++pos;
                    int ks = 1;
                    if (pos < s.size() && s[pos] == '-') {
                        ks = -1;
                        ++pos;
                    }
                    k = ks * read_int().get_si();
                }
                term *= Cyclotomic::epsilon(l, static_cast<int>(((k % l) + l) % l));
            } else {
                Integer num = read_int(), den = 1;
                if (pos < s.size() && s[pos] == '/') {
                    ++pos;
                    den = read_int();
                    if (den == 0) fail("zero denominator");
                }
                Rational v(num, den);
                v.canonicalize();
                term *= Cyclotomic(l, v);
            }
            if (pos < s.size() && s[pos] == '*') {
                ++pos;
                continue;
            }
            break;
        }
        total += term;
    }
    return total;
}

std::vector<Cyclotomic> parse_character(const std::string& text, int l) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (j.is_object()) {
        if (!j.contains("values")) throw ParseError("character file needs a \"values\" list");
        j = j.at("values");
    }
    if (!j.is_array()) throw ParseError("character values must be a list");
    std::vector<Cyclotomic> out;
    for (const auto& v : j) {
        if (v.is_string()) {
            out.push_back(parse_cyclotomic(v.get<std::string>(), l));
        } else if (v.is_number_integer()) {
            out.emplace_back(l, Rational(v.get<long>()));
        } else if (v.is_array()) {
            std::vector<Rational> coords;
            for (const auto& c : v) {
                Cyclotomic x = c.is_string() ? parse_cyclotomic(c.get<std::string>(), l)
                                             : Cyclotomic(l, Rational(integer_from(c)));
                auto r = x.as_rational();
                if (!r) throw ParseError("coordinates must be rational");
                coords.push_back(*r);
            }
            if (static_cast<int>(coords.size()) > euler_phi(l)) throw ParseError("too many coordinates");
            out.emplace_back(l, coords);
        } else {
            throw ParseError("bad character value " + v.dump());
        }
    }
    return out;
}

std::vector<Cyclotomic> load_character(const std::string& path, int l) {
    return parse_character(read_file(path), l);
}

}  // namespace qsolv
