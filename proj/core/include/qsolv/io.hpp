#pragma once

#include <string>
#include <vector>

#include "qsolv/algebra.hpp"
#include "qsolv/scalars.hpp"

namespace qsolv {

// Definition files: {"names", "distinguished" (1-based), "S", "tails"}.
// Tail terms are [coeff, exponents]; a Laurent coefficient is a list of
// [exp, num, den] triples, any other rational function is {"num": [...],
// "den": [...]} with integer coefficients lowest degree first.
std::string presentation_to_json(const Presentation& p, int indent = 2);
// Parses and validates the shape (skew S, tail support). Throws ParseError.
Presentation presentation_from_json(const std::string& text);
Presentation load_presentation(const std::string& path);
void save_presentation(const Presentation& p, const std::string& path);

// Cyclotomic literal such as "3", "-1/2", "e", "2*e - 1/3", "e^2 + e".
Cyclotomic parse_cyclotomic(const std::string& text, int l);

// Character files: either a bare JSON list or {"values": [...]}. Each value
// is a literal string, an integer, or a list of power-basis coordinates.
std::vector<Cyclotomic> parse_character(const std::string& text, int l);
std::vector<Cyclotomic> load_character(const std::string& path, int l);

std::string read_file(const std::string& path);

}  // namespace qsolv
