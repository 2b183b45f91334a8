#pragma once

#include <string>

#include "gelfand/character_table.hpp"

namespace gelfand {

// Structural parse of a character-table JSON document (no validation beyond
// shape). The format: top-level object with "name", "order", "exponent",
// "backend" ("exact"|"approx"), "classes" (array of {"label","size"},
// identity first), "power_maps" (object mapping the decimal string of each
// m in 2..exponent to an array of 0-based class indices), and "irreps"
// (array of {"label","values"}). Exact backend accepts only integer values;
// approximate values are numbers or [re, im] pairs. Integers too wide for
// 64 bits (order, class sizes) may be given as decimal strings.
CharacterTable parse_table(const std::string& document);

// Parse, then validate; throws ValidationError naming the failures.
CharacterTable load_table(const std::string& document, double tol = 1e-9);
CharacterTable load_table_file(const std::string& path, double tol = 1e-9);

// Render to the same document format; inverse of parse_table for any table
// whose exponent is at most 10^4 (larger power-map sections are refused).
std::string render_table(const CharacterTable& table);

}  // namespace gelfand
