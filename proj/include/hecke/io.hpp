#pragma once

#include "hecke/bases.hpp"
#include "hecke/extended.hpp"
#include "hecke/geometry.hpp"

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

namespace hecke {

// Datum files are JSON objects:
//   {"cartan": [[2,-1],[-1,2]], "y_basis": [["2/3","1/3"],["1/3","2/3"]],
//    "labels": ["A","B"], "ties": [[1,2]]}
// y_basis rows are V coordinates (numbers or "p/q" strings); ties are 1-based.
DatumPtr parse_datum(const std::string& json_text);
// a file path, or one of the built-in names listed by builtin_datum_names
DatumPtr load_datum(const std::string& path_or_name);
std::vector<std::string> builtin_datum_names();
std::string datum_to_json(const RootDatum& d);

// "1,-2" (Y coordinates), "2a1v-a2v" (basis names), "0"
Coweight parse_coweight(const RootDatum& d, const std::string& text);
// "r1r2", "1,2", "e" or empty; 1-based
WeylElt parse_word(const RootDatum& d, const std::string& text);

// Expression grammar:
//   expr   := ['-'] term (('+' | '-') term)*
//   term   := factor ('*' factor)*
//   factor := '(' expr ')' | generator | coefficient
//   generator := Z[y] | X[y] | Ti(i) | Tinv(i) | Hi(i) | Tw[word] | Hw[word]
//              | T[y;word] | TL[y] | Tomega[perm]
//   coefficient := integer | symbol ['^' exponent]
// Indices and permutation images are 1-based.
ExtAlgElt parse_element(const DatumPtr& d, const std::string& text);

// "q1=2,q2p=3", "1=2" (both q_1 and q'_1) or "all=3"; q-level values, one
// per symbol; every symbol must be assigned
std::vector<mpq_class> parse_q_values(const RootDatum& d, const std::string& text);

enum class Basis { Z, X, T };
enum class Format { Pretty, Json, Csv };
Basis parse_basis(const std::string& s);
Format parse_format(const std::string& s);

std::string render_element(const ExtAlgElt& e, Basis b, Format f);
// structure-constant table; `values` adds the specialized column
std::string render_constants(const RootDatum& d, const TCoords& c, Format f,
                             const std::optional<std::vector<mpq_class>>& values = std::nullopt);
std::string paths_to_json(const RootDatum& d, const std::vector<HeckePath>& paths);

std::string rat_to_string(const mpq_class& x);

}  // namespace hecke
