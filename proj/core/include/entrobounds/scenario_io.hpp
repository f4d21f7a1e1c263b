#pragma once

#include <string>

#include "entrobounds/scenarios.hpp"

namespace entrobounds {

// Scenario files are JSON with either the explicit form
//   { "dimension": d, "alphabet": [...], "prior": [...],
//     "letter_states": [matrix...],
//     "instrument": [ {"outcome": "...", "kraus": [matrix...]}, ... ] }
// where a matrix is d rows of d [re, im] pairs, or the builtin form
//   { "builtin": "example_A", "parameters": {"x": 0.5} }.
// Malformed content raises ParseError naming the offending path, including
// cases where the parsed data violates ensemble or instrument invariants.
Scenario parse_scenario(const std::string& text);

// Reads the file (IoError when that fails) and parses it.
Scenario load_scenario(const std::string& path);

// Explicit-form JSON with round-trip-exact reals: parsing the output
// reproduces every matrix bit for bit.
std::string serialize_scenario(const Scenario& s);

// One matrix in the same encoding, for report output.
std::string serialize_matrix(const Matrix& m, int indent = 0);

}  // namespace entrobounds
